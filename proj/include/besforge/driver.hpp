#pragma once

// Assembles e hyperedges on few vertices: find a dense 2-degenerate F in the
// auxiliary graph, unpack it, then top up or remove and recurse.

#include "besforge/auxgraph.hpp"
#include "besforge/core.hpp"
#include "besforge/degsearch.hpp"
#include "besforge/unpack.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace besforge {

/// max{24 k0, 3(4t + 10^4 t^3)}
std::int64_t paper_constant_d(std::int64_t t, std::int64_t k0);

struct DriverParams
{
    int t = 4;
    int k0 = 1;
    std::int64_t tau_max = 4; // most edges a frame may add arbitrarily
    std::int64_t base_e = 4;  // e' at or below this takes edges greedily
    bool paper_mode = false;  // derive tau_max and base_e from t and k0
    std::uint64_t seed = 0;
    SearchBudget budget;
    Strategy strategy = Strategy::Auto;
    KeepRule keep_rule = KeepRule::PreferStraight;

    /// Thresholds actually in force (paper_mode overrides tau_max/base_e).
    std::int64_t effective_tau_max() const;
    std::int64_t effective_base_e() const;
};

enum class FrameBranch : std::uint8_t { Base, TopUp, Recurse };

std::string to_string(FrameBranch b);

struct DriverFrame
{
    int e_prime = 0;
    int k = 0; // 0 when no F was searched
    FrameBranch branch = FrameBranch::Base;
    bool flagged = false;
    std::string flag_reason;
    // F
    bool f_success = false;
    int f_vertices = 0;
    int f_edges = 0;
    int f_achieved_t = 0;
    // unpacked configuration
    int cfg_edges = 0;
    int cfg_vertices = 0;
    LemmaBranch lemma_branch = LemmaBranch::Empty;
    int added_edges = 0; // base picks or top-up edges
    // residual system when the frame starts
    int residual_edges = 0;
    int residual_vertices = 0; // vertices still covered by an edge
};

enum class DriverStatus : std::uint8_t { Ok, Exhausted };

struct DriverReport
{
    int e = 0;
    DriverStatus status = DriverStatus::Ok;
    std::string failure;
    Configuration config;
    int span = 0;
    int d_achieved = 0;
    bool paper_mode = false;
    std::int64_t d_paper = 0; // only meaningful in paper_mode
    std::vector<DriverFrame> frames;

    bool any_flagged() const;
};

/// Throws LinearityError on non-linear input and ParameterError for e < 1.
/// A residual system with fewer than e' edges yields status Exhausted with
/// the frames processed so far.
DriverReport find_bes_configuration(const TripartiteLinearSystem & lts, int e, const DriverParams & params);

/// Greedy span-minimizing choice of `count` edges from `pool`: each pick
/// maximizes overlap with the running span (global ids), ties to the
/// smaller edge.
std::vector<Hyperedge> greedy_pick(const TripartiteLinearSystem & pool, std::vector<int> span, int count);

} // namespace besforge
