#pragma once

// Turns a 2-degenerate subgraph F of the simple auxiliary graph back into
// hyperedges, one certified vertex at a time, and audits the accounting.

#include "besforge/auxgraph.hpp"
#include "besforge/core.hpp"
#include "besforge/degsearch.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace besforge {

enum class StepClass : std::uint8_t { Singular, ZeroStep, FourStep, GoodRegular };

std::string to_string(StepClass c);

/// The two hyperedges through one apex that realize one F-edge.
struct HyperedgePair
{
    Hyperedge first;
    Hyperedge second;

    auto operator<=>(const HyperedgePair &) const = default;
};

struct StepRecord
{
    int index = 0; // 1-based
    int vertex = 0; // simple-aux vertex id v_i
    PairVertex pair;
    int back_degree = 0;
    StepClass cls = StepClass::Singular;
    int delta_e = 0;
    int delta_v = 0;
    std::vector<int> apexes;               // ascending, one per new F-edge
    std::vector<HyperedgePair> involved;   // parallel to apexes
    std::vector<Hyperedge> new_edges;
    std::vector<int> new_vertices;         // global ids
};

struct UnpackTrace
{
    std::vector<StepRecord> steps;
    Configuration config;      // the hyperedges of F's image and their span
    std::vector<int> vertices; // every vertex added, including pair elements no edge covers
    int singular_count = 0;
    int zero_count = 0;
    int four_count = 0;
    int good_regular_count = 0;
    std::vector<int> excess; // |E(F_i)| - |V(F_i)| after each step
};

/// Throws DomainError naming the edge when F references an edge without an
/// annotation or a hyperedge that is missing from the host.
UnpackTrace unpack(const CandidateF & f, const SimpleAux & g, const AuxGraph & aux, const TripartiteLinearSystem & host);

/// Recomputes the per-step invariants; returns one message per violation.
std::vector<std::string> step_law_violations(const UnpackTrace & trace);

enum class LemmaBranch : std::uint8_t { Near4k, SelfSustaining, Violated, Empty };

std::string to_string(LemmaBranch b);

struct LemmaBoundsReport
{
    int k = 0;
    int t = 0;
    int vertices = 0;
    int edges = 0;
    bool within_hypotheses = false; // k >= t >= 4
    bool assertion1_ok = false;     // |V| - 4t <= |E| <= 4k
    LemmaBranch assertion2_branch = LemmaBranch::Violated;
    std::int64_t near_4k_threshold = 0; // 4k - 10^4 t^3
    std::int64_t s = 0;                 // 6t(12t + 2)^2
    int singular_count = 0;
    int good_count = 0; // good regular plus singular
    int zero_count = 0;
    int four_count = 0;
    bool singular_bound_ok = false; // singular <= 2t
};

LemmaBoundsReport check_lemma_bounds(const UnpackTrace & trace, int k, int t);

struct InvolvementAudit
{
    std::map<int, std::vector<int>> apex_steps;    // apex -> steps involving it
    std::vector<int> zero_apexes;                  // the set Z
    bool z_within_12t = true;
    std::map<int, std::vector<int>> j_sets;        // z in Z -> J
    std::map<int, int> j0;                         // z in Z -> min J
    std::vector<std::string> violations;           // empty when the audit passes

    bool ok() const { return violations.empty(); }
};

/// `t` only feeds the |Z| <= 12t report.
InvolvementAudit audit_involvement(const UnpackTrace & trace, int t);

} // namespace besforge
