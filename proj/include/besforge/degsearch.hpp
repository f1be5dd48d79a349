#pragma once

// Degeneracy orderings and the search for dense 2-degenerate subgraphs.

#include "besforge/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace besforge {

struct DegeneracyOrdering
{
    std::vector<int> order;       // reversed min-degree removal order
    std::vector<int> back_degree; // back_degree[i]: neighbours of order[i] among order[0..i)
    int degeneracy = 0;
};

/// Min-degree peeling, ties broken by smallest id.
DegeneracyOrdering degeneracy_ordering(const Graph & g);

/// A 2-degenerate subgraph F of a host graph with its certifying order.
struct CandidateF
{
    std::vector<int> order;                 // host ids v_1..v_k
    std::vector<std::pair<int, int>> edges; // (later, earlier) host ids

    int k() const { return static_cast<int>(order.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int achieved_t() const { return 2 * k() - edge_count(); }

    auto operator<=>(const CandidateF &) const = default;
};

/// Reason the candidate breaks an invariant, or nullopt when it is valid.
/// `side` (optional, one entry per host vertex) enables the bipartite check.
std::optional<std::string> candidate_defect(const Graph & host, const CandidateF & f, std::span<const int> side = {});

/// Largest subgraph of host[vertices] that the order certifies: each vertex
/// keeps up to two edges to its earliest preceding neighbours.
CandidateF certify_order(const Graph & host, std::span<const int> order);

enum class Strategy : std::uint8_t { PeelTrim, Greedy, Exhaustive, Auto };

std::string to_string(Strategy s);
std::optional<Strategy> parse_strategy(const std::string & name);

struct SearchBudget
{
    std::uint64_t max_steps = 200'000; // subset evaluations
    int max_ms = 0;                    // wall clock cap, 0 = none
};

struct SearchResult
{
    CandidateF best;
    bool success = false;
    Strategy used = Strategy::Auto;
    std::uint64_t steps = 0;
};

inline constexpr std::uint64_t default_enumeration_guard = 10'000'000;

/// Finds k host vertices carrying a 2-degenerate subgraph with at least
/// 2k - t_target edges. Failure is not an error: `best` then holds the
/// densest candidate seen. Throws ParameterError for k < 2 or k > |V|.
SearchResult find_dense_2deg(const Graph & g, int k, int t_target, Strategy strategy, std::uint64_t seed,
                             SearchBudget budget = {});

struct BruteForceResult
{
    int max_edges = 0;
    CandidateF witness;
};

/// Exact maximum edge count over 2-degenerate subgraphs on k vertices, by
/// enumerating k-subsets (at most `guard` of them) with an ordering DP.
BruteForceResult brute_force_best_2deg(const Graph & g, int k, std::uint64_t guard = default_enumeration_guard);

/// C(n, k) saturated at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

} // namespace besforge
