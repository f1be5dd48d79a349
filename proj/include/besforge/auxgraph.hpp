#pragma once

// The auxiliary bipartite multigraph on vertex pairs: {a1, a2} and {b1, b2}
// are joined once for every apex c that closes a straight (a1b1c, a2b2c) or
// crossed (a1b2c, a2b1c) pair of hyperedges.

#include "besforge/core.hpp"
#include "besforge/graph.hpp"

#include <compare>
#include <iosfwd>
#include <vector>

namespace besforge {

enum class Side : std::uint8_t { A, B };

/// Unordered pair {p, q}, p < q, of part-local ids from part A or part B.
struct PairVertex
{
    Side side = Side::A;
    int p = 0;
    int q = 0;

    auto operator<=>(const PairVertex &) const = default;
};

enum class Pairing : std::uint8_t { Straight, Crossed };

/// One auxiliary edge. With u = {a1 < a2} and w = {b1 < b2}:
///   straight: h1 = a1 b1 c, h2 = a2 b2 c
///   crossed:  h1 = a1 b2 c, h2 = a2 b1 c
struct AuxEdge
{
    int u = 0; // index into AuxGraph::a_side
    int w = 0; // index into AuxGraph::b_side
    int apex = 0;
    Pairing pairing = Pairing::Straight;
    Hyperedge h1;
    Hyperedge h2;
};

/// Support-only multigraph: only pair-vertices with an incident edge are stored.
struct AuxGraph
{
    std::vector<PairVertex> a_side; // sorted
    std::vector<PairVertex> b_side; // sorted
    std::vector<AuxEdge> edges;     // sorted by (u, w, pairing, apex)

    std::size_t multi_edge_count() const { return edges.size(); }
};

/// Throws LinearityError on non-linear input. Emits exactly sum_c C(d(c), 2)
/// edges and checks the parallel-edge law while building.
AuxGraph build_aux(const TripartiteLinearSystem & lts);

/// sum_c C(d(c), 2)
std::uint64_t expected_multi_edges(const TripartiteLinearSystem & lts);

/// 4 |C| |E(G')| >= |E|^2, evaluated exactly.
bool edge_count_bound_holds(const TripartiteLinearSystem & lts, const AuxGraph & aux);

struct MultiplicityViolation
{
    int u = 0;
    int w = 0;
    int multiplicity = 0;
    bool repeated_pairing = false;
};

/// Aux vertex pairs joined by more than 2 edges or by two edges of one pairing.
std::vector<MultiplicityViolation> multiplicity_violations(const AuxGraph & aux);

/// Number of aux edges whose hyperedges do not re-validate against lts.
std::size_t count_invalid_annotations(const AuxGraph & aux, const TripartiteLinearSystem & lts);

/// Which parallel edge the simple subgraph keeps.
enum class KeepRule : std::uint8_t { PreferStraight, PreferCrossed };

/// The simple graph G: vertex i < a_count is aux.a_side[i], vertex
/// a_count + j is aux.b_side[j]. annotation[edge id] indexes aux.edges.
struct SimpleAux
{
    Graph graph;
    int a_count = 0;
    std::vector<PairVertex> vertices;
    std::vector<std::size_t> annotation;

    Side side_of(int v) const { return v < a_count ? Side::A : Side::B; }
    std::vector<int> sides() const;
};

/// Keeps one edge per joined pair (ties broken by smaller apex).
SimpleAux simple_subgraph(const AuxGraph & aux, KeepRule rule = KeepRule::PreferStraight);

/// `p aux <|A'|> <|B'|> <m>` then `x <uA1> <uA2> <wB1> <wB2> <apex> <S|X>`.
void write_aux(std::ostream & out, const AuxGraph & aux);

} // namespace besforge
