#pragma once

// Hypergraph types shared by the whole pipeline: general 3-graphs, tripartite
// systems with part-local ids, configurations and the text formats for both.

#include "besforge/error.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace besforge {

/// Three global vertex ids in increasing order.
using Triple = std::array<int, 3>;

Triple make_triple(int u, int v, int w);

/// A 3-graph on vertices [0, n). Edges are kept sorted and duplicate free.
struct TripleSystem
{
    int n = 0;
    std::vector<Triple> edges;

    TripleSystem() = default;
    /// Normalizes each triple and sorts the edge list; throws FormatError on
    /// repeated vertices, out-of-range ids or duplicate triples.
    TripleSystem(int vertex_count, std::vector<Triple> triples);

    bool contains(const Triple & t) const;
};

/// A hyperedge of a tripartite system, in part-local ids.
struct Hyperedge
{
    int a = 0;
    int b = 0;
    int c = 0;

    auto operator<=>(const Hyperedge &) const = default;
};

/// A 3-partite 3-graph with parts A, B, C.
///
/// Linearity is not enforced by construction; operations that rely on it call
/// validate_linear and refuse non-linear input.
struct TripartiteLinearSystem
{
    int size_a = 0;
    int size_b = 0;
    int size_c = 0;
    std::vector<Hyperedge> edges;

    TripartiteLinearSystem() = default;
    /// Sorts the edges; throws FormatError on out-of-range ids or duplicates.
    TripartiteLinearSystem(int na, int nb, int nc, std::vector<Hyperedge> hyperedges);

    int vertex_count() const { return size_a + size_b + size_c; }
    int global_a(int a) const { return a; }
    int global_b(int b) const { return size_a + b; }
    int global_c(int c) const { return size_a + size_b + c; }
    Triple global(const Hyperedge & h) const { return {global_a(h.a), global_b(h.b), global_c(h.c)}; }

    bool contains(const Hyperedge & h) const;
    /// d(c): number of edges through each apex c.
    std::vector<int> apex_degrees() const;
    TripleSystem to_triple_system() const;
};

/// A set of hyperedges of some host together with the vertices they cover.
struct Configuration
{
    std::vector<Triple> edges; // sorted, global ids
    std::vector<int> span;     // sorted union of the edges' vertices

    static Configuration from_edges(std::vector<Triple> edges);

    int edge_count() const { return static_cast<int>(edges.size()); }
    int span_size() const { return static_cast<int>(span.size()); }
};

std::vector<int> span_of(const std::vector<Triple> & edges);

struct LinearityVerdict
{
    bool ok = true;
    std::array<int, 2> pair{};
    Triple first{};
    Triple second{};
};

LinearityVerdict validate_linear(const TripleSystem & ts);
LinearityVerdict validate_linear(const TripartiteLinearSystem & lts);

/// Raised where a linear system is required.
class LinearityError : public ParameterError
{
public:
    explicit LinearityError(const LinearityVerdict & verdict);
    LinearityVerdict verdict;
};

void require_linear(const TripartiteLinearSystem & lts);

/// True iff cfg holds exactly e distinct host edges, its span is the union
/// of those edges, and that union has at most v vertices.
bool verify_configuration(const TripleSystem & host, const Configuration & cfg, int v, int e);
bool verify_configuration(const TripartiteLinearSystem & host, const Configuration & cfg, int v, int e);

// reduce-or-win ----------------------------------------------------------

/// Some vertex pair lies in at least e edges: those e edges span e + 2 vertices.
struct Win
{
    Configuration config;
    std::array<int, 2> pair{};
    int codegree = 0;
};

struct Reduction
{
    TripartiteLinearSystem system;
    /// part_globals[p][i] is the global id of part-local vertex i in part p.
    std::array<std::vector<int>, 3> part_globals;
    std::size_t input_edges = 0;
    std::size_t proper_edges = 0; // edges rainbow under the chosen coloring
    std::size_t kept_edges = 0;   // survivors of greedy pair blocking
    int coloring_attempt = 0;     // 0: exact search, i >= 1: i-th seeded coloring

    Triple to_global(const Hyperedge & h) const;
};

using ReduceOutcome = std::variant<Win, Reduction>;

/// Either finds e edges through a common pair or extracts a linear tripartite
/// subsystem. Throws DomainError when neither is possible (no edges survive).
ReduceOutcome reduce_or_win(const TripleSystem & ts, int e, std::uint64_t seed);

// text formats -----------------------------------------------------------

TripleSystem read_triple_system(std::istream & in);
TripartiteLinearSystem read_tripartite(std::istream & in);
void write_triple_system(std::ostream & out, const TripleSystem & ts);
void write_tripartite(std::ostream & out, const TripartiteLinearSystem & lts);

using AnySystem = std::variant<TripleSystem, TripartiteLinearSystem>;
/// Dispatches on the `p ts` / `p tls` header.
AnySystem read_any_system(std::istream & in);
AnySystem load_system(const std::string & path);
TripartiteLinearSystem load_tripartite(const std::string & path);
void save(const std::string & path, const TripleSystem & ts);
void save(const std::string & path, const TripartiteLinearSystem & lts);

} // namespace besforge
