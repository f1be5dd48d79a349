#pragma once

// Bipartite graphs grown from t isolated vertices by repeatedly adding a
// vertex of degree exactly 2, keeping girth >= g.

#include "besforge/error.hpp"
#include "besforge/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace besforge {

struct GrowthStep
{
    int vertex = 0;
    int u1 = 0;
    int u2 = 0;
};

struct GrowthCertificate
{
    int t = 0;
    std::vector<int> seeds;        // the initial independent set
    std::vector<GrowthStep> added; // in construction order
    std::vector<int> side;         // 0/1 per vertex; empty when unknown
};

/// Per-step counts behind the pair choice.
struct GrowthDiagnostic
{
    int vertices_before = 0;
    int low_degree = 0;                // larger-side vertices of degree <= 7
    std::uint64_t valid_pairs = 0;     // low-degree pairs at distance > g - 2
    std::uint64_t counting_gate = 0;   // C(ceil((k-1)/4), 2)
};

struct GrowthResult
{
    Graph graph;
    GrowthCertificate cert;
    std::vector<GrowthDiagnostic> diagnostics;
};

class GrowthFailure : public DomainError
{
public:
    GrowthFailure(int step, int vertices);
    int step;     // 1-based index of the vertex that could not be added
    int vertices; // vertex count when growth stopped
};

inline constexpr int growth_degree_cap = 8;

/// Seeded uniform choice among valid pairs, or the lexicographically smallest
/// pair when `deterministic`. Throws GrowthFailure when no pair is valid.
GrowthResult grow_girth_graph(int k, int t, int g, std::uint64_t seed, bool deterministic = false);

struct TSearch
{
    int t = 0;
    std::vector<int> tried;
    GrowthResult growth;
};

/// Doubles t from 1 until growth to k vertices succeeds (t <= k).
TSearch find_t_by_doubling(int k, int g, std::uint64_t seed, bool deterministic = false);

/// Shortest cycle length; nullopt for forests.
std::optional<int> girth_of(const Graph & graph);

bool verify_certificate(const Graph & graph, const GrowthCertificate & cert);

/// `c <t>` then `a <v> <u1> <u2>` per added vertex.
void write_certificate(std::ostream & out, const GrowthCertificate & cert);

struct GirthFile
{
    Graph graph;
    std::optional<GrowthCertificate> cert;
};

/// A `p graph` section optionally followed by a certificate.
GirthFile read_girth_file(std::istream & in);

} // namespace besforge
