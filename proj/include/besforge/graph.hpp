#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace besforge {

/// Simple undirected graph on [0, n) with an edge index.
class Graph
{
public:
    Graph() = default;
    explicit Graph(int n);

    /// Adds {u, v} and returns its edge id. Loops and duplicates are rejected.
    int add_edge(int u, int v);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    /// Edges as (smaller, larger) in insertion order.
    const std::vector<std::pair<int, int>> & edges() const { return edges_; }

    bool has_edge(int u, int v) const { return edge_id(u, v).has_value(); }
    std::optional<int> edge_id(int u, int v) const;
    int max_degree() const;

    /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
    Graph induced(std::span<const int> vertices) const;

private:
    static std::uint64_t key(int u, int v);

    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::unordered_map<std::uint64_t, int> index_;
};

/// Proper 2-colouring (0/1 per vertex) when the graph is bipartite.
std::optional<std::vector<int>> two_colouring(const Graph & g);

/// A proper 2-colouring whose colour classes are as close in size as the
/// components allow.
std::optional<std::vector<int>> balanced_two_colouring(const Graph & g);

// `p graph <n> <m>` followed by m lines `g <u> <v>`.
void write_graph(std::ostream & out, const Graph & g);
Graph read_graph(std::istream & in);

} // namespace besforge
