#include "besforge/graph.hpp"
#include "besforge/error.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <cstdlib>
#include <queue>
#include <sstream>
#include <string>

namespace besforge {

Graph::Graph(int n) : adj_(static_cast<std::size_t>(std::max(n, 0)))
{
    if (n < 0)
        throw ParameterError("negative vertex count");
}

std::uint64_t Graph::key(int u, int v)
{
    if (u > v)
        std::swap(u, v);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
}

int Graph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw ParameterError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
    if (u == v)
        throw ParameterError("loop at " + std::to_string(u));
    const int id = edge_count();
    if (! index_.emplace(key(u, v), id).second)
        throw ParameterError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
    return id;
}

std::optional<int> Graph::edge_id(int u, int v) const
{
    if (auto it = index_.find(key(u, v)); it != index_.end())
        return it->second;
    return std::nullopt;
}

int Graph::max_degree() const
{
    int best = 0;
    for (const auto & a : adj_)
        best = std::max(best, static_cast<int>(a.size()));
    return best;
}

Graph Graph::induced(std::span<const int> vertices) const
{
    std::unordered_map<int, int> local;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local.emplace(vertices[i], static_cast<int>(i));
    Graph sub(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (int w : neighbors(vertices[i]))
            if (auto it = local.find(w); it != local.end() && it->second > static_cast<int>(i))
                sub.add_edge(static_cast<int>(i), it->second);
    return sub;
}

std::optional<std::vector<int>> two_colouring(const Graph & g)
{
    std::vector<int> colour(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (colour[static_cast<std::size_t>(root)] != -1)
            continue;
        colour[static_cast<std::size_t>(root)] = 0;
        std::queue<int> q;
        q.push(root);
        while (! q.empty()) {
            const int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                auto & cw = colour[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = 1 - colour[static_cast<std::size_t>(u)];
                    q.push(w);
                } else if (cw == colour[static_cast<std::size_t>(u)])
                    return std::nullopt;
            }
        }
    }
    return colour;
}

std::optional<std::vector<int>> balanced_two_colouring(const Graph & g)
{
    auto colour = two_colouring(g);
    if (! colour)
        return colour;
    const int n = g.vertex_count();

    // Components as vertex lists; isolated vertices are kept apart as filler.
    std::vector<int> comp(static_cast<std::size_t>(n), -1), isolated;
    std::vector<std::vector<int>> members;
    for (int root = 0; root < n; ++root) {
        if (comp[static_cast<std::size_t>(root)] != -1)
            continue;
        if (g.degree(root) == 0) {
            comp[static_cast<std::size_t>(root)] = -2;
            isolated.push_back(root);
            continue;
        }
        const int id = static_cast<int>(members.size());
        members.emplace_back();
        std::queue<int> q;
        q.push(root);
        comp[static_cast<std::size_t>(root)] = id;
        while (! q.empty()) {
            const int u = q.front();
            q.pop();
            members.back().push_back(u);
            for (int w : g.neighbors(u))
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = id;
                    q.push(w);
                }
        }
    }

    const std::size_t c = members.size();
    std::vector<int> zeros(c);
    for (std::size_t i = 0; i < c; ++i)
        for (int v : members[i])
            zeros[i] += (*colour)[static_cast<std::size_t>(v)] == 0;

    // flip[i]: swap colours in component i.
    std::vector<char> flip(c, 0);
    const int target = (n + 1) / 2;
    const int free_count = static_cast<int>(isolated.size());
    const auto width = static_cast<std::size_t>(n + 1);
    if (c * width <= 50'000'000) {
        // reach[i][s]: side-0 total s attainable from the first i components.
        std::vector<std::vector<char>> reach(c + 1, std::vector<char>(width, 0));
        reach[0][0] = 1;
        for (std::size_t i = 0; i < c; ++i) {
            const int keep = zeros[i], swap = static_cast<int>(members[i].size()) - zeros[i];
            for (int s = 0; s <= n; ++s)
                if (reach[i][static_cast<std::size_t>(s)]) {
                    reach[i + 1][static_cast<std::size_t>(s + keep)] = 1;
                    reach[i + 1][static_cast<std::size_t>(s + swap)] = 1;
                }
        }
        int best = -1;
        for (int s = 0; s <= n; ++s)
            if (reach[c][static_cast<std::size_t>(s)]) {
                const int with_free = std::clamp(target, s, s + free_count);
                const int cur = best < 0 ? n + 1 : std::abs(std::clamp(target, best, best + free_count) - target);
                if (std::abs(with_free - target) < cur)
                    best = s;
            }
        int s = best;
        for (std::size_t i = c; i-- > 0;) {
            const int keep = zeros[i];
            if (s - keep >= 0 && reach[i][static_cast<std::size_t>(s - keep)])
                s -= keep;
            else {
                flip[i] = 1;
                s -= static_cast<int>(members[i].size()) - keep;
            }
        }
    } else {
        int side0 = 0, side1 = 0;
        for (std::size_t i = 0; i < c; ++i) {
            const int a = zeros[i], b = static_cast<int>(members[i].size()) - zeros[i];
            flip[i] = side0 <= side1 ? b > a : a > b;
            side0 += flip[i] ? b : a;
            side1 += flip[i] ? a : b;
        }
    }

    int side0 = 0;
    for (std::size_t i = 0; i < c; ++i)
        for (int v : members[i]) {
            auto & cv = (*colour)[static_cast<std::size_t>(v)];
            if (flip[i])
                cv = 1 - cv;
            side0 += cv == 0;
        }
    for (int v : isolated) {
        (*colour)[static_cast<std::size_t>(v)] = side0 < target ? 0 : 1;
        side0 += side0 < target;
    }
    return colour;
}

void write_graph(std::ostream & out, const Graph & g)
{
    out << "p graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto & [u, v] : g.edges())
        out << "g " << u << ' ' << v << '\n';
}

Graph read_graph(std::istream & in)
{
    std::string line;
    int n = -1, m = -1, seen = 0, line_no = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string tag;
        if (! (ss >> tag) || tag.front() == '#')
            continue;
        auto fail = [&](const std::string & what) {
            throw FormatError("line " + std::to_string(line_no) + ": " + what);
        };
        if (n < 0) {
            std::string kind;
            if (tag != "p" || ! (ss >> kind >> n >> m) || kind != "graph" || n < 0 || m < 0)
                fail("expected 'p graph <n> <m>'");
            g = Graph(n);
            continue;
        }
        if (tag != "g")
            fail("unexpected '" + tag + "'");
        int u, v;
        if (! (ss >> u >> v))
            fail("expected 'g <u> <v>'");
        try {
            g.add_edge(u, v);
        } catch (const ParameterError & e) {
            fail(e.what());
        }
        ++seen;
    }
    if (n < 0)
        throw FormatError("missing 'p graph' header");
    if (seen != m)
        throw FormatError("expected " + std::to_string(m) + " edges, read " + std::to_string(seen));
    return g;
}

} // namespace besforge
