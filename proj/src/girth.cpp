#include "besforge/girth.hpp"
#include "besforge/degsearch.hpp"
#include "besforge/random.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <string>

namespace besforge {

GrowthFailure::GrowthFailure(int step_, int vertices_)
    : DomainError("growth failed adding vertex " + std::to_string(step_) + " at " + std::to_string(vertices_) +
                  " vertices: no valid pair (t too small for this girth)"),
      step(step_), vertices(vertices_)
{
}

GrowthResult grow_girth_graph(int k, int t, int g, std::uint64_t seed, bool deterministic)
{
    if (t < 1 || k < t)
        throw ParameterError("grow_girth_graph needs k >= t >= 1");
    if (g < 3)
        throw ParameterError("grow_girth_graph needs g >= 3");

    GrowthResult out;
    out.graph = Graph(k);
    out.cert.t = t;
    out.cert.side.assign(static_cast<std::size_t>(k), 0);
    std::array<std::vector<int>, 2> members;
    for (int v = 0; v < t; ++v) {
        out.cert.seeds.push_back(v);
        out.cert.side[static_cast<std::size_t>(v)] = v % 2;
        members[static_cast<std::size_t>(v % 2)].push_back(v);
    }

    Rng rng(seed, 0x6769727468);
    const int depth = g - 2;
    std::vector<int> stamp(static_cast<std::size_t>(k), -1), dist(static_cast<std::size_t>(k), 0);
    int stamp_no = 0;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> low;

    for (int v = t; v < k; ++v) {
        const int join = members[0].size() <= members[1].size() ? 0 : 1;
        const auto & other = members[static_cast<std::size_t>(1 - join)];

        low.clear();
        for (int u : other)
            if (out.graph.degree(u) < growth_degree_cap)
                low.push_back(u);

        pairs.clear();
        for (std::size_t i = 0; i < low.size(); ++i) {
            // Everything within distance g - 2 of low[i] is excluded.
            ++stamp_no;
            std::queue<int> q;
            q.push(low[i]);
            stamp[static_cast<std::size_t>(low[i])] = stamp_no;
            dist[static_cast<std::size_t>(low[i])] = 0;
            while (! q.empty()) {
                const int x = q.front();
                q.pop();
                if (dist[static_cast<std::size_t>(x)] == depth)
                    continue;
                for (int y : out.graph.neighbors(x))
                    if (stamp[static_cast<std::size_t>(y)] != stamp_no) {
                        stamp[static_cast<std::size_t>(y)] = stamp_no;
                        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                        q.push(y);
                    }
            }
            for (std::size_t j = i + 1; j < low.size(); ++j)
                if (stamp[static_cast<std::size_t>(low[j])] != stamp_no)
                    pairs.emplace_back(low[i], low[j]);
        }

        GrowthDiagnostic diag;
        diag.vertices_before = v;
        diag.low_degree = static_cast<int>(low.size());
        diag.valid_pairs = pairs.size();
        diag.counting_gate = binomial(static_cast<std::uint64_t>((v + 3) / 4), 2);
        out.diagnostics.push_back(diag);

        if (pairs.empty())
            throw GrowthFailure(v + 1, v);
        std::pair<int, int> chosen;
        if (deterministic)
            chosen = *std::min_element(pairs.begin(), pairs.end());
        else
            chosen = pairs[rng.below(pairs.size())];

        out.graph.add_edge(v, chosen.first);
        out.graph.add_edge(v, chosen.second);
        out.cert.added.push_back({v, chosen.first, chosen.second});
        out.cert.side[static_cast<std::size_t>(v)] = join;
        members[static_cast<std::size_t>(join)].push_back(v);
    }
    return out;
}

TSearch find_t_by_doubling(int k, int g, std::uint64_t seed, bool deterministic)
{
    std::vector<int> tried;
    for (int t = 1;; t *= 2) {
        const int tt = std::min(t, k);
        tried.push_back(tt);
        try {
            TSearch search;
            search.growth = grow_girth_graph(k, tt, g, seed, deterministic);
            search.t = tt;
            search.tried = std::move(tried);
            return search;
        } catch (const GrowthFailure &) {
            if (tt == k)
                throw;
        }
    }
}

std::optional<int> girth_of(const Graph & graph)
{
    const int n = graph.vertex_count();
    std::optional<int> best;
    std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        std::queue<int> q;
        q.push(root);
        while (! q.empty()) {
            const int x = q.front();
            q.pop();
            if (best && 2 * dist[static_cast<std::size_t>(x)] + 1 >= *best)
                break;
            for (int y : graph.neighbors(x)) {
                if (dist[static_cast<std::size_t>(y)] == -1) {
                    dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                    parent[static_cast<std::size_t>(y)] = x;
                    q.push(y);
                } else if (y != parent[static_cast<std::size_t>(x)]) {
                    const int len = dist[static_cast<std::size_t>(x)] + dist[static_cast<std::size_t>(y)] + 1;
                    if (! best || len < *best)
                        best = len;
                }
            }
        }
    }
    return best;
}

bool verify_certificate(const Graph & graph, const GrowthCertificate & cert)
{
    const int n = graph.vertex_count();
    if (cert.t < 0 || static_cast<int>(cert.seeds.size()) != cert.t ||
        cert.t + static_cast<int>(cert.added.size()) != n)
        return false;

    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    auto in_range = [n](int v) { return v >= 0 && v < n; };
    for (int s : cert.seeds) {
        if (! in_range(s) || placed[static_cast<std::size_t>(s)])
            return false;
        placed[static_cast<std::size_t>(s)] = 1;
    }
    for (std::size_t i = 0; i < cert.seeds.size(); ++i)
        for (std::size_t j = i + 1; j < cert.seeds.size(); ++j)
            if (graph.has_edge(cert.seeds[i], cert.seeds[j]))
                return false;

    std::set<std::pair<int, int>> replayed;
    for (const auto & step : cert.added) {
        if (! in_range(step.vertex) || ! in_range(step.u1) || ! in_range(step.u2))
            return false;
        if (placed[static_cast<std::size_t>(step.vertex)] || step.u1 == step.u2)
            return false;
        if (! placed[static_cast<std::size_t>(step.u1)] || ! placed[static_cast<std::size_t>(step.u2)])
            return false;
        placed[static_cast<std::size_t>(step.vertex)] = 1;
        for (int u : {step.u1, step.u2})
            replayed.emplace(std::min(u, step.vertex), std::max(u, step.vertex));
    }
    if (static_cast<int>(replayed.size()) != graph.edge_count())
        return false;
    for (const auto & [u, v] : graph.edges())
        if (! replayed.count({u, v}))
            return false;

    if (cert.side.empty())
        return two_colouring(graph).has_value();
    if (static_cast<int>(cert.side.size()) != n)
        return false;
    return std::all_of(graph.edges().begin(), graph.edges().end(), [&](const auto & e) {
        return cert.side[static_cast<std::size_t>(e.first)] != cert.side[static_cast<std::size_t>(e.second)];
    });
}

void write_certificate(std::ostream & out, const GrowthCertificate & cert)
{
    out << "c " << cert.t << '\n';
    for (const auto & s : cert.added)
        out << "a " << s.vertex << ' ' << s.u1 << ' ' << s.u2 << '\n';
}

GirthFile read_girth_file(std::istream & in)
{
    std::ostringstream graph_part;
    std::optional<GrowthCertificate> cert;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string tag;
        if (! (ss >> tag) || tag.front() == '#')
            continue;
        auto fail = [&](const std::string & what) {
            throw FormatError("line " + std::to_string(line_no) + ": " + what);
        };
        if (tag == "c") {
            if (cert)
                fail("second certificate header");
            cert.emplace();
            if (! (ss >> cert->t) || cert->t < 0)
                fail("expected 'c <t>'");
        } else if (tag == "a") {
            GrowthStep s;
            if (! cert)
                fail("'a' line before 'c <t>'");
            if (! (ss >> s.vertex >> s.u1 >> s.u2))
                fail("expected 'a <v> <u1> <u2>'");
            cert->added.push_back(s);
        } else {
            if (cert)
                fail("graph content after the certificate");
            graph_part << line << '\n';
        }
    }
    std::istringstream graph_in(graph_part.str());
    GirthFile file{read_graph(graph_in), std::move(cert)};
    if (file.cert) {
        std::vector<char> added(static_cast<std::size_t>(file.graph.vertex_count()), 0);
        for (const auto & s : file.cert->added)
            if (s.vertex >= 0 && s.vertex < file.graph.vertex_count())
                added[static_cast<std::size_t>(s.vertex)] = 1;
        for (int v = 0; v < file.graph.vertex_count(); ++v)
            if (! added[static_cast<std::size_t>(v)])
                file.cert->seeds.push_back(v);
    }
    return file;
}

} // namespace besforge
