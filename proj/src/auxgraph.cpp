#include "besforge/auxgraph.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace besforge {

__extension__ typedef unsigned __int128 u128;

namespace
{
    int index_of(const std::vector<PairVertex> & sorted, const PairVertex & v)
    {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        return static_cast<int>(it - sorted.begin());
    }

    auto edge_order(const AuxEdge & e) { return std::tuple(e.u, e.w, e.pairing, e.apex); }
} // namespace

std::uint64_t expected_multi_edges(const TripartiteLinearSystem & lts)
{
    std::uint64_t total = 0;
    for (int d : lts.apex_degrees())
        total += static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d > 0 ? d - 1 : 0) / 2;
    return total;
}

bool edge_count_bound_holds(const TripartiteLinearSystem & lts, const AuxGraph & aux)
{
    const auto m = static_cast<u128>(lts.edges.size());
    const auto lhs = static_cast<u128>(4) * static_cast<unsigned>(lts.size_c) * aux.multi_edge_count();
    return lhs >= m * m;
}

AuxGraph build_aux(const TripartiteLinearSystem & lts)
{
    require_linear(lts);

    struct Raw
    {
        PairVertex u, w;
        AuxEdge edge;
    };

    std::vector<std::vector<std::pair<int, int>>> through(static_cast<std::size_t>(lts.size_c));
    for (const auto & h : lts.edges)
        through[static_cast<std::size_t>(h.c)].emplace_back(h.a, h.b);

    std::vector<Raw> raw;
    raw.reserve(expected_multi_edges(lts));
    for (int c = 0; c < lts.size_c; ++c) {
        auto & star = through[static_cast<std::size_t>(c)];
        std::sort(star.begin(), star.end());
        for (std::size_t i = 0; i < star.size(); ++i)
            for (std::size_t j = i + 1; j < star.size(); ++j) {
                const auto [a1, b1] = star[i];
                const auto [a2, b2] = star[j];
                Raw r;
                r.u = {Side::A, a1, a2};
                r.w = {Side::B, std::min(b1, b2), std::max(b1, b2)};
                r.edge.apex = c;
                r.edge.pairing = b1 < b2 ? Pairing::Straight : Pairing::Crossed;
                r.edge.h1 = {a1, b1, c};
                r.edge.h2 = {a2, b2, c};
                raw.push_back(r);
            }
    }

    AuxGraph aux;
    for (const auto & r : raw) {
        aux.a_side.push_back(r.u);
        aux.b_side.push_back(r.w);
    }
    for (auto * side : {&aux.a_side, &aux.b_side}) {
        std::sort(side->begin(), side->end());
        side->erase(std::unique(side->begin(), side->end()), side->end());
    }
    aux.edges.reserve(raw.size());
    for (auto & r : raw) {
        r.edge.u = index_of(aux.a_side, r.u);
        r.edge.w = index_of(aux.b_side, r.w);
        aux.edges.push_back(r.edge);
    }
    std::sort(aux.edges.begin(), aux.edges.end(),
              [](const AuxEdge & x, const AuxEdge & y) { return edge_order(x) < edge_order(y); });

    // Linearity forces at most one straight and one crossed edge per pair.
    if (! multiplicity_violations(aux).empty())
        throw std::logic_error("auxiliary graph violates the parallel-edge law on a linear system");
    return aux;
}

std::vector<MultiplicityViolation> multiplicity_violations(const AuxGraph & aux)
{
    std::vector<MultiplicityViolation> out;
    for (std::size_t i = 0; i < aux.edges.size();) {
        std::size_t j = i;
        bool repeated = false;
        while (j < aux.edges.size() && aux.edges[j].u == aux.edges[i].u && aux.edges[j].w == aux.edges[i].w) {
            if (j > i && aux.edges[j].pairing == aux.edges[j - 1].pairing)
                repeated = true;
            ++j;
        }
        const int mult = static_cast<int>(j - i);
        if (mult > 2 || repeated)
            out.push_back({aux.edges[i].u, aux.edges[i].w, mult, repeated});
        i = j;
    }
    return out;
}

std::size_t count_invalid_annotations(const AuxGraph & aux, const TripartiteLinearSystem & lts)
{
    std::size_t bad = 0;
    for (const auto & e : aux.edges) {
        const auto & u = aux.a_side[static_cast<std::size_t>(e.u)];
        const auto & w = aux.b_side[static_cast<std::size_t>(e.w)];
        const int b_first = e.pairing == Pairing::Straight ? w.p : w.q;
        const int b_second = e.pairing == Pairing::Straight ? w.q : w.p;
        const bool ok = lts.contains(e.h1) && lts.contains(e.h2) && e.h1 != e.h2 && e.h1.c == e.apex &&
                        e.h2.c == e.apex && e.h1.a == u.p && e.h2.a == u.q && e.h1.b == b_first &&
                        e.h2.b == b_second;
        if (! ok)
            ++bad;
    }
    return bad;
}

std::vector<int> SimpleAux::sides() const
{
    std::vector<int> out(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        out[i] = static_cast<int>(i) < a_count ? 0 : 1;
    return out;
}

SimpleAux simple_subgraph(const AuxGraph & aux, KeepRule rule)
{
    SimpleAux g;
    g.a_count = static_cast<int>(aux.a_side.size());
    g.vertices = aux.a_side;
    g.vertices.insert(g.vertices.end(), aux.b_side.begin(), aux.b_side.end());
    g.graph = Graph(static_cast<int>(g.vertices.size()));

    const Pairing preferred = rule == KeepRule::PreferStraight ? Pairing::Straight : Pairing::Crossed;
    for (std::size_t i = 0; i < aux.edges.size();) {
        std::size_t j = i, keep = i;
        while (j < aux.edges.size() && aux.edges[j].u == aux.edges[i].u && aux.edges[j].w == aux.edges[i].w) {
            const auto & cand = aux.edges[j];
            const auto & cur = aux.edges[keep];
            if ((cand.pairing == preferred && cur.pairing != preferred) ||
                (cand.pairing == cur.pairing && cand.apex < cur.apex))
                keep = j;
            ++j;
        }
        g.graph.add_edge(aux.edges[keep].u, g.a_count + aux.edges[keep].w);
        g.annotation.push_back(keep);
        i = j;
    }
    return g;
}

void write_aux(std::ostream & out, const AuxGraph & aux)
{
    out << "p aux " << aux.a_side.size() << ' ' << aux.b_side.size() << ' ' << aux.edges.size() << '\n';
    for (const auto & e : aux.edges) {
        const auto & u = aux.a_side[static_cast<std::size_t>(e.u)];
        const auto & w = aux.b_side[static_cast<std::size_t>(e.w)];
        out << "x " << u.p << ' ' << u.q << ' ' << w.p << ' ' << w.q << ' ' << e.apex << ' '
            << (e.pairing == Pairing::Straight ? 'S' : 'X') << '\n';
    }
}

} // namespace besforge
