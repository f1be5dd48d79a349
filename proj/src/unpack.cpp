#include "besforge/unpack.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace besforge {

std::string to_string(StepClass c)
{
    switch (c) {
    case StepClass::Singular: return "singular";
    case StepClass::ZeroStep: return "zero_step";
    case StepClass::FourStep: return "four_step";
    case StepClass::GoodRegular: return "good_regular";
    }
    return "singular";
}

std::string to_string(LemmaBranch b)
{
    switch (b) {
    case LemmaBranch::Near4k: return "near_4k";
    case LemmaBranch::SelfSustaining: return "self_sustaining";
    case LemmaBranch::Violated: return "violated";
    case LemmaBranch::Empty: return "empty";
    }
    return "violated";
}

namespace
{
    std::string describe(const Hyperedge & h)
    {
        return "(" + std::to_string(h.a) + "," + std::to_string(h.b) + "," + std::to_string(h.c) + ")";
    }

    HyperedgePair normalized(HyperedgePair p)
    {
        if (p.second < p.first)
            std::swap(p.first, p.second);
        return p;
    }
} // namespace

UnpackTrace unpack(const CandidateF & f, const SimpleAux & g, const AuxGraph & aux, const TripartiteLinearSystem & host)
{
    std::unordered_map<int, std::vector<int>> back_edges;
    for (const auto & [later, earlier] : f.edges)
        back_edges[later].push_back(earlier);

    std::set<Hyperedge> edges;
    std::set<int> vertices;
    UnpackTrace trace;

    for (std::size_t i = 0; i < f.order.size(); ++i) {
        const int v = f.order[i];
        if (v < 0 || v >= g.graph.vertex_count())
            throw DomainError("F vertex " + std::to_string(v) + " is not a vertex of the auxiliary graph");

        StepRecord step;
        step.index = static_cast<int>(i) + 1;
        step.vertex = v;
        step.pair = g.vertices[static_cast<std::size_t>(v)];

        struct Incident
        {
            int apex;
            const AuxEdge * edge;
        };
        std::vector<Incident> incident;
        if (auto it = back_edges.find(v); it != back_edges.end())
            for (int w : it->second) {
                const auto id = g.graph.edge_id(v, w);
                if (! id)
                    throw DomainError("F-edge {" + std::to_string(v) + "," + std::to_string(w) +
                                      "} has no auxiliary annotation");
                const auto & ae = aux.edges[g.annotation[static_cast<std::size_t>(*id)]];
                for (const auto * h : {&ae.h1, &ae.h2})
                    if (! host.contains(*h))
                        throw DomainError("F-edge {" + std::to_string(v) + "," + std::to_string(w) +
                                          "} is realized by " + describe(*h) + ", which is not in the host");
                incident.push_back({ae.apex, &ae});
            }
        std::sort(incident.begin(), incident.end(), [](const Incident & x, const Incident & y) { return x.apex < y.apex; });
        step.back_degree = static_cast<int>(incident.size());

        auto add_vertex = [&](int global) {
            if (vertices.insert(global).second)
                step.new_vertices.push_back(global);
        };
        auto add_edge = [&](const Hyperedge & h) {
            if (edges.insert(h).second)
                step.new_edges.push_back(h);
        };

        // The pair's own elements join even when v has no back edges.
        if (step.pair.side == Side::A) {
            add_vertex(host.global_a(step.pair.p));
            add_vertex(host.global_a(step.pair.q));
        } else {
            add_vertex(host.global_b(step.pair.p));
            add_vertex(host.global_b(step.pair.q));
        }
        for (const auto & inc : incident) {
            step.apexes.push_back(inc.apex);
            step.involved.push_back({inc.edge->h1, inc.edge->h2});
            add_vertex(host.global_c(inc.apex));
            for (const auto * h : {&inc.edge->h1, &inc.edge->h2}) {
                add_vertex(host.global_a(h->a));
                add_vertex(host.global_b(h->b));
                add_edge(*h);
            }
        }

        step.delta_e = static_cast<int>(step.new_edges.size());
        step.delta_v = static_cast<int>(step.new_vertices.size());
        if (step.back_degree <= 1)
            step.cls = StepClass::Singular;
        else if (step.delta_e == 0)
            step.cls = StepClass::ZeroStep;
        else if (step.delta_e == 4 && step.delta_v == 4)
            step.cls = StepClass::FourStep;
        else
            step.cls = StepClass::GoodRegular;

        switch (step.cls) {
        case StepClass::Singular: ++trace.singular_count; break;
        case StepClass::ZeroStep: ++trace.zero_count; break;
        case StepClass::FourStep: ++trace.four_count; break;
        case StepClass::GoodRegular: ++trace.good_regular_count; break;
        }
        trace.excess.push_back(static_cast<int>(edges.size()) - static_cast<int>(vertices.size()));
        trace.steps.push_back(std::move(step));
    }

    std::vector<Triple> triples;
    triples.reserve(edges.size());
    for (const auto & h : edges)
        triples.push_back(host.global(h));
    trace.config = Configuration::from_edges(std::move(triples));
    trace.vertices.assign(vertices.begin(), vertices.end());
    return trace;
}

std::vector<std::string> step_law_violations(const UnpackTrace & trace)
{
    std::vector<std::string> out;
    int sum_e = 0, sum_v = 0;
    for (const auto & s : trace.steps) {
        const std::string at = "step " + std::to_string(s.index) + ": ";
        const int de = s.delta_e, dv = s.delta_v, d = s.back_degree;
        sum_e += de;
        sum_v += dv;
        if (de < 0 || dv < 0 || de > 2 * d || d > 2)
            out.push_back(at + "delta_E outside [0, 2 d(v)]");
        if ((d <= 1) != (s.cls == StepClass::Singular))
            out.push_back(at + "singular class disagrees with back-degree");
        if (d == 2) {
            const bool law = (de == 4 && dv <= 4) || (de == 3 && dv <= 2) || (de == 2 && dv <= 1) ||
                             (de == 1 && dv == 0) || (de == 0 && dv == 0);
            if (! law)
                out.push_back(at + "regular step with (dE, dV) = (" + std::to_string(de) + ", " +
                              std::to_string(dv) + ")");
            if (s.apexes.size() != 2 || s.apexes[0] == s.apexes[1])
                out.push_back(at + "regular step without two distinct apexes");
            const StepClass expected = de == 0                ? StepClass::ZeroStep
                                       : (de == 4 && dv == 4) ? StepClass::FourStep
                                                              : StepClass::GoodRegular;
            if (s.cls != expected)
                out.push_back(at + "regular class mislabelled");
        } else if (de < dv - 2)
            out.push_back(at + "singular step loses more than 2");
        for (const auto & h : s.new_edges) {
            const bool inside = std::any_of(s.involved.begin(), s.involved.end(), [&](const HyperedgePair & p) {
                return p.first == h || p.second == h;
            });
            if (! inside)
                out.push_back(at + "new hyperedge " + describe(h) + " outside the involved quadruple");
        }
    }
    if (sum_e != trace.config.edge_count() || sum_v != static_cast<int>(trace.vertices.size()))
        out.push_back("prefix sums of deltas disagree with the final configuration");
    return out;
}

LemmaBoundsReport check_lemma_bounds(const UnpackTrace & trace, int k, int t)
{
    LemmaBoundsReport r;
    r.k = k;
    r.t = t;
    r.vertices = static_cast<int>(trace.vertices.size());
    r.edges = trace.config.edge_count();
    r.within_hypotheses = k >= t && t >= 4;
    r.singular_count = trace.singular_count;
    r.good_count = trace.good_regular_count + trace.singular_count;
    r.zero_count = trace.zero_count;
    r.four_count = trace.four_count;

    const std::int64_t tt = t;
    r.near_4k_threshold = 4 * static_cast<std::int64_t>(k) - 10'000 * tt * tt * tt;
    r.s = 6 * tt * (12 * tt + 2) * (12 * tt + 2);
    r.assertion1_ok = r.vertices - 4 * tt <= r.edges && r.edges <= 4 * static_cast<std::int64_t>(k);
    r.singular_bound_ok = r.singular_count <= 2 * t;

    if (k == 0)
        r.assertion2_branch = LemmaBranch::Empty;
    else if (r.edges >= r.near_4k_threshold)
        r.assertion2_branch = LemmaBranch::Near4k;
    else if (r.edges >= r.vertices && r.vertices > 0)
        r.assertion2_branch = LemmaBranch::SelfSustaining;
    else
        r.assertion2_branch = LemmaBranch::Violated;
    return r;
}

InvolvementAudit audit_involvement(const UnpackTrace & trace, int t)
{
    InvolvementAudit audit;
    std::map<HyperedgePair, int> pair_step;
    std::map<int, std::vector<int>> good_steps; // apex -> good (or singular) steps involving it

    for (const auto & s : trace.steps) {
        for (std::size_t j = 0; j < s.apexes.size(); ++j) {
            audit.apex_steps[s.apexes[j]].push_back(s.index);
            const auto key = normalized(s.involved[j]);
            auto [it, fresh] = pair_step.emplace(key, s.index);
            if (! fresh && it->second != s.index)
                audit.violations.push_back("hyperedge pair " + describe(key.first) + "/" + describe(key.second) +
                                           " involved in steps " + std::to_string(it->second) + " and " +
                                           std::to_string(s.index));
            if (s.cls == StepClass::Singular || s.cls == StepClass::GoodRegular)
                good_steps[s.apexes[j]].push_back(s.index);
        }
        if (s.cls != StepClass::ZeroStep)
            continue;
        for (int c : s.apexes) {
            audit.zero_apexes.push_back(c);
            const auto & prior = good_steps[c];
            const bool preceded = std::any_of(prior.begin(), prior.end(), [&](int j) { return j < s.index; });
            if (! preceded)
                audit.violations.push_back("0-step " + std::to_string(s.index) + " involves apex " +
                                           std::to_string(c) + " with no earlier good step");
        }
    }
    std::sort(audit.zero_apexes.begin(), audit.zero_apexes.end());
    audit.zero_apexes.erase(std::unique(audit.zero_apexes.begin(), audit.zero_apexes.end()), audit.zero_apexes.end());
    audit.z_within_12t = static_cast<std::int64_t>(audit.zero_apexes.size()) <= 12 * static_cast<std::int64_t>(t);

    for (int z : audit.zero_apexes) {
        auto & js = audit.j_sets[z];
        for (const auto & s : trace.steps)
            if (std::any_of(s.new_edges.begin(), s.new_edges.end(), [&](const Hyperedge & h) { return h.c == z; }))
                js.push_back(s.index);
        if (! js.empty())
            audit.j0[z] = js.front();
    }
    return audit;
}

} // namespace besforge
