#include "besforge/auxgraph.hpp"
#include "besforge/generators.hpp"
#include "besforge/random.hpp"
#include "besforge/report.hpp"
#include "besforge/unpack.hpp"

#include "doctest.h"

#include <set>

using namespace besforge;

namespace
{
    struct Fixture
    {
        TripartiteLinearSystem lts;
        AuxGraph aux;
        SimpleAux g;

        explicit Fixture(TripartiteLinearSystem s) : lts(std::move(s)), aux(build_aux(lts)), g(simple_subgraph(aux)) {}

        int vertex(Side side, int p, int q) const
        {
            for (std::size_t i = 0; i < g.vertices.size(); ++i)
                if (g.vertices[i] == PairVertex{side, p, q})
                    return static_cast<int>(i);
            return -1;
        }
    };

    // Replays an F on the host directly: for each F-edge, search the host for
    // an apex closing the two pairs, then count the growth of E and V.
    std::vector<std::pair<int, int>> replay_deltas(const Fixture & fx, const CandidateF & f)
    {
        std::set<Hyperedge> E;
        std::set<std::pair<int, int>> V; // (part, id)
        std::vector<std::pair<int, int>> out;
        for (int v : f.order) {
            const auto e0 = E.size(), v0 = V.size();
            const auto & pv = fx.g.vertices[static_cast<std::size_t>(v)];
            V.insert({pv.side == Side::A ? 0 : 1, pv.p});
            V.insert({pv.side == Side::A ? 0 : 1, pv.q});
            for (auto [later, earlier] : f.edges) {
                if (later != v)
                    continue;
                const auto & x = fx.g.vertices[static_cast<std::size_t>(later)];
                const auto & y = fx.g.vertices[static_cast<std::size_t>(earlier)];
                const auto & ap = x.side == Side::A ? x : y;
                const auto & bp = x.side == Side::A ? y : x;
                for (int c = 0; c < fx.lts.size_c; ++c) {
                    const Hyperedge s1{ap.p, bp.p, c}, s2{ap.q, bp.q, c}, x1{ap.p, bp.q, c}, x2{ap.q, bp.p, c};
                    std::vector<Hyperedge> found;
                    if (fx.lts.contains(s1) && fx.lts.contains(s2))
                        found = {s1, s2};
                    else if (fx.lts.contains(x1) && fx.lts.contains(x2))
                        found = {x1, x2};
                    if (found.empty())
                        continue;
                    for (const auto & h : found) {
                        E.insert(h);
                        V.insert({0, h.a});
                        V.insert({1, h.b});
                        V.insert({2, h.c});
                    }
                    break;
                }
            }
            out.push_back({static_cast<int>(V.size() - v0), static_cast<int>(E.size() - e0)});
        }
        return out;
    }

    CandidateF c4_example(const Fixture & fx)
    {
        const int a01 = fx.vertex(Side::A, 0, 1), b02 = fx.vertex(Side::B, 0, 2);
        const int a12 = fx.vertex(Side::A, 1, 2), b12 = fx.vertex(Side::B, 1, 2);
        return CandidateF{{a01, b02, a12, b12}, {{b02, a01}, {a12, b02}, {b12, a12}, {b12, a01}}};
    }
} // namespace

TEST_CASE("unpacking the 4-cycle of aux(group_system(3))")
{
    const Fixture fx(group_system(3));
    const auto f = c4_example(fx);
    REQUIRE_FALSE(candidate_defect(fx.g.graph, f, fx.g.sides()));

    const auto trace = unpack(f, fx.g, fx.aux, fx.lts);
    const std::vector<std::pair<int, int>> expected{{2, 0}, {3, 2}, {2, 2}, {2, 3}};
    CHECK(replay_deltas(fx, f) == expected);
    REQUIRE(trace.steps.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(trace.steps[i].delta_v == expected[i].first);
        CHECK(trace.steps[i].delta_e == expected[i].second);
    }
    CHECK(trace.config.edge_count() == 7);
    CHECK(trace.vertices.size() == 9);
    CHECK(trace.config.span_size() == 9);
    CHECK(verify_configuration(fx.lts, trace.config, 9, 7));
    CHECK(step_law_violations(trace).empty());
    CHECK(trace.steps[0].cls == StepClass::Singular);
    CHECK(trace.steps[1].cls == StepClass::Singular);
    CHECK(trace.steps[2].cls == StepClass::Singular);
    CHECK(trace.steps[3].cls == StepClass::GoodRegular);
    CHECK(trace.steps[3].apexes.size() == 2);
    CHECK(trace.excess == std::vector<int>{-2, -3, -3, -2});

    const auto bounds = check_lemma_bounds(trace, 4, 4);
    CHECK(bounds.within_hypotheses);
    CHECK(bounds.assertion1_ok);
    CHECK(bounds.assertion2_branch == LemmaBranch::Near4k);
    CHECK(bounds.near_4k_threshold == 16 - 640000);
    CHECK(bounds.s == 6 * 4 * 50 * 50);
    CHECK(bounds.singular_count == 3);
    CHECK(bounds.singular_bound_ok);

    const auto audit = audit_involvement(trace, 4);
    CHECK(audit.ok());
    CHECK(audit.zero_apexes.empty());
    CHECK(audit.z_within_12t);
}

TEST_CASE("single aux edge unpacks to two hyperedges on five vertices")
{
    const Fixture fx(group_system(3));
    const int a01 = fx.vertex(Side::A, 0, 1), b01 = fx.vertex(Side::B, 0, 1);
    const CandidateF f{{a01, b01}, {{b01, a01}}};
    const auto trace = unpack(f, fx.g, fx.aux, fx.lts);
    CHECK(trace.config.edge_count() == 2);
    CHECK(trace.vertices.size() == 5);
    CHECK(audit_involvement(trace, 3).ok());

    const auto bounds = check_lemma_bounds(trace, 2, 3);
    CHECK_FALSE(bounds.within_hypotheses);
    CHECK(bounds.assertion1_ok); // 5 - 12 <= 2 <= 8
}

TEST_CASE("isolated F vertices still contribute their pair elements")
{
    const Fixture fx(group_system(3));
    const CandidateF f{{fx.vertex(Side::A, 0, 1), fx.vertex(Side::A, 1, 2)}, {}};
    const auto trace = unpack(f, fx.g, fx.aux, fx.lts);
    CHECK(trace.config.edge_count() == 0);
    CHECK(trace.vertices.size() == 3);
    for (const auto & s : trace.steps) {
        CHECK(s.cls == StepClass::Singular);
        CHECK(s.delta_e == 0);
    }

    const CandidateF apart{{fx.vertex(Side::A, 0, 1), fx.vertex(Side::B, 1, 2)}, {}};
    const auto t2 = unpack(apart, fx.g, fx.aux, fx.lts);
    CHECK(t2.vertices.size() == 4);
    CHECK(t2.singular_count == 2);
}

TEST_CASE("empty F reports the empty branch")
{
    const Fixture fx(group_system(3));
    const auto trace = unpack(CandidateF{}, fx.g, fx.aux, fx.lts);
    CHECK(check_lemma_bounds(trace, 0, 4).assertion2_branch == LemmaBranch::Empty);
}

TEST_CASE("integrity errors name the offending edge")
{
    const Fixture fx(group_system(3));
    const int a01 = fx.vertex(Side::A, 0, 1), a12 = fx.vertex(Side::A, 1, 2);
    CHECK_THROWS_AS(unpack(CandidateF{{a01, a12}, {{a12, a01}}}, fx.g, fx.aux, fx.lts), DomainError);

    auto thinner = fx.lts;
    thinner.edges.erase(thinner.edges.begin());
    const auto f = c4_example(fx);
    CHECK_THROWS_AS(unpack(f, fx.g, fx.aux, thinner), DomainError);
}

TEST_CASE("random F over group_system(5) obey the step law and the audit")
{
    const Fixture fx(group_system(5));
    const int n = fx.g.graph.vertex_count();
    Rng rng(5, 1);
    for (int run = 0; run < 400; ++run) {
        const int k = 2 + static_cast<int>(rng.below(7));
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            all[static_cast<std::size_t>(i)] = i;
        rng.shuffle(std::span<int>(all));
        all.resize(static_cast<std::size_t>(k));
        const auto f = certify_order(fx.g.graph, all);
        const auto trace = unpack(f, fx.g, fx.aux, fx.lts);
        CHECK(replay_deltas(fx, f).size() == trace.steps.size());
        const auto laws = step_law_violations(trace);
        CHECK_MESSAGE(laws.empty(), (laws.empty() ? "" : laws.front()));
        const auto bounds = check_lemma_bounds(trace, f.k(), f.achieved_t());
        CHECK(bounds.assertion1_ok);
        CHECK(bounds.singular_bound_ok);
        const auto audit = audit_involvement(trace, f.achieved_t());
        CHECK_MESSAGE(audit.ok(), (audit.ok() ? "" : audit.violations.front()));
        CHECK(verify_configuration(fx.lts, trace.config, trace.config.span_size(), trace.config.edge_count()));
    }
}

TEST_CASE("0-steps, Z and J on a dense order")
{
    // Peeling-window F on group_system(4) runs into repeated hyperedges.
    const Fixture fx(group_system(4));
    int zero_steps = 0;
    Rng rng(4, 2);
    for (int run = 0; run < 300; ++run) {
        std::vector<int> all(static_cast<std::size_t>(fx.g.graph.vertex_count()));
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = static_cast<int>(i);
        rng.shuffle(std::span<int>(all));
        all.resize(10);
        const auto trace = unpack(certify_order(fx.g.graph, all), fx.g, fx.aux, fx.lts);
        const auto audit = audit_involvement(trace, 4);
        CHECK(audit.ok());
        zero_steps += trace.zero_count;
        for (int z : audit.zero_apexes) {
            REQUIRE(audit.j_sets.count(z));
            CHECK(audit.j0.at(z) == audit.j_sets.at(z).front());
        }
    }
    CHECK(zero_steps > 0);
}

TEST_CASE("trace JSON field names")
{
    const Fixture fx(group_system(3));
    const auto j = trace_to_json(unpack(c4_example(fx), fx.g, fx.aux, fx.lts));
    REQUIRE(j.is_array());
    std::vector<std::string> keys;
    for (auto it = j[3].begin(); it != j[3].end(); ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"i", "vertex", "side", "d", "class", "dE", "dV", "apexes", "new_edges",
                                           "new_vertices"});
    CHECK(j[3]["class"] == "good_regular");
    CHECK(j[3]["dE"] == 3);
}
