#include "besforge/driver.hpp"
#include "besforge/generators.hpp"
#include "besforge/oracle.hpp"
#include "besforge/report.hpp"

#include "doctest.h"

using namespace besforge;

TEST_CASE("paper_constant_d")
{
    CHECK(paper_constant_d(4, 1) == 1920048);
    CHECK(paper_constant_d(1, 1'000'000) == 24'000'000);
    CHECK(paper_constant_d(4, 80002) == 1920048);
    CHECK(24 * 80002 == 3 * (4 * 4 + 10'000 * 64));
}

TEST_CASE("group_system(3), e = 7 reaches the oracle span")
{
    DriverParams p;
    p.t = 4;
    p.tau_max = 4;
    p.base_e = 4;
    const auto r = find_bes_configuration(group_system(3), 7, p);
    CHECK(r.status == DriverStatus::Ok);
    CHECK(r.config.edge_count() == 7);
    CHECK(r.span == 9);
    CHECK(r.d_achieved == 2);
    CHECK(r.span == min_span(group_system(3), 7).span);
}

TEST_CASE("e = 1 is a single edge")
{
    for (int m : {1, 4, 7}) {
        const auto r = find_bes_configuration(group_system(m), 1, DriverParams{});
        CHECK(r.config.edge_count() == 1);
        CHECK(r.span == 3);
        CHECK(r.d_achieved == 2);
    }
}

TEST_CASE("group_system(20), e = 40")
{
    DriverParams p;
    p.seed = 1;
    const auto lts = group_system(20);
    const auto r = find_bes_configuration(lts, 40, p);
    CHECK(r.status == DriverStatus::Ok);
    CHECK(r.config.edge_count() == 40);
    CHECK(verify_configuration(lts, r.config, r.span, 40));
    CHECK(r.d_achieved <= 80);
    for (const auto & f : r.frames)
        if (f.branch == FrameBranch::Recurse)
            CHECK((f.cfg_edges >= f.cfg_vertices && f.cfg_vertices > 0));
    CHECK(to_json(r).dump() == to_json(find_bes_configuration(lts, 40, p)).dump());
}

TEST_CASE("exhaustion is reported with the frames so far")
{
    const auto r = find_bes_configuration(group_system(2), 5, DriverParams{});
    CHECK(r.status == DriverStatus::Exhausted);
    CHECK_FALSE(r.failure.empty());
    CHECK_FALSE(r.frames.empty());
}

TEST_CASE("parameter and linearity errors")
{
    CHECK_THROWS_AS(find_bes_configuration(group_system(3), 0, DriverParams{}), ParameterError);
    DriverParams bad;
    bad.base_e = 0;
    CHECK_THROWS_AS(find_bes_configuration(group_system(3), 3, bad), ParameterError);
    const TripartiteLinearSystem nonlinear(2, 2, 2, {{0, 0, 0}, {0, 0, 1}});
    CHECK_THROWS_AS(find_bes_configuration(nonlinear, 1, DriverParams{}), LinearityError);
}

TEST_CASE("paper mode short-circuits to the base case and respects d_paper")
{
    DriverParams p;
    p.paper_mode = true;
    p.t = 4;
    p.k0 = 1;
    const auto lts = group_system(8);
    for (int e : {5, 20, 60}) {
        const auto r = find_bes_configuration(lts, e, p);
        CHECK(r.d_paper == 1920048);
        REQUIRE(r.frames.size() == 1);
        CHECK(r.frames[0].branch == FrameBranch::Base);
        CHECK_FALSE(r.any_flagged());
        CHECK(r.d_achieved <= r.d_paper);
    }
}

TEST_CASE("greedy_pick maximizes overlap with the running span")
{
    const auto lts = group_system(3);
    const auto picks = greedy_pick(lts, {}, 3);
    REQUIRE(picks.size() == 3);
    CHECK(picks[0] == Hyperedge{0, 0, 0});
    std::vector<Triple> t;
    for (const auto & h : picks)
        t.push_back(lts.global(h));
    CHECK(span_of(t).size() == 6); // three edges through a common vertex span 7; 6 needs a triangle
}

TEST_CASE("driver never beats the oracle on small hosts")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto lts = random_linear(5, 5, 5, 18, seed).system;
        DriverParams p;
        p.seed = seed;
        for (int e = 1; e <= std::min<int>(8, static_cast<int>(lts.edges.size())); ++e) {
            const auto r = find_bes_configuration(lts, e, p);
            if (r.status != DriverStatus::Ok)
                continue;
            CHECK(r.config.edge_count() == e);
            CHECK(r.span >= min_span(lts, e).span);
        }
    }
}
