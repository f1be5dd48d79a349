#include "besforge/core.hpp"
#include "besforge/generators.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <map>
#include <random>
#include <sstream>

using namespace besforge;

namespace
{
    // Pair codegree recount, independent of validate_linear.
    int max_codegree(const std::vector<Triple> & edges)
    {
        std::map<std::pair<int, int>, int> count;
        int best = 0;
        for (const auto & t : edges)
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    best = std::max(best, ++count[{t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]}]);
        return best;
    }

    TripleSystem random_triple_system(int n, int m, unsigned seed)
    {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::set<Triple> edges;
        while (static_cast<int>(edges.size()) < m) {
            const int u = pick(rng), v = pick(rng), w = pick(rng);
            if (u != v && v != w && u != w)
                edges.insert(make_triple(u, v, w));
        }
        return TripleSystem(n, {edges.begin(), edges.end()});
    }
} // namespace

TEST_CASE("validate_linear on the small cases")
{
    CHECK(validate_linear(TripleSystem(5, {{0, 1, 2}, {0, 3, 4}})).ok);

    const auto bad = validate_linear(TripleSystem(4, {{0, 1, 2}, {0, 1, 3}}));
    CHECK_FALSE(bad.ok);
    CHECK(bad.pair == std::array<int, 2>{0, 1});
    CHECK(bad.first == Triple{0, 1, 2});
    CHECK(bad.second == Triple{0, 1, 3});

    const auto g3 = group_system(3);
    CHECK(validate_linear(g3).ok);
    CHECK(max_codegree(g3.to_triple_system().edges) == 1);
}

TEST_CASE("TripleSystem rejects malformed edges")
{
    CHECK_THROWS_AS(TripleSystem(3, {{0, 1, 3}}), FormatError);
    CHECK_THROWS_AS(TripleSystem(3, {{0, 1, 1}}), FormatError);
    CHECK_THROWS_AS(TripleSystem(3, {{0, 1, 2}, {2, 1, 0}}), FormatError);
    CHECK_THROWS_AS(TripartiteLinearSystem(1, 1, 1, {{0, 0, 1}}), FormatError);
}

TEST_CASE("verify_configuration")
{
    const TripleSystem host(9, {{0, 1, 2}, {3, 4, 5}, {0, 3, 6}, {6, 7, 8}});
    CHECK(verify_configuration(host, Configuration::from_edges({{0, 1, 2}}), 3, 1));
    CHECK_FALSE(verify_configuration(host, Configuration::from_edges({{0, 1, 2}, {3, 4, 5}}), 5, 2));
    CHECK(verify_configuration(host, Configuration::from_edges({{0, 1, 2}, {3, 4, 5}}), 6, 2));
    // wrong count, foreign edge, stale span
    CHECK_FALSE(verify_configuration(host, Configuration::from_edges({{0, 1, 2}}), 3, 2));
    CHECK_FALSE(verify_configuration(host, Configuration::from_edges({{1, 2, 3}}), 3, 1));
    auto stale = Configuration::from_edges({{0, 1, 2}});
    stale.span.push_back(7);
    CHECK_FALSE(verify_configuration(host, stale, 4, 1));
}

TEST_CASE("Configuration span is idempotent")
{
    const auto cfg = Configuration::from_edges({{3, 4, 5}, {0, 1, 2}, {0, 3, 6}});
    CHECK(cfg.span == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    CHECK(Configuration::from_edges(cfg.edges).span == cfg.span);
    CHECK(span_of(cfg.edges) == cfg.span);
}

TEST_CASE("reduce_or_win keeps an already tripartite linear input intact")
{
    for (int m : {2, 3, 4, 5}) {
        const auto lts = group_system(m);
        const auto ts = lts.to_triple_system();
        for (int e : {1, 3, 7}) {
            const auto out = reduce_or_win(ts, e, 11);
            if (e == 1) {
                REQUIRE(std::holds_alternative<Win>(out));
                continue;
            }
            REQUIRE(std::holds_alternative<Reduction>(out));
            const auto & red = std::get<Reduction>(out);
            CHECK(red.kept_edges == ts.edges.size());
            CHECK(red.system.edges.size() == ts.edges.size());
            std::set<Triple> back;
            for (const auto & h : red.system.edges)
                back.insert(red.to_global(h));
            CHECK(back == std::set<Triple>(ts.edges.begin(), ts.edges.end()));
        }
    }
}

TEST_CASE("reduce_or_win wins on a star through one pair")
{
    std::vector<Triple> star;
    for (int x = 2; x < 7; ++x)
        star.push_back({0, 1, x});
    const TripleSystem ts(7, star);
    const auto out = reduce_or_win(ts, 5, 0);
    REQUIRE(std::holds_alternative<Win>(out));
    const auto & win = std::get<Win>(out);
    CHECK(win.config.edge_count() == 5);
    CHECK(win.config.span_size() == 7);
    CHECK(win.pair == std::array<int, 2>{0, 1});
    CHECK(verify_configuration(ts, win.config, 5 + 2, 5));
}

TEST_CASE("reduce_or_win on a random 3-graph yields a linear tripartite subsystem")
{
    const auto ts = random_triple_system(30, 200, 1);
    const auto out = reduce_or_win(ts, 10, 1);
    REQUIRE(std::holds_alternative<Reduction>(out));
    const auto & red = std::get<Reduction>(out);
    CHECK(red.input_edges == 200);

    std::vector<Triple> global;
    std::vector<int> part(30, -1);
    for (int p = 0; p < 3; ++p)
        for (int v : red.part_globals[static_cast<std::size_t>(p)])
            part[static_cast<std::size_t>(v)] = p;
    for (const auto & h : red.system.edges) {
        const auto t = red.to_global(h);
        CHECK(ts.contains(t));
        std::set<int> parts;
        for (int v : t)
            parts.insert(part[static_cast<std::size_t>(v)]);
        CHECK(parts == std::set<int>{0, 1, 2});
        global.push_back(t);
    }
    CHECK(max_codegree(global) <= 1);
    CHECK(global.size() == red.kept_edges);

    // Retention bound of greedy pair blocking.
    CHECK(red.kept_edges * (3 * 10 - 5) >= red.proper_edges);
}

TEST_CASE("reduce_or_win: win output always verifies")
{
    for (unsigned seed = 0; seed < 20; ++seed) {
        const auto ts = random_triple_system(9, 40, seed);
        for (int e = 2; e <= 5; ++e) {
            const auto out = reduce_or_win(ts, e, seed);
            if (const auto * win = std::get_if<Win>(&out))
                CHECK(verify_configuration(ts, win->config, e + 2, e));
            else {
                const auto & red = std::get<Reduction>(out);
                CHECK(validate_linear(red.system).ok);
                CHECK(red.kept_edges * static_cast<std::size_t>(3 * e - 5) >= red.proper_edges);
            }
        }
    }
}

TEST_CASE("reduce_or_win: empty input is degenerate")
{
    CHECK_THROWS_AS(reduce_or_win(TripleSystem(4, {}), 2, 0), DomainError);
}

TEST_CASE("text formats round trip")
{
    const auto lts = group_system(4);
    std::ostringstream a;
    write_tripartite(a, lts);
    std::istringstream ain(a.str());
    const auto back = read_tripartite(ain);
    std::ostringstream a2;
    write_tripartite(a2, back);
    CHECK(a.str() == a2.str());

    const auto ts = lts.to_triple_system();
    std::ostringstream b;
    write_triple_system(b, ts);
    std::istringstream bin(b.str());
    std::ostringstream b2;
    write_triple_system(b2, read_triple_system(bin));
    CHECK(b.str() == b2.str());

    std::istringstream any("# comment\n\np tls 1 1 1 1\ne 0 0 0\n");
    CHECK(std::holds_alternative<TripartiteLinearSystem>(read_any_system(any)));
}

TEST_CASE("text formats reject malformed input")
{
    for (const char * text : {"p ts 3 1\n", "p ts 3 1\ne 0 1\n", "p ts 3 1\ne 0 1 2 3\n", "p ts 3 1\ne 0 1 x\n",
                              "p tls 1 1 1 1\ne 0 0 1\n", "p ts 3 1\ne 0 1 2\ne 0 1 2\n", "q ts 3 0\n", ""}) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_any_system(in), FormatError);
    }
}
