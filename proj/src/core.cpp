#include "besforge/core.hpp"
#include "besforge/random.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <unordered_map>

namespace besforge {

namespace
{
    std::uint64_t pair_key(int u, int v)
    {
        if (u > v)
            std::swap(u, v);
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
    }

    std::string to_string(const Triple & t)
    {
        return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}";
    }
} // namespace

Triple make_triple(int u, int v, int w)
{
    Triple t{u, v, w};
    std::sort(t.begin(), t.end());
    return t;
}

TripleSystem::TripleSystem(int vertex_count, std::vector<Triple> triples) : n(vertex_count), edges(std::move(triples))
{
    if (n < 0)
        throw FormatError("negative vertex count");
    for (auto & t : edges) {
        t = make_triple(t[0], t[1], t[2]);
        if (t[0] < 0 || t[2] >= n)
            throw FormatError("edge " + to_string(t) + " has a vertex outside [0, " + std::to_string(n) + ")");
        if (t[0] == t[1] || t[1] == t[2])
            throw FormatError("edge " + to_string(t) + " repeats a vertex");
    }
    std::sort(edges.begin(), edges.end());
    if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end())
        throw FormatError("duplicate edge " + to_string(*it));
}

bool TripleSystem::contains(const Triple & t) const
{
    return std::binary_search(edges.begin(), edges.end(), make_triple(t[0], t[1], t[2]));
}

TripartiteLinearSystem::TripartiteLinearSystem(int na, int nb, int nc, std::vector<Hyperedge> hyperedges)
    : size_a(na), size_b(nb), size_c(nc), edges(std::move(hyperedges))
{
    if (na < 0 || nb < 0 || nc < 0)
        throw FormatError("negative part size");
    for (const auto & h : edges)
        if (h.a < 0 || h.a >= na || h.b < 0 || h.b >= nb || h.c < 0 || h.c >= nc)
            throw FormatError("edge (" + std::to_string(h.a) + "," + std::to_string(h.b) + "," + std::to_string(h.c) +
                              ") outside the declared parts");
    std::sort(edges.begin(), edges.end());
    if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end())
        throw FormatError("duplicate edge (" + std::to_string(it->a) + "," + std::to_string(it->b) + "," +
                          std::to_string(it->c) + ")");
}

bool TripartiteLinearSystem::contains(const Hyperedge & h) const
{
    return std::binary_search(edges.begin(), edges.end(), h);
}

std::vector<int> TripartiteLinearSystem::apex_degrees() const
{
    std::vector<int> d(static_cast<std::size_t>(size_c), 0);
    for (const auto & h : edges)
        ++d[static_cast<std::size_t>(h.c)];
    return d;
}

TripleSystem TripartiteLinearSystem::to_triple_system() const
{
    std::vector<Triple> triples;
    triples.reserve(edges.size());
    for (const auto & h : edges)
        triples.push_back(global(h));
    return TripleSystem(vertex_count(), std::move(triples));
}

std::vector<int> span_of(const std::vector<Triple> & edges)
{
    std::vector<int> span;
    span.reserve(edges.size() * 3);
    for (const auto & t : edges)
        span.insert(span.end(), t.begin(), t.end());
    std::sort(span.begin(), span.end());
    span.erase(std::unique(span.begin(), span.end()), span.end());
    return span;
}

Configuration Configuration::from_edges(std::vector<Triple> edges)
{
    Configuration cfg;
    for (auto & t : edges)
        t = make_triple(t[0], t[1], t[2]);
    std::sort(edges.begin(), edges.end());
    cfg.span = span_of(edges);
    cfg.edges = std::move(edges);
    return cfg;
}

LinearityVerdict validate_linear(const TripleSystem & ts)
{
    std::unordered_map<std::uint64_t, std::size_t> owner;
    owner.reserve(ts.edges.size() * 3);
    for (std::size_t i = 0; i < ts.edges.size(); ++i) {
        const auto & t = ts.edges[i];
        const std::array<std::array<int, 2>, 3> pairs{{{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}};
        for (const auto & p : pairs) {
            auto [it, fresh] = owner.emplace(pair_key(p[0], p[1]), i);
            if (! fresh)
                return LinearityVerdict{false, p, ts.edges[it->second], t};
        }
    }
    return {};
}

LinearityVerdict validate_linear(const TripartiteLinearSystem & lts)
{
    return validate_linear(lts.to_triple_system());
}

LinearityError::LinearityError(const LinearityVerdict & v)
    : ParameterError("system is not linear: pair {" + std::to_string(v.pair[0]) + "," + std::to_string(v.pair[1]) +
                     "} lies in " + to_string(v.first) + " and " + to_string(v.second)),
      verdict(v)
{
}

void require_linear(const TripartiteLinearSystem & lts)
{
    if (auto v = validate_linear(lts); ! v.ok)
        throw LinearityError(v);
}

bool verify_configuration(const TripleSystem & host, const Configuration & cfg, int v, int e)
{
    if (cfg.edge_count() != e)
        return false;
    std::vector<Triple> normalized;
    normalized.reserve(cfg.edges.size());
    for (const auto & t : cfg.edges)
        normalized.push_back(make_triple(t[0], t[1], t[2]));
    std::sort(normalized.begin(), normalized.end());
    if (std::adjacent_find(normalized.begin(), normalized.end()) != normalized.end())
        return false;
    for (const auto & t : normalized)
        if (! host.contains(t))
            return false;
    const auto span = span_of(normalized);
    if (span != cfg.span)
        return false;
    return static_cast<int>(span.size()) <= v;
}

bool verify_configuration(const TripartiteLinearSystem & host, const Configuration & cfg, int v, int e)
{
    return verify_configuration(host.to_triple_system(), cfg, v, e);
}

// reduce-or-win ----------------------------------------------------------

Triple Reduction::to_global(const Hyperedge & h) const
{
    return make_triple(part_globals[0][static_cast<std::size_t>(h.a)], part_globals[1][static_cast<std::size_t>(h.b)],
                       part_globals[2][static_cast<std::size_t>(h.c)]);
}

namespace
{
    constexpr int colour_attempts = 20;
    constexpr std::size_t exact_colouring_budget = 200000;
    constexpr std::size_t exact_colouring_nodes_per_vertex = 100;

    // Proper 3-colouring of the 2-shadow (every edge rainbow) by DSatur
    // backtracking. Returns nullopt when none is found within the budget.
    std::optional<std::vector<int>> exact_colouring(const TripleSystem & ts)
    {
        const auto n = static_cast<std::size_t>(ts.n);
        std::vector<std::vector<int>> adj(n);
        for (const auto & t : ts.edges) {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (i != j)
                        adj[static_cast<std::size_t>(t[i])].push_back(t[j]);
        }
        for (auto & a : adj) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
        }

        std::vector<int> colour(n, -1);
        std::size_t nodes = 0;
        bool exhausted = false;

        auto pick = [&]() -> int {
            int best = -1, best_sat = -1, best_deg = -1;
            for (std::size_t v = 0; v < n; ++v) {
                if (colour[v] != -1)
                    continue;
                unsigned mask = 0;
                for (int w : adj[v])
                    if (colour[static_cast<std::size_t>(w)] != -1)
                        mask |= 1u << colour[static_cast<std::size_t>(w)];
                const int sat = std::popcount(mask);
                const int deg = static_cast<int>(adj[v].size());
                if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                    best = static_cast<int>(v);
                    best_sat = sat;
                    best_deg = deg;
                }
            }
            return best;
        };

        auto solve = [&](auto & self, int max_used) -> bool {
            const int v = pick();
            if (v == -1)
                return true;
            if (++nodes > std::min(exact_colouring_budget, exact_colouring_nodes_per_vertex * n + 1000)) {
                exhausted = true;
                return false;
            }
            unsigned mask = 0;
            for (int w : adj[static_cast<std::size_t>(v)])
                if (colour[static_cast<std::size_t>(w)] != -1)
                    mask |= 1u << colour[static_cast<std::size_t>(w)];
            // colours above max_used + 1 are symmetric to max_used + 1
            for (int c = 0; c < 3 && c <= max_used + 1; ++c) {
                if (mask & (1u << c))
                    continue;
                colour[static_cast<std::size_t>(v)] = c;
                if (self(self, std::max(max_used, c)))
                    return true;
                if (exhausted)
                    break;
            }
            colour[static_cast<std::size_t>(v)] = -1;
            return false;
        };

        if (solve(solve, -1))
            return colour;
        return std::nullopt;
    }

    std::size_t count_rainbow(const TripleSystem & ts, const std::vector<int> & colour)
    {
        std::size_t count = 0;
        for (const auto & t : ts.edges) {
            const int a = colour[static_cast<std::size_t>(t[0])], b = colour[static_cast<std::size_t>(t[1])],
                      c = colour[static_cast<std::size_t>(t[2])];
            if (a != b && b != c && a != c)
                ++count;
        }
        return count;
    }
} // namespace

ReduceOutcome reduce_or_win(const TripleSystem & ts, int e, std::uint64_t seed)
{
    if (e < 1)
        throw ParameterError("reduce_or_win needs e >= 1");

    // Pair codegrees; a pair in >= e edges is an immediate (e + 2, e)-configuration.
    std::map<std::pair<int, int>, std::vector<std::size_t>> through;
    for (std::size_t i = 0; i < ts.edges.size(); ++i) {
        const auto & t = ts.edges[i];
        through[{t[0], t[1]}].push_back(i);
        through[{t[0], t[2]}].push_back(i);
        through[{t[1], t[2]}].push_back(i);
    }
    for (const auto & [pair, ids] : through) {
        if (static_cast<int>(ids.size()) < e)
            continue;
        std::vector<Triple> chosen;
        for (int i = 0; i < e; ++i)
            chosen.push_back(ts.edges[ids[static_cast<std::size_t>(i)]]);
        Win win;
        win.config = Configuration::from_edges(std::move(chosen));
        win.pair = {pair.first, pair.second};
        win.codegree = static_cast<int>(ids.size());
        return win;
    }

    // Pick the colouring with the most rainbow edges.
    std::vector<int> best_colour;
    std::size_t best_proper = 0;
    int best_attempt = -1;
    if (auto exact = exact_colouring(ts)) {
        best_colour = std::move(*exact);
        best_proper = ts.edges.size();
        best_attempt = 0;
    } else {
        for (int attempt = 1; attempt <= colour_attempts; ++attempt) {
            Rng rng(seed, static_cast<std::uint64_t>(attempt));
            std::vector<int> colour(static_cast<std::size_t>(ts.n));
            for (auto & c : colour)
                c = static_cast<int>(rng.below(3));
            const auto proper = count_rainbow(ts, colour);
            if (best_attempt == -1 || proper > best_proper) {
                best_colour = std::move(colour);
                best_proper = proper;
                best_attempt = attempt;
            }
        }
    }

    Reduction red;
    red.input_edges = ts.edges.size();
    red.proper_edges = best_proper;
    red.coloring_attempt = best_attempt;

    // Colour 0/1/2 become parts A/B/C; part-local ids follow global order.
    std::vector<int> local(static_cast<std::size_t>(ts.n), -1);
    for (int v = 0; v < ts.n; ++v) {
        auto & part = red.part_globals[static_cast<std::size_t>(best_colour[static_cast<std::size_t>(v)])];
        local[static_cast<std::size_t>(v)] = static_cast<int>(part.size());
        part.push_back(v);
    }

    std::vector<std::size_t> rainbow;
    for (std::size_t i = 0; i < ts.edges.size(); ++i) {
        const auto & t = ts.edges[i];
        const int a = best_colour[static_cast<std::size_t>(t[0])], b = best_colour[static_cast<std::size_t>(t[1])],
                  c = best_colour[static_cast<std::size_t>(t[2])];
        if (a != b && b != c && a != c)
            rainbow.push_back(i);
    }
    Rng order_rng(seed, 0);
    order_rng.shuffle(std::span<std::size_t>(rainbow));

    // Greedy pair blocking: each kept edge blocks at most 3(e - 2) others.
    std::unordered_map<std::uint64_t, bool> used;
    std::vector<Hyperedge> kept;
    for (auto i : rainbow) {
        const auto & t = ts.edges[i];
        const auto k01 = pair_key(t[0], t[1]), k02 = pair_key(t[0], t[2]), k12 = pair_key(t[1], t[2]);
        if (used.count(k01) || used.count(k02) || used.count(k12))
            continue;
        used[k01] = used[k02] = used[k12] = true;
        Hyperedge h{};
        for (int v : t) {
            const int local_id = local[static_cast<std::size_t>(v)];
            switch (best_colour[static_cast<std::size_t>(v)]) {
            case 0: h.a = local_id; break;
            case 1: h.b = local_id; break;
            default: h.c = local_id; break;
            }
        }
        kept.push_back(h);
    }
    red.kept_edges = kept.size();
    if (kept.empty())
        throw DomainError("degenerate input: no pair lies in " + std::to_string(e) +
                          " edges and no edge survives the tripartite linear reduction");

    red.system = TripartiteLinearSystem(static_cast<int>(red.part_globals[0].size()),
                                        static_cast<int>(red.part_globals[1].size()),
                                        static_cast<int>(red.part_globals[2].size()), std::move(kept));
    return red;
}

// text formats -----------------------------------------------------------

namespace
{
    struct LineReader
    {
        std::istream & in;
        int line_no = 0;

        // Next non-blank, non-comment line split into tokens; empty at EOF.
        std::vector<std::string> next()
        {
            std::string line;
            while (std::getline(in, line)) {
                ++line_no;
                std::istringstream ss(line);
                std::vector<std::string> tokens;
                std::string tok;
                while (ss >> tok)
                    tokens.push_back(tok);
                if (tokens.empty() || tokens.front().front() == '#')
                    continue;
                return tokens;
            }
            return {};
        }

        [[noreturn]] void fail(const std::string & what) const
        {
            throw FormatError("line " + std::to_string(line_no) + ": " + what);
        }

        int integer(const std::string & tok) const
        {
            try {
                std::size_t used = 0;
                const long long value = std::stoll(tok, &used);
                if (used != tok.size() || value < INT32_MIN || value > INT32_MAX)
                    fail("bad integer '" + tok + "'");
                return static_cast<int>(value);
            } catch (const std::logic_error &) {
                fail("bad integer '" + tok + "'");
            }
        }
    };

    TripleSystem read_ts_body(LineReader & r, const std::vector<std::string> & header)
    {
        if (header.size() != 4)
            r.fail("expected 'p ts <n> <m>'");
        const int n = r.integer(header[2]), m = r.integer(header[3]);
        if (m < 0)
            r.fail("negative edge count");
        std::vector<Triple> triples;
        triples.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            auto toks = r.next();
            if (toks.size() != 4 || toks[0] != "e")
                r.fail("expected 'e <u> <v> <w>'");
            triples.push_back({r.integer(toks[1]), r.integer(toks[2]), r.integer(toks[3])});
        }
        if (! r.next().empty())
            r.fail("trailing content after " + std::to_string(m) + " edges");
        return TripleSystem(n, std::move(triples));
    }

    TripartiteLinearSystem read_tls_body(LineReader & r, const std::vector<std::string> & header)
    {
        if (header.size() != 6)
            r.fail("expected 'p tls <nA> <nB> <nC> <m>'");
        const int na = r.integer(header[2]), nb = r.integer(header[3]), nc = r.integer(header[4]),
                  m = r.integer(header[5]);
        if (m < 0)
            r.fail("negative edge count");
        std::vector<Hyperedge> edges;
        edges.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            auto toks = r.next();
            if (toks.size() != 4 || toks[0] != "e")
                r.fail("expected 'e <a> <b> <c>'");
            edges.push_back({r.integer(toks[1]), r.integer(toks[2]), r.integer(toks[3])});
        }
        if (! r.next().empty())
            r.fail("trailing content after " + std::to_string(m) + " edges");
        return TripartiteLinearSystem(na, nb, nc, std::move(edges));
    }
} // namespace

AnySystem read_any_system(std::istream & in)
{
    LineReader r{in};
    auto header = r.next();
    if (header.size() < 2 || header[0] != "p")
        r.fail("missing 'p' header");
    if (header[1] == "ts")
        return read_ts_body(r, header);
    if (header[1] == "tls")
        return read_tls_body(r, header);
    r.fail("unknown format '" + header[1] + "'");
}

TripleSystem read_triple_system(std::istream & in)
{
    auto any = read_any_system(in);
    if (auto * ts = std::get_if<TripleSystem>(&any))
        return std::move(*ts);
    throw FormatError("expected a 'p ts' file");
}

TripartiteLinearSystem read_tripartite(std::istream & in)
{
    auto any = read_any_system(in);
    if (auto * lts = std::get_if<TripartiteLinearSystem>(&any))
        return std::move(*lts);
    throw FormatError("expected a 'p tls' file");
}

void write_triple_system(std::ostream & out, const TripleSystem & ts)
{
    out << "p ts " << ts.n << ' ' << ts.edges.size() << '\n';
    for (const auto & t : ts.edges)
        out << "e " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

void write_tripartite(std::ostream & out, const TripartiteLinearSystem & lts)
{
    out << "p tls " << lts.size_a << ' ' << lts.size_b << ' ' << lts.size_c << ' ' << lts.edges.size() << '\n';
    for (const auto & h : lts.edges)
        out << "e " << h.a << ' ' << h.b << ' ' << h.c << '\n';
}

AnySystem load_system(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw FormatError("cannot open '" + path + "'");
    return read_any_system(in);
}

TripartiteLinearSystem load_tripartite(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw FormatError("cannot open '" + path + "'");
    return read_tripartite(in);
}

namespace
{
    template <typename Writer>
    void write_file(const std::string & path, Writer && writer)
    {
        std::ofstream out(path);
        if (! out)
            throw FormatError("cannot write '" + path + "'");
        writer(out);
    }
} // namespace

void save(const std::string & path, const TripleSystem & ts)
{
    write_file(path, [&](std::ostream & out) { write_triple_system(out, ts); });
}

void save(const std::string & path, const TripartiteLinearSystem & lts)
{
    write_file(path, [&](std::ostream & out) { write_tripartite(out, lts); });
}

} // namespace besforge
