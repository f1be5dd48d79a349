#include "besforge/degsearch.hpp"
#include "besforge/error.hpp"
#include "besforge/random.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>
#include <unordered_map>

namespace besforge {

__extension__ typedef unsigned __int128 u128;

DegeneracyOrdering degeneracy_ordering(const Graph & g)
{
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::set<std::pair<int, int>> queue;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        queue.emplace(g.degree(v), v);
    }
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::vector<int> removal, removal_degree;
    removal.reserve(static_cast<std::size_t>(n));
    removal_degree.reserve(static_cast<std::size_t>(n));

    DegeneracyOrdering out;
    while (! queue.empty()) {
        const auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[static_cast<std::size_t>(v)] = 1;
        removal.push_back(v);
        removal_degree.push_back(d);
        out.degeneracy = std::max(out.degeneracy, d);
        for (int w : g.neighbors(v)) {
            if (removed[static_cast<std::size_t>(w)])
                continue;
            auto & dw = deg[static_cast<std::size_t>(w)];
            queue.erase({dw, w});
            --dw;
            queue.emplace(dw, w);
        }
    }
    out.order.assign(removal.rbegin(), removal.rend());
    out.back_degree.assign(removal_degree.rbegin(), removal_degree.rend());
    return out;
}

std::optional<std::string> candidate_defect(const Graph & host, const CandidateF & f, std::span<const int> side)
{
    std::unordered_map<int, int> pos;
    for (std::size_t i = 0; i < f.order.size(); ++i) {
        const int v = f.order[i];
        if (v < 0 || v >= host.vertex_count())
            return "vertex " + std::to_string(v) + " not in host";
        if (! pos.emplace(v, static_cast<int>(i)).second)
            return "vertex " + std::to_string(v) + " listed twice";
    }
    std::vector<int> back(f.order.size(), 0);
    std::set<std::pair<int, int>> seen;
    for (const auto & [later, earlier] : f.edges) {
        auto pl = pos.find(later), pe = pos.find(earlier);
        if (pl == pos.end() || pe == pos.end())
            return "edge {" + std::to_string(later) + "," + std::to_string(earlier) + "} leaves F";
        if (pe->second >= pl->second)
            return "edge {" + std::to_string(later) + "," + std::to_string(earlier) + "} does not point backwards";
        if (! host.has_edge(later, earlier))
            return "edge {" + std::to_string(later) + "," + std::to_string(earlier) + "} not in host";
        if (! seen.emplace(std::min(later, earlier), std::max(later, earlier)).second)
            return "edge {" + std::to_string(later) + "," + std::to_string(earlier) + "} repeated";
        if (! side.empty() && side[static_cast<std::size_t>(later)] == side[static_cast<std::size_t>(earlier)])
            return "edge {" + std::to_string(later) + "," + std::to_string(earlier) + "} inside one side";
        if (++back[static_cast<std::size_t>(pl->second)] > 2)
            return "vertex " + std::to_string(later) + " has back-degree above 2";
    }
    return std::nullopt;
}

CandidateF certify_order(const Graph & host, std::span<const int> order)
{
    std::unordered_map<int, int> pos;
    for (std::size_t i = 0; i < order.size(); ++i)
        pos.emplace(order[i], static_cast<int>(i));
    CandidateF f;
    f.order.assign(order.begin(), order.end());
    std::vector<std::pair<int, int>> earlier; // (position, vertex)
    for (std::size_t i = 0; i < order.size(); ++i) {
        earlier.clear();
        for (int w : host.neighbors(order[i]))
            if (auto it = pos.find(w); it != pos.end() && it->second < static_cast<int>(i))
                earlier.emplace_back(it->second, w);
        std::sort(earlier.begin(), earlier.end());
        for (std::size_t j = 0; j < earlier.size() && j < 2; ++j)
            f.edges.emplace_back(order[i], earlier[j].second);
    }
    return f;
}

std::string to_string(Strategy s)
{
    switch (s) {
    case Strategy::PeelTrim: return "peel";
    case Strategy::Greedy: return "greedy";
    case Strategy::Exhaustive: return "exhaustive";
    case Strategy::Auto: return "auto";
    }
    return "auto";
}

std::optional<Strategy> parse_strategy(const std::string & name)
{
    for (auto s : {Strategy::PeelTrim, Strategy::Greedy, Strategy::Exhaustive, Strategy::Auto})
        if (to_string(s) == name)
            return s;
    return std::nullopt;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    u128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX)
            return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(r);
}

// exhaustive ---------------------------------------------------------------

namespace
{
    constexpr int max_exhaustive_k = 20;

    int edge_cap(int k) { return k >= 2 ? 2 * k - 3 : 0; }

    // Best order over subsets of [k] maximizing sum of min(2, back-degree).
    std::pair<int, std::vector<int>> best_local_order(const std::vector<std::uint32_t> & nbr)
    {
        const auto k = nbr.size();
        const std::uint32_t full = k == 32 ? ~0u : ((1u << k) - 1);

        // Fast path: already 2-degenerate keeps every edge.
        {
            std::uint32_t alive = full;
            std::vector<int> removal;
            bool stuck = false;
            while (alive && ! stuck) {
                stuck = true;
                for (std::size_t v = 0; v < k; ++v)
                    if ((alive >> v & 1u) && std::popcount(nbr[v] & alive) <= 2) {
                        alive &= ~(1u << v);
                        removal.push_back(static_cast<int>(v));
                        stuck = false;
                        break;
                    }
            }
            if (! alive) {
                int edges = 0;
                for (auto m : nbr)
                    edges += std::popcount(m);
                return {edges / 2, std::vector<int>(removal.rbegin(), removal.rend())};
            }
        }

        std::vector<int> best(std::size_t{1} << k, 0);
        std::vector<std::int8_t> last(std::size_t{1} << k, -1);
        for (std::uint32_t set = 1; set <= full; ++set) {
            int value = -1;
            for (std::uint32_t rest = set; rest; rest &= rest - 1) {
                const int v = std::countr_zero(rest);
                const std::uint32_t prev = set & ~(1u << v);
                const int cand = best[prev] + std::min(2, std::popcount(nbr[static_cast<std::size_t>(v)] & prev));
                if (cand > value) {
                    value = cand;
                    last[set] = static_cast<std::int8_t>(v);
                }
            }
            best[set] = value;
            if (set == full)
                break;
        }
        std::vector<int> order(k);
        std::uint32_t set = full;
        for (std::size_t i = k; i-- > 0;) {
            order[i] = last[set];
            set &= ~(1u << last[set]);
        }
        return {best[full], order};
    }
} // namespace

BruteForceResult brute_force_best_2deg(const Graph & g, int k, std::uint64_t guard)
{
    const int n = g.vertex_count();
    if (k < 0 || k > n)
        throw ParameterError("k = " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
    if (binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)) > guard)
        throw ParameterError("enumeration guard exceeded: C(" + std::to_string(n) + ", " + std::to_string(k) +
                             ") > " + std::to_string(guard));
    if (k > max_exhaustive_k)
        throw ParameterError("exhaustive search supports k <= " + std::to_string(max_exhaustive_k));

    BruteForceResult result;
    if (k == 0)
        return result;

    std::vector<int> combo(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        combo[static_cast<std::size_t>(i)] = i;
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(k));
    int best = -1;
    std::vector<int> best_order;
    const int cap = edge_cap(k);

    for (;;) {
        int induced = 0;
        for (int i = 0; i < k; ++i) {
            nbr[static_cast<std::size_t>(i)] = 0;
            for (int j = 0; j < k; ++j)
                if (i != j && g.has_edge(combo[static_cast<std::size_t>(i)], combo[static_cast<std::size_t>(j)])) {
                    nbr[static_cast<std::size_t>(i)] |= 1u << j;
                    if (j > i)
                        ++induced;
                }
        }
        if (std::min(induced, cap) > best) {
            auto [value, local_order] = best_local_order(nbr);
            if (value > best) {
                best = value;
                best_order.clear();
                for (int v : local_order)
                    best_order.push_back(combo[static_cast<std::size_t>(v)]);
                if (best == cap)
                    break;
            }
        }

        int i = k - 1;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++combo[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }

    result.max_edges = best;
    result.witness = certify_order(g, best_order);
    return result;
}

// heuristics ---------------------------------------------------------------

namespace
{
    bool better(const CandidateF & x, const CandidateF & y)
    {
        if (x.edge_count() != y.edge_count())
            return x.edge_count() > y.edge_count();
        return x.order < y.order;
    }

    class Search
    {
    public:
        Search(const Graph & g, int k, SearchBudget budget)
            : g_(g), k_(k), budget_(budget), start_(std::chrono::steady_clock::now()),
              in_set_(static_cast<std::size_t>(g.vertex_count()), 0)
        {
        }

        bool exhausted() const
        {
            if (steps_ >= budget_.max_steps)
                return true;
            if (budget_.max_ms > 0) {
                const auto elapsed = std::chrono::steady_clock::now() - start_;
                return elapsed >= std::chrono::milliseconds(budget_.max_ms);
            }
            return false;
        }

        std::uint64_t steps() const { return steps_; }
        bool optimal(const CandidateF & f) const { return f.edge_count() >= edge_cap(k_); }

        // Peels host[set] by minimum degree (ties by id); the reversed removal
        // order certifies sum of min(2, removal degree) edges.
        CandidateF evaluate(std::vector<int> set)
        {
            ++steps_;
            std::sort(set.begin(), set.end());
            const auto sz = set.size();
            std::unordered_map<int, int> local;
            for (std::size_t i = 0; i < sz; ++i)
                local.emplace(set[i], static_cast<int>(i));
            std::vector<std::vector<int>> adj(sz);
            for (std::size_t i = 0; i < sz; ++i)
                for (int w : g_.neighbors(set[i]))
                    if (auto it = local.find(w); it != local.end())
                        adj[i].push_back(it->second);
            std::vector<int> deg(sz);
            std::set<std::pair<int, int>> queue;
            for (std::size_t i = 0; i < sz; ++i) {
                deg[i] = static_cast<int>(adj[i].size());
                queue.emplace(deg[i], static_cast<int>(i));
            }
            std::vector<char> gone(sz, 0);
            std::vector<int> removal;
            while (! queue.empty()) {
                const int v = queue.begin()->second;
                queue.erase(queue.begin());
                gone[static_cast<std::size_t>(v)] = 1;
                removal.push_back(set[static_cast<std::size_t>(v)]);
                for (int w : adj[static_cast<std::size_t>(v)]) {
                    if (gone[static_cast<std::size_t>(w)])
                        continue;
                    queue.erase({deg[static_cast<std::size_t>(w)], w});
                    queue.emplace(--deg[static_cast<std::size_t>(w)], w);
                }
            }
            std::reverse(removal.begin(), removal.end());
            return certify_peeled(removal);
        }

        CandidateF peel_trim()
        {
            const auto ord = degeneracy_ordering(g_);
            const int n = g_.vertex_count();
            std::optional<CandidateF> best;
            for (int i = 0; i + k_ <= n && ! exhausted(); ++i) {
                auto f = evaluate({ord.order.begin() + i, ord.order.begin() + i + k_});
                if (! best || better(f, *best))
                    best = std::move(f);
                if (optimal(*best))
                    return *best;
            }
            if (! best)
                best = evaluate({ord.order.begin(), ord.order.begin() + k_});
            return local_search(std::move(*best));
        }

        // First-improvement swap search: drop one vertex, add a neighbour of the set.
        CandidateF local_search(CandidateF current)
        {
            bool improved = true;
            while (improved && ! optimal(current) && ! exhausted()) {
                improved = false;
                std::vector<int> set = current.order;
                std::sort(set.begin(), set.end());
                for (int v : set)
                    in_set_[static_cast<std::size_t>(v)] = 1;
                std::vector<int> frontier;
                for (int v : set)
                    for (int w : g_.neighbors(v))
                        if (! in_set_[static_cast<std::size_t>(w)])
                            frontier.push_back(w);
                for (int v : set)
                    in_set_[static_cast<std::size_t>(v)] = 0;
                std::sort(frontier.begin(), frontier.end());
                frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());

                for (std::size_t r = 0; r < set.size() && ! improved && ! exhausted(); ++r)
                    for (int add : frontier) {
                        std::vector<int> next = set;
                        next[r] = add;
                        auto f = evaluate(std::move(next));
                        if (f.edge_count() > current.edge_count()) {
                            current = std::move(f);
                            improved = true;
                            break;
                        }
                        if (exhausted())
                            break;
                    }
            }
            return current;
        }

        CandidateF greedy(std::uint64_t seed)
        {
            const int n = g_.vertex_count();
            auto edges = g_.edges();
            std::optional<CandidateF> best;
            if (edges.empty()) {
                std::vector<int> first(static_cast<std::size_t>(k_));
                for (int i = 0; i < k_; ++i)
                    first[static_cast<std::size_t>(i)] = i;
                return evaluate(first);
            }
            std::sort(edges.begin(), edges.end(), [&](auto x, auto y) {
                const int dx = g_.degree(x.first) + g_.degree(x.second);
                const int dy = g_.degree(y.first) + g_.degree(y.second);
                return dx != dy ? dx > dy : x < y;
            });
            const std::size_t top = std::min<std::size_t>(64, edges.size());
            Rng rng(seed, 0x67726565);
            std::vector<int> links(static_cast<std::size_t>(n), 0);
            for (int restart = 0; restart < max_restarts && (restart == 0 || ! exhausted()); ++restart) {
                const auto [s, t] = edges[restart == 0 ? 0 : rng.below(top)];
                std::vector<int> order{s, t};
                std::vector<int> touched;
                auto add = [&](int v) {
                    in_set_[static_cast<std::size_t>(v)] = 1;
                    for (int w : g_.neighbors(v)) {
                        if (links[static_cast<std::size_t>(w)]++ == 0)
                            touched.push_back(w);
                    }
                };
                add(s);
                add(t);
                while (static_cast<int>(order.size()) < k_) {
                    ++steps_;
                    int pick = -1;
                    auto key = [&](int v) {
                        const int l = links[static_cast<std::size_t>(v)];
                        return std::tuple(std::min(2, l), l, g_.degree(v), -v);
                    };
                    for (int v : touched)
                        if (! in_set_[static_cast<std::size_t>(v)] && (pick == -1 || key(v) > key(pick)))
                            pick = v;
                    if (pick == -1)
                        for (int v = 0; v < n; ++v)
                            if (! in_set_[static_cast<std::size_t>(v)]) {
                                pick = v;
                                break;
                            }
                    order.push_back(pick);
                    add(pick);
                }
                for (int v : order)
                    in_set_[static_cast<std::size_t>(v)] = 0;
                for (int v : touched)
                    links[static_cast<std::size_t>(v)] = 0;

                auto grown = certify_order(g_, order);
                auto peeled = evaluate(order);
                auto & f = better(peeled, grown) ? peeled : grown;
                if (! best || better(f, *best))
                    best = std::move(f);
                if (optimal(*best))
                    break;
            }
            return *best;
        }

    private:
        static constexpr int max_restarts = 48;

        CandidateF certify_peeled(const std::vector<int> & order) { return certify_order(g_, order); }

        const Graph & g_;
        int k_;
        SearchBudget budget_;
        std::chrono::steady_clock::time_point start_;
        std::uint64_t steps_ = 0;
        std::vector<char> in_set_;
    };

    constexpr std::uint64_t auto_exhaustive_guard = 200'000;
} // namespace

SearchResult find_dense_2deg(const Graph & g, int k, int t_target, Strategy strategy, std::uint64_t seed,
                             SearchBudget budget)
{
    const int n = g.vertex_count();
    if (k < 2)
        throw ParameterError("find_dense_2deg needs k >= 2");
    if (k > n)
        throw ParameterError("k = " + std::to_string(k) + " exceeds the host's " + std::to_string(n) + " vertices");

    if (strategy == Strategy::Auto) {
        const bool small = k <= max_exhaustive_k &&
                           binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)) <= auto_exhaustive_guard;
        if (small) {
            auto r = find_dense_2deg(g, k, t_target, Strategy::Exhaustive, seed, budget);
            r.used = Strategy::Auto;
            return r;
        }
    }

    SearchResult result;
    result.used = strategy;
    switch (strategy) {
    case Strategy::Exhaustive: {
        auto bf = brute_force_best_2deg(g, k);
        result.best = std::move(bf.witness);
        break;
    }
    case Strategy::PeelTrim: {
        Search search(g, k, budget);
        result.best = search.peel_trim();
        result.steps = search.steps();
        break;
    }
    case Strategy::Greedy: {
        Search search(g, k, budget);
        result.best = search.greedy(seed);
        result.steps = search.steps();
        break;
    }
    case Strategy::Auto: {
        SearchBudget half = budget;
        half.max_steps = std::max<std::uint64_t>(1, budget.max_steps / 2);
        Search peel(g, k, half);
        auto a = peel.peel_trim();
        Search grow(g, k, half);
        auto b = grow.greedy(seed);
        result.best = better(a, b) ? std::move(a) : std::move(b);
        result.steps = peel.steps() + grow.steps();
        break;
    }
    }
    result.success = result.best.achieved_t() <= t_target;
    return result;
}

} // namespace besforge
