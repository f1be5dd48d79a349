#include "besforge/oracle.hpp"
#include "besforge/degsearch.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace besforge {

namespace
{
    void check_guard(const TripleSystem & host, int e, std::uint64_t guard)
    {
        if (e < 1)
            throw ParameterError("e must be positive");
        if (static_cast<std::size_t>(e) > host.edges.size())
            throw ParameterError("e = " + std::to_string(e) + " exceeds the host's " +
                                 std::to_string(host.edges.size()) + " edges");
        if (binomial(host.edges.size(), static_cast<std::uint64_t>(e)) > guard)
            throw ParameterError("enumeration guard exceeded: C(" + std::to_string(host.edges.size()) + ", " +
                                 std::to_string(e) + ") > " + std::to_string(guard));
    }

    class BranchAndBound
    {
    public:
        BranchAndBound(const TripleSystem & host, int e, int incumbent, bool stop_at_first)
            : edges_(host.edges), e_(e), best_(incumbent), stop_(stop_at_first),
              count_(static_cast<std::size_t>(host.n), 0)
        {
        }

        /// Searches all selections whose smallest edge is `first`.
        void run_from(std::size_t first)
        {
            if (done())
                return;
            chosen_.clear();
            place(first);
            descend(first + 1, 3);
            remove(first);
        }

        bool done() const { return stop_ && found_; }
        int best() const { return best_; }
        bool found() const { return found_; }
        const std::vector<std::size_t> & witness() const { return witness_; }
        std::uint64_t nodes() const { return nodes_; }

    private:
        int place(std::size_t i)
        {
            int fresh = 0;
            for (int v : edges_[i])
                fresh += count_[static_cast<std::size_t>(v)]++ == 0;
            chosen_.push_back(i);
            return fresh;
        }

        void remove(std::size_t i)
        {
            for (int v : edges_[i])
                --count_[static_cast<std::size_t>(v)];
            chosen_.pop_back();
        }

        void descend(std::size_t next, int span)
        {
            ++nodes_;
            if (span >= best_ || done())
                return;
            if (static_cast<int>(chosen_.size()) == e_) {
                best_ = span;
                witness_ = chosen_;
                found_ = true;
                return;
            }
            const std::size_t needed = static_cast<std::size_t>(e_) - chosen_.size();
            for (std::size_t i = next; i + needed <= edges_.size(); ++i) {
                const int fresh = place(i);
                descend(i + 1, span + fresh);
                remove(i);
                if (done())
                    return;
            }
        }

        const std::vector<Triple> & edges_;
        int e_;
        int best_;
        bool stop_;
        bool found_ = false;
        std::vector<int> count_;
        std::vector<std::size_t> chosen_;
        std::vector<std::size_t> witness_;
        std::uint64_t nodes_ = 0;
    };

    MinSpanResult collect(const TripleSystem & host, int span, const std::vector<std::size_t> & ids, std::uint64_t nodes)
    {
        std::vector<Triple> chosen;
        for (auto i : ids)
            chosen.push_back(host.edges[i]);
        return MinSpanResult{span, Configuration::from_edges(std::move(chosen)), nodes};
    }
} // namespace

MinSpanResult min_span(const TripleSystem & host, int e, std::uint64_t guard, int threads)
{
    check_guard(host, e, guard);
    const int ceiling = 3 * e + 1;
    const std::size_t firsts = host.edges.size() - static_cast<std::size_t>(e) + 1;
    const auto workers = static_cast<std::size_t>(std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, firsts));

    // Worker w owns first edges w, w + workers, ...; each keeps its own bound so
    // the combined answer does not depend on scheduling.
    std::vector<BranchAndBound> searches;
    searches.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        searches.emplace_back(host, e, ceiling, false);
    auto work = [&](std::size_t w) {
        for (std::size_t f = w; f < firsts; f += workers)
            searches[w].run_from(f);
    };
    if (workers == 1)
        work(0);
    else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
    }

    const BranchAndBound * winner = nullptr;
    std::uint64_t nodes = 0;
    for (const auto & s : searches) {
        nodes += s.nodes();
        if (! s.found())
            continue;
        if (! winner || s.best() < winner->best() ||
            (s.best() == winner->best() && s.witness() < winner->witness()))
            winner = &s;
    }
    return collect(host, winner->best(), winner->witness(), nodes);
}

MinSpanResult min_span(const TripartiteLinearSystem & host, int e, std::uint64_t guard, int threads)
{
    return min_span(host.to_triple_system(), e, guard, threads);
}

bool exists_config(const TripleSystem & host, int v, int e, std::uint64_t guard)
{
    if (e >= 1 && static_cast<std::size_t>(e) <= host.edges.size() && v >= 3 * e)
        return true;
    check_guard(host, e, guard);
    BranchAndBound search(host, e, v + 1, true);
    const std::size_t firsts = host.edges.size() - static_cast<std::size_t>(e) + 1;
    for (std::size_t f = 0; f < firsts && ! search.done(); ++f)
        search.run_from(f);
    return search.found();
}

bool exists_config(const TripartiteLinearSystem & host, int v, int e, std::uint64_t guard)
{
    return exists_config(host.to_triple_system(), v, e, guard);
}

} // namespace besforge
