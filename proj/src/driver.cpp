#include "besforge/driver.hpp"

#include <algorithm>
#include <set>

namespace besforge {

std::int64_t paper_constant_d(std::int64_t t, std::int64_t k0)
{
    if (t < 1 || k0 < 1)
        throw ParameterError("paper_constant_d needs t, k0 >= 1");
    return std::max(24 * k0, 3 * (4 * t + 10'000 * t * t * t));
}

std::int64_t DriverParams::effective_tau_max() const
{
    if (! paper_mode)
        return tau_max;
    const std::int64_t tt = t;
    return 10'000 * tt * tt * tt + 4;
}

std::int64_t DriverParams::effective_base_e() const
{
    if (! paper_mode)
        return base_e;
    const std::int64_t tt = t;
    return std::max<std::int64_t>(8 * static_cast<std::int64_t>(k0), 4 * tt + 10'000 * tt * tt * tt);
}

std::string to_string(FrameBranch b)
{
    switch (b) {
    case FrameBranch::Base: return "base";
    case FrameBranch::TopUp: return "top_up";
    case FrameBranch::Recurse: return "recurse";
    }
    return "base";
}

bool DriverReport::any_flagged() const
{
    return std::any_of(frames.begin(), frames.end(), [](const DriverFrame & f) { return f.flagged; });
}

std::vector<Hyperedge> greedy_pick(const TripartiteLinearSystem & pool, std::vector<int> span, int count)
{
    std::vector<char> covered(static_cast<std::size_t>(pool.vertex_count()), 0);
    for (int v : span)
        covered[static_cast<std::size_t>(v)] = 1;
    std::vector<char> used(pool.edges.size(), 0);
    std::vector<Hyperedge> picked;
    for (int round = 0; round < count; ++round) {
        int best_overlap = -1;
        std::size_t best = 0;
        for (std::size_t i = 0; i < pool.edges.size(); ++i) {
            if (used[i])
                continue;
            int overlap = 0;
            for (int v : pool.global(pool.edges[i]))
                overlap += covered[static_cast<std::size_t>(v)];
            if (overlap > best_overlap) {
                best_overlap = overlap;
                best = i;
                if (overlap == 3)
                    break;
            }
        }
        if (best_overlap < 0)
            break;
        used[best] = 1;
        picked.push_back(pool.edges[best]);
        for (int v : pool.global(pool.edges[best]))
            covered[static_cast<std::size_t>(v)] = 1;
    }
    return picked;
}

namespace
{
    class Assembly
    {
    public:
        explicit Assembly(const TripartiteLinearSystem & lts) : residual_(lts) {}

        const TripartiteLinearSystem & residual() const { return residual_; }
        std::vector<int> span() const { return {span_.begin(), span_.end()}; }

        void take(const std::vector<Hyperedge> & edges)
        {
            std::set<Hyperedge> gone(edges.begin(), edges.end());
            for (const auto & h : edges) {
                chosen_.push_back(residual_.global(h));
                for (int v : residual_.global(h))
                    span_.insert(v);
            }
            std::erase_if(residual_.edges, [&](const Hyperedge & h) { return gone.count(h) > 0; });
        }

        int residual_vertices() const
        {
            std::set<int> seen;
            for (const auto & h : residual_.edges)
                for (int v : residual_.global(h))
                    seen.insert(v);
            return static_cast<int>(seen.size());
        }

        Configuration result() const { return Configuration::from_edges(chosen_); }

    private:
        TripartiteLinearSystem residual_;
        std::vector<Triple> chosen_;
        std::set<int> span_;
    };

    std::vector<Hyperedge> hyperedges_of(const UnpackTrace & trace)
    {
        std::vector<Hyperedge> out;
        for (const auto & s : trace.steps)
            out.insert(out.end(), s.new_edges.begin(), s.new_edges.end());
        return out;
    }
} // namespace

DriverReport find_bes_configuration(const TripartiteLinearSystem & lts, int e, const DriverParams & params)
{
    if (e < 1)
        throw ParameterError("e must be positive");
    if (params.t < 1 || params.k0 < 1)
        throw ParameterError("t and k0 must be positive");
    if (params.tau_max < 0 || params.base_e < 1)
        throw ParameterError("tau_max must be >= 0 and base_e >= 1");
    require_linear(lts);

    const std::int64_t tau_max = params.effective_tau_max();
    const std::int64_t base_e = params.effective_base_e();

    DriverReport report;
    report.e = e;
    report.paper_mode = params.paper_mode;
    if (params.paper_mode)
        report.d_paper = paper_constant_d(params.t, params.k0);

    Assembly state(lts);
    int remaining = e;
    for (std::uint64_t frame_no = 0; remaining > 0; ++frame_no) {
        DriverFrame frame;
        frame.e_prime = remaining;
        frame.residual_edges = static_cast<int>(state.residual().edges.size());
        frame.residual_vertices = state.residual_vertices();

        if (frame.residual_edges < remaining) {
            report.status = DriverStatus::Exhausted;
            report.failure = "residual system has " + std::to_string(frame.residual_edges) + " edges, " +
                             std::to_string(remaining) + " still needed";
            report.frames.push_back(frame);
            break;
        }

        auto finish_with_base = [&](bool flagged, std::string reason) {
            frame.branch = FrameBranch::Base;
            frame.flagged = flagged;
            frame.flag_reason = std::move(reason);
            const auto picks = greedy_pick(state.residual(), state.span(), remaining);
            frame.added_edges = static_cast<int>(picks.size());
            state.take(picks);
            remaining = 0;
        };

        const int k = remaining / 4;
        if (remaining <= base_e || k < 2) {
            finish_with_base(false, remaining <= base_e ? "" : "k = floor(e'/4) below 2");
            report.frames.push_back(std::move(frame));
            break;
        }

        frame.k = k;
        const auto aux = build_aux(state.residual());
        const auto g = simple_subgraph(aux, params.keep_rule);
        if (g.graph.vertex_count() < k) {
            finish_with_base(true, "auxiliary graph has fewer than k vertices");
            report.frames.push_back(std::move(frame));
            break;
        }

        const auto search = find_dense_2deg(g.graph, k, params.t, params.strategy,
                                            params.seed + 0x9e3779b97f4a7c15ULL * frame_no, params.budget);
        const auto & f = search.best;
        frame.f_success = search.success;
        frame.f_vertices = f.k();
        frame.f_edges = f.edge_count();
        frame.f_achieved_t = f.achieved_t();
        if (! search.success) {
            frame.flagged = true;
            frame.flag_reason = "no F with t <= " + std::to_string(params.t) + "; using achieved t = " +
                                std::to_string(f.achieved_t());
        }

        const auto trace = unpack(f, g, aux, state.residual());
        const auto bounds = check_lemma_bounds(trace, k, f.achieved_t());
        frame.cfg_edges = trace.config.edge_count();
        frame.cfg_vertices = static_cast<int>(trace.vertices.size());
        frame.lemma_branch = bounds.assertion2_branch;

        if (remaining - frame.cfg_edges <= tau_max) {
            frame.branch = FrameBranch::TopUp;
            state.take(hyperedges_of(trace));
            const auto picks = greedy_pick(state.residual(), state.span(), remaining - frame.cfg_edges);
            frame.added_edges = static_cast<int>(picks.size());
            state.take(picks);
            remaining = 0;
        } else if (frame.cfg_edges >= frame.cfg_vertices && frame.cfg_vertices > 0) {
            frame.branch = FrameBranch::Recurse;
            state.take(hyperedges_of(trace));
            remaining -= frame.cfg_edges;
        } else {
            std::string reason = frame.flag_reason.empty() ? "" : frame.flag_reason + "; ";
            finish_with_base(true, reason + "unpacked configuration neither fits the top-up threshold nor has |E| >= |V| > 0");
        }
        report.frames.push_back(std::move(frame));
    }

    report.config = state.result();
    report.span = report.config.span_size();
    report.d_achieved = report.span - report.config.edge_count();
    return report;
}

} // namespace besforge
