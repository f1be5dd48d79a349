#include "besforge/report.hpp"

namespace besforge {

namespace
{
    Json edge_json(const Hyperedge & h) { return Json::array({h.a, h.b, h.c}); }
} // namespace

Json to_json(const Configuration & cfg)
{
    Json edges = Json::array();
    for (const auto & t : cfg.edges)
        edges.push_back(Json::array({t[0], t[1], t[2]}));
    return Json{{"edges", edges}, {"span", cfg.span}};
}

Json to_json(const CandidateF & f)
{
    Json edges = Json::array();
    for (const auto & [later, earlier] : f.edges)
        edges.push_back(Json::array({later, earlier}));
    return Json{{"k", f.k()}, {"order", f.order}, {"edges", edges}, {"edge_count", f.edge_count()},
                {"achieved_t", f.achieved_t()}};
}

Json to_json(const SearchResult & r)
{
    return Json{{"success", r.success}, {"strategy", to_string(r.used)}, {"steps", r.steps}, {"candidate", to_json(r.best)}};
}

Json to_json(const LemmaBoundsReport & r)
{
    return Json{{"k", r.k},
                {"t", r.t},
                {"vertices", r.vertices},
                {"edges", r.edges},
                {"within_hypotheses", r.within_hypotheses},
                {"assertion1_ok", r.assertion1_ok},
                {"assertion2_branch", to_string(r.assertion2_branch)},
                {"near_4k_threshold", r.near_4k_threshold},
                {"s", r.s},
                {"singular_count", r.singular_count},
                {"good_count", r.good_count},
                {"zero_count", r.zero_count},
                {"four_count", r.four_count},
                {"singular_bound_ok", r.singular_bound_ok}};
}

Json to_json(const InvolvementAudit & a)
{
    Json apex_steps = Json::object();
    for (const auto & [c, steps] : a.apex_steps)
        apex_steps[std::to_string(c)] = steps;
    Json j_sets = Json::object();
    for (const auto & [z, js] : a.j_sets)
        j_sets[std::to_string(z)] = Json{{"J", js}, {"j0", a.j0.count(z) ? a.j0.at(z) : 0}};
    return Json{{"ok", a.ok()},          {"violations", a.violations}, {"Z", a.zero_apexes},
                {"z_within_12t", a.z_within_12t}, {"apex_steps", apex_steps}, {"J", j_sets}};
}

Json to_json(const DriverParams & p)
{
    return Json{{"t", p.t},
                {"k0", p.k0},
                {"tau_max", p.effective_tau_max()},
                {"base_e", p.effective_base_e()},
                {"paper_mode", p.paper_mode},
                {"seed", p.seed},
                {"strategy", to_string(p.strategy)},
                {"keep_rule", p.keep_rule == KeepRule::PreferStraight ? "straight" : "crossed"},
                {"budget_steps", p.budget.max_steps},
                {"budget_ms", p.budget.max_ms}};
}

Json to_json(const DriverReport & r)
{
    Json frames = Json::array();
    for (const auto & f : r.frames)
        frames.push_back(Json{{"e_prime", f.e_prime},
                              {"k", f.k},
                              {"branch", to_string(f.branch)},
                              {"flagged", f.flagged},
                              {"flag_reason", f.flag_reason},
                              {"f_success", f.f_success},
                              {"f_vertices", f.f_vertices},
                              {"f_edges", f.f_edges},
                              {"f_achieved_t", f.f_achieved_t},
                              {"cfg_edges", f.cfg_edges},
                              {"cfg_vertices", f.cfg_vertices},
                              {"lemma_branch", to_string(f.lemma_branch)},
                              {"added_edges", f.added_edges},
                              {"residual_edges", f.residual_edges},
                              {"residual_vertices", f.residual_vertices}});
    Json out{{"e", r.e},
             {"status", r.status == DriverStatus::Ok ? "ok" : "exhausted"},
             {"span", r.span},
             {"d_achieved", r.d_achieved}};
    if (r.paper_mode)
        out["d_paper"] = r.d_paper;
    if (! r.failure.empty())
        out["failure"] = r.failure;
    out["edges"] = to_json(r.config)["edges"];
    out["frames"] = frames;
    return out;
}

Json trace_to_json(const UnpackTrace & trace)
{
    Json steps = Json::array();
    for (const auto & s : trace.steps) {
        Json new_edges = Json::array();
        for (const auto & h : s.new_edges)
            new_edges.push_back(edge_json(h));
        steps.push_back(Json{{"i", s.index},
                             {"vertex", Json::array({s.pair.p, s.pair.q})},
                             {"side", s.pair.side == Side::A ? "A" : "B"},
                             {"d", s.back_degree},
                             {"class", to_string(s.cls)},
                             {"dE", s.delta_e},
                             {"dV", s.delta_v},
                             {"apexes", s.apexes},
                             {"new_edges", new_edges},
                             {"new_vertices", s.new_vertices}});
    }
    return steps;
}

} // namespace besforge
