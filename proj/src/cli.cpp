#include "besforge/cli.hpp"
#include "besforge/auxgraph.hpp"
#include "besforge/core.hpp"
#include "besforge/degsearch.hpp"
#include "besforge/driver.hpp"
#include "besforge/generators.hpp"
#include "besforge/girth.hpp"
#include "besforge/oracle.hpp"
#include "besforge/report.hpp"
#include "besforge/unpack.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace besforge::cli {

namespace
{
    struct Globals
    {
        std::string seed_text;
        int threads = 1;
        bool no_timestamp = false;

        std::uint64_t seed() const
        {
            std::string text = seed_text;
            if (text.empty())
                if (const char * env = std::getenv("BESFORGE_SEED"))
                    text = env;
            if (text.empty())
                return 0;
            try {
                std::size_t used = 0;
                const auto value = std::stoull(text, &used);
                if (used != text.size())
                    throw ParameterError("bad seed '" + text + "'");
                return value;
            } catch (const std::logic_error &) {
                throw ParameterError("bad seed '" + text + "'");
            }
        }
    };

    std::string timestamp()
    {
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&now, &tm);
        std::ostringstream ss;
        ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
        return ss.str();
    }

    void write_json(const std::string & path, Json report, const Globals & globals)
    {
        if (! globals.no_timestamp)
            report["timestamp"] = timestamp();
        std::ofstream f(path);
        if (! f)
            throw FormatError("cannot write '" + path + "'");
        f << report.dump(2) << '\n';
    }

    Strategy strategy_from(const std::string & name)
    {
        if (auto s = parse_strategy(name))
            return *s;
        throw ParameterError("unknown strategy '" + name + "' (peel, greedy, exhaustive, auto)");
    }

    struct SearchOptions
    {
        int k = 2;
        int t = 4;
        std::string strategy = "auto";
        std::uint64_t budget_steps = SearchBudget{}.max_steps;
        int budget_ms = 0;

        void attach(CLI::App * cmd, bool need_k)
        {
            auto * k_opt = cmd->add_option("--k", k, "vertices of F");
            if (need_k)
                k_opt->required();
            cmd->add_option("--t", t, "target deficiency: F needs 2k - t edges");
            cmd->add_option("--strategy", strategy, "peel | greedy | exhaustive | auto");
            cmd->add_option("--budget-steps", budget_steps, "search step cap");
            cmd->add_option("--budget-ms", budget_ms, "wall clock cap in ms (0 = none)");
        }

        SearchBudget budget() const { return SearchBudget{budget_steps, budget_ms}; }
    };

    Json system_summary(const TripartiteLinearSystem & lts)
    {
        return Json{{"parts", Json::array({lts.size_a, lts.size_b, lts.size_c})}, {"edges", lts.edges.size()}};
    }

    void write_config(const std::string & path, int n, const Configuration & cfg)
    {
        std::ofstream f(path);
        if (! f)
            throw FormatError("cannot write '" + path + "'");
        write_triple_system(f, TripleSystem(n, cfg.edges));
    }

    Configuration read_config(const std::string & path)
    {
        std::ifstream f(path);
        if (! f)
            throw FormatError("cannot open '" + path + "'");
        return Configuration::from_edges(read_triple_system(f).edges);
    }
} // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Sparse configurations in linear 3-graphs via dense 2-degenerate auxiliary subgraphs", "besforge"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals globals;
    app.add_option("--seed", globals.seed_text, "random seed (default: $BESFORGE_SEED or 0)");
    app.add_option("--threads", globals.threads, "worker cap")->check(CLI::PositiveNumber);
    app.add_flag("--no-timestamp", globals.no_timestamp, "omit timestamps from JSON reports");

    std::function<int()> action;

    // gen ------------------------------------------------------------------
    auto * gen = app.add_subcommand("gen", "generate a tripartite linear system")->alias("generate");
    gen->require_subcommand(1);
    int gen_m = 1;
    std::string gen_out;
    auto * gen_group = gen->add_subcommand("group", "edges (a, b, a + b mod m)");
    gen_group->add_option("--m", gen_m, "group order")->required();
    gen_group->add_option("--out", gen_out, "output .tls file")->required();
    gen_group->callback([&] {
        action = [&] {
            save(gen_out, group_system(gen_m));
            out << gen_m * gen_m << '\n';
            return exit_ok;
        };
    });
    int gen_na = 10, gen_nb = 10, gen_nc = 10, gen_edges = 0;
    auto * gen_random = gen->add_subcommand("random", "greedy random partial linear system");
    gen_random->add_option("--na", gen_na)->required();
    gen_random->add_option("--nb", gen_nb)->required();
    gen_random->add_option("--nc", gen_nc)->required();
    gen_random->add_option("--edges", gen_edges, "target edge count")->required();
    gen_random->add_option("--out", gen_out, "output .tls file")->required();
    gen_random->callback([&] {
        action = [&] {
            const auto r = random_linear(gen_na, gen_nb, gen_nc, gen_edges, globals.seed());
            save(gen_out, r.system);
            out << Json{{"requested", r.requested}, {"achieved", r.achieved}}.dump() << '\n';
            return exit_ok;
        };
    });

    // reduce ---------------------------------------------------------------
    std::string input, output, report_path;
    int e = 1;
    auto * reduce = app.add_subcommand("reduce", "linearize and 3-partition a 3-graph, or win outright");
    reduce->add_option("--input", input, "'p ts' file")->required();
    reduce->add_option("--e", e, "configuration size")->required();
    reduce->add_option("--out", output, "where to write the reduced .tls");
    reduce->add_option("--report", report_path, "JSON report path");
    reduce->callback([&] {
        action = [&] {
            const auto any = load_system(input);
            const auto ts = std::holds_alternative<TripleSystem>(any)
                                ? std::get<TripleSystem>(any)
                                : std::get<TripartiteLinearSystem>(any).to_triple_system();
            const auto outcome = reduce_or_win(ts, e, globals.seed());
            Json report;
            if (const auto * win = std::get_if<Win>(&outcome)) {
                report = Json{{"outcome", "win"},
                              {"pair", win->pair},
                              {"codegree", win->codegree},
                              {"configuration", to_json(win->config)}};
                if (! output.empty())
                    write_config(output, ts.n, win->config);
            } else {
                const auto & red = std::get<Reduction>(outcome);
                report = Json{{"outcome", "reduction"},
                              {"input_edges", red.input_edges},
                              {"proper_edges", red.proper_edges},
                              {"kept_edges", red.kept_edges},
                              {"coloring_attempt", red.coloring_attempt},
                              {"system", system_summary(red.system)},
                              {"part_globals", red.part_globals}};
                if (! output.empty())
                    save(output, red.system);
            }
            out << report.dump() << '\n';
            if (! report_path.empty())
                write_json(report_path, report, globals);
            return exit_ok;
        };
    });

    // aux ------------------------------------------------------------------
    std::string keep = "straight";
    auto * aux_cmd = app.add_subcommand("aux", "build the auxiliary pair multigraph");
    aux_cmd->add_option("--input", input, "'p tls' file")->required();
    aux_cmd->add_option("--out", output, "dump path ('p aux' format)");
    aux_cmd->add_option("--keep", keep, "parallel edge kept in the simple graph: straight | crossed");
    aux_cmd->callback([&] {
        action = [&] {
            const auto lts = load_tripartite(input);
            const auto aux = build_aux(lts);
            const auto g = simple_subgraph(aux, keep == "crossed" ? KeepRule::PreferCrossed : KeepRule::PreferStraight);
            if (! output.empty()) {
                std::ofstream f(output);
                if (! f)
                    throw FormatError("cannot write '" + output + "'");
                write_aux(f, aux);
            }
            out << Json{{"a_vertices", aux.a_side.size()},
                        {"b_vertices", aux.b_side.size()},
                        {"multi_edges", aux.multi_edge_count()},
                        {"expected_multi_edges", expected_multi_edges(lts)},
                        {"bound_holds", edge_count_bound_holds(lts, aux)},
                        {"simple_edges", g.graph.edge_count()}}
                       .dump()
                << '\n';
            return exit_ok;
        };
    });

    // findf / unpack ---------------------------------------------------------
    SearchOptions search_opts;
    auto * findf = app.add_subcommand("findf", "search the simple auxiliary graph for a dense 2-degenerate F");
    findf->add_option("--input", input, "'p tls' file")->required();
    findf->add_option("--report", report_path, "JSON report path");
    search_opts.attach(findf, true);
    findf->callback([&] {
        action = [&] {
            const auto lts = load_tripartite(input);
            const auto aux = build_aux(lts);
            const auto g = simple_subgraph(aux);
            const auto r = find_dense_2deg(g.graph, search_opts.k, search_opts.t,
                                           strategy_from(search_opts.strategy), globals.seed(), search_opts.budget());
            const auto report = to_json(r);
            out << report.dump() << '\n';
            if (! report_path.empty())
                write_json(report_path, report, globals);
            return r.success ? exit_ok : exit_domain;
        };
    });

    std::string trace_path;
    auto * unpack_cmd = app.add_subcommand("unpack", "find F, unpack it into hyperedges and audit every step");
    unpack_cmd->add_option("--input", input, "'p tls' file")->required();
    unpack_cmd->add_option("--trace", trace_path, "step-record JSON path");
    unpack_cmd->add_option("--report", report_path, "JSON report path");
    search_opts.attach(unpack_cmd, true);
    unpack_cmd->callback([&] {
        action = [&] {
            const auto lts = load_tripartite(input);
            const auto aux = build_aux(lts);
            const auto g = simple_subgraph(aux);
            const auto r = find_dense_2deg(g.graph, search_opts.k, search_opts.t,
                                           strategy_from(search_opts.strategy), globals.seed(), search_opts.budget());
            const auto trace = unpack(r.best, g, aux, lts);
            const auto bounds = check_lemma_bounds(trace, r.best.k(), r.best.achieved_t());
            const auto audit = audit_involvement(trace, r.best.achieved_t());
            const auto laws = step_law_violations(trace);
            Json report{{"search", to_json(r)},
                        {"configuration", to_json(trace.config)},
                        {"vertices", trace.vertices},
                        {"bounds", to_json(bounds)},
                        {"audit", to_json(audit)},
                        {"step_law_violations", laws}};
            out << report["bounds"].dump() << '\n';
            if (! trace_path.empty()) {
                std::ofstream f(trace_path);
                if (! f)
                    throw FormatError("cannot write '" + trace_path + "'");
                f << trace_to_json(trace).dump(2) << '\n';
            }
            if (! report_path.empty())
                write_json(report_path, report, globals);
            return audit.ok() && laws.empty() ? exit_ok : exit_domain;
        };
    });

    // solve ------------------------------------------------------------------
    DriverParams params;
    std::int64_t tau_max = params.tau_max, base_e = params.base_e;
    auto * solve = app.add_subcommand("solve", "assemble e hyperedges on few vertices");
    solve->add_option("--input", input, "'p tls' file")->required();
    solve->add_option("--e", e, "number of hyperedges")->required();
    solve->add_option("--t", params.t, "deficiency parameter t");
    solve->add_option("--k0", params.k0, "smallest k for which F is assumed to exist");
    solve->add_option("--tau-max", tau_max, "largest arbitrary top-up per frame");
    solve->add_option("--base-e", base_e, "e' at or below which edges are picked greedily");
    solve->add_flag("--paper-mode", params.paper_mode, "use the literal thresholds derived from t and k0");
    solve->add_option("--strategy", search_opts.strategy, "F search strategy");
    solve->add_option("--budget-steps", search_opts.budget_steps, "F search step cap per frame");
    solve->add_option("--budget-ms", search_opts.budget_ms, "F search wall clock cap per frame (0 = none)");
    solve->add_option("--keep", keep, "parallel edge kept in the simple graph: straight | crossed");
    solve->add_option("--report", report_path, "JSON report path");
    solve->add_option("--out", output, "write the configuration as a 'p ts' file");
    solve->callback([&] {
        action = [&] {
            const auto lts = load_tripartite(input);
            params.tau_max = tau_max;
            params.base_e = base_e;
            params.seed = globals.seed();
            params.strategy = strategy_from(search_opts.strategy);
            params.budget = search_opts.budget();
            params.keep_rule = keep == "crossed" ? KeepRule::PreferCrossed : KeepRule::PreferStraight;
            const auto report = find_bes_configuration(lts, e, params);
            auto j = to_json(report);
            j["params"] = to_json(params);
            out << Json{{"e", report.e}, {"span", report.span}, {"d_achieved", report.d_achieved}}.dump() << '\n';
            if (! report_path.empty())
                write_json(report_path, j, globals);
            if (! output.empty())
                write_config(output, lts.vertex_count(), report.config);
            if (report.status != DriverStatus::Ok) {
                err << report.failure << '\n';
                return exit_domain;
            }
            return exit_ok;
        };
    });

    // sweep ------------------------------------------------------------------
    int e_min = 1, e_max = 1;
    std::string csv_path;
    auto * sweep = app.add_subcommand("sweep", "run solve over a range of e and emit CSV");
    sweep->add_option("--input", input, "'p tls' file")->required();
    sweep->add_option("--e-min", e_min)->required();
    sweep->add_option("--e-max", e_max)->required();
    sweep->add_option("--t", params.t);
    sweep->add_option("--tau-max", tau_max);
    sweep->add_option("--base-e", base_e);
    sweep->add_option("--keep", keep, "straight | crossed");
    sweep->add_option("--csv", csv_path, "CSV path (default: stdout)");
    sweep->callback([&] {
        action = [&] {
            const auto lts = load_tripartite(input);
            params.tau_max = tau_max;
            params.base_e = base_e;
            params.seed = globals.seed();
            params.keep_rule = keep == "crossed" ? KeepRule::PreferCrossed : KeepRule::PreferStraight;
            std::ostringstream csv;
            csv << "e,keep_rule,status,span,d_achieved,frames,flagged\n";
            for (int ee = e_min; ee <= e_max; ++ee) {
                const auto r = find_bes_configuration(lts, ee, params);
                csv << ee << ',' << keep << ',' << (r.status == DriverStatus::Ok ? "ok" : "exhausted") << ','
                    << r.span << ',' << r.d_achieved << ',' << r.frames.size() << ',' << (r.any_flagged() ? 1 : 0)
                    << '\n';
            }
            if (csv_path.empty())
                out << csv.str();
            else {
                std::ofstream f(csv_path);
                if (! f)
                    throw FormatError("cannot write '" + csv_path + "'");
                f << csv.str();
            }
            return exit_ok;
        };
    });

    // oracle -----------------------------------------------------------------
    int v = -1;
    std::uint64_t guard = default_span_guard;
    auto * oracle = app.add_subcommand("oracle", "exact minimum span of e-edge configurations");
    oracle->add_option("--input", input, "'p ts' or 'p tls' file")->required();
    oracle->add_option("--e", e)->required();
    oracle->add_option("--v", v, "decide whether a (v, e)-configuration exists instead");
    oracle->add_option("--guard", guard, "enumeration cap on C(|E|, e)");
    oracle->callback([&] {
        action = [&] {
            const auto any = load_system(input);
            const auto ts = std::holds_alternative<TripleSystem>(any)
                                ? std::get<TripleSystem>(any)
                                : std::get<TripartiteLinearSystem>(any).to_triple_system();
            if (v >= 0) {
                const bool found = exists_config(ts, v, e, guard);
                out << (found ? "true" : "false") << '\n';
                return exit_ok;
            }
            out << min_span(ts, e, guard, globals.threads).span << '\n';
            return exit_ok;
        };
    });

    // verify -----------------------------------------------------------------
    std::string config_path;
    auto * verify = app.add_subcommand("verify", "check that a configuration has e host edges on at most v vertices");
    verify->add_option("--input", input, "host 'p ts' or 'p tls' file")->required();
    verify->add_option("--config", config_path, "configuration as a 'p ts' file")->required();
    verify->add_option("--v", v)->required();
    verify->add_option("--e", e)->required();
    verify->callback([&] {
        action = [&] {
            const auto any = load_system(input);
            const auto ts = std::holds_alternative<TripleSystem>(any)
                                ? std::get<TripleSystem>(any)
                                : std::get<TripartiteLinearSystem>(any).to_triple_system();
            const bool ok = verify_configuration(ts, read_config(config_path), v, e);
            out << (ok ? "true" : "false") << '\n';
            return ok ? exit_ok : exit_domain;
        };
    });

    // girth ------------------------------------------------------------------
    auto * girth = app.add_subcommand("girth", "grow or check exactly-(2,t)-degenerate high-girth graphs");
    girth->require_subcommand(1);
    int gk = 0, gt = 0, gg = 3;
    bool deterministic = false, search_t = false;
    auto * grow = girth->add_subcommand("grow", "grow from t isolated vertices");
    grow->add_option("--k", gk, "vertex count")->required();
    grow->add_option("--t", gt, "initial independent set size");
    grow->add_option("--g", gg, "girth lower bound")->required();
    grow->add_flag("--deterministic", deterministic, "always take the smallest valid pair");
    grow->add_flag("--search-t", search_t, "double t from 1 until growth succeeds");
    grow->add_option("--out", output, "graph + certificate file (default: stdout)");
    grow->callback([&] {
        action = [&] {
            if (! search_t && gt < 1)
                throw ParameterError("give --t or --search-t");
            GrowthResult r;
            int t_used = gt;
            if (search_t) {
                auto s = find_t_by_doubling(gk, gg, globals.seed(), deterministic);
                r = std::move(s.growth);
                t_used = s.t;
            } else
                r = grow_girth_graph(gk, gt, gg, globals.seed(), deterministic);
            std::ostringstream text;
            text << "# t " << t_used << '\n';
            write_graph(text, r.graph);
            write_certificate(text, r.cert);
            if (output.empty())
                out << text.str();
            else {
                std::ofstream f(output);
                if (! f)
                    throw FormatError("cannot write '" + output + "'");
                f << text.str();
                const auto gi = girth_of(r.graph);
                out << Json{{"k", gk}, {"t", t_used}, {"edges", r.graph.edge_count()},
                            {"girth", gi ? Json(*gi) : Json("acyclic")}}
                           .dump()
                    << '\n';
            }
            return exit_ok;
        };
    });
    auto * check = girth->add_subcommand("check", "verify a graph (and its certificate, if present)");
    check->add_option("--input", input, "graph file")->required();
    check->add_option("--g", gg, "required girth");
    check->callback([&] {
        action = [&] {
            std::ifstream f(input);
            if (! f)
                throw FormatError("cannot open '" + input + "'");
            const auto file = read_girth_file(f);
            const auto gi = girth_of(file.graph);
            const auto colour = balanced_two_colouring(file.graph);
            int side0 = 0;
            if (colour)
                for (int c : *colour)
                    side0 += c == 0;
            const bool cert_ok = file.cert && verify_certificate(file.graph, *file.cert);
            const bool girth_ok = ! gi || *gi >= gg;
            Json report{{"vertices", file.graph.vertex_count()},
                        {"edges", file.graph.edge_count()},
                        {"girth", gi ? Json(*gi) : Json("acyclic")},
                        {"bipartite", colour.has_value()},
                        {"max_degree", file.graph.max_degree()},
                        {"certificate", file.cert ? Json(cert_ok) : Json(nullptr)}};
            if (colour)
                report["sides"] = Json::array({side0, file.graph.vertex_count() - side0});
            out << report.dump() << '\n';
            return girth_ok && colour && (! file.cert || cert_ok) ? exit_ok : exit_domain;
        };
    });

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto & a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError & ex) {
        err << ex.what() << '\n';
        return exit_usage;
    }

    try {
        return action ? action() : exit_usage;
    } catch (const FormatError & ex) {
        err << "format error: " << ex.what() << '\n';
        return exit_usage;
    } catch (const ParameterError & ex) {
        err << "usage error: " << ex.what() << '\n';
        return exit_usage;
    } catch (const DomainError & ex) {
        err << ex.what() << '\n';
        return exit_domain;
    }
}

} // namespace besforge::cli
