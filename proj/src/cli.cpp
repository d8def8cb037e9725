#include "deduct/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "deduct/dynamics.hpp"
#include "deduct/engine.hpp"
#include "deduct/families.hpp"
#include "deduct/json_io.hpp"
#include "deduct/metrics.hpp"
#include "deduct/pruning.hpp"
#include "deduct/solver.hpp"

namespace deduct {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path) {
    try {
        return parse_edge_list(read_file(path));
    } catch (const ParseError& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write " + path);
    file << text;
}

std::string join(const std::vector<Vertex>& vs) {
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(vs[i]);
    }
    return s;
}

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

std::string moves_text(const StageRecord& rec) {
    std::string s = "stage " + std::to_string(rec.index) + ": ";
    if (rec.moves.empty()) {
        s += "no moves";
    } else {
        s += "moves ";
        for (size_t i = 0; i < rec.moves.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(rec.moves[i].from) + "->" + std::to_string(rec.moves[i].to);
        }
    }
    if (!rec.flummoxed.empty()) s += "; flummoxed " + join(rec.flummoxed);
    return s;
}

FamilySpec spec_from_flags(const std::string& family, int n, const std::vector<int>& parts,
                           int k, std::uint64_t seed) {
    if (family == "path") return FamilySpec::path(n);
    if (family == "cycle") return FamilySpec::cycle(n);
    if (family == "wheel") return FamilySpec::wheel(n);
    if (family == "complete") return FamilySpec::complete(n);
    if (family == "star") return FamilySpec::star(n);
    if (family == "multipartite") return FamilySpec::multipartite(parts);
    if (family == "hypercube") return FamilySpec::hypercube(k);
    if (family == "random-tree") return FamilySpec::random_tree(n, seed);
    throw std::invalid_argument("unknown family \"" + family + "\"");
}

struct Flags {
    std::string graph_path;
    std::string graph_path2;
    std::string layout_text;
    std::string family;
    std::string out_path;
    std::vector<int> parts;
    int n = 0;
    int k = 0;
    int survey_k = -1;
    std::uint64_t seed = 0;
    int max_iter = 0;  // 0: 4n default
    int threads = 0;
    bool json = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for the deduction pursuit-evasion game on graphs"};
    app.require_subcommand(1);
    Flags f;

    auto add_graph_arg = [&](CLI::App* cmd) {
        cmd->add_option("graph", f.graph_path, "edge-list file")->required();
    };
    auto add_layout_flag = [&](CLI::App* cmd) {
        cmd->add_option("--layout", f.layout_text, "layout, e.g. 0,1,3:2")->required();
    };
    auto add_json_flag = [&](CLI::App* cmd) {
        cmd->add_flag("--json", f.json, "emit one JSON document");
    };
    auto add_threads_flag = [&](CLI::App* cmd) {
        cmd->add_option("--threads", f.threads, "worker threads (default: DEDUCT_THREADS or all)");
    };
    auto add_family_flags = [&](CLI::App* cmd) {
        cmd->add_option("--family", f.family,
                        "path|cycle|wheel|complete|star|multipartite|hypercube|random-tree")
            ->required();
        cmd->add_option("--n", f.n, "order");
        cmd->add_option("--parts", f.parts, "multipartite part sizes, e.g. 2,3")->delimiter(',');
        cmd->add_option("--k", f.k, "hypercube dimension");
        cmd->add_option("--seed", f.seed, "random-tree seed");
    };

    CLI::App* solve_cmd = app.add_subcommand("solve", "exact deduction number");
    add_graph_arg(solve_cmd);
    add_json_flag(solve_cmd);
    add_threads_flag(solve_cmd);

    CLI::App* simulate_cmd = app.add_subcommand("simulate", "play the game from a layout");
    add_graph_arg(simulate_cmd);
    add_layout_flag(simulate_cmd);
    add_json_flag(simulate_cmd);

    CLI::App* prune_cmd = app.add_subcommand("prune", "tree layout by pruning");
    add_graph_arg(prune_cmd);
    add_json_flag(prune_cmd);

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "deduction number bounds");
    add_graph_arg(bounds_cmd);
    add_json_flag(bounds_cmd);

    CLI::App* family_cmd = app.add_subcommand("family", "closed-form answer for a family");
    add_family_flags(family_cmd);
    add_json_flag(family_cmd);

    CLI::App* product_cmd = app.add_subcommand("product", "Cartesian product of two graphs");
    product_cmd->add_option("graph", f.graph_path, "first edge-list file")->required();
    product_cmd->add_option("graph2", f.graph_path2, "second edge-list file")->required();
    product_cmd->add_option("-o,--output", f.out_path, "output file (default: stdout)");

    CLI::App* terminal_cmd = app.add_subcommand("terminal", "terminal layout of a layout");
    add_graph_arg(terminal_cmd);
    add_layout_flag(terminal_cmd);
    add_json_flag(terminal_cmd);

    CLI::App* orbit_cmd = app.add_subcommand("orbit", "iterated terminal layouts");
    add_graph_arg(orbit_cmd);
    add_layout_flag(orbit_cmd);
    orbit_cmd->add_option("--max-iter", f.max_iter, "iteration cap (default 4n)");
    add_json_flag(orbit_cmd);

    CLI::App* survey_cmd = app.add_subcommand("survey", "orbits of all k-searcher layouts");
    add_graph_arg(survey_cmd);
    survey_cmd->add_option("--k", f.survey_k, "searchers per layout")->required();
    survey_cmd->add_option("--max-iter", f.max_iter, "iteration cap (default 4n)");
    add_json_flag(survey_cmd);
    add_threads_flag(survey_cmd);

    CLI::App* gen_cmd = app.add_subcommand("gen", "write a family graph as an edge list");
    add_family_flags(gen_cmd);
    gen_cmd->add_option("-o,--output", f.out_path, "output file (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*solve_cmd) {
            const Graph g = load_graph(f.graph_path);
            const SolveResult result = solve(g, {f.threads, 2048});
            const BoundsReport b = bounds(g);
            if (f.json) {
                emit_json(out, solve_json(result, b));
            } else {
                out << "d = " << result.d << '\n';
                out << "witness = " << format_layout(result.witness) << '\n';
                out << "layouts_tested = " << result.layouts_tested << '\n';
                out << "bounds: half_ceil=" << b.half_ceil << " min_degree=" << b.min_degree
                    << " leaf_bound="
                    << (b.leaf_bound ? std::to_string(*b.leaf_bound) : std::string("-"))
                    << " clique_bound=" << b.clique_bound
                    << " edge_cover_bound=" << b.edge_cover_bound << " lower=" << b.lower
                    << " upper=" << b.upper << '\n';
            }
        } else if (*simulate_cmd) {
            const Graph g = load_graph(f.graph_path);
            const Layout layout = parse_layout(f.layout_text, g.order());
            const GameTrace trace = simulate(g, layout);
            if (f.json) {
                emit_json(out, trace_json(trace));
            } else {
                out << "n = " << trace.n << '\n';
                out << "layout = " << format_layout(trace.layout) << '\n';
                for (const auto& rec : trace.stages) out << moves_text(rec) << '\n';
                out << "success = " << (trace.success ? "true" : "false") << '\n';
                out << "terminal = " << format_layout(trace.terminal) << '\n';
                out << "protected = " << join(trace.protected_final) << '\n';
                out << "motionless = " << join(trace.motionless) << '\n';
            }
        } else if (*prune_cmd) {
            const Graph g = load_graph(f.graph_path);
            const PruneResult result = prune(g);
            if (f.json) {
                emit_json(out, prune_json(g.order(), result));
            } else {
                out << "p = " << result.p << '\n';
                out << "layout = " << format_layout(result.layout) << '\n';
                out << "iterations = " << result.iterations << '\n';
            }
        } else if (*bounds_cmd) {
            const Graph g = load_graph(f.graph_path);
            const BoundsReport b = bounds(g);
            if (f.json) {
                emit_json(out, bounds_json(b));
            } else {
                out << "half_ceil = " << b.half_ceil << '\n';
                out << "min_degree = " << b.min_degree << '\n';
                out << "leaf_bound = "
                    << (b.leaf_bound ? std::to_string(*b.leaf_bound) : std::string("-")) << '\n';
                out << "clique_bound = " << b.clique_bound << '\n';
                out << "edge_cover_bound = " << b.edge_cover_bound << '\n';
                out << "lower = " << b.lower << '\n';
                out << "upper = " << b.upper << '\n';
            }
        } else if (*family_cmd) {
            const FamilySpec spec = spec_from_flags(f.family, f.n, f.parts, f.k, f.seed);
            const FamilyAnswer answer = family_answer(spec);
            const int order = generate(spec).order();
            if (f.json) {
                emit_json(out, family_json(answer, order));
            } else {
                out << "family = " << f.family << '\n';
                out << "n = " << order << '\n';
                out << "d = " << answer.d << '\n';
                out << "witness = " << format_layout(answer.witness) << '\n';
            }
        } else if (*product_cmd) {
            const Graph g = load_graph(f.graph_path);
            const Graph h = load_graph(f.graph_path2);
            write_text(f.out_path, write_edge_list(cartesian_product(g, h)), out);
        } else if (*terminal_cmd) {
            const Graph g = load_graph(f.graph_path);
            const Layout layout = parse_layout(f.layout_text, g.order());
            const Layout term = terminal_layout(g, layout);
            if (f.json) {
                ordered_json j;
                j["n"] = g.order();
                j["layout"] = layout_json(layout);
                j["terminal"] = layout_json(term);
                emit_json(out, j);
            } else {
                out << "terminal = " << format_layout(term) << '\n';
            }
        } else if (*orbit_cmd) {
            const Graph g = load_graph(f.graph_path);
            const Layout layout = parse_layout(f.layout_text, g.order());
            const int cap = f.max_iter > 0 ? f.max_iter : default_orbit_iterations(g);
            const OrbitReport report = orbit(g, layout, cap);
            if (f.json) {
                emit_json(out, orbit_json(g.order(), layout, report));
            } else {
                out << "sequence = ";
                for (size_t i = 0; i < report.sequence.size(); ++i) {
                    if (i) out << " | ";
                    out << format_layout(report.sequence[i]);
                }
                out << '\n';
                out << "pre_period = "
                    << (report.pre_period ? std::to_string(*report.pre_period)
                                          : std::string("-"))
                    << '\n';
                out << "period = "
                    << (report.period ? std::to_string(*report.period) : std::string("-"))
                    << '\n';
                out << "all_successful = " << (report.all_successful ? "true" : "false") << '\n';
                if (report.failure_index)
                    out << "failure_index = " << *report.failure_index << '\n';
            }
        } else if (*survey_cmd) {
            const Graph g = load_graph(f.graph_path);
            const int cap = f.max_iter > 0 ? f.max_iter : default_orbit_iterations(g);
            const OrbitSurvey survey = survey_orbits(g, f.survey_k, cap, {f.threads, 1024});
            if (f.json) {
                emit_json(out, survey_json(survey));
            } else {
                out << "n = " << survey.n << '\n';
                out << "k = " << survey.k << '\n';
                out << "layouts_enumerated = " << survey.layouts_enumerated << '\n';
                out << "successful_layouts = " << survey.successful_layout_count << '\n';
                out << "max_pre_period = " << survey.max_pre_period << '\n';
                out << "periods_observed =";
                for (auto& [period, count] : survey.periods_observed)
                    out << ' ' << period << "x" << count;
                out << '\n';
                out << "counterexamples = " << survey.counterexamples.size() << '\n';
            }
        } else if (*gen_cmd) {
            const FamilySpec spec = spec_from_flags(f.family, f.n, f.parts, f.k, f.seed);
            write_text(f.out_path, write_edge_list(generate(spec)), out);
        }
    } catch (const UnsuccessfulLayoutError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace deduct
