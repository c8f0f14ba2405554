#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bst/baera.hpp"
#include "bst/bench.hpp"
#include "bst/errors.hpp"
#include "bst/exact.hpp"
#include "bst/hamiltonian.hpp"
#include "bst/io.hpp"

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& item : split_list(text)) {
        out.push_back(std::stoi(item));
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& item : split_list(text)) {
        out.push_back(std::stod(item));
    }
    return out;
}

// Exactly one of --topology (file or spec) and --gen (spec only) must be set.
std::string pick_source(const std::string& topology, const std::string& gen) {
    if (topology.empty() == gen.empty()) {
        throw bst::InputError("provide exactly one of --topology or --gen");
    }
    return topology.empty() ? gen : topology;
}

std::string graph_to_edge_list(const bst::Graph& g) {
    std::ostringstream out;
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
    } else {
        bst::write_file(path, content);
    }
}

struct SolveArgs {
    std::string topology;
    std::string gen;
    int k = 0;
    std::string terminals;
    double w = 1.0;
    uint64_t seed = 0;
    int root = -1;
    std::string algos = "baera,spt,st";
    std::string format = "table";
    std::string out;
    std::string dump_tree;
    bool no_timing = false;
};

int cmd_solve(const SolveArgs& args) {
    std::string label;
    bst::Graph graph =
        bst::load_topology(pick_source(args.topology, args.gen), args.seed, &label);

    std::vector<int> terminals;
    if (!args.terminals.empty()) {
        terminals = parse_int_list(args.terminals);
    } else if (args.k >= 1) {
        terminals = bst::sample_terminals(graph, args.k, args.seed);
    } else {
        throw bst::InputError("provide --k or --terminals");
    }

    bst::ExperimentConfig config;
    config.topology_label = label;
    config.graph = graph;
    config.w_values = {args.w};
    config.samples = 1;
    config.master_seed = args.seed;
    config.algorithms = split_list(args.algos);
    config.include_timing = !args.no_timing;
    config.fixed_terminals = terminals;
    if (args.root >= 0) {
        config.root = args.root;
    }

    bst::BenchResult result = bst::run_bench(config);
    if (args.format == "csv") {
        emit(args.out, bst::rows_to_csv(result.rows, config.include_timing));
    } else {
        std::ostringstream out;
        out << "topology " << label << "  |V|=" << graph.node_count()
            << " |E|=" << graph.edge_count() << "  k=" << terminals.size()
            << " w=" << args.w << " seed=" << args.seed << '\n';
        out << bst::summary_to_text(result);
        emit(args.out, out.str());
    }

    for (const auto& algo : config.algorithms) {
        bool produced = false;
        for (const auto& row : result.rows) {
            produced = produced || row.algorithm == algo;
        }
        if (!produced) {
            std::cerr << algo << ": no solution reported\n";
        }
    }

    if (!args.dump_tree.empty()) {
        if (config.algorithms.size() != 1) {
            throw bst::InputError("--dump-tree needs exactly one algorithm");
        }
        uint64_t seed = bst::sample_seed(args.seed, 0);
        bst::Instance inst =
            bst::make_instance(graph, terminals, args.w, seed, config.root);
        bst::DistanceOracle oracle(graph);
        auto report = bst::run_algorithm(config.algorithms[0], inst, oracle);
        if (!report) {
            throw bst::InfeasibleError("no tree to dump");
        }
        bst::write_file(args.dump_tree, bst::to_edge_list(report->tree));
    }
    return 0;
}

struct BenchArgs {
    std::string topology;
    std::string gen;
    std::string k_list;
    std::string w_list;
    int samples = 1;
    uint64_t seed = 0;
    std::string algos = "baera,spt,st";
    std::string out;
    std::string format = "csv";
    bool no_timing = false;
    int exact_cap = 22;
};

int cmd_bench(const BenchArgs& args) {
    std::string label;
    bst::Graph graph =
        bst::load_topology(pick_source(args.topology, args.gen), args.seed, &label);

    bst::ExperimentConfig config;
    config.topology_label = label;
    config.graph = std::move(graph);
    config.k_values = parse_int_list(args.k_list);
    config.w_values = parse_double_list(args.w_list);
    config.samples = args.samples;
    config.master_seed = args.seed;
    config.algorithms = split_list(args.algos);
    config.include_timing = !args.no_timing;
    config.exact_max_edges = args.exact_cap;

    if (args.format != "csv") {
        throw bst::InputError("unsupported --format: " + args.format);
    }

    bst::BenchResult result = bst::run_bench(config);
    emit(args.out, bst::rows_to_csv(result.rows, config.include_timing));
    if (!args.out.empty() && args.out != "-") {
        std::cout << bst::summary_to_text(result);
    } else {
        std::cerr << bst::summary_to_text(result);
    }
    return 0;
}

struct GenArgs {
    std::string spec;
    std::string base;
    uint64_t seed = 0;
    std::string out;
    long long cap = 200000;
};

int cmd_gen(const GenArgs& args) {
    if (args.spec.rfind("gap:", 0) == 0) {
        if (args.base.empty()) {
            throw bst::InputError("gap generator needs --topology for the base graph");
        }
        int attach = -1;
        int p = -1;
        for (const auto& item : split_list(args.spec.substr(4))) {
            auto eq = item.find('=');
            if (eq == std::string::npos) {
                throw bst::InputError("bad gap argument: " + item);
            }
            std::string key = item.substr(0, eq);
            int value = std::stoi(item.substr(eq + 1));
            if (key == "v") {
                attach = value;
            } else if (key == "p") {
                p = value;
            } else {
                throw bst::InputError("unknown gap argument: " + key);
            }
        }
        bst::Graph base = bst::load_topology(args.base, args.seed);
        bst::GapInstance gap = bst::gap_instance(base, attach, p, args.cap);
        emit(args.out, graph_to_edge_list(gap.graph));
        std::cerr << "nodes=" << gap.graph.node_count() << " edges=" << gap.graph.edge_count()
                  << " w=" << gap.branch_weight << " hub=" << gap.hub
                  << " terminals=all-except-hub\n";
        return 0;
    }
    bst::Graph graph = bst::load_topology(args.spec, args.seed);
    emit(args.out, graph_to_edge_list(graph));
    std::cerr << "nodes=" << graph.node_count() << " edges=" << graph.edge_count() << '\n';
    return 0;
}

struct ExportArgs {
    std::string topology;
    int k = 0;
    std::string terminals;
    double w = 1.0;
    uint64_t seed = 0;
    int root = -1;
    std::string out;
    long long max_vars = 1000000;
};

int cmd_export_lp(const ExportArgs& args) {
    bst::Graph graph = bst::load_topology(args.topology, args.seed);

    std::vector<int> terminals;
    if (!args.terminals.empty()) {
        terminals = parse_int_list(args.terminals);
    } else if (args.k >= 1) {
        terminals = bst::sample_terminals(graph, args.k, args.seed);
    } else {
        throw bst::InputError("provide --k or --terminals");
    }

    long long dests = static_cast<long long>(terminals.size()) - 1;
    long long vars = dests * 2 * graph.edge_count() + graph.edge_count() + graph.node_count();
    if (vars > args.max_vars) {
        throw bst::LimitError("model would have " + std::to_string(vars) +
                              " binary variables, above the cap of " +
                              std::to_string(args.max_vars));
    }

    std::optional<int> root;
    if (args.root >= 0) {
        root = args.root;
    }
    bst::Instance inst = bst::make_instance(std::move(graph), std::move(terminals),
                                            args.w, args.seed, root);
    emit(args.out, bst::export_lp(inst));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Branch-aware Steiner tree solvers and benchmark harness"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "solve one instance with selected algorithms");
    solve->add_option("--topology", solve_args.topology,
                      "graph file (.gml or edge list) or generator spec pa:n=..,m=..");
    solve->add_option("--gen", solve_args.gen, "generator spec (alternative to --topology)");
    solve->add_option("--k", solve_args.k, "number of random terminals");
    solve->add_option("--terminals", solve_args.terminals, "explicit terminal ids, comma separated");
    solve->add_option("--w", solve_args.w, "branch weight");
    solve->add_option("--seed", solve_args.seed, "random seed");
    solve->add_option("--root", solve_args.root, "root terminal id");
    solve->add_option("--algos", solve_args.algos, "comma list: baera,spt,st,exact,hp");
    solve->add_option("--format", solve_args.format, "table or csv");
    solve->add_option("--out", solve_args.out, "output file ('-' for stdout)");
    solve->add_option("--dump-tree", solve_args.dump_tree, "write the tree edge list here");
    solve->add_flag("--no-timing", solve_args.no_timing, "omit the runtime column");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "run a (k, w, samples) sweep and emit CSV");
    bench->add_option("--topology", bench_args.topology, "graph file or generator spec");
    bench->add_option("--gen", bench_args.gen, "generator spec (alternative to --topology)");
    bench->add_option("--k", bench_args.k_list, "k values, comma separated")->required();
    bench->add_option("--w", bench_args.w_list, "w values, comma separated")->required();
    bench->add_option("--samples", bench_args.samples, "samples per (k, w) cell");
    bench->add_option("--seed", bench_args.seed, "master seed");
    bench->add_option("--algos", bench_args.algos, "comma list: baera,spt,st,exact,hp");
    bench->add_option("--out", bench_args.out, "CSV output file ('-' for stdout)");
    bench->add_option("--format", bench_args.format, "output format (csv)");
    bench->add_flag("--no-timing", bench_args.no_timing, "omit the runtime column");
    bench->add_option("--exact-cap", bench_args.exact_cap, "edge cap for the exact oracle");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a graph and write an edge list");
    gen->add_option("--gen", gen_args.spec, "pa:n=..,m=.. or gap:v=..,p=..")->required();
    gen->add_option("--topology", gen_args.base, "base graph for the gap construction");
    gen->add_option("--seed", gen_args.seed, "random seed");
    gen->add_option("--out", gen_args.out, "output file ('-' for stdout)");
    gen->add_option("--cap", gen_args.cap, "node cap for the gap construction");

    ExportArgs export_args;
    auto* export_lp = app.add_subcommand("export-lp", "write the integer program in LP format");
    export_lp->add_option("--topology", export_args.topology, "graph file or generator spec")
        ->required();
    export_lp->add_option("--k", export_args.k, "number of random terminals");
    export_lp->add_option("--terminals", export_args.terminals, "explicit terminal ids");
    export_lp->add_option("--w", export_args.w, "branch weight");
    export_lp->add_option("--seed", export_args.seed, "random seed");
    export_lp->add_option("--root", export_args.root, "root terminal id");
    export_lp->add_option("--out", export_args.out, "output file ('-' for stdout)");
    export_lp->add_option("--max-vars", export_args.max_vars, "refuse models above this many variables");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            return cmd_solve(solve_args);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_args);
        }
        if (gen->parsed()) {
            return cmd_gen(gen_args);
        }
        if (export_lp->parsed()) {
            return cmd_export_lp(export_args);
        }
    } catch (const bst::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return 3;
    } catch (const bst::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
