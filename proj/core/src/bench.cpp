#include "bst/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "bst/baera.hpp"
#include "bst/baselines.hpp"
#include "bst/exact.hpp"
#include "bst/hamiltonian.hpp"
#include "bst/io.hpp"
#include "number_format.hpp"

namespace bst {

namespace {

const std::vector<std::string> kKnownAlgorithms = {"baera", "spt", "st", "exact", "hp"};

std::string fixed3(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", value);
    return buf;
}

std::string fixed4(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    return buf;
}

} // namespace

void ExperimentConfig::validate() const {
    if (samples < 1) {
        throw InputError("sample count must be at least 1");
    }
    if (!fixed_terminals && k_values.empty()) {
        throw InputError("no k values given");
    }
    for (int k : k_values) {
        if (k < 1) {
            throw InputError("k must be at least 1");
        }
    }
    if (w_values.empty()) {
        throw InputError("no w values given");
    }
    for (double w : w_values) {
        if (w < 0) {
            throw InputError("w must be nonnegative");
        }
    }
    if (algorithms.empty()) {
        throw InputError("no algorithms selected");
    }
    for (const auto& a : algorithms) {
        if (std::find(kKnownAlgorithms.begin(), kKnownAlgorithms.end(), a) ==
            kKnownAlgorithms.end()) {
            throw InputError("unknown algorithm: " + a);
        }
    }
    if (std::find(algorithms.begin(), algorithms.end(), "exact") != algorithms.end() &&
        graph.edge_count() > exact_max_edges) {
        throw LimitError("exact oracle refused: graph has " +
                         std::to_string(graph.edge_count()) + " edges (cap " +
                         std::to_string(exact_max_edges) + ")");
    }
}

uint64_t sample_seed(uint64_t master_seed, int sample_index) {
    return mix_seed(master_seed, static_cast<uint64_t>(sample_index));
}

int worker_count(int work_items) {
    int limit = std::max(1, work_items);
    unsigned hw = std::thread::hardware_concurrency();
    int threads = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("BST_THREADS")) {
        char* end = nullptr;
        long parsed = std::strtol(env, &end, 10);
        if (end != env && parsed >= 1) {
            threads = static_cast<int>(parsed);
        }
    }
    return std::min(threads, limit);
}

std::optional<SolveReport> run_algorithm(const std::string& name, const Instance& inst,
                                         const DistanceOracle& oracle,
                                         int exact_max_edges) {
    if (name == "baera") {
        return baera(inst, oracle);
    }
    if (name == "spt") {
        return shortest_path_tree(inst, oracle);
    }
    if (name == "st") {
        return takahashi_steiner_tree(inst, oracle);
    }
    if (name == "exact") {
        return brute_force_opt(inst, exact_max_edges);
    }
    if (name == "hp") {
        return path_solution(inst);
    }
    throw InputError("unknown algorithm: " + name);
}

BenchResult run_bench(const ExperimentConfig& config) {
    config.validate();

    BenchResult result;
    auto build0 = std::chrono::steady_clock::now();
    DistanceOracle oracle(config.graph);
    auto build1 = std::chrono::steady_clock::now();
    result.oracle_build_ms =
        std::chrono::duration<double, std::milli>(build1 - build0).count();

    struct Unit {
        int k = 0;
        double w = 0.0;
        int sample = 0;
    };
    std::vector<Unit> units;
    std::vector<int> k_list = config.k_values;
    if (config.fixed_terminals) {
        k_list = {static_cast<int>(config.fixed_terminals->size())};
    }
    for (int k : k_list) {
        for (double w : config.w_values) {
            for (int s = 0; s < config.samples; ++s) {
                units.push_back({k, w, s});
            }
        }
    }

    std::vector<std::vector<ResultRow>> slots(units.size());
    std::atomic<size_t> cursor{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto process = [&](size_t index) {
        const Unit& unit = units[index];
        uint64_t seed = sample_seed(config.master_seed, unit.sample);
        std::vector<int> terminals =
            config.fixed_terminals ? *config.fixed_terminals
                                   : sample_terminals(config.graph, unit.k, seed);
        Instance inst =
            make_instance(config.graph, terminals, unit.w, seed, config.root);

        for (const auto& algo : config.algorithms) {
            auto report = run_algorithm(algo, inst, oracle, config.exact_max_edges);
            if (!report) {
                continue; // hp found no branch-free solution
            }
            ResultRow row;
            row.topology = config.topology_label;
            row.nodes = config.graph.node_count();
            row.edges = config.graph.edge_count();
            row.algorithm = algo;
            row.k = unit.k;
            row.w = unit.w;
            row.seed = seed;
            row.c = report->cost.edges;
            row.b = report->cost.branches;
            row.objective = report->cost.objective;
            row.wall_ms = report->wall_ms;
            slots[index].push_back(std::move(row));
        }
    };

    auto worker = [&]() {
        while (true) {
            size_t index = cursor.fetch_add(1);
            if (index >= units.size()) {
                return;
            }
            try {
                process(index);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
            }
        }
    };

    int threads = worker_count(static_cast<int>(units.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }

    for (auto& slot : slots) {
        for (auto& row : slot) {
            result.rows.push_back(std::move(row));
        }
    }

    // Means per (algorithm, k, w) cell, in selection order.
    for (const auto& algo : config.algorithms) {
        for (int k : k_list) {
            for (double w : config.w_values) {
                SummaryCell cell;
                cell.algorithm = algo;
                cell.k = k;
                cell.w = w;
                for (const auto& row : result.rows) {
                    if (row.algorithm == algo && row.k == k && row.w == w) {
                        ++cell.samples;
                        cell.mean_objective += row.objective;
                        cell.mean_branches += row.b;
                        cell.mean_edges += row.c;
                        cell.mean_wall_ms += row.wall_ms;
                    }
                }
                if (cell.samples == 0) {
                    continue; // hp can decline an instance; no row, no cell
                }
                cell.mean_objective /= cell.samples;
                cell.mean_branches /= cell.samples;
                cell.mean_edges /= cell.samples;
                cell.mean_wall_ms /= cell.samples;
                result.summary.push_back(cell);
            }
        }
    }
    return result;
}

std::string rows_to_csv(const std::vector<ResultRow>& rows, bool include_timing) {
    std::ostringstream out;
    out << "topology,nodes,edges,algorithm,k,w,seed,c,b,objective";
    if (include_timing) {
        out << ",runtime_ms";
    }
    out << '\n';
    for (const auto& row : rows) {
        out << row.topology << ',' << row.nodes << ',' << row.edges << ','
            << row.algorithm << ',' << row.k << ',' << detail::format_number(row.w)
            << ',' << row.seed << ',' << row.c << ',' << row.b << ','
            << detail::format_number(row.objective);
        if (include_timing) {
            out << ',' << fixed3(row.wall_ms);
        }
        out << '\n';
    }
    return out.str();
}

std::string summary_to_text(const BenchResult& result) {
    std::ostringstream out;
    out << "# apsp preprocessing: " << fixed3(result.oracle_build_ms) << " ms\n";
    out << "algorithm        k        w  samples  mean_objective    mean_b    mean_c  mean_runtime_ms\n";
    for (const auto& cell : result.summary) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%-9s %8d %8s %8d %15s %9s %9s %16s\n",
                      cell.algorithm.c_str(), cell.k,
                      detail::format_number(cell.w).c_str(), cell.samples,
                      fixed4(cell.mean_objective).c_str(),
                      fixed4(cell.mean_branches).c_str(),
                      fixed4(cell.mean_edges).c_str(),
                      fixed4(cell.mean_wall_ms).c_str());
        out << buf;
    }
    return out.str();
}

} // namespace bst
