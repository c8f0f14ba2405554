#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bst/distance_oracle.hpp"
#include "bst/instance.hpp"

namespace bst {

struct ResultRow {
    std::string topology;
    int nodes = 0;
    int edges = 0;
    std::string algorithm;
    int k = 0;
    double w = 0.0;
    uint64_t seed = 0;
    int c = 0;
    int b = 0;
    double objective = 0.0;
    double wall_ms = 0.0;
};

struct ExperimentConfig {
    std::string topology_label = "graph";
    Graph graph;
    std::vector<int> k_values;
    std::vector<double> w_values;
    int samples = 1;
    uint64_t master_seed = 0;
    std::vector<std::string> algorithms = {"baera", "spt", "st"};
    bool include_timing = true;
    std::optional<std::vector<int>> fixed_terminals; // bypasses k sampling
    std::optional<int> root;
    int exact_max_edges = 22;

    void validate() const;
};

struct SummaryCell {
    std::string algorithm;
    int k = 0;
    double w = 0.0;
    int samples = 0;
    double mean_objective = 0.0;
    double mean_branches = 0.0;
    double mean_edges = 0.0;
    double mean_wall_ms = 0.0;
};

struct BenchResult {
    std::vector<ResultRow> rows;
    std::vector<SummaryCell> summary;
    double oracle_build_ms = 0.0;
};

// Per-sample seed: a stable hash of the master seed and the sample index,
// so samples can run concurrently yet reproduce bit-identically.
uint64_t sample_seed(uint64_t master_seed, int sample_index);

// Worker cap: BST_THREADS when set, hardware concurrency otherwise.
int worker_count(int work_items);

// Dispatch by algorithm name: baera | spt | st | exact | hp.
// Returns nothing when hp finds no branch-free solution.
std::optional<SolveReport> run_algorithm(const std::string& name, const Instance& inst,
                                         const DistanceOracle& oracle,
                                         int exact_max_edges = 22);

// Runs the sweep over (k, w, sample); rows appear in that deterministic
// order regardless of worker interleaving. Solver wall times exclude the
// oracle build, which is reported separately.
BenchResult run_bench(const ExperimentConfig& config);

std::string rows_to_csv(const std::vector<ResultRow>& rows, bool include_timing);
std::string summary_to_text(const BenchResult& result);

} // namespace bst
