#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "bst/bench.hpp"
#include "bst/io.hpp"
#include "support/test_util.hpp"

using namespace bst;

namespace {

ExperimentConfig small_config() {
    ExperimentConfig config;
    config.topology_label = "fixture";
    config.graph = test_util::random_connected_graph(16, 9, 12345);
    config.k_values = {3, 5};
    config.w_values = {0.0, 5.0};
    config.samples = 4;
    config.master_seed = 77;
    config.algorithms = {"baera", "spt", "st"};
    config.include_timing = false;
    return config;
}

// Set/unset an environment variable for the duration of a scope.
struct EnvGuard {
    std::string key;
    EnvGuard(const std::string& k, const std::string& value) : key(k) {
        setenv(key.c_str(), value.c_str(), 1);
    }
    ~EnvGuard() { unsetenv(key.c_str()); }
};

} // namespace

TEST_CASE("per-sample seeds are stable and distinct") {
    CHECK(sample_seed(1, 0) == sample_seed(1, 0));
    CHECK(sample_seed(1, 0) != sample_seed(1, 1));
    CHECK(sample_seed(1, 0) != sample_seed(2, 0));
}

TEST_CASE("bench rows are complete and ordered deterministically") {
    ExperimentConfig config = small_config();
    BenchResult result = run_bench(config);

    CHECK(result.rows.size() == 2 * 2 * 4 * 3); // k * w * samples * algos
    CHECK(result.oracle_build_ms >= 0.0);

    // Same seed within a (k, sample) pair across w values: paired instances.
    for (const auto& row : result.rows) {
        CHECK(row.objective == row.c + row.w * row.b);
        CHECK(row.nodes == 16);
    }

    std::string csv1 = rows_to_csv(result.rows, false);
    BenchResult again = run_bench(config);
    CHECK(csv1 == rows_to_csv(again.rows, false)); // byte-stable
}

TEST_CASE("worker count respects BST_THREADS and results do not change") {
    ExperimentConfig config = small_config();
    std::string serial_csv;
    {
        EnvGuard guard("BST_THREADS", "1");
        CHECK(worker_count(100) == 1);
        serial_csv = rows_to_csv(run_bench(config).rows, false);
    }
    {
        EnvGuard guard("BST_THREADS", "4");
        CHECK(worker_count(100) == 4);
        CHECK(worker_count(2) == 2);
        std::string parallel_csv = rows_to_csv(run_bench(config).rows, false);
        CHECK(parallel_csv == serial_csv);
    }
}

TEST_CASE("csv schema with and without timing") {
    ExperimentConfig config = small_config();
    config.samples = 1;
    config.k_values = {3};
    config.w_values = {1.0};
    BenchResult result = run_bench(config);

    std::string with_timing = rows_to_csv(result.rows, true);
    std::string without = rows_to_csv(result.rows, false);
    CHECK(with_timing.find("runtime_ms") != std::string::npos);
    CHECK(without.find("runtime_ms") == std::string::npos);
    CHECK(without.rfind("topology,nodes,edges,algorithm,k,w,seed,c,b,objective\n", 0) == 0);
}

TEST_CASE("summary means are recomputable from the rows") {
    ExperimentConfig config = small_config();
    BenchResult result = run_bench(config);
    for (const auto& cell : result.summary) {
        double total = 0.0;
        int count = 0;
        for (const auto& row : result.rows) {
            if (row.algorithm == cell.algorithm && row.k == cell.k && row.w == cell.w) {
                total += row.objective;
                ++count;
            }
        }
        REQUIRE(count == cell.samples);
        CHECK(cell.mean_objective == doctest::Approx(total / count).epsilon(1e-12));
    }
    CHECK(summary_to_text(result).find("mean_objective") != std::string::npos);
}

TEST_CASE("single sample summary equals the row") {
    ExperimentConfig config = small_config();
    config.samples = 1;
    config.k_values = {4};
    config.w_values = {2.0};
    config.algorithms = {"baera"};
    BenchResult result = run_bench(config);
    REQUIRE(result.rows.size() == 1);
    REQUIRE(result.summary.size() == 1);
    CHECK(result.summary[0].mean_objective == result.rows[0].objective);
    CHECK(result.summary[0].mean_edges == result.rows[0].c);
    CHECK(result.summary[0].mean_branches == result.rows[0].b);
}

TEST_CASE("solver ordering against the exact oracle in one run") {
    ExperimentConfig config;
    config.graph = test_util::random_connected_graph(9, 5, 5150);
    config.fixed_terminals = std::vector<int>{0, 3, 7};
    config.w_values = {4.0};
    config.samples = 1;
    config.master_seed = 9;
    config.algorithms = {"baera", "spt", "st", "exact"};
    BenchResult result = run_bench(config);
    REQUIRE(result.rows.size() == 4);

    double exact_obj = -1.0;
    for (const auto& row : result.rows) {
        if (row.algorithm == "exact") {
            exact_obj = row.objective;
        }
    }
    REQUIRE(exact_obj >= 0.0);
    for (const auto& row : result.rows) {
        CHECK(row.objective >= exact_obj);
        CHECK(row.seed == sample_seed(9, 0));
    }
}

TEST_CASE("config validation rejects bad sweeps") {
    ExperimentConfig config = small_config();
    config.samples = 0;
    CHECK_THROWS_AS(run_bench(config), InputError);

    config = small_config();
    config.algorithms = {"quantum"};
    CHECK_THROWS_AS(run_bench(config), InputError);

    config = small_config();
    config.w_values.clear();
    CHECK_THROWS_AS(run_bench(config), InputError);

    config = small_config();
    config.algorithms = {"exact"}; // 24 edges > default cap of 22
    REQUIRE(config.graph.edge_count() > 22);
    CHECK_THROWS_AS(run_bench(config), LimitError);
}

TEST_CASE("cli binary end to end") {
    const char* cli = std::getenv("BST_CLI_PATH");
    if (cli == nullptr) {
        MESSAGE("BST_CLI_PATH not set; skipping CLI smoke checks");
        return;
    }
    std::string graph_path = "/tmp/bst_cli_graph.txt";
    write_file(graph_path, "0 1\n1 2\n2 3\n3 4\n4 0\n1 3\n");

    auto run = [&](const std::string& args) {
        std::string cmd = std::string(cli) + " " + args + " > /dev/null 2>&1";
        return std::system(cmd.c_str());
    };

    CHECK(run("solve --topology " + graph_path + " --terminals 0,2 --w 3 --seed 5") == 0);
    CHECK(run("solve --topology " + graph_path +
              " --terminals 0,2,4 --w 3 --seed 5 --algos baera,spt,st,exact") == 0);

    CHECK(run("solve --topology " + graph_path +
              " --terminals 0,2,4 --w 3 --seed 5 --format csv --no-timing"
              " --out /tmp/bst_cli_solve_a.csv") == 0);
    CHECK(run("solve --topology " + graph_path +
              " --terminals 0,2,4 --w 3 --seed 5 --format csv --no-timing"
              " --out /tmp/bst_cli_solve_b.csv") == 0);
    CHECK(read_file("/tmp/bst_cli_solve_a.csv") == read_file("/tmp/bst_cli_solve_b.csv"));

    // Determinism: two bench runs with --no-timing produce identical bytes.
    CHECK(run("bench --topology " + graph_path +
              " --k 2,3 --w 0,2 --samples 3 --seed 11 --no-timing"
              " --out /tmp/bst_cli_a.csv") == 0);
    CHECK(run("bench --topology " + graph_path +
              " --k 2,3 --w 0,2 --samples 3 --seed 11 --no-timing"
              " --out /tmp/bst_cli_b.csv") == 0);
    CHECK(read_file("/tmp/bst_cli_a.csv") == read_file("/tmp/bst_cli_b.csv"));

    CHECK(run("gen --gen pa:n=40,m=2 --seed 3 --out /tmp/bst_cli_pa.txt") == 0);
    CHECK(parse_edge_list(read_file("/tmp/bst_cli_pa.txt")).node_count() == 40);

    // --gen is the generator-spec alternative to --topology on the drivers.
    CHECK(run("solve --gen pa:n=40,m=2 --k 4 --w 2 --seed 3") == 0);
    CHECK(run("bench --gen pa:n=40,m=2 --k 4 --w 2 --samples 2 --seed 3"
              " --out /tmp/bst_cli_gen.csv") == 0);
    CHECK(run("solve --k 4 --w 2") != 0);
    CHECK(run("solve --topology " + graph_path + " --gen pa:n=40,m=2 --k 4 --w 2") != 0);

    CHECK(run("export-lp --topology " + graph_path +
              " --terminals 0,2,4 --w 2 --root 0 --out /tmp/bst_cli_model.lp") == 0);
    CHECK(read_file("/tmp/bst_cli_model.lp").rfind("Minimize", 0) == 0);

    // Refusals exit nonzero: single terminal, variable cap.
    CHECK(run("export-lp --topology " + graph_path + " --terminals 0 --w 2") != 0);
    CHECK(run("export-lp --topology " + graph_path +
              " --terminals 0,2,4 --w 2 --max-vars 10") != 0);

    // Infeasible instance: disconnected terminals.
    write_file("/tmp/bst_cli_split.txt", "0 1\n2 3\n");
    CHECK(run("solve --topology /tmp/bst_cli_split.txt --terminals 0,2 --w 1") != 0);

    // Tree dump round-trips through the edge-list parser.
    CHECK(run("solve --topology " + graph_path +
              " --terminals 0,2,4 --w 3 --seed 5 --algos baera"
              " --dump-tree /tmp/bst_cli_tree.txt") == 0);
    Graph dumped = parse_edge_list(read_file("/tmp/bst_cli_tree.txt"));
    CHECK(dumped.edge_count() >= 2);
}
