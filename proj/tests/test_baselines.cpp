#include "doctest.h"

#include "bst/baselines.hpp"
#include "bst/exact.hpp"
#include "support/test_util.hpp"

using namespace bst;

TEST_CASE("spt on forced topologies") {
    // Star: root at a leaf forces every path through the center.
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    Instance inst = make_instance(star, {1, 2, 3}, 1.0, 7, 1);
    SolveReport report = shortest_path_tree(inst);
    CHECK(report.cost.edges == 3);
    CHECK(report.cost.branches == 1);
    CHECK(test_util::tree_is_valid(report.tree, star, inst.terminals));

    // 3x3 grid, three corners, root at the shared corner.
    Graph grid = test_util::grid3x3();
    Instance corners = make_instance(grid, {0, 2, 6}, 1.0, 7, 0);
    SolveReport grid_report = shortest_path_tree(corners);
    CHECK(grid_report.cost.edges == 4);
    CHECK(grid_report.cost.branches == 0);
}

TEST_CASE("spt equals takahashi and baera on two terminals") {
    Graph g = test_util::random_connected_graph(15, 8, 99);
    Instance inst = make_instance(g, {3, 11}, 5.0, 123);
    DistanceOracle oracle(g);

    SolveReport spt = shortest_path_tree(inst, oracle);
    SolveReport st = takahashi_steiner_tree(inst, oracle);
    CHECK(spt.cost.edges == oracle.dist(3, 11));
    CHECK(spt.cost.branches == 0);
    CHECK(st.cost.objective == spt.cost.objective);
    CHECK(spt.tree == st.tree);
}

TEST_CASE("takahashi trivial cases") {
    Graph g = test_util::cycle_graph(6);
    Instance single = make_instance(g, {4}, 3.0, 1);
    SolveReport report = takahashi_steiner_tree(single);
    CHECK(report.cost.edges == 0);
    CHECK(report.cost.branches == 0);
    CHECK(report.tree.has_node(4));
}

TEST_CASE("takahashi is infeasible across components") {
    Graph split(4, {{0, 1}, {2, 3}});
    Instance inst{split, {0, 2}, 1.0, 5, std::nullopt};
    CHECK_THROWS_AS(takahashi_steiner_tree(inst), InfeasibleError);
    CHECK_THROWS_AS(shortest_path_tree(inst), InfeasibleError);
}

TEST_CASE("both baselines always produce valid trees") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = test_util::random_connected_graph(16, 9, seed * 53);
        std::vector<int> terms = test_util::random_terminals(g, 4, seed);
        Instance inst = make_instance(g, terms, 2.0, seed);
        DistanceOracle oracle(g);

        SolveReport spt = shortest_path_tree(inst, oracle);
        SolveReport st = takahashi_steiner_tree(inst, oracle);
        CHECK(test_util::tree_is_valid(spt.tree, g, terms));
        CHECK(test_util::tree_is_valid(st.tree, g, terms));
        CHECK(spt.root == st.root);
    }
}

TEST_CASE("steiner insertion beats or matches spt on most instances") {
    int st_not_worse = 0;
    int total = 0;
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = test_util::random_connected_graph(12, 8, seed * 17 + 3);
        std::vector<int> terms = test_util::random_terminals(g, 5, seed);
        Instance inst = make_instance(g, terms, 0.0, seed);
        DistanceOracle oracle(g);
        int c_st = takahashi_steiner_tree(inst, oracle).cost.edges;
        int c_spt = shortest_path_tree(inst, oracle).cost.edges;
        ++total;
        st_not_worse += c_st <= c_spt;
    }
    CHECK(st_not_worse * 2 > total);
}
