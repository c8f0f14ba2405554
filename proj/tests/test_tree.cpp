#include "doctest.h"

#include "bst/tree.hpp"
#include "support/test_util.hpp"

using namespace bst;

namespace {

// Caterpillar with `edges` total edges of which `branches` spine nodes carry
// one leg each (tree degree 3). Used to pin the objective arithmetic.
MulticastTree caterpillar(int edges, int branches) {
    int spine_edges = edges - branches;
    MulticastTree t;
    for (int i = 0; i < spine_edges; ++i) {
        t.add_edge(i, i + 1);
    }
    for (int i = 1; i <= branches; ++i) {
        t.add_edge(i, spine_edges + i);
    }
    return t;
}

} // namespace

TEST_CASE("objective reproduces the reference arithmetic") {
    TreeCost a = objective(caterpillar(27, 7), 20.0);
    CHECK(a.edges == 27);
    CHECK(a.branches == 7);
    CHECK(a.objective == 167.0);

    TreeCost b = objective(caterpillar(23, 8), 20.0);
    CHECK(b.edges == 23);
    CHECK(b.branches == 8);
    CHECK(b.objective == 183.0);

    TreeCost c = objective(caterpillar(26, 5), 20.0);
    CHECK(c.edges == 26);
    CHECK(c.branches == 5);
    CHECK(c.objective == 126.0);
}

TEST_CASE("objective contract") {
    MulticastTree singleton = MulticastTree::singleton(7);
    TreeCost cost = objective(singleton, 5.0);
    CHECK(cost.edges == 0);
    CHECK(cost.branches == 0);
    CHECK(cost.objective == 0.0);

    MulticastTree cycle = MulticastTree::from_edges({{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_AS(objective(cycle, 1.0), ContractError);

    MulticastTree forest = MulticastTree::from_edges({{0, 1}, {2, 3}});
    CHECK_THROWS_AS(objective(forest, 1.0), ContractError);

    CHECK_THROWS_AS(objective(singleton, -1.0), InputError);
}

TEST_CASE("validate_tree reports each violation") {
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}});

    MulticastTree ok = MulticastTree::singleton(1);
    CHECK(validate_tree(ok, g, {1}).empty());

    MulticastTree cyc = MulticastTree::from_edges({{0, 1}, {1, 2}, {0, 2}});
    auto violations = validate_tree(cyc, g, {0, 1, 2});
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == ViolationKind::Cycle);

    MulticastTree path = MulticastTree::from_edges({{0, 1}, {1, 2}});
    auto missing = validate_tree(path, g, {0, 2, 4});
    REQUIRE(missing.size() == 1);
    CHECK(missing[0].kind == ViolationKind::MissingTerminal);
    CHECK(missing[0].node == 4);

    MulticastTree foreign = MulticastTree::from_edges({{0, 4}});
    auto bad = validate_tree(foreign, g, {0, 4});
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].kind == ViolationKind::ForeignEdge);

    MulticastTree split = MulticastTree::from_edges({{0, 1}, {2, 3}});
    auto disc = validate_tree(split, g, {0, 3});
    REQUIRE(disc.size() == 1);
    CHECK(disc[0].kind == ViolationKind::Disconnected);
}

TEST_CASE("prune_nonterminal_leaves") {
    MulticastTree path = MulticastTree::from_edges({{0, 1}, {1, 2}});
    MulticastTree pruned = prune_nonterminal_leaves(path, {0, 1});
    CHECK(pruned.edges() == std::set<EdgePair>{{0, 1}});

    MulticastTree star = MulticastTree::from_edges({{0, 1}, {0, 2}, {0, 3}});
    CHECK(prune_nonterminal_leaves(star, {1, 2, 3}).edges() == star.edges());

    MulticastTree chain = MulticastTree::from_edges({{0, 1}, {1, 2}, {2, 3}});
    MulticastTree mid = prune_nonterminal_leaves(chain, {1, 2});
    CHECK(mid.edges() == std::set<EdgePair>{{1, 2}});
}

TEST_CASE("break_cycles picks the longest segment between anchors") {
    // Square 0-1-3-2-0 with terminal legs hanging off 0 and 3: both cycle
    // segments have two edges, so the tie falls to the one starting at node 0.
    MulticastTree square = MulticastTree::from_edges(
        {{0, 1}, {1, 3}, {2, 3}, {0, 2}, {0, 4}, {3, 5}});
    MulticastTree fixed = break_cycles(square, {4, 5});
    CHECK(fixed.edges() == std::set<EdgePair>{{0, 2}, {2, 3}, {0, 4}, {3, 5}});

    // Six-cycle with terminals 0 and 2: the four-edge arc is removed. The
    // two-edge removal would leave objective-worse 4 edges, checked directly.
    MulticastTree six = MulticastTree::from_edges(
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    MulticastTree kept = break_cycles(six, {0, 2});
    CHECK(kept.edges() == std::set<EdgePair>{{0, 1}, {1, 2}});
    CHECK(kept.edge_count() < 4);

    MulticastTree acyclic = MulticastTree::from_edges({{0, 1}, {1, 2}});
    CHECK(break_cycles(acyclic, {0, 1, 2}).edges() == acyclic.edges());

    MulticastTree split = MulticastTree::from_edges({{0, 1}, {2, 3}});
    CHECK_THROWS_AS(break_cycles(split, {0, 1, 2, 3}), ContractError);
}

TEST_CASE("break_cycles collapses a cycle hanging on one terminal") {
    MulticastTree loop = MulticastTree::from_edges({{0, 1}, {1, 2}, {0, 2}});
    MulticastTree fixed = break_cycles(loop, {0});
    CHECK(fixed.edge_count() == 0);
    CHECK(fixed.has_node(0));
    CHECK(fixed.node_count() == 1);
}

TEST_CASE("tree structural invariants on random repairs") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = test_util::random_connected_graph(14, 8, seed * 101);
        std::vector<int> terminals = test_util::random_terminals(g, 4, seed);

        // Connected spanning subgraph: all edges of the component.
        MulticastTree messy;
        for (const auto& [u, v] : g.edges()) {
            messy.add_edge(u, v);
        }
        MulticastTree repaired = break_cycles(messy, terminals);
        CHECK(test_util::tree_is_valid(repaired, g, terminals));

        TreeCost cost = objective(repaired, 3.0);
        CHECK(cost.branches <= cost.edges);

        // Monotone in w.
        CHECK(objective(repaired, 1.0).objective <= objective(repaired, 2.0).objective);

        // b == 0 exactly when the tree is a path or single node.
        int leaves = 0;
        for (int v : repaired.nodes()) {
            leaves += repaired.degree(v) == 1;
        }
        bool path_like = repaired.node_count() == 1 || leaves == 2;
        CHECK((cost.branches == 0) == path_like);
    }
}

TEST_CASE("edge list serialization") {
    MulticastTree t = MulticastTree::from_edges({{2, 1}, {0, 1}});
    CHECK(to_edge_list(t) == "0 1\n1 2\n");
    CHECK(to_edge_list(MulticastTree::singleton(3)).empty());
}
