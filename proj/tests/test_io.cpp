#include "doctest.h"

#include "bst/exact.hpp"
#include "bst/io.hpp"
#include "support/test_util.hpp"

using namespace bst;

TEST_CASE("gml parsing of a minimal graph") {
    std::string text = R"(graph [
  node [ id 0 label "a" ]
  node [ id 5 label "b" ]
  edge [ source 0 target 5 ]
])";
    Graph g = parse_gml(text);
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 1)); // ids remapped densely in ascending order
}

TEST_CASE("gml parser skips rich attributes and nested blocks") {
    std::string text = R"(Creator "Topology Zoo Toolset"
graph [
  directed 0
  Network "Example Net"
  node [
    id 10
    label "City A, Country"
    graphics [ x 1.5 y -2.25 w 10 ]
    Longitude -3.70256
    Internal 1
  ]
  node [ id 11 label "City B" Latitude 40.4165 ]
  edge [ source 10 target 11 LinkLabel "OC-48" key 0 ]
  edge [ source 11 target 10 ]
  edge [ source 10 target 10 ]
])";
    GmlStats stats;
    Graph g = parse_gml(text, &stats);
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(stats.parallel_edges_dropped == 1);
    CHECK(stats.self_loops_dropped == 1);
}

TEST_CASE("gml parser reports malformed input with line numbers") {
    CHECK_THROWS_AS(parse_gml("graph [ node [ label \"x\" ] ]"), ParseError);
    CHECK_THROWS_AS(parse_gml("graph [ edge [ source 0 ] ]"), ParseError);
    CHECK_THROWS_AS(parse_gml("nothing here"), ParseError);

    try {
        parse_gml("graph [\n  node [ id 0 ]\n  edge [ source 0 target 9 ]\n]");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("bundled topology fixtures have the reference sizes") {
    Graph uunet = parse_gml(read_file(std::string(BST_DATA_DIR) + "/uunet.gml"));
    CHECK(uunet.node_count() == 49);
    CHECK(uunet.edge_count() == 84);
    CHECK(static_cast<int>(component_of(uunet, 0).size()) == 49);

    Graph deltacom = parse_gml(read_file(std::string(BST_DATA_DIR) + "/deltacom.gml"));
    CHECK(deltacom.node_count() == 113);
    CHECK(deltacom.edge_count() == 183);
    CHECK(static_cast<int>(component_of(deltacom, 0).size()) == 113);
}

TEST_CASE("edge list parsing") {
    Graph path = parse_edge_list("0 1\n1 2\n");
    CHECK(path.node_count() == 3);
    CHECK(path.edge_count() == 2);

    CHECK(parse_edge_list("").node_count() == 0);
    CHECK(parse_edge_list("# only a comment\n").node_count() == 0);
    CHECK(parse_edge_list("0 1\n1 0\n").edge_count() == 1);

    CHECK_THROWS_AS(parse_edge_list("0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("-1 2\n"), ParseError);
}

TEST_CASE("preferential attachment generator") {
    Graph tree = gen_power_law(5, 1, 7);
    CHECK(tree.node_count() == 5);
    CHECK(tree.edge_count() == 4); // m = 1 forces a tree
    CHECK(static_cast<int>(component_of(tree, 0).size()) == 5);

    Graph big = gen_power_law(10000, 2, 99);
    CHECK(big.edge_count() == 2 * 10000 - 3);
    CHECK(static_cast<int>(component_of(big, 0).size()) == 10000);

    Graph again = gen_power_law(10000, 2, 99);
    CHECK(big.edges() == again.edges());
    Graph other = gen_power_law(10000, 2, 100);
    CHECK(big.edges() != other.edges());

    CHECK_THROWS_AS(gen_power_law(3, 3, 1), InputError);
    CHECK_THROWS_AS(gen_power_law(5, 0, 1), InputError);
}

TEST_CASE("terminal sampling") {
    Graph g = test_util::random_connected_graph(12, 5, 44);
    std::vector<int> all = sample_terminals(g, 12, 3);
    CHECK(static_cast<int>(all.size()) == 12);

    std::vector<int> one = sample_terminals(g, 1, 3);
    CHECK(one.size() == 1);

    CHECK(sample_terminals(g, 4, 9) == sample_terminals(g, 4, 9));
    CHECK_THROWS_AS(sample_terminals(g, 13, 3), InputError);

    // Disconnected graph: samples stay inside the largest component.
    Graph split(7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}});
    std::vector<int> terms = sample_terminals(split, 3, 5);
    for (int t : terms) {
        CHECK(t <= 3);
    }
    CHECK_THROWS_AS(sample_terminals(split, 5, 1), InputError);
}

TEST_CASE("gap construction shapes") {
    Graph edge(2, {{0, 1}});
    GapInstance tiny = gap_instance(edge, 0, 1);
    CHECK(tiny.graph.node_count() == 5); // 2^1 * 2 + 1
    CHECK(tiny.branch_weight == 5.0);
    CHECK(static_cast<int>(tiny.terminals.size()) == 4);
    CHECK(tiny.hub == 4);

    Graph path3(3, {{0, 1}, {1, 2}});
    GapInstance mid = gap_instance(path3, 1, 1);
    CHECK(mid.graph.node_count() == 10); // 3 * 3 + 1
    CHECK(mid.branch_weight == 10.0);

    // Node count formula n^(p+1) + 1.
    GapInstance deep = gap_instance(edge, 0, 3);
    CHECK(deep.graph.node_count() == 17);

    CHECK_THROWS_AS(gap_instance(edge, 0, 3, 10), LimitError);
    CHECK_THROWS_AS(gap_instance(edge, 0, 40), LimitError);
    CHECK_THROWS_AS(gap_instance(edge, 5, 1), InputError);
    CHECK_THROWS_AS(gap_instance(edge, 0, 0), InputError);
}

TEST_CASE("gap instances with hamiltonian bases stay under twice the weight") {
    // Bases with a Hamiltonian path from the attach node.
    Graph edge(2, {{0, 1}});
    Graph path3(3, {{0, 1}, {1, 2}});
    Graph triangle = test_util::complete_graph(3);
    struct Case {
        const Graph* base;
        int attach;
    };
    for (const Case& c : {Case{&edge, 0}, Case{&path3, 0}, Case{&triangle, 0}}) {
        GapInstance gap = gap_instance(*c.base, c.attach, 1);
        Instance inst = make_instance(gap.graph, gap.terminals, gap.branch_weight, 1);
        SolveReport opt = brute_force_opt(inst);
        CHECK(opt.cost.objective <= 2.0 * gap.branch_weight);
    }
}

TEST_CASE("topology loader resolves specs and files") {
    Graph pa = load_topology("pa:n=50,m=2", 5);
    CHECK(pa.node_count() == 50);

    std::string path = "/tmp/bst_io_test_edges.txt";
    write_file(path, "0 1\n1 2\n2 3\n");
    std::string label;
    Graph g = load_topology(path, 0, &label);
    CHECK(g.node_count() == 4);
    CHECK(label == "bst_io_test_edges");

    CHECK_THROWS_AS(load_topology("pa:n=50", 5), InputError);
    CHECK_THROWS_AS(load_topology("/tmp/definitely_missing_bst.txt", 5), InputError);
}
