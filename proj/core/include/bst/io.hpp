#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bst/graph.hpp"

namespace bst {

struct GmlStats {
    int self_loops_dropped = 0;
    int parallel_edges_dropped = 0;
};

// Tolerant Topology-Zoo-style GML subset: a graph block with node [id N]
// and edge [source A target B] entries; every other attribute (labels,
// coordinates, nested blocks) is skipped. Node ids are remapped to a dense
// [0, n) range in ascending id order.
Graph parse_gml(const std::string& text, GmlStats* stats = nullptr);

// Lines of "u v" pairs; '#' starts a comment. Node count is max id + 1.
Graph parse_edge_list(const std::string& text);

// Preferential attachment: a single seed edge {0,1}, then node i attaches
// min(attach_m, i) edges to distinct degree-weighted targets. Connected by
// construction and deterministic under the seed.
Graph gen_power_law(int n, int attach_m, uint64_t seed);

// k distinct nodes drawn seeded-uniform from the largest connected component.
std::vector<int> sample_terminals(const Graph& g, int k, uint64_t seed);

// Hardness-gap construction: n^p copies of the base graph, a hub x adjacent
// to copy v of every copy, K = V - {x}, w = |V|. Copy c maps base node j to
// c*n + j; the hub is the last id.
struct GapInstance {
    Graph graph;
    std::vector<int> terminals;
    double branch_weight = 0.0;
    int hub = -1;
};
GapInstance gap_instance(const Graph& base, int attach_node, int p,
                         long long node_cap = 200000);

// Resolves a topology argument: "pa:n=...,m=..." runs the generator, "gap:"
// is rejected here (it needs a base graph), anything else is read as a file
// (.gml by extension, edge list otherwise). label_out gets a short name.
Graph load_topology(const std::string& spec, uint64_t seed, std::string* label_out = nullptr);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace bst
