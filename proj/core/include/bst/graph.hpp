#pragma once

#include <utility>
#include <vector>

#include "bst/errors.hpp"

namespace bst {

using EdgePair = std::pair<int, int>;

// Immutable undirected simple graph over node ids [0, node_count).
// Adjacency lists are sorted ascending; duplicate input edges are merged.
class Graph {
public:
    Graph() = default;
    Graph(int node_count, const std::vector<EdgePair>& edge_pairs);

    int node_count() const { return node_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const { return max_degree_; }
    bool has_edge(int u, int v) const;
    bool has_node(int v) const { return v >= 0 && v < node_count_; }

    // Sorted list of normalized (u < v) edges.
    const std::vector<EdgePair>& edges() const { return edges_; }

private:
    int node_count_ = 0;
    int max_degree_ = 0;
    std::vector<EdgePair> edges_;
    std::vector<std::vector<int>> adjacency_;
};

inline Graph build_graph(int node_count, const std::vector<EdgePair>& edge_pairs) {
    return Graph(node_count, edge_pairs);
}

// Nodes of the connected component containing `start`, ascending.
std::vector<int> component_of(const Graph& g, int start);

// True when every node in `nodes` lies in one connected component.
bool in_one_component(const Graph& g, const std::vector<int>& nodes);

} // namespace bst
