#include "bst/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace bst {

Graph::Graph(int node_count, const std::vector<EdgePair>& edge_pairs) {
    if (node_count < 0) {
        throw InputError("node_count must be nonnegative");
    }
    node_count_ = node_count;
    adjacency_.resize(node_count);

    std::vector<EdgePair> normalized;
    normalized.reserve(edge_pairs.size());
    for (const auto& [a, b] : edge_pairs) {
        if (a < 0 || a >= node_count || b < 0 || b >= node_count) {
            throw InputError("edge endpoint out of range: (" + std::to_string(a) + "," +
                             std::to_string(b) + ")");
        }
        if (a == b) {
            throw InputError("self-loop on node " + std::to_string(a));
        }
        normalized.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
    edges_ = std::move(normalized);

    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        max_degree_ = std::max(max_degree_, static_cast<int>(nbrs.size()));
    }
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (!has_node(v)) {
        throw InputError("node id out of range: " + std::to_string(v));
    }
    return adjacency_[v];
}

bool Graph::has_edge(int u, int v) const {
    if (!has_node(u) || !has_node(v)) {
        return false;
    }
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<int> component_of(const Graph& g, int start) {
    if (!g.has_node(start)) {
        throw InputError("node id out of range: " + std::to_string(start));
    }
    std::vector<char> seen(g.node_count(), 0);
    std::queue<int> queue;
    queue.push(start);
    seen[start] = 1;
    std::vector<int> comp;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        comp.push_back(u);
        for (int v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                queue.push(v);
            }
        }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

bool in_one_component(const Graph& g, const std::vector<int>& nodes) {
    if (nodes.empty()) {
        return true;
    }
    std::vector<int> comp = component_of(g, nodes.front());
    for (int v : nodes) {
        if (!std::binary_search(comp.begin(), comp.end(), v)) {
            return false;
        }
    }
    return true;
}

} // namespace bst
