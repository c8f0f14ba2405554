#pragma once

// Flat working representation of a tree candidate, indexed by node id.
// All solver repairs run here; MulticastTree stays the public value type.

#include <algorithm>
#include <vector>

#include "bst/tree.hpp"

namespace bst::detail {

class TreeScratch {
public:
    explicit TreeScratch(int node_bound) { resize(node_bound); }

    void resize(int node_bound) {
        bound_ = node_bound;
        degree_.assign(node_bound, 0);
        present_.assign(node_bound, 0);
        adjacency_.assign(node_bound, {});
        touched_.clear();
        edge_count_ = 0;
        branch_count_ = 0;
        node_count_ = 0;
    }

    void clear() {
        for (int v : touched_) {
            degree_[v] = 0;
            present_[v] = 0;
            adjacency_[v].clear();
        }
        touched_.clear();
        edge_count_ = 0;
        branch_count_ = 0;
        node_count_ = 0;
    }

    void load(const MulticastTree& tree) {
        clear();
        for (int v : tree.nodes()) {
            add_node(v);
        }
        for (const auto& [u, v] : tree.edges()) {
            add_edge(u, v);
        }
    }

    int bound() const { return bound_; }
    int edge_count() const { return edge_count_; }
    int branch_count() const { return branch_count_; }
    bool has_node(int v) const { return present_[v] != 0; }
    int degree(int v) const { return degree_[v]; }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }

    void add_node(int v) {
        if (!present_[v]) {
            present_[v] = 1;
            ++node_count_;
            touched_.push_back(v); // may hold duplicates across re-additions
        }
    }

    // Sorted-insert; returns false when the edge already exists.
    bool add_edge(int u, int v) {
        auto& nu = adjacency_[u];
        auto it = std::lower_bound(nu.begin(), nu.end(), v);
        if (it != nu.end() && *it == v) {
            return false;
        }
        add_node(u);
        add_node(v);
        nu.insert(it, v);
        auto& nv = adjacency_[v];
        nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
        bump_degree(u, 1);
        bump_degree(v, 1);
        ++edge_count_;
        return true;
    }

    bool remove_edge(int u, int v) {
        auto& nu = adjacency_[u];
        auto it = std::lower_bound(nu.begin(), nu.end(), v);
        if (it == nu.end() || *it != v) {
            return false;
        }
        nu.erase(it);
        auto& nv = adjacency_[v];
        nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
        bump_degree(u, -1);
        bump_degree(v, -1);
        --edge_count_;
        return true;
    }

    // Drops the node entirely (incident edges first).
    void remove_node(int v) {
        while (!adjacency_[v].empty()) {
            remove_edge(v, adjacency_[v].back());
        }
        if (present_[v]) {
            present_[v] = 0;
            --node_count_;
        }
    }

    // Present nodes in ascending id order.
    std::vector<int> nodes() const {
        std::vector<int> sorted = touched_;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> result;
        result.reserve(sorted.size());
        for (int v : sorted) {
            if (present_[v] && (result.empty() || result.back() != v)) {
                result.push_back(v);
            }
        }
        return result;
    }

    // Superset of the present nodes, unsorted, possibly with duplicates.
    // Cheap iteration for order-insensitive passes.
    const std::vector<int>& touched() const { return touched_; }

    int node_count() const { return node_count_; }

    MulticastTree to_tree() const {
        MulticastTree tree;
        for (int v : nodes()) {
            tree.add_node(v);
            for (int u : adjacency_[v]) {
                if (u > v) {
                    tree.add_edge(v, u);
                }
            }
        }
        return tree;
    }

private:
    void bump_degree(int v, int delta) {
        int before = degree_[v];
        degree_[v] = before + delta;
        if (before < 3 && degree_[v] >= 3) {
            ++branch_count_;
        } else if (before >= 3 && degree_[v] < 3) {
            --branch_count_;
        }
    }

    int bound_ = 0;
    std::vector<int> degree_;
    std::vector<char> present_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<int> touched_; // may contain duplicates and absent nodes
    int edge_count_ = 0;
    int branch_count_ = 0;
    int node_count_ = 0;
};

// Repair helpers shared by the public tree operations and the solver.
// Cycle cuts remove the longest run between consecutive anchors (tree degree
// >= 3 or terminal); pruning removes non-terminal leaves and isolated relays.
void scratch_prune(TreeScratch& ws, const std::vector<int>& terminals);
void scratch_remove_cycles(TreeScratch& ws, const std::vector<int>& terminals);

// Connected components among present nodes; returns component count and
// fills comp_of (sized to ws.bound(), -1 for absent nodes).
int scratch_components(const TreeScratch& ws, std::vector<int>& comp_of);

// Compact copy of a scratch state, cheap to reload per candidate.
struct TreeSnapshot {
    std::vector<int> nodes; // ascending, includes isolated terminals
    std::vector<EdgePair> edges;
};

inline TreeSnapshot take_snapshot(const TreeScratch& ws) {
    TreeSnapshot snap;
    snap.nodes = ws.nodes();
    for (int v : snap.nodes) {
        for (int u : ws.neighbors(v)) {
            if (u > v) {
                snap.edges.emplace_back(v, u);
            }
        }
    }
    return snap;
}

inline void load_snapshot(TreeScratch& ws, const TreeSnapshot& snap) {
    ws.clear();
    for (int v : snap.nodes) {
        ws.add_node(v);
    }
    for (const auto& [u, v] : snap.edges) {
        ws.add_edge(u, v);
    }
}

} // namespace bst::detail
