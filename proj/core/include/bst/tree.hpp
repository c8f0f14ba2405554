#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bst/graph.hpp"

namespace bst {

// Terminal-set parameters throughout are sorted unique node id lists.

struct TreeCost {
    int edges = 0;      // c(T)
    int branches = 0;   // b(T)
    double objective = 0.0; // c(T) + b(T) * w

    friend bool operator==(const TreeCost&, const TreeCost&) = default;
};

// A mutable subtree of some graph. Stores normalized (u < v) edges with
// per-node degrees; an optional anchor keeps a single-node tree non-empty.
class MulticastTree {
public:
    MulticastTree() = default;

    static MulticastTree singleton(int node);
    static MulticastTree from_edges(const std::vector<EdgePair>& edges);

    void add_node(int v); // nodes may exist without edges (isolated terminals)
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void remove_node(int v); // drops v and all incident edges
    bool has_edge(int u, int v) const;
    bool has_node(int v) const;
    int degree(int v) const;

    int edge_count() const { return static_cast<int>(edges_.size()); }
    int node_count() const;
    bool is_branch(int v) const { return degree(v) >= 3; }
    int branch_count() const;
    std::vector<int> branch_nodes() const; // ascending
    std::vector<int> nodes() const;        // ascending

    const std::set<EdgePair>& edges() const { return edges_; }
    const std::set<int>& tree_neighbors(int v) const;

    std::optional<int> anchor() const { return anchor_; }
    void set_anchor(int node) { anchor_ = node; }

    friend bool operator==(const MulticastTree& a, const MulticastTree& b) {
        return a.edges_ == b.edges_ && a.node_count() == b.node_count() &&
               (!a.edges_.empty() || a.anchor_ == b.anchor_);
    }

private:
    std::set<EdgePair> edges_;
    std::map<int, std::set<int>> adjacency_;
    std::optional<int> anchor_;
};

// c(T), b(T) and the combined objective. Throws ContractError unless the
// edge set forms a single connected acyclic tree (or a bare anchor node).
TreeCost objective(const MulticastTree& t, double branch_weight);

enum class ViolationKind { Cycle, Disconnected, MissingTerminal, ForeignEdge };

struct Violation {
    ViolationKind kind;
    int node = -1; // offending terminal for MissingTerminal
    EdgePair edge{-1, -1};
    std::string describe() const;
};

// Empty result means the tree is a valid solution: a subtree of g spanning K.
std::vector<Violation> validate_tree(const MulticastTree& t, const Graph& g,
                                     const std::vector<int>& terminals);

// Iteratively removes degree-1 nodes outside K until every leaf is a terminal.
MulticastTree prune_nonterminal_leaves(MulticastTree t, const std::vector<int>& terminals);

// Removes every cycle by cutting its longest segment between consecutive
// anchor nodes (degree >= 3 or terminal), then prunes non-terminal leaves.
// The public entry point requires a connected input spanning K.
MulticastTree break_cycles(MulticastTree t, const std::vector<int>& terminals);

// One "u v" pair per line, ascending; single-node trees serialize their anchor.
std::string to_edge_list(const MulticastTree& t);

namespace detail {

// Same repair as break_cycles but accepts forests (used mid-reconnection).
void repair_cycles_and_prune(MulticastTree& t, const std::vector<int>& terminals);

// Connected components of the tree's node set, each ascending.
std::vector<std::vector<int>> tree_components(const MulticastTree& t);

// True when the edge set contains a cycle.
bool has_cycle(const MulticastTree& t);

} // namespace detail
} // namespace bst
