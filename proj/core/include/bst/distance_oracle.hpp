#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "bst/graph.hpp"

namespace bst {

// All-pairs hop distances, one BFS per source over unit-weight edges.
// Paths are reconstructed on demand by descending the distance field,
// stepping to the lowest-id neighbor one hop closer to the anchor, so
// every (anchor, node) pair has exactly one canonical shortest path.
class DistanceOracle {
public:
    static constexpr int kUnreachable = std::numeric_limits<int>::max();

    explicit DistanceOracle(const Graph& g);

    int node_count() const { return n_; }
    const Graph& graph() const { return graph_; }

    int dist(int u, int v) const;

    // Canonical shortest path written as [from, ..., anchor]. The walk
    // descends dist(anchor, .), so all paths sharing an anchor form a
    // predecessor forest rooted at that anchor. Empty when unreachable.
    std::vector<int> path_toward(int anchor, int from) const;

    // Canonical path [a, ..., b] for the unordered pair: the anchor is
    // always min(a, b), making the choice independent of argument order.
    std::vector<int> path_between(int a, int b) const;

private:
    uint16_t raw(int u, int v) const { return dist_[static_cast<size_t>(u) * n_ + v]; }

    Graph graph_;
    int n_ = 0;
    std::vector<uint16_t> dist_;
};

struct SetPathResult {
    int distance = 0;
    std::vector<int> path;          // [target, ..., attach], internal nodes outside S
    int attach = -1;                // endpoint of `path`, member of S
    std::vector<int> tied_attaches; // all S-nodes at exactly `distance` hops, ascending
};

// Multi-source BFS from S; none when `target` cannot reach S.
// Preconditions: S nonempty and sorted unique, target outside S.
std::optional<SetPathResult> shortest_path_to_set(const Graph& g,
                                                  const std::vector<int>& sources,
                                                  int target);

} // namespace bst
