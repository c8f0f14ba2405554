#include "bst/exact.hpp"

#include <algorithm>
#include <chrono>

namespace bst {

namespace {

// Union-find with an undo log; no path compression so unions revert exactly.
class RollbackDsu {
public:
    explicit RollbackDsu(int n) : parent_(n), size_(n, 1) {
        for (int i = 0; i < n; ++i) {
            parent_[i] = i;
        }
    }

    int find(int x) const {
        while (parent_[x] != x) {
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        if (size_[a] < size_[b]) {
            std::swap(a, b);
        }
        parent_[b] = a;
        size_[a] += size_[b];
        log_.push_back(b);
        return true;
    }

    size_t mark() const { return log_.size(); }

    void rollback(size_t mark) {
        while (log_.size() > mark) {
            int child = log_.back();
            log_.pop_back();
            size_[parent_[child]] -= size_[child];
            parent_[child] = child;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> log_;
};

struct Enumerator {
    const Graph& g;
    const std::vector<int>& terminals;
    RollbackDsu dsu;
    std::vector<int> degree;
    std::vector<int> selected; // edge indices, ascending
    ExactFrontier frontier;

    Enumerator(const Graph& graph, const std::vector<int>& terms)
        : g(graph), terminals(terms), dsu(graph.node_count()),
          degree(graph.node_count(), 0) {}

    void evaluate() {
        int edges_used = static_cast<int>(selected.size());
        if (edges_used < static_cast<int>(terminals.size()) - 1) {
            return;
        }
        int touched = 0;
        int branches = 0;
        for (int v = 0; v < g.node_count(); ++v) {
            if (degree[v] > 0) {
                ++touched;
                if (degree[v] >= 3) {
                    ++branches;
                }
            }
        }
        if (touched != edges_used + 1) {
            return; // the forest is not one single tree
        }
        for (int t : terminals) {
            if (degree[t] == 0) {
                return;
            }
        }
        for (int v = 0; v < g.node_count(); ++v) {
            if (degree[v] == 1 &&
                !std::binary_search(terminals.begin(), terminals.end(), v)) {
                return; // non-terminal leaf: a strictly better tree exists
            }
        }

        std::vector<EdgePair> edges;
        edges.reserve(selected.size());
        for (int idx : selected) {
            edges.push_back(g.edges()[idx]);
        }
        auto key = std::make_pair(edges_used, branches);
        auto it = frontier.cells.find(key);
        if (it == frontier.cells.end() || edges < it->second) {
            frontier.cells[key] = std::move(edges);
        }
    }

    void recurse(int idx) {
        if (idx == g.edge_count()) {
            evaluate();
            return;
        }
        // Not enough edges left to reach a K-spanning tree: stop descending.
        int needed = static_cast<int>(terminals.size()) - 1;
        if (static_cast<int>(selected.size()) + (g.edge_count() - idx) < needed) {
            return;
        }

        const auto& [u, v] = g.edges()[idx];
        size_t mark = dsu.mark();
        if (dsu.unite(u, v)) { // include, unless it closes a cycle
            ++degree[u];
            ++degree[v];
            selected.push_back(idx);
            recurse(idx + 1);
            selected.pop_back();
            --degree[u];
            --degree[v];
            dsu.rollback(mark);
        }
        recurse(idx + 1); // skip
    }
};

} // namespace

std::pair<TreeCost, std::vector<EdgePair>> ExactFrontier::best(double branch_weight) const {
    if (cells.empty()) {
        throw InfeasibleError("no tree spans the terminal set");
    }
    const std::vector<EdgePair>* best_edges = nullptr;
    TreeCost best_cost;
    bool first = true;
    for (const auto& [key, edges] : cells) {
        auto [c, b] = key;
        double obj = c + branch_weight * b;
        bool better;
        if (first) {
            better = true;
        } else if (obj != best_cost.objective) {
            better = obj < best_cost.objective;
        } else if (c != best_cost.edges) {
            better = c < best_cost.edges;
        } else {
            better = edges < *best_edges;
        }
        if (better) {
            best_cost = TreeCost{c, b, obj};
            best_edges = &edges;
            first = false;
        }
    }
    return {best_cost, *best_edges};
}

ExactFrontier brute_force_frontier(const Graph& g, const std::vector<int>& terminals,
                                   int max_edges) {
    if (g.edge_count() > max_edges) {
        throw LimitError("brute force refused: " + std::to_string(g.edge_count()) +
                         " edges exceeds the cap of " + std::to_string(max_edges));
    }
    Enumerator enumerator(g, terminals);
    enumerator.recurse(0);
    return enumerator.frontier;
}

SolveReport brute_force_opt(const Instance& inst, int max_edges) {
    inst.validate();
    auto t0 = std::chrono::steady_clock::now();

    SolveReport report;
    report.algorithm = "exact";
    report.seed = inst.seed;
    report.root = inst.terminals.front();

    if (inst.k() == 1) {
        report.tree = MulticastTree::singleton(inst.terminals.front());
        report.cost = objective(report.tree, inst.branch_weight);
    } else {
        ExactFrontier frontier =
            brute_force_frontier(inst.graph, inst.terminals, max_edges);
        auto [cost, edges] = frontier.best(inst.branch_weight);
        report.tree = MulticastTree::from_edges(edges);
        report.cost = cost;
    }
    report.trace.after_phase1 = report.cost.objective;
    report.trace.after_deletion = report.cost.objective;
    report.trace.after_alternation = report.cost.objective;

    auto t1 = std::chrono::steady_clock::now();
    report.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

} // namespace bst
