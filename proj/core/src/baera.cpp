#include "bst/baera.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "tree_scratch.hpp"

namespace bst {

namespace {

using detail::TreeScratch;
using detail::TreeSnapshot;

bool is_terminal(int v, const std::vector<int>& terminals) {
    return std::binary_search(terminals.begin(), terminals.end(), v);
}

double scratch_cost(const TreeScratch& ws, double w) {
    return ws.edge_count() + w * ws.branch_count();
}

// Branch nodes sorted by ascending tree degree, ties by ascending id.
std::vector<int> scratch_branch_order(const TreeScratch& ws) {
    std::vector<int> order;
    for (int v : ws.nodes()) {
        if (ws.degree(v) >= 3) {
            order.push_back(v);
        }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&ws](int a, int b) { return ws.degree(a) < ws.degree(b); });
    return order;
}

// Tree neighbors in the contracted sense: walk each incident edge past
// degree-2 relay nodes to the first terminal or branch node.
std::vector<int> scratch_stops(const TreeScratch& ws, int v,
                               const std::vector<int>& terminals) {
    std::vector<int> stops;
    for (int start : ws.neighbors(v)) {
        int prev = v;
        int cur = start;
        while (ws.degree(cur) == 2 && !is_terminal(cur, terminals)) {
            const auto& nbrs = ws.neighbors(cur);
            int next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
            prev = cur;
            cur = next;
        }
        stops.push_back(cur);
    }
    std::sort(stops.begin(), stops.end());
    return stops;
}

bool add_path(TreeScratch& ws, const std::vector<int>& path) {
    if (path.empty()) {
        return false;
    }
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        ws.add_edge(path[i], path[i + 1]);
    }
    return true;
}

// Candidate with `removed` cut out and the components rejoined: each former
// neighbor branch/terminal routes to its closest branch node in another
// component (closest node of another component as the fallback), with cycle
// repair and pruning after every insertion. Returns the objective, or
// nothing when no valid spanning tree results.
std::optional<double> build_deletion_candidate(TreeScratch& cand, const TreeSnapshot& state,
                                               int removed, const std::vector<int>& stops,
                                               const Instance& inst,
                                               const DistanceOracle& oracle,
                                               std::vector<int>& comp_of) {
    detail::load_snapshot(cand, state);
    cand.remove_node(removed);
    detail::scratch_prune(cand, inst.terminals);
    if (cand.node_count() == 0) {
        return std::nullopt;
    }

    for (int v : stops) {
        if (detail::scratch_components(cand, comp_of) <= 1) {
            break;
        }
        if (!cand.has_node(v)) {
            continue; // restructured away by an earlier repair
        }
        int own = comp_of[v];

        int best = -1;
        int best_dist = DistanceOracle::kUnreachable;
        for (int u = 0; u < cand.bound(); ++u) {
            if (!cand.has_node(u) || cand.degree(u) < 3 || comp_of[u] == own) {
                continue;
            }
            int d = oracle.dist(v, u);
            if (d < best_dist) {
                best_dist = d;
                best = u;
            }
        }
        if (best < 0) {
            for (int u = 0; u < cand.bound(); ++u) {
                if (!cand.has_node(u) || comp_of[u] == own) {
                    continue;
                }
                int d = oracle.dist(v, u);
                if (d < best_dist) {
                    best_dist = d;
                    best = u;
                }
            }
        }
        if (best < 0 || best_dist == DistanceOracle::kUnreachable) {
            return std::nullopt;
        }
        if (!add_path(cand, oracle.path_between(v, best))) {
            return std::nullopt;
        }
        detail::scratch_remove_cycles(cand, inst.terminals);
        detail::scratch_prune(cand, inst.terminals);
    }

    if (detail::scratch_components(cand, comp_of) != 1) {
        return std::nullopt;
    }
    if (is_terminal(removed, inst.terminals) && !cand.has_node(removed)) {
        return std::nullopt; // deleting a terminal is only legal if a path re-adds it
    }
    return scratch_cost(cand, inst.branch_weight);
}

// Candidate for moving branch node `from` to graph neighbor `to`: the paths
// from each neighbor branch/terminal w are replaced by p_{w,to}. Cycles are
// repaired after every insertion; pruning runs once the star around `to` is
// complete, so a fresh relay target is not swept away mid-construction.
std::optional<double> build_move_candidate(TreeScratch& cand, const TreeSnapshot& state,
                                           int from, int to, const std::vector<int>& stops,
                                           const Instance& inst,
                                           const DistanceOracle& oracle,
                                           std::vector<int>& comp_of) {
    detail::load_snapshot(cand, state);
    cand.remove_node(from);
    detail::scratch_prune(cand, inst.terminals);
    for (int w : stops) {
        if (w == to) {
            continue;
        }
        if (!cand.has_node(w) && !is_terminal(w, inst.terminals)) {
            continue;
        }
        if (!add_path(cand, oracle.path_between(w, to))) {
            return std::nullopt;
        }
        detail::scratch_remove_cycles(cand, inst.terminals);
    }
    detail::scratch_prune(cand, inst.terminals);

    if (cand.node_count() == 0 || detail::scratch_components(cand, comp_of) != 1) {
        return std::nullopt;
    }
    if (is_terminal(from, inst.terminals) && !cand.has_node(from)) {
        return std::nullopt;
    }
    return scratch_cost(cand, inst.branch_weight);
}

} // namespace

namespace detail {

std::vector<int> neighbor_branch_terminals(const MulticastTree& t, int v,
                                           const std::vector<int>& terminals) {
    std::vector<int> stops;
    for (int start : t.tree_neighbors(v)) {
        int prev = v;
        int cur = start;
        while (t.degree(cur) == 2 && !is_terminal(cur, terminals)) {
            const auto& nbrs = t.tree_neighbors(cur);
            int next = (*nbrs.begin() == prev) ? *std::next(nbrs.begin()) : *nbrs.begin();
            prev = cur;
            cur = next;
        }
        stops.push_back(cur);
    }
    std::sort(stops.begin(), stops.end());
    return stops;
}

MulticastTree nearest_terminal_insertion(const Instance& inst, const DistanceOracle& oracle,
                                         bool branch_aware, PhaseTrace* trace,
                                         int* root_out) {
    const std::vector<int>& terms = inst.terminals;
    int k = inst.k();
    int root = pick_root(inst);
    if (root_out) {
        *root_out = root;
    }

    MulticastTree tree = MulticastTree::singleton(root);
    std::vector<char> attached(k, 0);
    std::vector<int> dist_to_tree(k, 0);
    int remaining = 0;
    for (int i = 0; i < k; ++i) {
        if (terms[i] == root) {
            attached[i] = 1;
            continue;
        }
        dist_to_tree[i] = oracle.dist(terms[i], root);
        if (dist_to_tree[i] == DistanceOracle::kUnreachable) {
            throw InfeasibleError("terminal " + std::to_string(terms[i]) +
                                  " unreachable from root");
        }
        ++remaining;
    }

    std::vector<int> tree_nodes{root};
    long long attach_sum = 0;
    int tie_events = 0;

    while (remaining > 0) {
        int dmin = DistanceOracle::kUnreachable;
        for (int i = 0; i < k; ++i) {
            if (!attached[i]) {
                dmin = std::min(dmin, dist_to_tree[i]);
            }
        }

        // Gather every (terminal, attach node) pair at the minimum distance.
        int pool = 0;
        int chosen_term = -1;
        int chosen_attach = -1;
        bool chosen_safe = false; // attach that creates no new branch node
        for (int i = 0; i < k; ++i) {
            if (attached[i] || dist_to_tree[i] != dmin) {
                continue;
            }
            int v = terms[i];
            for (int u : tree_nodes) {
                if (oracle.dist(v, u) != dmin) {
                    continue;
                }
                ++pool;
                bool safe = tree.degree(u) != 2;
                bool better;
                if (chosen_term < 0) {
                    better = true;
                } else if (branch_aware && safe != chosen_safe) {
                    better = safe;
                } else if (v != chosen_term) {
                    better = v < chosen_term;
                } else {
                    better = u < chosen_attach;
                }
                if (better) {
                    chosen_term = v;
                    chosen_attach = u;
                    chosen_safe = safe;
                }
            }
        }
        if (pool > 1) {
            ++tie_events;
        }

        std::vector<int> path = oracle.path_toward(chosen_attach, chosen_term);
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            tree.add_edge(path[i], path[i + 1]);
        }
        attach_sum += dmin;

        // Every path node except the attach endpoint is new to the tree;
        // terminals swallowed along the way count as attached at distance 0.
        for (size_t p = 0; p + 1 < path.size(); ++p) {
            int x = path[p];
            tree_nodes.push_back(x);
            auto it = std::lower_bound(terms.begin(), terms.end(), x);
            if (it != terms.end() && *it == x) {
                int idx = static_cast<int>(it - terms.begin());
                if (!attached[idx]) {
                    attached[idx] = 1;
                    --remaining;
                }
            }
            for (int i = 0; i < k; ++i) {
                if (!attached[i]) {
                    dist_to_tree[i] = std::min(dist_to_tree[i], oracle.dist(terms[i], x));
                }
            }
        }
    }

    if (trace) {
        trace->phase1_attach_sum = attach_sum;
        trace->tie_events = tie_events;
        trace->phase1_branches = tree.branch_count();
    }
    return tree;
}

} // namespace detail

MulticastTree edge_optimization_phase(const Instance& inst, const DistanceOracle& oracle,
                                      PhaseTrace* trace, int* root_out) {
    inst.validate();
    MulticastTree tree =
        detail::nearest_terminal_insertion(inst, oracle, true, trace, root_out);
    int bound = std::max(inst.k() - 2, 0);
    if (tree.branch_count() > bound) {
        throw ContractError("edge optimization produced more than k-2 branch nodes");
    }
    return tree;
}

MulticastTree deletion_step(const MulticastTree& tree, const Instance& inst,
                            const DistanceOracle& oracle) {
    double best = objective(tree, inst.branch_weight).objective;
    int bound = inst.graph.node_count();

    TreeScratch current(bound);
    current.load(tree);
    TreeSnapshot state = detail::take_snapshot(current);
    TreeScratch cand(bound);
    std::vector<int> comp_of;
    std::vector<char> tried(bound, 0);

    bool changed = true;
    while (changed) {
        changed = false;
        for (int vd : scratch_branch_order(current)) {
            if (tried[vd]) {
                continue;
            }
            tried[vd] = 1;
            std::vector<int> stops = scratch_stops(current, vd, inst.terminals);
            auto cost =
                build_deletion_candidate(cand, state, vd, stops, inst, oracle, comp_of);
            if (cost && *cost < best) {
                state = detail::take_snapshot(cand);
                detail::load_snapshot(current, state);
                best = *cost;
                changed = true; // branch set changed; re-derive the order
                break;
            }
        }
    }
    return current.to_tree();
}

MulticastTree alternation_step(const MulticastTree& tree, const Instance& inst,
                               const DistanceOracle& oracle) {
    double best = objective(tree, inst.branch_weight).objective;
    int bound = inst.graph.node_count();

    TreeScratch current(bound);
    current.load(tree);
    TreeSnapshot state = detail::take_snapshot(current);
    TreeScratch cand(bound);
    std::vector<int> comp_of;

    for (int start : scratch_branch_order(current)) {
        int moving = start;
        for (int steps = 0; steps < inst.graph.node_count(); ++steps) {
            if (!current.has_node(moving) || current.degree(moving) < 3) {
                break;
            }
            std::vector<int> stops = scratch_stops(current, moving, inst.terminals);

            std::optional<TreeSnapshot> best_state;
            double best_obj = best;
            int best_target = -1;
            for (int vn : inst.graph.neighbors(moving)) {
                auto cost =
                    build_move_candidate(cand, state, moving, vn, stops, inst, oracle, comp_of);
                if (cost && *cost < best_obj) { // strict improvement; ties keep lowest vn
                    best_obj = *cost;
                    best_state = detail::take_snapshot(cand);
                    best_target = vn;
                }
            }
            if (!best_state) {
                break;
            }
            state = std::move(*best_state);
            detail::load_snapshot(current, state);
            best = best_obj;
            moving = best_target;
        }
    }
    return current.to_tree();
}

SolveReport baera(const Instance& inst, const DistanceOracle& oracle) {
    inst.validate();
    auto t0 = std::chrono::steady_clock::now();

    SolveReport report;
    report.algorithm = "baera";
    report.seed = inst.seed;

    MulticastTree tree = edge_optimization_phase(inst, oracle, &report.trace, &report.root);
    report.trace.after_phase1 = objective(tree, inst.branch_weight).objective;

    tree = deletion_step(tree, inst, oracle);
    report.trace.after_deletion = objective(tree, inst.branch_weight).objective;

    tree = alternation_step(tree, inst, oracle);
    TreeCost cost = objective(tree, inst.branch_weight);
    report.trace.after_alternation = cost.objective;

    if (report.trace.after_deletion > report.trace.after_phase1 ||
        report.trace.after_alternation > report.trace.after_deletion) {
        throw ContractError("objective trace must be nonincreasing across phases");
    }

    report.tree = std::move(tree);
    report.cost = cost;
    auto t1 = std::chrono::steady_clock::now();
    report.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

SolveReport baera(const Instance& inst) {
    DistanceOracle oracle(inst.graph);
    return baera(inst, oracle);
}

} // namespace bst
