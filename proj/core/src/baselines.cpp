#include "bst/baselines.hpp"

#include <chrono>

#include "bst/baera.hpp"

namespace bst {

SolveReport shortest_path_tree(const Instance& inst, const DistanceOracle& oracle) {
    inst.validate();
    auto t0 = std::chrono::steady_clock::now();

    SolveReport report;
    report.algorithm = "spt";
    report.seed = inst.seed;
    report.root = pick_root(inst);

    MulticastTree tree = MulticastTree::singleton(report.root);
    for (int t : inst.terminals) {
        if (t == report.root) {
            continue;
        }
        std::vector<int> path = oracle.path_toward(report.root, t);
        if (path.empty()) {
            throw InfeasibleError("terminal " + std::to_string(t) + " unreachable from root");
        }
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            tree.add_edge(path[i], path[i + 1]);
        }
    }

    report.cost = objective(tree, inst.branch_weight);
    report.trace.after_phase1 = report.cost.objective;
    report.trace.after_deletion = report.cost.objective;
    report.trace.after_alternation = report.cost.objective;
    report.tree = std::move(tree);

    auto t1 = std::chrono::steady_clock::now();
    report.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

SolveReport shortest_path_tree(const Instance& inst) {
    DistanceOracle oracle(inst.graph);
    return shortest_path_tree(inst, oracle);
}

SolveReport takahashi_steiner_tree(const Instance& inst, const DistanceOracle& oracle) {
    inst.validate();
    auto t0 = std::chrono::steady_clock::now();

    SolveReport report;
    report.algorithm = "st";
    report.seed = inst.seed;

    MulticastTree tree =
        detail::nearest_terminal_insertion(inst, oracle, false, &report.trace, &report.root);
    report.cost = objective(tree, inst.branch_weight);
    report.trace.after_phase1 = report.cost.objective;
    report.trace.after_deletion = report.cost.objective;
    report.trace.after_alternation = report.cost.objective;
    report.tree = std::move(tree);

    auto t1 = std::chrono::steady_clock::now();
    report.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

SolveReport takahashi_steiner_tree(const Instance& inst) {
    DistanceOracle oracle(inst.graph);
    return takahashi_steiner_tree(inst, oracle);
}

} // namespace bst
