#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bst/instance.hpp"

namespace bst {

// All (c, b) cost profiles achievable by trees that span K with every leaf a
// terminal, each keeping its lexicographically smallest edge list. Any
// optimum has only terminal leaves (pruning a non-terminal leaf always
// improves), so exhausting these trees exhausts the optima.
struct ExactFrontier {
    std::map<std::pair<int, int>, std::vector<EdgePair>> cells;

    bool feasible() const { return !cells.empty(); }

    // Minimum objective for weight w; ties by fewer edges then lex edge list.
    std::pair<TreeCost, std::vector<EdgePair>> best(double branch_weight) const;
};

// Enumerates every forest of g once (edge-indexed include/skip recursion with
// a rollback union-find) and records the spanning trees. Refuses graphs with
// more than max_edges edges.
ExactFrontier brute_force_frontier(const Graph& g, const std::vector<int>& terminals,
                                   int max_edges = 22);

// Exact optimum by exhaustive enumeration; the oracle for property tests.
SolveReport brute_force_opt(const Instance& inst, int max_edges = 22);

// One linear row of the integer program.
struct LpRow {
    std::string name;
    std::vector<std::pair<std::string, double>> terms;
    char sense = '<'; // '<' means <=, '=' means equality
    double rhs = 0.0;
};

// The integer program: binary flow variables pi_l_u_v per destination and
// directed edge, shared undirected edge variables eps_u_v, branch indicators
// beta_v, and the five constraint families tying them together.
struct LpModel {
    std::vector<std::pair<std::string, double>> objective;
    std::vector<LpRow> rows;
    std::vector<std::string> binaries;
    int root = -1;
    int var_count() const { return static_cast<int>(binaries.size()); }
    std::string to_text() const;
};

LpModel build_lp_model(const Instance& inst);

// LP-format text document of the model; requires at least two terminals.
std::string export_lp(const Instance& inst);

} // namespace bst
