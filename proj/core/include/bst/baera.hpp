#pragma once

#include "bst/distance_oracle.hpp"
#include "bst/instance.hpp"

namespace bst {

// Phase 1: nearest-terminal insertion with the branch-preferring tie-break.
// Attaches the closest unattached terminal via its canonical shortest path;
// among tied choices prefers an attach node whose tree degree is not 2 (so
// no new branch node appears), then lowest terminal id, then lowest attach id.
MulticastTree edge_optimization_phase(const Instance& inst, const DistanceOracle& oracle,
                                      PhaseTrace* trace = nullptr, int* root_out = nullptr);

// Phase 2a: tries to delete each branch node (ascending tree degree, ties by
// id), reconnecting the split components through their closest branch node in
// another component; keeps a candidate only when the objective strictly drops.
MulticastTree deletion_step(const MulticastTree& tree, const Instance& inst,
                            const DistanceOracle& oracle);

// Phase 2b: tries to move each branch node to a graph neighbor, replacing the
// paths from its neighbor branch/terminal nodes; applies the best strictly
// improving move and re-examines the moved node until no move helps.
MulticastTree alternation_step(const MulticastTree& tree, const Instance& inst,
                               const DistanceOracle& oracle);

// Full pipeline: phase 1, deletion, alternation, with a nonincreasing
// objective trace. Wall time covers solving only, not oracle construction.
SolveReport baera(const Instance& inst, const DistanceOracle& oracle);
SolveReport baera(const Instance& inst);

namespace detail {

// The insertion loop shared with the Takahashi baseline; `branch_aware`
// toggles the tie-break that prefers attachments creating no new branch.
MulticastTree nearest_terminal_insertion(const Instance& inst, const DistanceOracle& oracle,
                                         bool branch_aware, PhaseTrace* trace, int* root_out);

// Tree neighbors in the contracted sense: for each tree edge at v, the first
// node along that direction that is a terminal or has tree degree >= 3.
std::vector<int> neighbor_branch_terminals(const MulticastTree& t, int v,
                                           const std::vector<int>& terminals);

} // namespace detail
} // namespace bst
