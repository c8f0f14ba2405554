#pragma once

#include "bst/distance_oracle.hpp"
#include "bst/instance.hpp"

namespace bst {

// Union of canonical shortest paths from the root to every other terminal.
// All paths descend the root's distance field, so the union is cycle-free.
SolveReport shortest_path_tree(const Instance& inst, const DistanceOracle& oracle);
SolveReport shortest_path_tree(const Instance& inst);

// Takahashi-Matsuyama nearest-terminal insertion: the same loop as BAERA's
// edge optimization phase but with plain lowest-id tie-breaking and no
// branch optimization afterwards.
SolveReport takahashi_steiner_tree(const Instance& inst, const DistanceOracle& oracle);
SolveReport takahashi_steiner_tree(const Instance& inst);

} // namespace bst
