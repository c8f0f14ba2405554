#pragma once

#include <optional>
#include <vector>

#include "bst/distance_oracle.hpp"
#include "bst/instance.hpp"

namespace bst {

// An induced subgraph H of some host graph, with the flags that qualify it
// as a source of branch-free solutions.
struct SubgraphCandidate {
    std::vector<int> nodes;     // host ids, ascending
    Graph induced;              // over local indices 0..|nodes|-1
    bool satisfies_ore = false;
    bool contains_terminals = false;
    bool size_bound_ok = false; // |V(H)| <= (k-1)*k

    int size() const { return static_cast<int>(nodes.size()); }
};

// Induced subgraph over `nodes` with the qualification flags filled in.
SubgraphCandidate make_candidate(const Graph& g, std::vector<int> nodes,
                                 const std::vector<int>& terminals);

// Ore's condition: every non-adjacent pair has degree sum >= |V(H)|.
// Requires |V(H)| >= 3 and a connected candidate.
bool ore_condition(const SubgraphCandidate& h);

// Hamiltonian cycle via rotation repair: start from the identity ordering
// and, while consecutive non-adjacent pairs remain, reverse the segment
// between a crossing pair whose existence Ore's condition guarantees.
// Returns host node ids; requires ore_condition(h).
std::vector<int> hamiltonian_cycle_ore(const SubgraphCandidate& h);

// Cuts the cycle at the position whose trimmed path (endpoints in K, all of
// K covered) is shortest; ties by lowest start node id.
std::vector<int> terminal_spanning_path(const std::vector<int>& cycle,
                                        const std::vector<int>& terminals);

// Core number of every node (standard peeling).
std::vector<int> core_numbers(const Graph& g);

// Branch-free solution search: walks the k-core hierarchy from the densest
// core containing K outward, returning the path solution of the first
// candidate that is connected, within the size bound, and satisfies Ore.
std::optional<SolveReport> path_solution(const Instance& inst);

} // namespace bst
