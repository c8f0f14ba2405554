#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bst/graph.hpp"
#include "bst/tree.hpp"

namespace bst {

// One solver input: graph, terminal set K, branch weight w, seed.
struct Instance {
    Graph graph;
    std::vector<int> terminals; // sorted unique, all in one component
    double branch_weight = 0.0;
    uint64_t seed = 0;
    std::optional<int> root;    // must be a terminal when set

    int k() const { return static_cast<int>(terminals.size()); }

    // Throws InputError / InfeasibleError when the invariants fail.
    void validate() const;
};

Instance make_instance(Graph graph, std::vector<int> terminals, double branch_weight,
                       uint64_t seed, std::optional<int> root = std::nullopt);

// Root selection: explicit root if set, otherwise a seeded-uniform pick from K.
int pick_root(const Instance& inst);

// splitmix64: stable seed mixing for derived RNG streams.
uint64_t mix_seed(uint64_t seed, uint64_t salt);

struct PhaseTrace {
    double after_phase1 = 0.0;
    double after_deletion = 0.0;
    double after_alternation = 0.0;
    int phase1_branches = 0;
    long long phase1_attach_sum = 0; // sum of d_{v,T} over explicit attachments
    int tie_events = 0;              // iterations that had more than one candidate
};

struct SolveReport {
    std::string algorithm;
    MulticastTree tree;
    TreeCost cost;
    PhaseTrace trace;
    double wall_ms = 0.0;
    uint64_t seed = 0;
    int root = -1;
};

} // namespace bst
