#include "bst/instance.hpp"

#include <algorithm>
#include <random>

namespace bst {

void Instance::validate() const {
    if (terminals.empty()) {
        throw InputError("instance needs at least one terminal");
    }
    if (!std::is_sorted(terminals.begin(), terminals.end()) ||
        std::adjacent_find(terminals.begin(), terminals.end()) != terminals.end()) {
        throw InputError("terminal set must be sorted and duplicate-free");
    }
    for (int v : terminals) {
        if (!graph.has_node(v)) {
            throw InputError("terminal " + std::to_string(v) + " not in graph");
        }
    }
    if (branch_weight < 0) {
        throw InputError("branch weight must be nonnegative");
    }
    if (root && !std::binary_search(terminals.begin(), terminals.end(), *root)) {
        throw InputError("root must be a terminal");
    }
    if (!in_one_component(graph, terminals)) {
        throw InfeasibleError("terminals span multiple connected components");
    }
}

Instance make_instance(Graph graph, std::vector<int> terminals, double branch_weight,
                       uint64_t seed, std::optional<int> root) {
    std::sort(terminals.begin(), terminals.end());
    terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
    Instance inst{std::move(graph), std::move(terminals), branch_weight, seed, root};
    inst.validate();
    return inst;
}

uint64_t mix_seed(uint64_t seed, uint64_t salt) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int pick_root(const Instance& inst) {
    if (inst.root) {
        return *inst.root;
    }
    // mt19937_64 output is standardized, so this stays stable across builds.
    std::mt19937_64 rng(mix_seed(inst.seed, 0x726f6f74)); // "root"
    return inst.terminals[rng() % inst.terminals.size()];
}

} // namespace bst
