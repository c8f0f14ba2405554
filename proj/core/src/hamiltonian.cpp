#include "bst/hamiltonian.hpp"

#include <algorithm>
#include <chrono>
#include <map>

namespace bst {

SubgraphCandidate make_candidate(const Graph& g, std::vector<int> nodes,
                                 const std::vector<int>& terminals) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    std::map<int, int> local;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (!g.has_node(nodes[i])) {
            throw InputError("candidate node out of range");
        }
        local[nodes[i]] = static_cast<int>(i);
    }
    std::vector<EdgePair> edges;
    for (int u : nodes) {
        for (int v : g.neighbors(u)) {
            if (u < v && local.count(v)) {
                edges.emplace_back(local[u], local[v]);
            }
        }
    }
    SubgraphCandidate h;
    h.induced = Graph(static_cast<int>(nodes.size()), edges);
    h.nodes = std::move(nodes);

    h.contains_terminals = std::includes(h.nodes.begin(), h.nodes.end(),
                                         terminals.begin(), terminals.end());
    long long k = static_cast<long long>(terminals.size());
    h.size_bound_ok = static_cast<long long>(h.nodes.size()) <= (k - 1) * k;
    if (h.size() >= 3 &&
        static_cast<int>(component_of(h.induced, 0).size()) == h.size()) {
        bool ok = true;
        for (int u = 0; u < h.size() && ok; ++u) {
            for (int v = u + 1; v < h.size() && ok; ++v) {
                if (!h.induced.has_edge(u, v) &&
                    h.induced.degree(u) + h.induced.degree(v) < h.size()) {
                    ok = false;
                }
            }
        }
        h.satisfies_ore = ok;
    }
    return h;
}

bool ore_condition(const SubgraphCandidate& h) {
    if (h.size() < 3) {
        throw ContractError("ore_condition needs at least 3 nodes");
    }
    if (static_cast<int>(component_of(h.induced, 0).size()) != h.size()) {
        throw ContractError("ore_condition needs a connected subgraph");
    }
    return h.satisfies_ore;
}

std::vector<int> hamiltonian_cycle_ore(const SubgraphCandidate& h) {
    if (!ore_condition(h)) {
        throw ContractError("hamiltonian_cycle_ore requires the Ore condition");
    }
    const Graph& g = h.induced;
    int n = h.size();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) {
        order[i] = i;
    }

    auto adjacent = [&](int a, int b) { return g.has_edge(order[a], order[b]); };

    // Each pass removes at least one non-adjacent consecutive pair, so the
    // loop runs at most n times on an Ore graph.
    for (int guard = 0; guard <= n * n; ++guard) {
        int gap = -1;
        for (int i = 0; i < n; ++i) {
            if (!adjacent(i, (i + 1) % n)) {
                gap = i;
                break;
            }
        }
        if (gap < 0) {
            break;
        }
        int i = gap;
        int found = -1;
        for (int off = 1; off < n - 1; ++off) {
            int j = (i + 1 + off) % n; // j != i and j+1 != i+1... j walks the rest
            if (j == i || (j + 1) % n == i) {
                continue;
            }
            if (adjacent(i, j) && adjacent((i + 1) % n, (j + 1) % n)) {
                found = j;
                break;
            }
        }
        if (found < 0) {
            throw ContractError("rotation repair found no crossing pair; Ore violated");
        }
        // Reverse the run order[i+1 .. found] along the cyclic order.
        int left = (i + 1) % n;
        int right = found;
        int span = (right - left + n) % n + 1;
        for (int s = 0; s < span / 2; ++s) {
            std::swap(order[(left + s) % n], order[(right - s + n) % n]);
        }
    }

    for (int i = 0; i < n; ++i) {
        if (!adjacent(i, (i + 1) % n)) {
            throw ContractError("rotation repair failed to close the cycle");
        }
    }

    // Canonical presentation: start at the smallest node, walk toward its
    // smaller cycle neighbor.
    std::vector<int> cycle(n);
    for (int i = 0; i < n; ++i) {
        cycle[i] = h.nodes[order[i]];
    }
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
    if (n >= 3 && cycle[1] > cycle.back()) {
        std::reverse(cycle.begin() + 1, cycle.end());
    }
    return cycle;
}

std::vector<int> terminal_spanning_path(const std::vector<int>& cycle,
                                        const std::vector<int>& terminals) {
    auto is_terminal = [&](int v) {
        return std::binary_search(terminals.begin(), terminals.end(), v);
    };
    for (int t : terminals) {
        if (std::find(cycle.begin(), cycle.end(), t) == cycle.end()) {
            throw InputError("terminal " + std::to_string(t) + " not on the cycle");
        }
    }
    int n = static_cast<int>(cycle.size());
    std::vector<int> best;
    for (int cut = 0; cut < n; ++cut) {
        // Removing edge (cycle[cut], cycle[cut+1]) linearizes the cycle.
        std::vector<int> linear(n);
        for (int i = 0; i < n; ++i) {
            linear[i] = cycle[(cut + 1 + i) % n];
        }
        int lo = 0;
        int hi = n - 1;
        while (lo < n && !is_terminal(linear[lo])) {
            ++lo;
        }
        while (hi >= 0 && !is_terminal(linear[hi])) {
            --hi;
        }
        if (lo > hi) {
            continue;
        }
        std::vector<int> trimmed(linear.begin() + lo, linear.begin() + hi + 1);
        if (best.empty() || trimmed.size() < best.size() ||
            (trimmed.size() == best.size() && trimmed.front() < best.front())) {
            best = std::move(trimmed);
        }
    }
    return best;
}

std::vector<int> core_numbers(const Graph& g) {
    // Batagelj-Zaversnik peeling over degree-sorted bins.
    int n = g.node_count();
    if (n == 0) {
        return {};
    }
    std::vector<int> deg(n), vert(n), pos(n), core(n);
    int max_deg = 0;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }
    std::vector<int> bin(max_deg + 1, 0);
    for (int v = 0; v < n; ++v) {
        ++bin[deg[v]];
    }
    int start = 0;
    for (int d = 0; d <= max_deg; ++d) {
        int count = bin[d];
        bin[d] = start;
        start += count;
    }
    for (int v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]]++;
        vert[pos[v]] = v;
    }
    for (int d = max_deg; d >= 1; --d) {
        bin[d] = bin[d - 1];
    }
    bin[0] = 0;

    for (int i = 0; i < n; ++i) {
        int v = vert[i];
        core[v] = deg[v];
        for (int u : g.neighbors(v)) {
            if (deg[u] > deg[v]) {
                int du = deg[u];
                int pu = pos[u];
                int pw = bin[du];
                int w = vert[pw];
                if (u != w) {
                    pos[u] = pw;
                    vert[pu] = w;
                    pos[w] = pu;
                    vert[pw] = u;
                }
                ++bin[du];
                --deg[u];
            }
        }
    }
    return core;
}

std::optional<SolveReport> path_solution(const Instance& inst) {
    inst.validate();
    auto t0 = std::chrono::steady_clock::now();

    SolveReport report;
    report.algorithm = "hamiltonian-path";
    report.seed = inst.seed;
    report.root = inst.terminals.front();

    if (inst.k() == 1) {
        report.tree = MulticastTree::singleton(inst.terminals.front());
        report.cost = objective(report.tree, inst.branch_weight);
        report.trace.after_phase1 = report.cost.objective;
        report.trace.after_deletion = report.cost.objective;
        report.trace.after_alternation = report.cost.objective;
        return report;
    }

    std::vector<int> core = core_numbers(inst.graph);
    int t_max = core[inst.terminals.front()];
    for (int t : inst.terminals) {
        t_max = std::min(t_max, core[t]);
    }

    std::vector<int> previous_nodes;
    for (int t = t_max; t >= 0; --t) {
        std::vector<int> nodes;
        for (int v = 0; v < inst.graph.node_count(); ++v) {
            if (core[v] >= t) {
                nodes.push_back(v);
            }
        }
        if (nodes == previous_nodes) {
            continue;
        }
        previous_nodes = nodes;

        SubgraphCandidate shell = make_candidate(inst.graph, nodes, inst.terminals);
        // Restrict to the component holding the terminals.
        int first_local = static_cast<int>(
            std::lower_bound(shell.nodes.begin(), shell.nodes.end(), inst.terminals[0]) -
            shell.nodes.begin());
        std::vector<int> comp_local = component_of(shell.induced, first_local);
        std::vector<int> comp_nodes;
        for (int idx : comp_local) {
            comp_nodes.push_back(shell.nodes[idx]);
        }
        SubgraphCandidate h = make_candidate(inst.graph, comp_nodes, inst.terminals);
        if (!h.contains_terminals || !h.size_bound_ok) {
            continue;
        }

        std::vector<int> path;
        if (h.size() == 2) {
            if (inst.k() == 2 && h.induced.has_edge(0, 1)) {
                path = {h.nodes[0], h.nodes[1]};
            }
        } else if (h.size() >= 3 && h.satisfies_ore) {
            std::vector<int> cycle = hamiltonian_cycle_ore(h);
            path = terminal_spanning_path(cycle, inst.terminals);
        }
        if (path.empty()) {
            continue;
        }

        MulticastTree tree;
        if (path.size() == 1) {
            tree = MulticastTree::singleton(path[0]);
        } else {
            for (size_t i = 0; i + 1 < path.size(); ++i) {
                tree.add_edge(path[i], path[i + 1]);
            }
        }
        report.tree = std::move(tree);
        report.cost = objective(report.tree, inst.branch_weight);
        if (report.cost.branches != 0) {
            throw ContractError("path solution produced a branch node");
        }
        report.trace.after_phase1 = report.cost.objective;
        report.trace.after_deletion = report.cost.objective;
        report.trace.after_alternation = report.cost.objective;
        auto t1 = std::chrono::steady_clock::now();
        report.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return report;
    }
    return std::nullopt;
}

} // namespace bst
