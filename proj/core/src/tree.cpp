#include "bst/tree.hpp"

#include <algorithm>
#include <sstream>

#include "tree_scratch.hpp"

namespace bst {

namespace {

bool is_terminal(int v, const std::vector<int>& terminals) {
    return std::binary_search(terminals.begin(), terminals.end(), v);
}

int node_bound(const MulticastTree& t) {
    int bound = 0;
    for (int v : t.nodes()) {
        bound = std::max(bound, v + 1);
    }
    return bound;
}

} // namespace

MulticastTree MulticastTree::singleton(int node) {
    MulticastTree t;
    t.adjacency_[node];
    return t;
}

MulticastTree MulticastTree::from_edges(const std::vector<EdgePair>& edges) {
    MulticastTree t;
    for (const auto& [u, v] : edges) {
        t.add_edge(u, v);
    }
    return t;
}

void MulticastTree::add_node(int v) { adjacency_[v]; }

void MulticastTree::add_edge(int u, int v) {
    if (u == v) {
        throw InputError("tree edge cannot be a self-loop");
    }
    EdgePair e{std::min(u, v), std::max(u, v)};
    if (edges_.insert(e).second) {
        adjacency_[u].insert(v);
        adjacency_[v].insert(u);
    }
}

void MulticastTree::remove_edge(int u, int v) {
    EdgePair e{std::min(u, v), std::max(u, v)};
    if (edges_.erase(e)) {
        adjacency_[u].erase(v);
        adjacency_[v].erase(u);
    }
}

void MulticastTree::remove_node(int v) {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end()) {
        return;
    }
    std::vector<int> nbrs(it->second.begin(), it->second.end());
    for (int nb : nbrs) {
        remove_edge(v, nb);
    }
    adjacency_.erase(v);
}

bool MulticastTree::has_edge(int u, int v) const {
    return edges_.count({std::min(u, v), std::max(u, v)}) > 0;
}

bool MulticastTree::has_node(int v) const { return adjacency_.count(v) > 0; }

int MulticastTree::degree(int v) const {
    auto it = adjacency_.find(v);
    return it == adjacency_.end() ? 0 : static_cast<int>(it->second.size());
}

int MulticastTree::node_count() const { return static_cast<int>(adjacency_.size()); }

int MulticastTree::branch_count() const {
    int count = 0;
    for (const auto& [node, nbrs] : adjacency_) {
        if (nbrs.size() >= 3) {
            ++count;
        }
    }
    return count;
}

std::vector<int> MulticastTree::branch_nodes() const {
    std::vector<int> result;
    for (const auto& [node, nbrs] : adjacency_) {
        if (nbrs.size() >= 3) {
            result.push_back(node);
        }
    }
    return result;
}

std::vector<int> MulticastTree::nodes() const {
    std::vector<int> result;
    result.reserve(adjacency_.size());
    for (const auto& [node, nbrs] : adjacency_) {
        result.push_back(node);
    }
    return result;
}

const std::set<int>& MulticastTree::tree_neighbors(int v) const {
    static const std::set<int> empty;
    auto it = adjacency_.find(v);
    return it == adjacency_.end() ? empty : it->second;
}

namespace detail {

int scratch_components(const TreeScratch& ws, std::vector<int>& comp_of) {
    comp_of.assign(ws.bound(), -1);
    int comps = 0;
    std::vector<int> queue;
    for (int start = 0; start < ws.bound(); ++start) {
        if (!ws.has_node(start) || comp_of[start] >= 0) {
            continue;
        }
        int id = comps++;
        comp_of[start] = id;
        queue.clear();
        queue.push_back(start);
        size_t head = 0;
        while (head < queue.size()) {
            int u = queue[head++];
            for (int v : ws.neighbors(u)) {
                if (comp_of[v] < 0) {
                    comp_of[v] = id;
                    queue.push_back(v);
                }
            }
        }
    }
    return comps;
}

void scratch_prune(TreeScratch& ws, const std::vector<int>& terminals) {
    // Seeding order does not matter: maximal pruning removes a unique set.
    std::vector<int> queue;
    for (int v : ws.touched()) {
        if (ws.has_node(v) && ws.degree(v) == 1 && !is_terminal(v, terminals)) {
            queue.push_back(v);
        }
    }
    size_t head = 0;
    while (head < queue.size()) {
        int v = queue[head++];
        if (!ws.has_node(v) || ws.degree(v) != 1 || is_terminal(v, terminals)) {
            continue;
        }
        int nb = ws.neighbors(v).front();
        ws.remove_node(v);
        if (ws.degree(nb) == 1 && !is_terminal(nb, terminals)) {
            queue.push_back(nb);
        }
    }
    // Cycle cuts can fully isolate relay nodes; drop those too.
    for (int v : ws.touched()) {
        if (ws.has_node(v) && ws.degree(v) == 0 && !is_terminal(v, terminals)) {
            ws.remove_node(v);
        }
    }
}

namespace {

// First cycle in DFS order (sorted adjacency, components by ascending id),
// rotated to start at its minimum node and oriented toward that node's
// smaller cycle neighbor so the result is independent of discovery order.
std::vector<int> scratch_find_cycle(const TreeScratch& ws) {
    std::vector<int> parent(ws.bound(), -2); // -2 unvisited, -1 root
    struct Frame {
        int node;
        size_t next;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < ws.bound(); ++root) {
        if (!ws.has_node(root) || parent[root] != -2) {
            continue;
        }
        parent[root] = -1;
        stack.clear();
        stack.push_back({root, 0});
        while (!stack.empty()) {
            Frame& frame = stack.back();
            int u = frame.node;
            const auto& nbrs = ws.neighbors(u);
            if (frame.next >= nbrs.size()) {
                stack.pop_back();
                continue;
            }
            int v = nbrs[frame.next++];
            if (v == parent[u]) {
                continue;
            }
            if (parent[v] == -2) {
                parent[v] = u;
                stack.push_back({v, 0});
                continue;
            }
            // Back edge u -> v: the cycle is v ... u along parent pointers.
            std::vector<int> cycle;
            for (int x = u; x != v; x = parent[x]) {
                cycle.push_back(x);
            }
            cycle.push_back(v);
            std::reverse(cycle.begin(), cycle.end());

            auto min_it = std::min_element(cycle.begin(), cycle.end());
            std::rotate(cycle.begin(), min_it, cycle.end());
            if (cycle.size() >= 3 && cycle[1] > cycle.back()) {
                std::reverse(cycle.begin() + 1, cycle.end());
            }
            return cycle;
        }
    }
    return {};
}

// Cuts one cycle: removes the longest run of edges between consecutive
// anchors (degree >= 3 or terminal) along the cycle; ties go to the segment
// starting at the lowest anchor id in canonical orientation.
void scratch_cut_cycle(TreeScratch& ws, const std::vector<int>& cycle,
                       const std::vector<int>& terminals) {
    int len = static_cast<int>(cycle.size());
    std::vector<int> anchor_positions;
    for (int i = 0; i < len; ++i) {
        int v = cycle[i];
        if (ws.degree(v) >= 3 || is_terminal(v, terminals)) {
            anchor_positions.push_back(i);
        }
    }

    if (anchor_positions.empty()) {
        // Free-floating cycle: cut anywhere, pruning dissolves the rest.
        ws.remove_edge(cycle[0], cycle[1]);
        return;
    }

    int m = static_cast<int>(anchor_positions.size());
    int best_start = -1;
    int best_len = -1;
    for (int i = 0; i < m; ++i) {
        int from = anchor_positions[i];
        int to = anchor_positions[(i + 1) % m];
        int seg_len = (to - from + len) % len;
        if (seg_len == 0) {
            seg_len = len; // single anchor: the segment is the whole cycle
        }
        if (seg_len > best_len ||
            (seg_len == best_len && cycle[from] < cycle[best_start])) {
            best_len = seg_len;
            best_start = from;
        }
    }
    for (int step = 0; step < best_len; ++step) {
        int a = cycle[(best_start + step) % len];
        int b = cycle[(best_start + step + 1) % len];
        ws.remove_edge(a, b);
    }
}

} // namespace

void scratch_remove_cycles(TreeScratch& ws, const std::vector<int>& terminals) {
    while (true) {
        std::vector<int> cycle = scratch_find_cycle(ws);
        if (cycle.empty()) {
            break;
        }
        scratch_cut_cycle(ws, cycle, terminals);
    }
}

std::vector<std::vector<int>> tree_components(const MulticastTree& t) {
    TreeScratch ws(node_bound(t));
    ws.load(t);
    std::vector<int> comp_of;
    int comps = scratch_components(ws, comp_of);
    std::vector<std::vector<int>> components(comps);
    for (int v : ws.nodes()) {
        components[comp_of[v]].push_back(v);
    }
    return components;
}

bool has_cycle(const MulticastTree& t) {
    TreeScratch ws(node_bound(t));
    ws.load(t);
    return !scratch_find_cycle(ws).empty();
}

void repair_cycles_and_prune(MulticastTree& t, const std::vector<int>& terminals) {
    TreeScratch ws(node_bound(t));
    ws.load(t);
    scratch_remove_cycles(ws, terminals);
    scratch_prune(ws, terminals);
    t = ws.to_tree();
}

} // namespace detail

TreeCost objective(const MulticastTree& t, double branch_weight) {
    if (branch_weight < 0) {
        throw InputError("branch weight must be nonnegative");
    }
    int nodes = t.node_count();
    int edges = t.edge_count();
    if (nodes == 0) {
        throw ContractError("objective: empty tree");
    }
    if (edges != nodes - 1 || detail::tree_components(t).size() != 1) {
        throw ContractError("objective: edge set is not a single connected tree");
    }
    TreeCost cost;
    cost.edges = edges;
    cost.branches = t.branch_count();
    cost.objective = cost.edges + branch_weight * cost.branches;
    return cost;
}

std::string Violation::describe() const {
    switch (kind) {
        case ViolationKind::Cycle:
            return "cycle in tree";
        case ViolationKind::Disconnected:
            return "tree is disconnected";
        case ViolationKind::MissingTerminal:
            return "terminal " + std::to_string(node) + " not in tree";
        case ViolationKind::ForeignEdge:
            return "edge (" + std::to_string(edge.first) + "," +
                   std::to_string(edge.second) + ") not in graph";
    }
    return "unknown violation";
}

std::vector<Violation> validate_tree(const MulticastTree& t, const Graph& g,
                                     const std::vector<int>& terminals) {
    std::vector<Violation> violations;
    for (const auto& e : t.edges()) {
        if (!g.has_edge(e.first, e.second)) {
            violations.push_back({ViolationKind::ForeignEdge, -1, e});
        }
    }
    if (detail::has_cycle(t)) {
        violations.push_back({ViolationKind::Cycle, -1, {}});
    }
    if (detail::tree_components(t).size() > 1) {
        violations.push_back({ViolationKind::Disconnected, -1, {}});
    }
    for (int k : terminals) {
        if (!t.has_node(k)) {
            violations.push_back({ViolationKind::MissingTerminal, k, {}});
        }
    }
    return violations;
}

MulticastTree prune_nonterminal_leaves(MulticastTree t, const std::vector<int>& terminals) {
    detail::TreeScratch ws(node_bound(t));
    ws.load(t);
    detail::scratch_prune(ws, terminals);
    return ws.to_tree();
}

MulticastTree break_cycles(MulticastTree t, const std::vector<int>& terminals) {
    if (detail::tree_components(t).size() > 1) {
        throw ContractError("break_cycles: input must be connected");
    }
    detail::repair_cycles_and_prune(t, terminals);
    return t;
}

std::string to_edge_list(const MulticastTree& t) {
    std::ostringstream out;
    for (const auto& [u, v] : t.edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

} // namespace bst
