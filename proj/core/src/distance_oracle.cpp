#include "bst/distance_oracle.hpp"

#include <algorithm>
#include <string>

namespace bst {

namespace {
constexpr uint16_t kRawInf = 0xFFFF;
constexpr int kMaxOracleNodes = 32768; // n*n uint16 entries; 32768^2 = 2 GiB
} // namespace

DistanceOracle::DistanceOracle(const Graph& g) : graph_(g), n_(g.node_count()) {
    if (n_ > kMaxOracleNodes) {
        throw LimitError("graph too large for a dense distance matrix: " +
                         std::to_string(n_) + " nodes (cap " +
                         std::to_string(kMaxOracleNodes) + ")");
    }
    dist_.assign(static_cast<size_t>(n_) * n_, kRawInf);
    std::vector<int> queue(n_);
    for (int s = 0; s < n_; ++s) {
        uint16_t* row = dist_.data() + static_cast<size_t>(s) * n_;
        int head = 0;
        int tail = 0;
        row[s] = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            uint16_t du = row[u];
            for (int v : graph_.neighbors(u)) {
                if (row[v] == kRawInf) {
                    row[v] = static_cast<uint16_t>(du + 1);
                    queue[tail++] = v;
                }
            }
        }
    }
}

int DistanceOracle::dist(int u, int v) const {
    if (!graph_.has_node(u) || !graph_.has_node(v)) {
        throw InputError("node id out of range in dist query");
    }
    uint16_t d = raw(u, v);
    return d == kRawInf ? kUnreachable : d;
}

std::vector<int> DistanceOracle::path_toward(int anchor, int from) const {
    int d = dist(anchor, from);
    if (d == kUnreachable) {
        return {};
    }
    std::vector<int> path;
    path.reserve(d + 1);
    int cur = from;
    path.push_back(cur);
    while (cur != anchor) {
        uint16_t want = static_cast<uint16_t>(raw(anchor, cur) - 1);
        int next = -1;
        for (int nb : graph_.neighbors(cur)) {
            if (raw(anchor, nb) == want) {
                next = nb;
                break; // neighbors sorted ascending, first hit is canonical
            }
        }
        cur = next;
        path.push_back(cur);
    }
    return path;
}

std::vector<int> DistanceOracle::path_between(int a, int b) const {
    int lo = std::min(a, b);
    int hi = std::max(a, b);
    std::vector<int> path = path_toward(lo, hi); // [hi, ..., lo]
    if (a < b) {
        std::reverse(path.begin(), path.end());
    }
    return path;
}

std::optional<SetPathResult> shortest_path_to_set(const Graph& g,
                                                  const std::vector<int>& sources,
                                                  int target) {
    if (sources.empty()) {
        throw InputError("shortest_path_to_set: empty source set");
    }
    if (std::binary_search(sources.begin(), sources.end(), target)) {
        throw InputError("shortest_path_to_set: target already in source set");
    }
    std::vector<int> dist(g.node_count(), -1);
    std::vector<int> queue;
    queue.reserve(g.node_count());
    for (int s : sources) {
        if (!g.has_node(s)) {
            throw InputError("shortest_path_to_set: source out of range");
        }
        dist[s] = 0;
        queue.push_back(s);
    }
    size_t head = 0;
    while (head < queue.size() && dist[target] < 0) {
        int u = queue[head++];
        for (int v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    if (dist[target] < 0) {
        return std::nullopt;
    }

    SetPathResult result;
    result.distance = dist[target];

    // Walk downhill to distance 0; internal nodes have dist > 0, hence outside S.
    int cur = target;
    result.path.push_back(cur);
    while (dist[cur] != 0) {
        for (int nb : g.neighbors(cur)) {
            if (dist[nb] == dist[cur] - 1) {
                cur = nb;
                break;
            }
        }
        result.path.push_back(cur);
    }
    result.attach = cur;

    // All attach candidates: S-nodes at exactly `distance` hops from target.
    std::vector<int> from_target(g.node_count(), -1);
    std::vector<int> q2;
    q2.push_back(target);
    from_target[target] = 0;
    head = 0;
    while (head < q2.size()) {
        int u = q2[head++];
        if (from_target[u] >= result.distance) {
            continue;
        }
        for (int v : g.neighbors(u)) {
            if (from_target[v] < 0) {
                from_target[v] = from_target[u] + 1;
                q2.push_back(v);
            }
        }
    }
    for (int s : sources) {
        if (from_target[s] == result.distance) {
            result.tied_attaches.push_back(s);
        }
    }
    return result;
}

} // namespace bst
