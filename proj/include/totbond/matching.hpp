#pragma once

#include <deque>
#include <vector>

#include "graph.hpp"

namespace totbond {

/// Maximum matching by Edmonds' augmenting paths with blossom contraction, O(n^3).
/// Returns mate[v] (or -1 when v is exposed).
inline std::vector<Vertex> maximum_matching(const Graph& g) {
    const int n = g.order();
    std::vector<Vertex> mate(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> parent(static_cast<std::size_t>(n));
    std::vector<Vertex> base(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n));
    std::vector<bool> in_blossom(static_cast<std::size_t>(n));

    auto lca = [&](Vertex a, Vertex b) {
        std::vector<bool> on_path(static_cast<std::size_t>(n), false);
        while (true) {
            a = base[a];
            on_path[a] = true;
            if (mate[a] == -1) break;
            a = parent[mate[a]];
        }
        while (true) {
            b = base[b];
            if (on_path[b]) return b;
            b = parent[mate[b]];
        }
    };

    auto mark_path = [&](Vertex v, Vertex b, Vertex child) {
        while (base[v] != b) {
            in_blossom[base[v]] = in_blossom[base[mate[v]]] = true;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    };

    auto find_path = [&](Vertex root) -> Vertex {
        std::fill(used.begin(), used.end(), false);
        std::fill(parent.begin(), parent.end(), -1);
        for (Vertex i = 0; i < n; ++i) base[i] = i;
        used[root] = true;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex to : g.neighbors(v)) {
                if (base[v] == base[to] || mate[v] == to) continue;
                if (to == root || (mate[to] != -1 && parent[mate[to]] != -1)) {
                    Vertex cur = lca(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (Vertex i = 0; i < n; ++i) {
                        if (in_blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (mate[to] == -1) return to;
                    used[mate[to]] = true;
                    queue.push_back(mate[to]);
                }
            }
        }
        return -1;
    };

    for (Vertex v = 0; v < n; ++v) {
        if (mate[v] != -1) continue;
        Vertex end = find_path(v);
        while (end != -1) {
            Vertex pv = parent[end];
            Vertex next = mate[pv];
            mate[end] = pv;
            mate[pv] = end;
            end = next;
        }
    }
    return mate;
}

/// Size of a maximum matching.
inline int max_matching_size(const Graph& g) {
    int matched = 0;
    for (Vertex m : maximum_matching(g)) matched += m != -1 ? 1 : 0;
    return matched / 2;
}

}  // namespace totbond
