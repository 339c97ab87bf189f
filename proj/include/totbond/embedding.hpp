#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace totbond {

/// Combinatorial embedding: a cyclic neighbor order per vertex plus the face walks it induces.
///
/// A face is stored as the vertex sequence of its boundary walk; its length l(f) is the number
/// of edge sides traversed, so a bridge contributes 2 to the face containing it.
struct Embedding {
    std::vector<std::vector<Vertex>> rotation;
    std::vector<std::vector<Vertex>> faces;

    int face_length(std::size_t f) const { return static_cast<int>(faces[f].size()); }
};

/// Traces faces of a rotation system. The walk leaving u along (u,v) continues along (v,w)
/// where w follows u in the rotation at v.
inline std::vector<std::vector<Vertex>> trace_faces(const std::vector<std::vector<Vertex>>& rotation) {
    const int n = static_cast<int>(rotation.size());
    // position of each neighbor inside rotation[v]
    std::vector<std::map<Vertex, int>> pos(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i) pos[v][rotation[v][i]] = i;
    }
    std::vector<std::vector<bool>> used(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) used[v].assign(rotation[v].size(), false);

    std::vector<std::vector<Vertex>> faces;
    for (Vertex s = 0; s < n; ++s) {
        for (int i = 0; i < static_cast<int>(rotation[s].size()); ++i) {
            if (used[s][i]) continue;
            std::vector<Vertex> walk;
            Vertex u = s;
            int slot = i;
            while (!used[u][slot]) {
                used[u][slot] = true;
                walk.push_back(u);
                Vertex v = rotation[u][slot];
                auto back = pos[v].find(u);
                if (back == pos[v].end()) {
                    throw FormatError("rotation is not symmetric: " + std::to_string(u) + " lists " +
                                      std::to_string(v) + " but not conversely");
                }
                slot = (back->second + 1) % static_cast<int>(rotation[v].size());
                u = v;
            }
            faces.push_back(std::move(walk));
        }
    }
    return faces;
}

/// Checks the rotation lists exactly the neighborhoods of g, each neighbor once.
inline bool rotation_matches(const Graph& g, const std::vector<std::vector<Vertex>>& rotation) {
    if (static_cast<int>(rotation.size()) != g.order()) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet listed;
        for (Vertex u : rotation[v]) {
            if (!g.valid_vertex(u) || listed.contains(u)) return false;
            listed.insert(u);
        }
        if (listed != g.neighbors(v)) return false;
    }
    return true;
}

inline Embedding make_embedding(std::vector<std::vector<Vertex>> rotation) {
    Embedding emb;
    emb.faces = trace_faces(rotation);
    emb.rotation = std::move(rotation);
    return emb;
}

/// Euler characteristic n - m + f of the traced surface; 2 for a connected plane embedding.
inline int euler_characteristic(const Graph& g, const Embedding& emb) {
    return g.order() - g.size() + static_cast<int>(emb.faces.size());
}

/// True when emb is a rotation system of g with every component embedded in the plane:
/// each component with edges satisfies n - m + f = 2 on its own traced faces.
inline bool is_plane_embedding(const Graph& g, const Embedding& emb) {
    if (!rotation_matches(g, emb.rotation)) return false;
    int components = 0;
    int isolated = 0;
    VertexSet left = g.vertices();
    while (!left.empty()) {
        VertexSet c = component_of(g, left.front());
        left -= c;
        ++components;
        if (c.size() == 1) ++isolated;
    }
    return euler_characteristic(g, emb) == 2 * components - isolated;
}

}  // namespace totbond
