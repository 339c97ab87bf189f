#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "embedding.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace totbond {

/// How "(a,b)-edge" is read in the 3-face configuration: with an upper bound on the larger
/// degree (the usual statement of the theorem) or with both degrees exact.
enum class DegreeReading { at_most, exact };

inline std::string to_string(DegreeReading r) { return r == DegreeReading::at_most ? "at-most" : "exact"; }

/// One hit. `face` indexes the embedding's face list (-1 for vertex/edge configurations).
struct ConfigurationHit {
    std::string tag;  ///< borodin-a | borodin-b | borodin-c | g4-a | g4-b
    int face = -1;
    std::vector<Vertex> vertices;  ///< face walk, edge endpoints, or the hub followed by its 3-neighbours
    std::vector<int> degrees;      ///< degrees of `vertices`, same order
};

struct ConfigurationReport {
    std::vector<ConfigurationHit> hits;
    bool found() const { return !hits.empty(); }
    std::size_t count(std::string_view tag) const {
        return static_cast<std::size_t>(std::count_if(hits.begin(), hits.end(), [&](const auto& h) { return h.tag == tag; }));
    }
};

namespace detail {

inline bool distinct_vertices(const std::vector<Vertex>& walk) {
    VertexSet s;
    for (Vertex v : walk) {
        if (s.contains(v)) return false;
        s.insert(v);
    }
    return true;
}

/// (3,10), (4,7), (5,6) with the smaller degree exact and the larger bounded (at-most) or exact.
inline bool borodin_a_edge(int a, int b, DegreeReading reading) {
    if (a > b) std::swap(a, b);
    constexpr int pairs[3][2] = {{3, 10}, {4, 7}, {5, 6}};
    for (const auto& p : pairs) {
        if (reading == DegreeReading::exact ? (a == p[0] && b == p[1]) : (a == p[0] && b <= p[1])) return true;
    }
    return false;
}

/// 4-face with two 3-vertices and another 5^- vertex, or a 3-vertex, two 4-vertices and a 5^-
/// fourth vertex. No (a,b)-edge appears here, so both readings agree.
inline bool borodin_b_face(std::vector<int> d) {
    std::sort(d.begin(), d.end());
    if (d[0] != 3) return false;
    if (d[1] == 3) return d[2] <= 5;
    return d[1] == 4 && d[2] == 4 && d[3] <= 5;
}

/// 5-face with four 3-vertices and a fifth vertex of degree at most 5.
inline bool borodin_c_face(std::vector<int> d) {
    std::sort(d.begin(), d.end());
    return d[0] == 3 && d[1] == 3 && d[2] == 3 && d[3] == 3 && d[4] <= 5;
}

}  // namespace detail

/// Scans faces of length 3, 4 and 5 for the three configurations. Face walks that repeat a
/// vertex are not k-faces in the sense used here and are skipped.
inline ConfigurationReport detect_borodin(const Graph& g, const Embedding& emb, DegreeReading reading = DegreeReading::at_most) {
    if (g.order() > 0 && g.min_degree() < 3) throw InputError("Borodin detection requires minimum degree >= 3");
    if (!is_plane_embedding(g, emb)) throw InputError("Borodin detection requires a planar embedding of the graph");
    ConfigurationReport report;
    for (std::size_t f = 0; f < emb.faces.size(); ++f) {
        const auto& walk = emb.faces[f];
        if (walk.size() < 3 || walk.size() > 5 || !detail::distinct_vertices(walk)) continue;
        std::vector<int> d;
        for (Vertex v : walk) d.push_back(g.degree(v));
        bool hit = false;
        std::string tag;
        if (walk.size() == 3) {
            tag = "borodin-a";
            for (int i = 0; i < 3 && !hit; ++i) hit = detail::borodin_a_edge(d[i], d[(i + 1) % 3], reading);
        } else if (walk.size() == 4) {
            tag = "borodin-b";
            hit = detail::borodin_b_face(d);
        } else {
            tag = "borodin-c";
            hit = detail::borodin_c_face(d);
        }
        if (hit) report.hits.push_back({tag, static_cast<int>(f), walk, d});
    }
    return report;
}

/// (3,4^-)-edges (g4-a) and 5-vertices with at least four 3-neighbours (g4-b).
inline ConfigurationReport detect_girth4_config(const Graph& g) {
    if (g.order() > 0 && g.min_degree() < 3) throw InputError("girth-4 configuration detection requires minimum degree >= 3");
    ConfigurationReport report;
    for (const Edge& e : g.edges()) {
        auto [lo, hi] = classify_edge(g, e);
        if (lo == 3 && hi <= 4) report.hits.push_back({"g4-a", -1, {e.u, e.v}, {g.degree(e.u), g.degree(e.v)}});
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 5) continue;
        ConfigurationHit hit{"g4-b", -1, {v}, {5}};
        for (Vertex u : g.neighbors(v)) {
            if (g.degree(u) == 3) {
                hit.vertices.push_back(u);
                hit.degrees.push_back(3);
            }
        }
        if (hit.vertices.size() >= 5) report.hits.push_back(std::move(hit));
    }
    return report;
}

}  // namespace totbond
