#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "bondage.hpp"
#include "domination.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"

namespace totbond {

enum class WitnessRule { triangle, cycle4, cycle5, deg3_dist2, deg2_dist3, multipartite };

enum class WitnessVerdict { valid_bondage_set, violates_isolate_condition, gamma_did_not_increase, precondition_unmet };

inline std::string to_string(WitnessRule r) {
    switch (r) {
        case WitnessRule::triangle: return "triangle";
        case WitnessRule::cycle4: return "cycle4";
        case WitnessRule::cycle5: return "cycle5";
        case WitnessRule::deg3_dist2: return "deg3-dist2";
        case WitnessRule::deg2_dist3: return "deg2-dist3";
        case WitnessRule::multipartite: return "multipartite";
    }
    return "?";
}

inline std::optional<WitnessRule> witness_rule_from_name(std::string_view name) {
    for (auto r : {WitnessRule::triangle, WitnessRule::cycle4, WitnessRule::cycle5, WitnessRule::deg3_dist2,
                   WitnessRule::deg2_dist3, WitnessRule::multipartite}) {
        if (to_string(r) == name) return r;
    }
    if (name == "deg2-dist<=3" || name == "deg2-dist≤3") return WitnessRule::deg2_dist3;
    return std::nullopt;
}

inline std::string to_string(WitnessVerdict v) {
    switch (v) {
        case WitnessVerdict::valid_bondage_set: return "valid-bondage-set";
        case WitnessVerdict::violates_isolate_condition: return "violates-isolate-condition";
        case WitnessVerdict::gamma_did_not_increase: return "gamma-did-not-increase";
        case WitnessVerdict::precondition_unmet: return "precondition-unmet";
    }
    return "?";
}

/// A constructed edge set B for one rule and anchor, with its validation.
struct WitnessReport {
    WitnessRule rule = WitnessRule::triangle;
    /// Anchors after any relabeling the rule performs (e.g. x1 moved to a degree >= 3 vertex).
    std::vector<Vertex> anchors;
    /// Vertices chosen by tie-break inside the construction (w, u2', v, v', ...), in rule order.
    std::vector<Vertex> chosen;
    std::string construction_case;  ///< "a"/"b"/"c" for rules with proof cases, else empty
    EdgeSet edges;
    int claimed_bound = 0;
    /// Multipartite only: the bound written in the theorem statement (4n - 2n1 - 2).
    std::optional<int> stated_bound;
    int observed = 0;
    bool isolate_free = false;
    VertexSet isolated;
    int gamma_before = 0;
    int gamma_after = 0;
    WitnessVerdict verdict = WitnessVerdict::precondition_unmet;
    std::string note;  ///< failed precondition, when any

    bool within_bound() const { return observed <= claimed_bound; }
};

namespace detail {

inline WitnessReport unmet(WitnessRule rule, std::vector<Vertex> anchors, std::string why) {
    WitnessReport r;
    r.rule = rule;
    r.anchors = std::move(anchors);
    r.note = std::move(why);
    return r;
}

/// Edges incident to `around` except `keep`.
inline EdgeSet incident_except(const Graph& g, VertexSet around, std::initializer_list<Edge> keep) {
    EdgeSet out;
    for (const Edge& e : g.edges()) {
        if (!around.contains(e.u) && !around.contains(e.v)) continue;
        if (std::find(keep.begin(), keep.end(), e) != keep.end()) continue;
        out.insert(e);
    }
    return out;
}

/// Fills observed size and the verdict by deleting B and recomputing gamma_t.
inline void validate(const Graph& g, WitnessReport& r) {
    r.observed = static_cast<int>(r.edges.size());
    r.gamma_before = gamma_t(g).gamma_t;
    auto cut = delete_edges(g, r.edges);
    r.isolated = isolated_vertices(cut.graph);
    r.isolate_free = !cut.has_isolated;
    if (!r.isolate_free) {
        r.verdict = WitnessVerdict::violates_isolate_condition;
        return;
    }
    r.gamma_after = gamma_t(cut.graph).gamma_t;
    r.verdict = r.gamma_after > r.gamma_before ? WitnessVerdict::valid_bondage_set : WitnessVerdict::gamma_did_not_increase;
}

inline bool valid_anchors(const Graph& g, const std::vector<Vertex>& anchors) {
    for (Vertex v : anchors) {
        if (!g.valid_vertex(v)) return false;
    }
    VertexSet s;
    for (Vertex v : anchors) s.insert(v);
    return s.size() == static_cast<int>(anchors.size());
}

/// Common preconditions for the cycle rules: connected, delta >= 2, anchors form an induced
/// cycle in the given cyclic order.
inline std::optional<std::string> induced_cycle_problem(const Graph& g, const std::vector<Vertex>& x) {
    if (!valid_anchors(g, x)) return "anchors must be distinct vertex ids";
    if (!is_connected(g)) return "graph is not connected";
    if (g.min_degree() < 2) return "minimum degree below 2";
    const int k = static_cast<int>(x.size());
    VertexSet s;
    for (Vertex v : x) s.insert(v);
    for (int i = 0; i < k; ++i) {
        if (!g.adjacent(x[i], x[(i + 1) % k])) return "anchors are not consecutive on a cycle";
    }
    if (induced_edge_count(g, s) != k) return "cycle is not induced";
    return std::nullopt;
}

inline Vertex smallest(VertexSet s) { return s.front(); }

}  // namespace detail

/// Triangle rule. x1 is relabeled to the first anchor of degree >= 3; w = min N(x1) - {x2, x3}.
/// B = edges at x1, x2, x3 except (x1, w) and (x2, x3); claimed bound sum d(xi) - 5.
inline WitnessReport witness_triangle(const Graph& g, Vertex a, Vertex b, Vertex c) {
    using detail::unmet;
    const auto rule = WitnessRule::triangle;
    std::vector<Vertex> x{a, b, c};
    if (!detail::valid_anchors(g, x)) return unmet(rule, x, "anchors must be distinct vertex ids");
    if (!g.adjacent(a, b) || !g.adjacent(b, c) || !g.adjacent(a, c)) return unmet(rule, x, "anchors do not form a triangle");
    if (!is_connected(g)) return unmet(rule, x, "graph is not connected");
    for (Vertex v : x) {
        if (is_support_vertex(g, v)) return unmet(rule, x, "vertex " + std::to_string(v) + " is a support vertex");
    }
    auto big = std::find_if(x.begin(), x.end(), [&](Vertex v) { return g.degree(v) >= 3; });
    if (big == x.end()) return unmet(rule, x, "graph is C3");
    std::iter_swap(x.begin(), big);
    WitnessReport r;
    r.rule = rule;
    r.anchors = x;
    Vertex w = detail::smallest(g.neighbors(x[0]) - VertexSet{x[1], x[2]});
    r.chosen = {w};
    r.edges = detail::incident_except(g, VertexSet{x[0], x[1], x[2]}, {Edge(x[0], w), Edge(x[1], x[2])});
    r.claimed_bound = g.degree(x[0]) + g.degree(x[1]) + g.degree(x[2]) - 5;
    detail::validate(g, r);
    return r;
}

/// Induced 4-cycle rule: B = edges at x1..x4 except (x1, x2), (x3, x4); claimed sum d - 6.
inline WitnessReport witness_cycle4(const Graph& g, const std::vector<Vertex>& x) {
    if (x.size() != 4) throw InputError("cycle4 needs 4 anchors");
    if (auto why = detail::induced_cycle_problem(g, x)) return detail::unmet(WitnessRule::cycle4, x, *why);
    WitnessReport r;
    r.rule = WitnessRule::cycle4;
    r.anchors = x;
    r.edges = detail::incident_except(g, VertexSet{x[0], x[1], x[2], x[3]}, {Edge(x[0], x[1]), Edge(x[2], x[3])});
    r.claimed_bound = -6;
    for (Vertex v : x) r.claimed_bound += g.degree(v);
    detail::validate(g, r);
    return r;
}

/// Induced 5-cycle rule. Case a (d(x5) >= 3): B = edges at x1..x4 except (x1, x2), (x3, x4).
/// Case b (d(x5) = 2): (x4, x5) is kept as well. Claimed bound sum_{i<=4} d(xi) - 5 in both.
inline WitnessReport witness_cycle5(const Graph& g, const std::vector<Vertex>& x) {
    if (x.size() != 5) throw InputError("cycle5 needs 5 anchors");
    if (auto why = detail::induced_cycle_problem(g, x)) return detail::unmet(WitnessRule::cycle5, x, *why);
    WitnessReport r;
    r.rule = WitnessRule::cycle5;
    r.anchors = x;
    VertexSet four{x[0], x[1], x[2], x[3]};
    if (g.degree(x[4]) >= 3) {
        r.construction_case = "a";
        r.edges = detail::incident_except(g, four, {Edge(x[0], x[1]), Edge(x[2], x[3])});
    } else {
        r.construction_case = "b";
        r.edges = detail::incident_except(g, four, {Edge(x[0], x[1]), Edge(x[2], x[3]), Edge(x[3], x[4])});
    }
    r.claimed_bound = -5;
    for (int i = 0; i < 4; ++i) r.claimed_bound += g.degree(x[i]);
    detail::validate(g, r);
    return r;
}

/// Two 3-vertices at distance exactly 2. v = min common neighbour, u2' = min N(u2) - {v}.
/// B = edges at u1, u2, u2' except (u1, v), (u2, u2'); claimed bound Delta + 3.
inline WitnessReport witness_deg3_dist2(const Graph& g, Vertex u1, Vertex u2) {
    using detail::unmet;
    const auto rule = WitnessRule::deg3_dist2;
    std::vector<Vertex> x{u1, u2};
    if (!detail::valid_anchors(g, x)) return unmet(rule, x, "anchors must be distinct vertex ids");
    if (g.min_degree() < 3) return unmet(rule, x, "minimum degree below 3");
    if (g.degree(u1) != 3 || g.degree(u2) != 3) return unmet(rule, x, "anchors must both have degree 3");
    if (distance(g, u1, u2) != 2) return unmet(rule, x, "anchors are not at distance exactly 2");
    WitnessReport r;
    r.rule = rule;
    r.anchors = x;
    Vertex v = detail::smallest(g.neighbors(u1) & g.neighbors(u2));
    Vertex u2p = detail::smallest(g.neighbors(u2) - VertexSet::single(v));
    r.chosen = {v, u2p};
    r.edges = detail::incident_except(g, VertexSet{u1, u2, u2p}, {Edge(u1, v), Edge(u2, u2p)});
    r.claimed_bound = g.max_degree() + 3;
    detail::validate(g, r);
    return r;
}

/// Two 2-vertices at distance at most 3, split on the distance.
///   3: path u1 v w u2; B = edges at {u1, v, u2} except (u1, v), (w, u2)
///   2: path v u1 w u2; B = edges at {v, u1, u2} except (v, u1), (w, u2)
///   1: path v u1 u2, v' in N(v) - {u1}; B = edges at {v', u1, u2} except (u1, u2), (v, v')
/// Free choices take the smallest id. Claimed bound Delta + 1.
inline WitnessReport witness_deg2_dist3(const Graph& g, Vertex u1, Vertex u2) {
    using detail::unmet;
    const auto rule = WitnessRule::deg2_dist3;
    std::vector<Vertex> x{u1, u2};
    if (!detail::valid_anchors(g, x)) return unmet(rule, x, "anchors must be distinct vertex ids");
    if (!is_connected(g)) return unmet(rule, x, "graph is not connected");
    if (g.min_degree() < 2) return unmet(rule, x, "minimum degree below 2");
    if (g.degree(u1) != 2 || g.degree(u2) != 2) return unmet(rule, x, "anchors must both have degree 2");
    auto d = distance(g, u1, u2);
    if (!d || *d > 3) return unmet(rule, x, "anchors are farther apart than 3");
    WitnessReport r;
    r.rule = rule;
    r.anchors = x;
    r.claimed_bound = g.max_degree() + 1;
    auto dist_to_u2 = distances_from(g, u2);
    if (*d == 3) {
        r.construction_case = "a";
        VertexSet vs;
        for (Vertex c : g.neighbors(u1)) {
            if (dist_to_u2[c] == 2) vs.insert(c);
        }
        Vertex v = detail::smallest(vs);
        Vertex w = detail::smallest(g.neighbors(v) & g.neighbors(u2));
        r.chosen = {v, w};
        r.edges = detail::incident_except(g, VertexSet{u1, v, u2}, {Edge(u1, v), Edge(w, u2)});
    } else if (*d == 2) {
        r.construction_case = "b";
        Vertex w = detail::smallest(g.neighbors(u1) & g.neighbors(u2));
        Vertex v = detail::smallest(g.neighbors(u1) - VertexSet::single(w));
        r.chosen = {v, w};
        r.edges = detail::incident_except(g, VertexSet{v, u1, u2}, {Edge(v, u1), Edge(w, u2)});
    } else {
        r.construction_case = "c";
        Vertex v = detail::smallest(g.neighbors(u1) - VertexSet::single(u2));
        Vertex vp = detail::smallest(g.neighbors(v) - VertexSet::single(u1));
        r.chosen = {v, vp};
        r.edges = detail::incident_except(g, VertexSet{vp, u1, u2}, {Edge(u1, u2), Edge(v, vp)});
    }
    detail::validate(g, r);
    return r;
}

/// Parts of a complete multipartite graph (the complement is a union of cliques), largest
/// first with ties broken by smallest member; nullopt otherwise or for a single part.
inline std::optional<std::vector<VertexSet>> multipartite_parts(const Graph& g) {
    VertexSet left = g.vertices();
    std::vector<VertexSet> parts;
    while (!left.empty()) {
        VertexSet part = g.vertices() - g.neighbors(left.front());
        for (Vertex u : part) {
            if ((g.vertices() - g.neighbors(u)).bits() != part.bits()) return std::nullopt;
        }
        parts.push_back(part);
        left -= part;
    }
    if (parts.size() < 2) return std::nullopt;
    std::stable_sort(parts.begin(), parts.end(), [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
    return parts;
}

/// Complete multipartite rule. u^1_1, u^1_2 are the two smallest ids of the first part and
/// u^k_1, u^k_2 those of the last part; B = edges at u^1_1, u^1_2 except (u^1_1, u^k_1) and
/// (u^1_2, u^k_2). claimed_bound carries the construction size 2n - 2n1 - 2, stated_bound the
/// theorem's 4n - 2n1 - 2.
inline WitnessReport witness_multipartite(const Graph& g) {
    auto parts = multipartite_parts(g);
    if (!parts) return detail::unmet(WitnessRule::multipartite, {}, "graph is not complete multipartite");
    if (parts->back().size() < 2) return detail::unmet(WitnessRule::multipartite, {}, "a part has fewer than 2 vertices");
    auto first = parts->front().to_vector();
    auto last = parts->back().to_vector();
    const Vertex a1 = first[0];
    const Vertex a2 = first[1];
    const Vertex k1 = last[0];
    const Vertex k2 = last[1];
    const int n = g.order();
    const int n1 = parts->front().size();
    WitnessReport r;
    r.rule = WitnessRule::multipartite;
    r.anchors = {a1, a2, k1, k2};
    r.edges = detail::incident_except(g, VertexSet{a1, a2}, {Edge(a1, k1), Edge(a2, k2)});
    r.claimed_bound = 2 * n - 2 * n1 - 2;
    r.stated_bound = 4 * n - 2 * n1 - 2;
    detail::validate(g, r);
    return r;
}

/// The rule on K_{n1,...,nk} as laid out by `generate`.
inline WitnessReport witness_multipartite(std::vector<int> parts) {
    if (parts.size() < 2) throw InputError("multipartite rule needs at least two parts");
    for (int p : parts) {
        if (p < 2) throw InputError("multipartite rule needs every part of size >= 2");
    }
    return witness_multipartite(complete_multipartite(std::move(parts)));
}

// ---------------------------------------------------------------------------
// anchor discovery
// ---------------------------------------------------------------------------

/// Anchor tuples on which a rule's configuration is present (id order). Preconditions beyond
/// the bare configuration are left to the builder, which reports precondition-unmet.
inline std::vector<std::vector<Vertex>> find_anchors(const Graph& g, WitnessRule rule) {
    std::vector<std::vector<Vertex>> out;
    const int n = g.order();
    switch (rule) {
        case WitnessRule::triangle:
            for (const auto& t : all_induced_cycles(g, 3)) {
                std::vector<Vertex> s = t;
                std::sort(s.begin(), s.end());
                bool any = false;
                for (int i = 0; i < 3; ++i) {
                    if (g.degree(s[i]) < 3) continue;
                    any = true;
                    std::vector<Vertex> rest;
                    for (int j = 0; j < 3; ++j) {
                        if (j != i) rest.push_back(s[j]);
                    }
                    out.push_back({s[i], rest[0], rest[1]});
                }
                if (!any) out.push_back(s);
            }
            break;
        case WitnessRule::cycle4:
            for (const auto& c : all_induced_cycles(g, 4)) {
                out.push_back(c);
                out.push_back({c[1], c[2], c[3], c[0]});
            }
            break;
        case WitnessRule::cycle5:
            for (const auto& c : all_induced_cycles(g, 5)) {
                for (int dir = 0; dir < 2; ++dir) {
                    for (int start = 0; start < 5; ++start) {
                        std::vector<Vertex> x(5);
                        for (int i = 0; i < 5; ++i) x[i] = c[((dir == 0 ? i : -i) + start + 5) % 5];
                        out.push_back(x);
                    }
                }
            }
            break;
        case WitnessRule::deg3_dist2:
        case WitnessRule::deg2_dist3: {
            const bool three = rule == WitnessRule::deg3_dist2;
            for (Vertex a = 0; a < n; ++a) {
                if (g.degree(a) != (three ? 3 : 2)) continue;
                auto dist = distances_from(g, a);
                for (Vertex b = 0; b < n; ++b) {
                    if (b == a || g.degree(b) != (three ? 3 : 2) || dist[b] < 0) continue;
                    if (three ? dist[b] == 2 : dist[b] <= 3) out.push_back({a, b});
                }
            }
            break;
        }
        case WitnessRule::multipartite:
            break;
    }
    return out;
}

inline WitnessReport build_witness(const Graph& g, WitnessRule rule, const std::vector<Vertex>& anchors) {
    auto need = [&](std::size_t k) {
        if (anchors.size() != k) {
            throw InputError("rule " + to_string(rule) + " needs " + std::to_string(k) + " anchors");
        }
    };
    switch (rule) {
        case WitnessRule::triangle: need(3); return witness_triangle(g, anchors[0], anchors[1], anchors[2]);
        case WitnessRule::cycle4: need(4); return witness_cycle4(g, anchors);
        case WitnessRule::cycle5: need(5); return witness_cycle5(g, anchors);
        case WitnessRule::deg3_dist2: need(2); return witness_deg3_dist2(g, anchors[0], anchors[1]);
        case WitnessRule::deg2_dist3: need(2); return witness_deg2_dist3(g, anchors[0], anchors[1]);
        case WitnessRule::multipartite: return witness_multipartite(g);
    }
    throw InputError("unknown rule");
}

/// The rule on its first anchor in id order, or precondition-unmet when none exists.
inline WitnessReport first_witness(const Graph& g, WitnessRule rule) {
    if (rule == WitnessRule::multipartite) return build_witness(g, rule, {});
    auto anchors = find_anchors(g, rule);
    if (anchors.empty()) return detail::unmet(rule, {}, "configuration not present");
    return build_witness(g, rule, anchors.front());
}

/// Every rule on every anchor.
inline std::vector<WitnessReport> scan_witnesses(const Graph& g) {
    std::vector<WitnessReport> out;
    for (auto rule : {WitnessRule::triangle, WitnessRule::cycle4, WitnessRule::cycle5, WitnessRule::deg3_dist2,
                      WitnessRule::deg2_dist3}) {
        for (const auto& a : find_anchors(g, rule)) out.push_back(build_witness(g, rule, a));
    }
    if (auto parts = multipartite_parts(g); parts && parts->back().size() >= 2) out.push_back(witness_multipartite(g));
    return out;
}

}  // namespace totbond
