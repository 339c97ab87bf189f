#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "isomorphism.hpp"
#include "planarity.hpp"

namespace totbond {

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

enum class Family { path, cycle, complete, complete_bipartite, complete_multipartite, star, subdivided_star };

/// Family tag plus size parameters:
///   path/cycle/complete: {n};  star: {leaves};  complete_bipartite: {m, n};
///   complete_multipartite: part sizes;  subdivided_star: subdivision count per leg.
struct FamilySpec {
    Family family = Family::path;
    std::vector<int> sizes;
};

/// Vertex layout: paths and cycles are numbered along the walk; stars and subdivided stars
/// have the center at 0 and legs laid out one after another; (multi)partite graphs have their
/// parts laid out contiguously in nonincreasing size order.
inline Graph generate(const FamilySpec& spec) {
    auto need = [&](std::size_t count, const char* what) {
        if (spec.sizes.size() != count) throw InputError(std::string(what) + " expects " + std::to_string(count) + " size(s)");
    };
    auto positive = [&](int v, const char* what) {
        if (v < 1) throw InputError(std::string(what) + ": sizes must be >= 1");
    };
    std::vector<Edge> edges;
    switch (spec.family) {
        case Family::path: {
            need(1, "path");
            const int n = spec.sizes[0];
            positive(n, "path");
            for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            return Graph(n, edges);
        }
        case Family::cycle: {
            need(1, "cycle");
            const int n = spec.sizes[0];
            if (n < 3) throw InputError("cycle: n must be >= 3");
            for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
            return Graph(n, edges);
        }
        case Family::complete: {
            need(1, "complete");
            const int n = spec.sizes[0];
            positive(n, "complete");
            for (Vertex i = 0; i < n; ++i) {
                for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            }
            return Graph(n, edges);
        }
        case Family::star: {
            need(1, "star");
            const int leaves = spec.sizes[0];
            positive(leaves, "star");
            for (Vertex i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
            return Graph(leaves + 1, edges);
        }
        case Family::complete_bipartite:
            need(2, "complete-bipartite");
            [[fallthrough]];
        case Family::complete_multipartite: {
            if (spec.sizes.empty()) throw InputError("complete-multipartite: no parts");
            std::vector<int> parts = spec.sizes;
            for (int p : parts) positive(p, "complete-multipartite");
            std::sort(parts.begin(), parts.end(), std::greater<>());
            const int n = std::accumulate(parts.begin(), parts.end(), 0);
            if (n > kMaxVertices) throw InputError("complete-multipartite: too many vertices");
            std::vector<int> part_of;
            for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
            for (Vertex i = 0; i < n; ++i) {
                for (Vertex j = i + 1; j < n; ++j) {
                    if (part_of[i] != part_of[j]) edges.emplace_back(i, j);
                }
            }
            return Graph(n, edges);
        }
        case Family::subdivided_star: {
            if (spec.sizes.empty()) throw InputError("subdivided-star: no legs");
            Vertex next = 1;
            for (int subdivisions : spec.sizes) {
                if (subdivisions < 0) throw InputError("subdivided-star: negative subdivision count");
                Vertex prev = 0;
                for (int k = 0; k <= subdivisions; ++k) {
                    edges.emplace_back(prev, next);
                    prev = next++;
                }
            }
            return Graph(next, edges);
        }
    }
    throw InputError("unknown family");
}

inline Graph path_graph(int n) { return generate({Family::path, {n}}); }
inline Graph cycle_graph(int n) { return generate({Family::cycle, {n}}); }
inline Graph complete_graph(int n) { return generate({Family::complete, {n}}); }
inline Graph star_graph(int leaves) { return generate({Family::star, {leaves}}); }
inline Graph complete_bipartite(int m, int n) { return generate({Family::complete_bipartite, {m, n}}); }
inline Graph complete_multipartite(std::vector<int> parts) {
    return generate({Family::complete_multipartite, std::move(parts)});
}
/// K_{1,3} with one edge subdivided three times (7 vertices).
inline Graph tree_t1() { return generate({Family::subdivided_star, {3, 0, 0}}); }

inline Graph petersen_graph() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, edges);
}

/// The 3-cube Q3: vertices are 3-bit strings, adjacent when they differ in one bit.
inline Graph cube_graph() {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < 8; ++v) {
        for (int b = 0; b < 3; ++b) {
            Vertex u = v ^ (1 << b);
            if (v < u) edges.emplace_back(v, u);
        }
    }
    return Graph(8, edges);
}

inline Graph icosahedron_graph() {
    // two poles (0, 11), two pentagons (1..5 upper, 6..10 lower) joined as an antiprism
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(0, 1 + i);
        edges.emplace_back(11, 6 + i);
        edges.emplace_back(1 + i, 1 + (i + 1) % 5);
        edges.emplace_back(6 + i, 6 + (i + 1) % 5);
        edges.emplace_back(1 + i, 6 + i);
        edges.emplace_back(1 + i, 6 + (i + 1) % 5);
    }
    return Graph(12, edges);
}

/// Prism C_k x K_2: outer cycle 0..k-1, inner cycle k..2k-1.
inline Graph prism_graph(int k) {
    if (k < 3) throw InputError("prism: k must be >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(i, (i + 1) % k);
        edges.emplace_back(k + i, k + (i + 1) % k);
        edges.emplace_back(i, k + i);
    }
    return Graph(2 * k, edges);
}

// ---------------------------------------------------------------------------
// Free trees by canonical level sequences (Wright, Richmond, Odlyzko, McKay)
// ---------------------------------------------------------------------------

inline constexpr int kMaxTreeOrder = 16;

namespace detail {

using Layout = std::vector<int>;

inline std::optional<Layout> next_rooted_tree(const Layout& pred, std::optional<int> from = std::nullopt) {
    int p = 0;
    if (from) {
        p = *from;
    } else {
        p = static_cast<int>(pred.size()) - 1;
        while (pred[p] == 1) --p;
    }
    if (p == 0) return std::nullopt;
    int q = p - 1;
    while (pred[q] != pred[p] - 1) --q;
    Layout out = pred;
    for (int i = p; i < static_cast<int>(out.size()); ++i) out[i] = out[i - p + q];
    return out;
}

/// left: the first subtree of the root, one level up; rest: the tree without it.
inline std::pair<Layout, Layout> split_tree(const Layout& layout) {
    std::size_t m = layout.size();
    bool one_found = false;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (layout[i] == 1) {
            if (one_found) {
                m = i;
                break;
            }
            one_found = true;
        }
    }
    Layout left;
    for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
    Layout rest{0};
    for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
    return {left, rest};
}

/// Whether the level sequence is the canonical (centered) representative of its free tree.
inline bool is_free_tree_layout(const Layout& layout) {
    auto [left, rest] = split_tree(layout);
    int left_height = *std::max_element(left.begin(), left.end());
    int rest_height = *std::max_element(rest.begin(), rest.end());
    if (rest_height < left_height) return false;
    if (rest_height == left_height) {
        if (left.size() > rest.size()) return false;
        if (left.size() == rest.size() && left > rest) return false;
    }
    return true;
}

/// Jump from an invalid layout toward the next candidate.
inline std::optional<Layout> skip_invalid(const Layout& candidate) {
    auto [left, rest] = split_tree(candidate);
    const int p = static_cast<int>(left.size());
    auto next = next_rooted_tree(candidate, p);
    if (next && candidate[p] > 2) {
        auto [new_left, new_rest] = split_tree(*next);
        int h = *std::max_element(new_left.begin(), new_left.end());
        for (int k = 0; k <= h; ++k) (*next)[next->size() - (h + 1) + k] = k + 1;
    }
    return next;
}

inline Graph layout_to_graph(const Layout& layout) {
    std::vector<Edge> edges;
    std::vector<int> stack;
    for (int i = 0; i < static_cast<int>(layout.size()); ++i) {
        if (!stack.empty()) {
            while (layout[stack.back()] >= layout[i]) stack.pop_back();
            edges.emplace_back(stack.back(), i);
        }
        stack.push_back(i);
    }
    return Graph(static_cast<int>(layout.size()), edges);
}

}  // namespace detail

/// Calls visit once per isomorphism class of free trees on n vertices (1 <= n <= 16).
inline void for_each_free_tree(int n, const std::function<void(const Graph&)>& visit) {
    if (n < 1 || n > kMaxTreeOrder) {
        throw InputError("tree order must be in [1, " + std::to_string(kMaxTreeOrder) + "]");
    }
    if (n == 1) {
        visit(Graph(1));
        return;
    }
    detail::Layout start;
    for (int i = 0; i <= n / 2; ++i) start.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) start.push_back(i);
    std::optional<detail::Layout> layout = start;
    while (layout) {
        while (layout && !detail::is_free_tree_layout(*layout)) layout = detail::skip_invalid(*layout);
        if (!layout) break;
        visit(detail::layout_to_graph(*layout));
        layout = detail::next_rooted_tree(*layout);
    }
}

inline std::vector<Graph> free_trees(int n) {
    std::vector<Graph> out;
    for_each_free_tree(n, [&](const Graph& t) { out.push_back(t); });
    return out;
}

// ---------------------------------------------------------------------------
// Small graphs with structural filters
// ---------------------------------------------------------------------------

struct GraphFilter {
    int min_degree = 0;
    int min_girth = 0;  ///< 0 or 3 disable; forests always pass
    bool require_planar = false;
    bool require_connected = false;

    bool accepts(const Graph& g) const {
        if (g.order() > 0 && g.min_degree() < min_degree) return false;
        if (min_girth > 3) {
            auto gi = girth(g);
            if (gi && *gi < min_girth) return false;
        }
        if (require_connected && !is_connected(g)) return false;
        if (require_planar && !is_planar(g)) return false;
        return true;
    }
};

inline constexpr int kMaxEnumerationOrder = 9;

namespace detail {

class LabeledEnumerator {
 public:
    LabeledEnumerator(int n, const GraphFilter& f, const std::function<void(const Graph&)>& visit)
        : n_(n), f_(f), visit_(visit), rows_(static_cast<std::size_t>(n), 0) {
        for (int j = 1; j < n; ++j) {
            for (int i = 0; i < j; ++i) slots_.emplace_back(i, j);
        }
    }

    void run() { step(0, 0); }

 private:
    bool closes_short_cycle(Vertex a, Vertex b) const {
        if (f_.min_girth <= 3) return false;
        // a cycle through the new edge has length dist(a,b) + 1
        std::uint64_t seen = std::uint64_t{1} << a;
        std::uint64_t frontier = seen;
        for (int d = 1; d + 1 < f_.min_girth; ++d) {
            std::uint64_t next = 0;
            for (std::uint64_t r = frontier; r != 0; r &= r - 1) next |= rows_[std::countr_zero(r)];
            frontier = next & ~seen;
            if ((frontier >> b) & 1U) return true;
            seen |= frontier;
        }
        return false;
    }

    int edge_budget() const {
        if (!f_.require_planar || n_ < 3) return n_ * (n_ - 1) / 2;
        return f_.min_girth >= 4 ? 2 * n_ - 4 : 3 * n_ - 6;
    }

    /// v can still reach min_degree with `remaining` undecided slots.
    bool degree_feasible(Vertex v, int remaining) const {
        return std::popcount(rows_[v]) + remaining >= f_.min_degree;
    }

    void step(std::size_t k, int m) {
        if (k == slots_.size()) {
            Graph g = Graph::from_adjacency(rows_);
            if (g.min_degree() < f_.min_degree) return;  // only reachable when there are no slots
            if (f_.require_connected && !is_connected(g)) return;
            if (f_.require_planar && !is_planar(g)) return;
            visit_(g);
            return;
        }
        const Edge s = slots_[k];
        const bool column_end = s.u + 1 == s.v;
        for (int take = 0; take < 2; ++take) {
            if (take == 1) {
                if (m + 1 > edge_budget() || closes_short_cycle(s.u, s.v)) continue;
                rows_[s.u] |= std::uint64_t{1} << s.v;
                rows_[s.v] |= std::uint64_t{1} << s.u;
            }
            // after slot (u, v): u keeps slots (u, j) for j > v; at a column end v keeps (v, j) for j > v
            bool ok = degree_feasible(s.u, n_ - 1 - s.v);
            if (ok && column_end) {
                ok = degree_feasible(s.v, n_ - 1 - s.v);
                if (ok && f_.require_planar && m + take >= 9) {
                    ok = is_planar(Graph::from_adjacency(rows_));
                }
            }
            if (ok) step(k + 1, m + take);
            if (take == 1) {
                rows_[s.u] &= ~(std::uint64_t{1} << s.v);
                rows_[s.v] &= ~(std::uint64_t{1} << s.u);
            }
        }
    }

    int n_;
    const GraphFilter& f_;
    const std::function<void(const Graph&)>& visit_;
    std::vector<std::uint64_t> rows_;
    std::vector<Edge> slots_;
};

}  // namespace detail

/// Every labeled graph on n vertices (n <= 9) passing the filter, at least once. Isomorphic
/// copies are not merged. Larger corpora should come from files.
inline void for_each_small_graph(int n, const GraphFilter& filter, const std::function<void(const Graph&)>& visit) {
    if (n < 1 || n > kMaxEnumerationOrder) {
        throw InputError("internal enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder) +
                         "; read larger corpora from graph6 or planar_code files");
    }
    detail::LabeledEnumerator(n, filter, visit).run();
}

/// One representative per isomorphism class of graphs on n vertices passing the filter, in
/// canonical-code order. Built by vertex augmentation with canonical-code deduplication;
/// planarity and girth are inherited by induced subgraphs, so they prune intermediate orders.
inline std::vector<Graph> graphs_up_to_isomorphism(int n, const GraphFilter& filter = {}) {
    if (n < 1 || n > kMaxEnumerationOrder) {
        throw InputError("isomorphism-reduced enumeration supports 1 <= n <= " +
                         std::to_string(kMaxEnumerationOrder));
    }
    GraphFilter hereditary;
    hereditary.min_girth = filter.min_girth;
    hereditary.require_planar = filter.require_planar;

    std::vector<Graph> level{Graph(1)};
    for (int order = 2; order <= n; ++order) {
        std::set<CanonicalCode> seen;
        for (const Graph& base : level) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (order - 1)); ++mask) {
                std::vector<std::uint64_t> rows(base.adjacency().begin(), base.adjacency().end());
                rows.push_back(mask);
                Graph g = Graph::from_adjacency(rows);
                if (!hereditary.accepts(g)) continue;
                seen.insert(canonical_code(g));
            }
        }
        level.clear();
        for (const auto& code : seen) level.push_back(canonical_graph(code));
    }
    std::vector<Graph> out;
    for (auto& g : level) {
        if (filter.accepts(g)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace totbond
