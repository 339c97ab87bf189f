#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "graph.hpp"

namespace totbond {

/// Relabeling-invariant code of a graph: equal codes iff isomorphic graphs.
struct CanonicalCode {
    int n = 0;
    /// columns[j] holds the adjacency of canonical vertex j to canonical vertices 0..j-1.
    std::vector<std::uint64_t> columns;

    auto operator<=>(const CanonicalCode&) const = default;
};

namespace detail {

/// Colour refinement (1-dimensional Weisfeiler-Leman) starting from degrees.
inline std::vector<int> refined_colors(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
    int classes = 0;
    while (true) {
        std::map<std::pair<int, std::vector<int>>, int> signature;
        std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            std::vector<int> around;
            for (Vertex u : g.neighbors(v)) around.push_back(color[u]);
            std::sort(around.begin(), around.end());
            sig[v] = {color[v], std::move(around)};
            signature.emplace(sig[v], 0);
        }
        int next = 0;
        for (auto& [key, id] : signature) id = next++;
        for (Vertex v = 0; v < n; ++v) color[v] = signature[sig[v]];
        if (next == classes) break;
        classes = next;
    }
    return color;
}

class Canonizer {
 public:
    explicit Canonizer(const Graph& g) : g_(g) {
        auto color = refined_colors(g);
        std::vector<Vertex> vs(static_cast<std::size_t>(g.order()));
        for (Vertex v = 0; v < g.order(); ++v) vs[v] = v;
        std::stable_sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) { return color[a] < color[b]; });
        for (Vertex v : vs) {
            if (cells_.empty() || color[cells_.back().front()] != color[v]) cells_.emplace_back();
            cells_.back().push_back(v);
        }
        for (const auto& cell : cells_) {
            for (std::size_t i = 0; i < cell.size(); ++i) cell_of_position_.push_back(&cell - cells_.data());
        }
    }

    CanonicalCode run() {
        const int n = g_.order();
        best_.assign(static_cast<std::size_t>(n), 0);
        current_.assign(static_cast<std::size_t>(n), 0);
        perm_.assign(static_cast<std::size_t>(n), -1);
        have_best_ = false;
        extend(0);
        return CanonicalCode{n, best_};
    }

 private:
    // Places a graph vertex at canonical position p; prunes prefixes already larger than the best code.
    void extend(int p) {
        const int n = g_.order();
        if (p == n) {
            if (!have_best_ || current_ < best_) {
                best_ = current_;
                have_best_ = true;
            }
            return;
        }
        const auto& cell = cells_[cell_of_position_[p]];
        for (Vertex x : cell) {
            if (used_.contains(x)) continue;
            std::uint64_t col = 0;
            for (int i = 0; i < p; ++i) {
                if (g_.adjacent(x, perm_[i])) col |= std::uint64_t{1} << i;
            }
            current_[p] = col;
            if (have_best_ && prefix_greater(p)) continue;
            perm_[p] = x;
            used_.insert(x);
            extend(p + 1);
            used_.erase(x);
        }
    }

    bool prefix_greater(int p) const {
        for (int i = 0; i <= p; ++i) {
            if (current_[i] != best_[i]) return current_[i] > best_[i];
        }
        return false;
    }

    const Graph& g_;
    std::vector<std::vector<Vertex>> cells_;
    std::vector<std::size_t> cell_of_position_;
    std::vector<std::uint64_t> best_;
    std::vector<std::uint64_t> current_;
    std::vector<Vertex> perm_;
    VertexSet used_;
    bool have_best_ = false;
};

}  // namespace detail

/// Canonical code by colour refinement followed by exhaustive search over orderings inside
/// colour classes with prefix pruning. Exponential on highly symmetric graphs; intended for
/// desk-scale orders (n <= 12 or so).
inline CanonicalCode canonical_code(const Graph& g) { return detail::Canonizer(g).run(); }

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> da;
    std::vector<int> db;
    for (Vertex v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_code(a) == canonical_code(b);
}

/// The canonical representative as a graph (canonical position i becomes vertex i).
inline Graph canonical_graph(const CanonicalCode& code) {
    std::vector<Edge> edges;
    for (int j = 0; j < code.n; ++j) {
        for (Vertex i : VertexSet(code.columns[j])) edges.emplace_back(i, j);
    }
    return Graph(code.n, edges);
}

}  // namespace totbond
