#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace totbond {

using Vertex = int;

/// Graphs are stored as one 64-bit adjacency word per vertex.
inline constexpr int kMaxVertices = 64;

/// A set of vertex ids in [0, 64), stored as a bit mask.
class VertexSet {
 public:
    class iterator {
     public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = Vertex;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        Vertex operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

     private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }

    /// {0, ..., n-1}
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
    /// Smallest member; undefined on the empty set.
    constexpr Vertex front() const { return std::countr_zero(bits_); }

    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator&=(VertexSet o) {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator-=(VertexSet o) {
        bits_ &= ~o.bits_;
        return *this;
    }
    constexpr auto operator<=>(const VertexSet&) const = default;

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
    std::uint64_t bits_ = 0;
};

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    constexpr Edge() = default;
    constexpr Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    constexpr auto operator<=>(const Edge&) const = default;
};

/// Sorted, duplicate-free set of edges.
class EdgeSet {
 public:
    EdgeSet() = default;
    EdgeSet(std::initializer_list<Edge> es) : edges_(es) { normalize(); }
    explicit EdgeSet(std::vector<Edge> es) : edges_(std::move(es)) { normalize(); }

    void insert(Edge e) {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) edges_.insert(it, e);
    }
    bool contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool operator==(const EdgeSet&) const = default;

 private:
    void normalize() {
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    std::vector<Edge> edges_;
};

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n) : n_(check_order(n)), adj_(static_cast<std::size_t>(n)) {}

    Graph(int n, std::span<const Edge> edges) : Graph(n) {
        for (const Edge& e : edges) {
            if (e.u < 0 || e.v >= n) {
                throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                 ") out of range for n=" + std::to_string(n));
            }
            if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
            adj_[e.u] |= std::uint64_t{1} << e.v;
            adj_[e.v] |= std::uint64_t{1} << e.u;
        }
        rebuild_edges();
    }
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    /// Builds from raw adjacency words; the relation is symmetrized and the diagonal cleared.
    static Graph from_adjacency(std::span<const std::uint64_t> rows) {
        Graph g(static_cast<int>(rows.size()));
        for (int v = 0; v < g.n_; ++v) {
            std::uint64_t row = rows[v] & ~(std::uint64_t{1} << v) & VertexSet::range(g.n_).bits();
            g.adj_[v] |= row;
            for (Vertex u : VertexSet(row)) g.adj_[u] |= std::uint64_t{1} << v;
        }
        g.rebuild_edges();
        return g;
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const std::uint64_t> adjacency() const { return adj_; }
    VertexSet vertices() const { return VertexSet::range(n_); }

    bool valid_vertex(Vertex v) const { return v >= 0 && v < n_; }
    void require_vertex(Vertex v) const {
        if (!valid_vertex(v)) {
            throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
        }
    }

    VertexSet neighbors(Vertex v) const {
        require_vertex(v);
        return VertexSet(adj_[v]);
    }
    int degree(Vertex v) const { return neighbors(v).size(); }
    bool adjacent(Vertex u, Vertex v) const {
        return valid_vertex(u) && valid_vertex(v) && ((adj_[u] >> v) & 1U);
    }
    bool has_edge(Edge e) const { return adjacent(e.u, e.v); }

    int max_degree() const {
        int d = 0;
        for (auto row : adj_) d = std::max(d, std::popcount(row));
        return d;
    }
    int min_degree() const {
        if (n_ == 0) return 0;
        int d = n_;
        for (auto row : adj_) d = std::min(d, std::popcount(row));
        return d;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
    static int check_order(int n) {
        if (n < 0 || n > kMaxVertices) {
            throw InputError("graph order " + std::to_string(n) + " outside [0, " +
                             std::to_string(kMaxVertices) + "]");
        }
        return n;
    }

    void rebuild_edges() {
        edges_.clear();
        for (Vertex u = 0; u < n_; ++u) {
            for (Vertex v : VertexSet(adj_[u] & ~((std::uint64_t{2} << u) - 1))) edges_.emplace_back(u, v);
        }
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Structural queries
// ---------------------------------------------------------------------------

inline int degree(const Graph& g, Vertex v) { return g.degree(v); }

/// Shortest-path length; nullopt when v is unreachable from u.
inline std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
    g.require_vertex(u);
    g.require_vertex(v);
    VertexSet seen = VertexSet::single(u);
    VertexSet frontier = seen;
    for (int d = 0; !frontier.empty(); ++d) {
        if (frontier.contains(v)) return d;
        VertexSet next;
        for (Vertex w : frontier) next |= g.neighbors(w);
        frontier = next - seen;
        seen |= frontier;
    }
    return std::nullopt;
}

/// Per-vertex BFS distances from a source; -1 marks unreachable vertices.
inline std::vector<int> distances_from(const Graph& g, Vertex s) {
    g.require_vertex(s);
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    VertexSet seen = VertexSet::single(s);
    VertexSet frontier = seen;
    for (int d = 0; !frontier.empty(); ++d) {
        VertexSet next;
        for (Vertex w : frontier) {
            dist[w] = d;
            next |= g.neighbors(w);
        }
        frontier = next - seen;
        seen |= frontier;
    }
    return dist;
}

inline VertexSet component_of(const Graph& g, Vertex s) {
    VertexSet seen = VertexSet::single(s);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex w : frontier) next |= g.neighbors(w);
        frontier = next - seen;
        seen |= frontier;
    }
    return seen;
}

inline bool is_connected(const Graph& g) {
    return g.order() == 0 || component_of(g, 0) == g.vertices();
}

inline bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

/// Length of a shortest cycle; nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
    std::optional<int> best;
    const int n = g.order();
    for (Vertex s = 0; s < n; ++s) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::vector<int> parent(static_cast<std::size_t>(n), -1);
        std::deque<Vertex> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : g.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (parent[x] != y) {
                    int len = dist[x] + dist[y] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

/// Number of edges of g with both ends in s.
inline int induced_edge_count(const Graph& g, VertexSet s) {
    int twice = 0;
    for (Vertex v : s) twice += (g.neighbors(v) & s).size();
    return twice / 2;
}

namespace detail {

inline void induced_cycles_from(const Graph& g, int k, std::vector<Vertex>& path, VertexSet on_path,
                                std::vector<std::vector<Vertex>>& out, bool first_only) {
    const Vertex start = path.front();
    const Vertex last = path.back();
    if (static_cast<int>(path.size()) == k) {
        // orientation canonicalization: second vertex smaller than the last one
        if (g.adjacent(last, start) && path[1] < last && induced_edge_count(g, on_path) == k) {
            out.push_back(path);
        }
        return;
    }
    for (Vertex next : g.neighbors(last)) {
        if (next <= start || on_path.contains(next)) continue;
        // chords to earlier path vertices (other than last, and start on the closing step) are forbidden
        VertexSet earlier = on_path - VertexSet::single(last);
        VertexSet touched = g.neighbors(next) & earlier;
        if (static_cast<int>(path.size()) + 1 < k) {
            if (!touched.empty()) continue;
        } else if (touched != VertexSet::single(start)) {
            continue;
        }
        path.push_back(next);
        induced_cycles_from(g, k, path, on_path | VertexSet::single(next), out, first_only);
        path.pop_back();
        if (first_only && !out.empty()) return;
    }
}

inline std::vector<std::vector<Vertex>> induced_cycles(const Graph& g, int k, bool first_only) {
    if (k < 3 || k > 5) throw InputError("induced cycle length must be 3, 4 or 5");
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.order(); ++s) {
        std::vector<Vertex> path{s};
        induced_cycles_from(g, k, path, VertexSet::single(s), out, first_only);
        if (first_only && !out.empty()) break;
    }
    return out;
}

}  // namespace detail

/// Vertices of an induced k-cycle (k in {3,4,5}) in cyclic order, starting at its smallest vertex.
inline std::optional<std::vector<Vertex>> find_induced_cycle(const Graph& g, int k) {
    auto found = detail::induced_cycles(g, k, true);
    if (found.empty()) return std::nullopt;
    return found.front();
}

/// Every induced k-cycle once, each starting at its smallest vertex with the smaller neighbor second.
inline std::vector<std::vector<Vertex>> all_induced_cycles(const Graph& g, int k) {
    return detail::induced_cycles(g, k, false);
}

/// (min endpoint degree, max endpoint degree) of an edge.
inline std::pair<int, int> classify_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e)) {
        throw InputError("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
    }
    int a = g.degree(e.u);
    int b = g.degree(e.v);
    return {std::min(a, b), std::max(a, b)};
}

inline VertexSet isolated_vertices(const Graph& g) {
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.adjacency()[v] == 0) out.insert(v);
    }
    return out;
}

inline bool has_isolated_vertex(const Graph& g) { return !isolated_vertices(g).empty(); }

struct EdgeDeletion {
    Graph graph;
    bool has_isolated = false;
};

/// G - B. Every edge of B must be an edge of G.
inline EdgeDeletion delete_edges(const Graph& g, const EdgeSet& b) {
    std::vector<std::uint64_t> rows(g.adjacency().begin(), g.adjacency().end());
    for (const Edge& e : b) {
        if (!g.has_edge(e)) {
            throw InputError("cannot delete (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             "): not an edge");
        }
        rows[e.u] &= ~(std::uint64_t{1} << e.v);
        rows[e.v] &= ~(std::uint64_t{1} << e.u);
    }
    EdgeDeletion out{Graph::from_adjacency(rows), false};
    out.has_isolated = has_isolated_vertex(out.graph);
    return out;
}

/// Degree sequence, the S_k classes, and support vertices.
struct DegreeProfile {
    std::vector<int> degrees;
    std::vector<VertexSet> by_degree;  ///< by_degree[k] = S_k
    VertexSet support;

    VertexSet with_degree(int k) const {
        return k >= 0 && k < static_cast<int>(by_degree.size()) ? by_degree[k] : VertexSet{};
    }
};

inline DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.by_degree.resize(static_cast<std::size_t>(g.max_degree()) + 1);
    for (Vertex v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        p.degrees.push_back(d);
        p.by_degree[d].insert(v);
    }
    VertexSet pendant = p.with_degree(1);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.neighbors(v).intersects(pendant)) p.support.insert(v);
    }
    return p;
}

inline bool is_support_vertex(const Graph& g, Vertex v) {
    for (Vertex u : g.neighbors(v)) {
        if (g.degree(u) == 1) return true;
    }
    return false;
}

inline std::string to_string(Edge e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

}  // namespace totbond
