// Writes the planar corpora under data/ as planar_code files:
//   planar_girth4.pc   connected planar, min degree >= 3, girth >= 4
//   girth4_heavy.pc    the girth-4 graphs with no edge of degree sum <= 7
//   planar_mindeg3.pc  connected planar, min degree >= 3 (triangles allowed)
// Graphs come from random triangulations (vertex insertion + edge flips), edge deletions, and
// vertex-face incidence (radial) graphs of those. Seeds are fixed, so reruns are identical.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "totbond/embedding.hpp"
#include "totbond/generators.hpp"
#include "totbond/graph.hpp"
#include "totbond/io.hpp"
#include "totbond/planarity.hpp"

using namespace totbond;

namespace {

using Rng = std::mt19937_64;
using Face = std::array<int, 3>;

/// Triangulated sphere as counter-clockwise faces.
struct Triangulation {
    int n = 4;
    std::vector<Face> faces{{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};

    std::vector<std::set<int>> adjacency() const {
        std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
        for (const auto& f : faces) {
            for (int i = 0; i < 3; ++i) {
                adj[static_cast<std::size_t>(f[i])].insert(f[(i + 1) % 3]);
                adj[static_cast<std::size_t>(f[(i + 1) % 3])].insert(f[i]);
            }
        }
        return adj;
    }

    void insert(Rng& rng) {
        std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
        std::size_t i = pick(rng);
        auto [a, b, c] = faces[i];
        const int x = n++;
        faces[i] = {a, b, x};
        faces.push_back({b, c, x});
        faces.push_back({c, a, x});
    }

    /// Flips the edge a-b shared by faces i and j; returns false when the flip is illegal.
    bool try_flip(std::size_t i, int k, const std::vector<std::set<int>>& adj, const std::function<bool(int, int, int, int)>& accept) {
        const int a = faces[i][k];
        const int b = faces[i][(k + 1) % 3];
        const int c = faces[i][(k + 2) % 3];
        for (std::size_t j = 0; j < faces.size(); ++j) {
            for (int t = 0; t < 3; ++t) {
                if (faces[j][t] != b || faces[j][(t + 1) % 3] != a) continue;
                const int d = faces[j][(t + 2) % 3];
                if (c == d || adj[static_cast<std::size_t>(c)].count(d)) return false;
                if (adj[static_cast<std::size_t>(a)].size() <= 3 || adj[static_cast<std::size_t>(b)].size() <= 3) return false;
                if (!accept(a, b, c, d)) return false;
                faces[i] = {b, c, d};
                faces[j] = {c, a, d};
                return true;
            }
        }
        return false;
    }

    void random_flips(Rng& rng, int count) {
        std::uniform_int_distribution<int> corner(0, 2);
        for (int s = 0; s < count; ++s) {
            std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
            auto adj = adjacency();
            try_flip(pick(rng), corner(rng), adj, [](int, int, int, int) { return true; });
        }
    }

    /// Hill-climbs towards minimum degree `target`; true on success.
    bool raise_min_degree(Rng& rng, int target, int steps) {
        std::uniform_int_distribution<int> corner(0, 2);
        for (int s = 0; s < steps; ++s) {
            auto adj = adjacency();
            auto deg = [&](int v) { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); };
            bool done = true;
            for (int v = 0; v < n; ++v) done = done && deg(v) >= target;
            if (done) return true;
            auto deficit = [&](int v, int delta) { return std::max(0, target - (deg(v) + delta)); };
            std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
            try_flip(pick(rng), corner(rng), adj, [&](int a, int b, int c, int d) {
                int before = deficit(a, 0) + deficit(b, 0) + deficit(c, 0) + deficit(d, 0);
                int after = deficit(a, -1) + deficit(b, -1) + deficit(c, 1) + deficit(d, 1);
                return after <= before;
            });
        }
        return false;
    }

    Graph graph() const {
        auto adj = adjacency();
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u) {
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (u < v) edges.emplace_back(u, v);
            }
        }
        return Graph(n, edges);
    }
};

Triangulation random_triangulation(Rng& rng, int n) {
    Triangulation t;
    while (t.n < n) t.insert(rng);
    t.random_flips(rng, 8 * n);
    return t;
}

std::optional<Embedding> embed(const Graph& g) {
    auto pr = planarity(g);
    if (!pr.planar) return std::nullopt;
    return pr.embedding;
}

/// Vertex-face incidence graph of a plane embedding; nullopt if a face walk repeats a vertex
/// (the result would have a multi-edge) or the order exceeds 64.
std::optional<Graph> radial(const Graph& g, const Embedding& emb) {
    const int n = g.order();
    const int f = static_cast<int>(emb.faces.size());
    if (n + f > 64) return std::nullopt;
    std::vector<Edge> edges;
    for (int i = 0; i < f; ++i) {
        std::set<Vertex> seen;
        for (Vertex v : emb.faces[static_cast<std::size_t>(i)]) {
            if (!seen.insert(v).second) return std::nullopt;
            edges.emplace_back(v, n + i);
        }
    }
    return Graph(n + f, edges);
}

/// Deletes up to `count` random edges whose endpoints both keep degree >= floor and whose
/// removal keeps the graph connected.
Graph thin(const Graph& g, Rng& rng, int count, int floor, const std::function<bool(const Graph&)>& keep = {}) {
    Graph cur = g;
    for (int s = 0; s < count; ++s) {
        auto edges = cur.edges();
        std::shuffle(edges.begin(), edges.end(), rng);
        bool done = false;
        for (const Edge& e : edges) {
            if (cur.degree(e.u) <= floor || cur.degree(e.v) <= floor) continue;
            EdgeSet one;
            one.insert(e);
            Graph next = delete_edges(cur, one).graph;
            if (!is_connected(next)) continue;
            if (keep && !keep(next)) continue;
            cur = next;
            done = true;
            break;
        }
        if (!done) break;
    }
    return cur;
}

/// Colour-refinement fingerprint used to drop repeats; collisions only shrink the corpus.
std::vector<std::uint64_t> fingerprint(const Graph& g) {
    const int n = g.order();
    std::vector<std::uint64_t> h(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) h[static_cast<std::size_t>(v)] = static_cast<std::uint64_t>(g.degree(v));
    for (int round = 0; round < 5; ++round) {
        std::vector<std::uint64_t> next(h.size());
        for (Vertex v = 0; v < n; ++v) {
            std::vector<std::uint64_t> nb;
            for (Vertex u : g.neighbors(v)) nb.push_back(h[static_cast<std::size_t>(u)]);
            std::sort(nb.begin(), nb.end());
            std::uint64_t x = h[static_cast<std::size_t>(v)] * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL;
            for (auto y : nb) x = (x ^ (y + 0x94D049BB133111EBULL + (x << 6) + (x >> 2))) * 0xBF58476D1CE4E5B9ULL;
            next[static_cast<std::size_t>(v)] = x;
        }
        h = std::move(next);
    }
    std::sort(h.begin(), h.end());
    h.push_back(static_cast<std::uint64_t>(g.size()));
    return h;
}

class Collector {
public:
    Collector(std::string name, std::function<bool(const Graph&)> accepts) : name_(std::move(name)), accepts_(std::move(accepts)) {}

    void offer(const Graph& g) {
        if (g.order() > 64 || !accepts_(g)) return;
        if (!seen_.insert(fingerprint(g)).second) return;
        auto emb = embed(g);
        if (!emb) return;
        graphs_.push_back({g, *emb});
    }

    std::size_t size() const { return graphs_.size(); }

    void write(const std::filesystem::path& dir) const {
        std::ofstream out(dir / name_, std::ios::binary);
        write_planar_code_header(out);
        for (const auto& [g, emb] : graphs_) write_planar_code(out, g, emb);
        std::cout << name_ << ": " << graphs_.size() << " graphs\n";
    }

private:
    std::string name_;
    std::function<bool(const Graph&)> accepts_;
    std::set<std::vector<std::uint64_t>> seen_;
    std::vector<std::pair<Graph, Embedding>> graphs_;
};

bool girth_at_least(const Graph& g, int k) { return girth(g).value_or(1000) >= k; }

bool no_light_edge(const Graph& g) {
    for (const Edge& e : g.edges()) {
        if (g.degree(e.u) + g.degree(e.v) <= 7) return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generate the planar corpora"};
    std::string out_dir = "data";
    std::uint64_t seed = 20240611;
    int girth4_target = 600;
    app.add_option("-o,--out", out_dir, "output directory");
    app.add_option("--seed", seed, "base seed");
    app.add_option("--girth4-count", girth4_target, "graphs wanted in planar_girth4.pc");
    CLI11_PARSE(app, argc, argv);
    std::filesystem::create_directories(out_dir);

    auto base = [](const Graph& g) { return is_connected(g) && g.min_degree() >= 3 && is_planar(g); };
    Collector girth4("planar_girth4.pc", [&](const Graph& g) { return base(g) && girth_at_least(g, 4); });
    Collector heavy("girth4_heavy.pc", [&](const Graph& g) { return base(g) && girth_at_least(g, 4) && no_light_edge(g); });
    Collector mindeg3("planar_mindeg3.pc", base);

    Rng rng(seed);
    auto offer_radials = [&](const Graph& g) {
        auto emb = embed(g);
        if (!emb) return;
        if (auto r = radial(g, *emb)) {
            girth4.offer(*r);
            heavy.offer(*r);
            girth4.offer(thin(*r, rng, 1 + static_cast<int>(rng() % 6), 3));
        }
    };

    // fixed named members
    for (const Graph& g : {cube_graph(), prism_graph(6), prism_graph(8), prism_graph(10)}) {
        girth4.offer(g);
        mindeg3.offer(g);
    }
    for (const Graph& g : {complete_graph(4), icosahedron_graph(), complete_multipartite({2, 2, 2}), prism_graph(3), prism_graph(5)}) {
        mindeg3.offer(g);
        offer_radials(g);
    }

    // minimum degree 5 triangulations (12 <= n <= 22) give the girth-4 set with no light edge
    for (int attempt = 0; attempt < 600 && heavy.size() < 120; ++attempt) {
        const int n = 12 + static_cast<int>(rng() % 11);
        auto t = random_triangulation(rng, n);
        if (!t.raise_min_degree(rng, 5, 4000)) continue;
        Graph g = t.graph();
        mindeg3.offer(g);
        offer_radials(g);
        // removing an edge between two 6+-vertices keeps min degree 5 and merges two faces
        Graph thinned = thin(g, rng, 1 + static_cast<int>(rng() % 3), 5);
        if (thinned.size() < g.size()) {
            mindeg3.offer(thinned);
            offer_radials(thinned);
        }
    }

    // general triangulations, their thinnings and radial graphs
    for (int attempt = 0; attempt < 20000 && girth4.size() < static_cast<std::size_t>(girth4_target); ++attempt) {
        const int n = 5 + static_cast<int>(rng() % 18);
        auto t = random_triangulation(rng, n);
        Graph g = t.graph();
        if (n <= 30) mindeg3.offer(g);
        offer_radials(g);
        Graph thinned = thin(g, rng, 1 + static_cast<int>(rng() % std::max(1, n / 2)), 3);
        if (mindeg3.size() < 400) mindeg3.offer(thinned);
        offer_radials(thinned);
    }

    girth4.write(out_dir);
    heavy.write(out_dir);
    mindeg3.write(out_dir);
    return 0;
}
