#include <gtest/gtest.h>

#include <random>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "totbond/generators.hpp"
#include "totbond/io.hpp"
#include "totbond/isomorphism.hpp"
#include "totbond/planarity.hpp"

using namespace totbond;

TEST(Families, Path) {
    Graph p4 = generate({Family::path, {4}});
    EXPECT_EQ(p4.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
    EXPECT_EQ(generate({Family::path, {1}}).size(), 0);
}

TEST(Families, DefiningPredicates) {
    for (int n = 3; n <= 10; ++n) {
        Graph c = cycle_graph(n);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) EXPECT_EQ(c.adjacent(u, v), v == u + 1 || (u == 0 && v == n - 1));
        }
        Graph k = complete_graph(n);
        EXPECT_EQ(k.size(), n * (n - 1) / 2);
        Graph s = star_graph(n);
        for (int v = 1; v <= n; ++v) EXPECT_TRUE(s.adjacent(0, v));
        EXPECT_EQ(s.size(), n);
    }
    Graph k23 = complete_bipartite(2, 3);
    EXPECT_EQ(k23.size(), 6);
    // parts laid out contiguously, larger first
    for (int a = 0; a < 3; ++a) {
        for (int b = 3; b < 5; ++b) EXPECT_TRUE(k23.adjacent(a, b));
    }
    Graph k322 = complete_multipartite({2, 3, 2});
    std::vector<int> part = {0, 0, 0, 1, 1, 2, 2};
    for (int u = 0; u < 7; ++u) {
        for (int v = u + 1; v < 7; ++v) EXPECT_EQ(k322.adjacent(u, v), part[u] != part[v]);
    }
}

TEST(Families, TreeT1) {
    Graph t1 = tree_t1();
    EXPECT_EQ(t1.order(), 7);
    EXPECT_TRUE(is_tree(t1));
    EXPECT_EQ(t1.max_degree(), 3);
    auto prof = degree_profile(t1);
    EXPECT_EQ(prof.with_degree(1).size(), 3);
    EXPECT_EQ(prof.with_degree(2).size(), 3);
    // the long leg has length 4 from the center
    Vertex center = prof.with_degree(3).front();
    int far = 0;
    for (Vertex v = 0; v < 7; ++v) far = std::max(far, *distance(t1, center, v));
    EXPECT_EQ(far, 4);
    Graph twice = generate({Family::subdivided_star, {2, 2, 2}});
    EXPECT_EQ(twice.order(), 10);
}

TEST(Families, InvalidSizes) {
    EXPECT_THROW(generate({Family::path, {0}}), InputError);
    EXPECT_THROW(generate({Family::cycle, {2}}), InputError);
    EXPECT_THROW(generate({Family::complete_bipartite, {2}}), InputError);
    EXPECT_THROW(generate({Family::complete_multipartite, {2, 0}}), InputError);
}

TEST(Trees, KnownCounts) {
    const std::vector<std::size_t> counts = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(free_trees(n).size(), counts[n - 1]) << n;
    EXPECT_THROW(free_trees(0), InputError);
    EXPECT_THROW(free_trees(17), InputError);
}

TEST(Trees, CountsMatchPrueferOracle) {
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(free_trees(n).size(), oracle::count_trees_pruefer(n)) << n;
}

TEST(Trees, ClassesMatchLeafGrowthOracle) {
    for (int n = 1; n <= 12; ++n) {
        auto expected = oracle::trees_by_leaf_growth(n);
        std::set<std::string> seen;
        for (const Graph& t : free_trees(n)) {
            ASSERT_TRUE(is_tree(t));
            ASSERT_EQ(t.order(), n);
            EXPECT_TRUE(seen.insert(oracle::tree_code(t)).second) << "duplicate class at n=" << n;
        }
        std::set<std::string> want;
        for (const auto& [code, t] : expected) want.insert(code);
        EXPECT_EQ(seen, want) << n;
    }
}

TEST(Trees, SmallCases) {
    auto four = free_trees(4);
    ASSERT_EQ(four.size(), 2U);
    bool has_path = false;
    bool has_star = false;
    for (const Graph& t : four) {
        has_path = has_path || is_isomorphic(t, path_graph(4));
        has_star = has_star || is_isomorphic(t, star_graph(3));
    }
    EXPECT_TRUE(has_path && has_star);
    EXPECT_EQ(free_trees(1).front().order(), 1);
}

TEST(SmallGraphs, Examples) {
    GraphFilter cubic;
    cubic.min_degree = 3;
    cubic.require_connected = true;
    auto four = graphs_up_to_isomorphism(4, cubic);
    ASSERT_EQ(four.size(), 1U);
    EXPECT_TRUE(is_isomorphic(four[0], complete_graph(4)));

    GraphFilter tri_free;
    tri_free.min_degree = 3;
    tri_free.min_girth = 4;
    int count = 0;
    for_each_small_graph(5, tri_free, [&](const Graph&) { ++count; });
    EXPECT_EQ(count, 0);

    tri_free.require_planar = true;
    count = 0;
    for_each_small_graph(6, tri_free, [&](const Graph&) { ++count; });
    EXPECT_EQ(count, 0);

    EXPECT_THROW(for_each_small_graph(10, {}, [](const Graph&) {}), InputError);
}

TEST(SmallGraphs, LabeledCountsAgreeWithBruteForce) {
    // every labeled graph on n vertices passing the filter appears exactly once
    struct Facts {
        int min_degree;
        int girth;
        bool connected;
        bool planar;
    };
    for (int n = 1; n <= 6; ++n) {
        const int slots = n * (n - 1) / 2;
        std::vector<Facts> all;
        for (std::uint32_t mask = 0; mask < (1U << slots); ++mask) {
            std::vector<Edge> edges;
            int k = 0;
            for (int v = 1; v < n; ++v) {
                for (int u = 0; u < v; ++u, ++k) {
                    if ((mask >> k) & 1U) edges.emplace_back(u, v);
                }
            }
            Graph g(n, edges);
            all.push_back({g.min_degree(), girth(g).value_or(1000), is_connected(g),
                           n < 5 || !oracle::has_kuratowski_subdivision_small(g)});
        }
        for (int mind = 0; mind <= 3; ++mind) {
            for (int gir : {0, 4, 5}) {
                for (bool planar : {false, true}) {
                    for (bool conn : {false, true}) {
                        GraphFilter f{mind, gir, planar, conn};
                        std::set<std::string> seen;
                        for_each_small_graph(n, f, [&](const Graph& g) {
                            EXPECT_TRUE(f.accepts(g));
                            EXPECT_TRUE(seen.insert(encode_graph6(g)).second);
                        });
                        auto expected = std::count_if(all.begin(), all.end(), [&](const Facts& x) {
                            return x.min_degree >= mind && x.girth >= gir && (!conn || x.connected) &&
                                   (!planar || x.planar);
                        });
                        EXPECT_EQ(seen.size(), static_cast<std::size_t>(expected))
                            << n << " " << mind << " " << gir << " " << planar << conn;
                    }
                }
            }
        }
    }
}

TEST(SmallGraphs, IsomorphismClassCounts) {
    // connected graphs on n vertices: 1, 1, 2, 6, 21, 112, 853
    const std::vector<std::size_t> connected = {1, 1, 2, 6, 21, 112, 853};
    GraphFilter f;
    f.require_connected = true;
    for (int n = 1; n <= 7; ++n) EXPECT_EQ(graphs_up_to_isomorphism(n, f).size(), connected[n - 1]) << n;
    // all graphs on 5 vertices: 34
    EXPECT_EQ(graphs_up_to_isomorphism(5).size(), 34U);
}

TEST(Isomorphism, RelabelingInvariant) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 9;
        std::bernoulli_distribution coin(0.4);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (coin(rng)) edges.emplace_back(u, v);
            }
        }
        Graph g(n, edges);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> moved;
        for (const Edge& e : edges) moved.emplace_back(perm[e.u], perm[e.v]);
        Graph h(n, moved);
        EXPECT_EQ(canonical_code(g), canonical_code(h));
        EXPECT_TRUE(is_isomorphic(g, h));
        EXPECT_TRUE(is_isomorphic(canonical_graph(canonical_code(g)), g));
    }
    EXPECT_FALSE(is_isomorphic(path_graph(4), star_graph(3)));
    EXPECT_FALSE(is_isomorphic(cycle_graph(6), generate({Family::cycle, {3}})));
}

TEST(Planarity, KnownAnswers) {
    EXPECT_TRUE(is_planar(complete_graph(4)));
    EXPECT_FALSE(is_planar(complete_graph(5)));
    EXPECT_FALSE(is_planar(complete_bipartite(3, 3)));
    EXPECT_FALSE(is_planar(petersen_graph()));
    EXPECT_TRUE(is_planar(icosahedron_graph()));
    EXPECT_TRUE(is_planar(cube_graph()));
}

TEST(Planarity, AgreesWithKuratowskiOracle) {
    int checked = 0;
    for (int n = 1; n <= 6; ++n) {
        for_each_small_graph(n, {}, [&](const Graph& g) {
            ASSERT_EQ(is_planar(g), !oracle::has_kuratowski_subdivision_small(g)) << encode_graph6(g);
            ++checked;
        });
    }
    for (const Graph& g : graphs_up_to_isomorphism(7)) {
        ASSERT_EQ(is_planar(g), !oracle::has_kuratowski_subdivision_small(g)) << encode_graph6(g);
        ++checked;
    }
    EXPECT_GT(checked, 30000);
}

TEST(Planarity, EmbeddingSatisfiesEuler) {
    for (const Graph& g : graphs_up_to_isomorphism(7)) {
        auto pr = planarity(g);
        if (!pr.planar) {
            // Euler prefilter never rejects a planar graph
            continue;
        }
        ASSERT_TRUE(pr.embedding.has_value());
        EXPECT_TRUE(rotation_matches(g, pr.embedding->rotation));
        EXPECT_TRUE(is_plane_embedding(g, *pr.embedding));
        int total = 0;
        for (std::size_t f = 0; f < pr.embedding->faces.size(); ++f) total += pr.embedding->face_length(f);
        EXPECT_EQ(total, 2 * g.size());
        if (g.order() >= 3) EXPECT_LE(g.size(), 3 * g.order() - 6);
        if (g.order() >= 3 && !girth(g).has_value()) continue;
        if (g.order() >= 3 && *girth(g) >= 4) EXPECT_LE(g.size(), 2 * g.order() - 4);
    }
}
