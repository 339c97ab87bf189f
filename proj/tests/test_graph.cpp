#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "totbond/generators.hpp"
#include "totbond/graph.hpp"
#include "totbond/io.hpp"
#include "totbond/planarity.hpp"

using namespace totbond;

TEST(GraphCore, RejectsBadEdges) {
    EXPECT_THROW(Graph(3, std::vector<Edge>{{0, 0}}), InputError);
    EXPECT_THROW(Graph(3, std::vector<Edge>{{0, 3}}), InputError);
    EXPECT_THROW(Graph(65), InputError);
    Graph g(3, std::vector<Edge>{{0, 1}, {1, 0}});
    EXPECT_EQ(g.size(), 1);
}

TEST(GraphCore, Degree) {
    Graph k4 = complete_graph(4);
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(degree(k4, v), 3);
    EXPECT_EQ(degree(path_graph(4), 0), 1);
    EXPECT_EQ(degree(path_graph(4), 3), 1);
    for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(degree(cycle_graph(6), v), 2);
    EXPECT_THROW(path_graph(4).require_vertex(4), InputError);
}

TEST(GraphCore, Distance) {
    Graph p4 = path_graph(4);
    EXPECT_EQ(distance(p4, 0, 3), 3);
    EXPECT_EQ(distance(p4, 2, 2), 0);
    Graph two(4, std::vector<Edge>{{0, 1}, {2, 3}});
    EXPECT_FALSE(distance(two, 0, 3).has_value());
    EXPECT_THROW(distance(p4, 0, 9), InputError);
}

TEST(GraphCore, DistanceTriangleInequality) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 9;
        std::vector<Edge> edges;
        std::bernoulli_distribution coin(0.3);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (coin(rng)) edges.emplace_back(u, v);
            }
        }
        Graph g(n, edges);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                for (int c = 0; c < n; ++c) {
                    auto ab = distance(g, a, b);
                    auto bc = distance(g, b, c);
                    auto ac = distance(g, a, c);
                    if (ab && bc) {
                        ASSERT_TRUE(ac.has_value());
                        EXPECT_LE(*ac, *ab + *bc);
                    }
                }
            }
        }
    }
}

TEST(GraphCore, Girth) {
    EXPECT_EQ(girth(cycle_graph(5)), 5);
    EXPECT_EQ(girth(complete_graph(4)), 3);
    EXPECT_EQ(girth(cube_graph()), 4);
    EXPECT_EQ(girth(petersen_graph()), 5);
    for (const Graph& t : free_trees(8)) EXPECT_FALSE(girth(t).has_value());
}

TEST(GraphCore, InducedCycle) {
    auto c4 = find_induced_cycle(cycle_graph(4), 4);
    ASSERT_TRUE(c4.has_value());
    EXPECT_TRUE(oracle::is_induced_cycle(cycle_graph(4), *c4));
    EXPECT_FALSE(find_induced_cycle(complete_graph(4), 4).has_value());
    auto p5 = find_induced_cycle(petersen_graph(), 5);
    ASSERT_TRUE(p5.has_value());
    EXPECT_TRUE(oracle::is_induced_cycle(petersen_graph(), *p5));
    EXPECT_THROW(find_induced_cycle(cycle_graph(6), 6), InputError);
}

TEST(GraphCore, InducedCycleAgreesWithSubsetScan) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 7;
        std::vector<Edge> edges;
        std::bernoulli_distribution coin(0.4);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (coin(rng)) edges.emplace_back(u, v);
            }
        }
        Graph g(n, edges);
        for (int k = 3; k <= 5; ++k) {
            auto found = find_induced_cycle(g, k);
            EXPECT_EQ(found.has_value(), oracle::has_induced_cycle(g, k));
            if (found) {
                EXPECT_EQ(induced_edge_count(g, VertexSet(std::initializer_list<Vertex>{})), 0);
                VertexSet s;
                for (Vertex v : *found) s.insert(v);
                EXPECT_EQ(induced_edge_count(g, s), k);
                EXPECT_TRUE(oracle::is_induced_cycle(g, *found));
            }
            for (const auto& c : all_induced_cycles(g, k)) EXPECT_TRUE(oracle::is_induced_cycle(g, c));
        }
    }
}

TEST(GraphCore, ClassifyEdge) {
    Graph q3 = cube_graph();
    for (const Edge& e : q3.edges()) EXPECT_EQ(classify_edge(q3, e), std::make_pair(3, 3));
    Graph star = star_graph(3);
    EXPECT_EQ(classify_edge(star, star.edges().front()), std::make_pair(1, 3));
    Graph k23 = complete_bipartite(2, 3);
    for (const Edge& e : k23.edges()) EXPECT_EQ(classify_edge(k23, e), std::make_pair(2, 3));
    EXPECT_THROW(classify_edge(path_graph(4), Edge(0, 2)), InputError);
}

TEST(GraphCore, DeleteEdges) {
    Graph c4 = cycle_graph(4);
    auto cut = delete_edges(c4, EdgeSet{{0, 1}, {2, 3}});
    EXPECT_FALSE(cut.has_isolated);
    EXPECT_EQ(cut.graph.size(), 2);
    auto p2 = delete_edges(path_graph(2), EdgeSet{{0, 1}});
    EXPECT_TRUE(p2.has_isolated);
    EXPECT_EQ(isolated_vertices(p2.graph).size(), 2);
    auto same = delete_edges(c4, EdgeSet{});
    EXPECT_EQ(same.graph, c4);
    EXPECT_THROW(delete_edges(c4, EdgeSet{{0, 2}}), InputError);
}

TEST(GraphCore, DegreeProfileAndSupport) {
    for (const Graph& t : free_trees(9)) {
        auto prof = degree_profile(t);
        for (Vertex v = 0; v < t.order(); ++v) {
            EXPECT_EQ(prof.with_degree(t.degree(v)).contains(v), true);
            bool direct = false;
            for (Vertex u = 0; u < t.order(); ++u) direct = direct || (t.adjacent(u, v) && t.degree(u) == 1);
            EXPECT_EQ(prof.support.contains(v), direct);
            EXPECT_EQ(is_support_vertex(t, v), direct);
        }
    }
}

// ---- io --------------------------------------------------------------------

TEST(Io, Graph6K4) {
    EXPECT_EQ(oracle::graph6(complete_graph(4)), "C~");
    EXPECT_EQ(decode_graph6("C~"), complete_graph(4));
    EXPECT_EQ(encode_graph6(complete_graph(4)), "C~");
    EXPECT_EQ(decode_graph6(">>graph6<<C~"), complete_graph(4));
}

TEST(Io, Graph6RoundTripAgainstReferenceEncoder) {
    std::mt19937 rng(3);
    for (int n = 1; n <= 12; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Edge> edges;
            std::bernoulli_distribution coin(0.5);
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (coin(rng)) edges.emplace_back(u, v);
                }
            }
            Graph g(n, edges);
            EXPECT_EQ(encode_graph6(g), oracle::graph6(g));
            EXPECT_EQ(decode_graph6(encode_graph6(g)), g);
            std::stringstream el;
            write_edge_list(el, g);
            EXPECT_EQ(read_edge_list(el), g);
        }
    }
}

TEST(Io, Graph6LargeOrder) {
    Graph g = cycle_graph(64);
    std::string s = encode_graph6(g);
    EXPECT_EQ(static_cast<unsigned char>(s[0]), 126);
    EXPECT_EQ(decode_graph6(s), g);
}

TEST(Io, Graph6Errors) {
    try {
        decode_graph6("C~~");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_GE(e.offset(), 0U);
    }
    try {
        decode_graph6("C\x01");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 1U);
    }
    EXPECT_THROW(decode_graph6(""), ParseError);
    EXPECT_THROW(decode_graph6("D"), ParseError);
}

TEST(Io, EdgeList) {
    std::istringstream in("0 1\n1 2");
    EXPECT_EQ(read_edge_list(in), path_graph(3));
    std::istringstream declared("# n 5\n# a comment\n0 1\n\n1 2\n");
    Graph g = read_edge_list(declared);
    EXPECT_EQ(g.order(), 5);
    EXPECT_EQ(g.size(), 2);
    std::istringstream bad("0 1\n1 x\n");
    EXPECT_THROW(read_edge_list(bad), ParseError);
    std::istringstream loop("0 0\n");
    EXPECT_THROW(read_edge_list(loop), std::exception);
}

namespace {

std::string tetrahedron_planar_code() {
    std::string s = ">>planar_code<<";
    s.push_back(4);
    const int rot[4][3] = {{2, 3, 4}, {1, 4, 3}, {1, 2, 4}, {1, 3, 2}};
    for (const auto& r : rot) {
        for (int x : r) s.push_back(static_cast<char>(x));
        s.push_back(0);
    }
    return s;
}

}  // namespace

TEST(Io, PlanarCodeTetrahedron) {
    std::istringstream in(tetrahedron_planar_code());
    auto graphs = read_planar_code(in);
    ASSERT_EQ(graphs.size(), 1U);
    const auto& pg = graphs[0];
    EXPECT_EQ(pg.graph, complete_graph(4));
    ASSERT_EQ(pg.embedding.faces.size(), 4U);
    for (std::size_t f = 0; f < 4; ++f) EXPECT_EQ(pg.embedding.face_length(f), 3);
    EXPECT_EQ(pg.graph.order() - pg.graph.size() + static_cast<int>(pg.embedding.faces.size()), 2);
    EXPECT_TRUE(is_plane_embedding(pg.graph, pg.embedding));

    std::ostringstream out;
    write_planar_code_header(out);
    write_planar_code(out, pg.graph, pg.embedding);
    EXPECT_EQ(out.str(), tetrahedron_planar_code());
}

TEST(Io, PlanarCodeErrors) {
    std::string s = tetrahedron_planar_code();
    std::istringstream truncated(s.substr(0, s.size() - 3));
    EXPECT_THROW(read_planar_code(truncated), ParseError);

    // vertex 4 lists 1 twice
    std::string asym = ">>planar_code<<";
    asym.push_back(3);
    for (int x : {2, 3, 0, 1, 3, 0, 1, 1, 0}) asym.push_back(static_cast<char>(x));
    std::istringstream bad(asym);
    EXPECT_THROW(read_planar_code(bad), FormatError);

    std::string out_of_range = ">>planar_code<<";
    out_of_range.push_back(2);
    for (int x : {5, 0, 1, 0}) out_of_range.push_back(static_cast<char>(x));
    std::istringstream oor(out_of_range);
    EXPECT_THROW(read_planar_code(oor), ParseError);
}

TEST(Io, PlanarCodeRoundTripAndEuler) {
    for (const Graph& g : {cube_graph(), icosahedron_graph(), prism_graph(5), complete_graph(4)}) {
        auto pr = planarity(g);
        ASSERT_TRUE(pr.planar);
        std::ostringstream out;
        write_planar_code_header(out);
        write_planar_code(out, g, *pr.embedding);
        std::istringstream in(out.str());
        auto back = read_planar_code(in);
        ASSERT_EQ(back.size(), 1U);
        EXPECT_EQ(back[0].graph, g);
        int total = 0;
        for (std::size_t f = 0; f < back[0].embedding.faces.size(); ++f) total += back[0].embedding.face_length(f);
        EXPECT_EQ(total, 2 * g.size());
        EXPECT_EQ(g.order() - g.size() + static_cast<int>(back[0].embedding.faces.size()), 2);
    }
}

TEST(Io, SniffFormat) {
    EXPECT_EQ(sniff_format("x.pc", ""), GraphFormat::planar_code);
    EXPECT_EQ(sniff_format("x", ">>planar_code<<"), GraphFormat::planar_code);
    EXPECT_EQ(sniff_format("x.g6", "C~\n"), GraphFormat::graph6);
    EXPECT_EQ(sniff_format("x.txt", "0 1\n"), GraphFormat::edge_list);
}
