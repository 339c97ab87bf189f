#pragma once

#include <optional>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include "embedding.hpp"
#include "graph.hpp"

namespace totbond {

struct PlanarityResult {
    bool planar = false;
    /// Present when planar: a rotation system whose traced faces satisfy Euler per component.
    std::optional<Embedding> embedding;
};

namespace detail {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

inline bool euler_prefilter(const Graph& g) {
    const int n = g.order();
    const int m = g.size();
    if (n < 3) return true;
    if (m > 3 * n - 6) return false;
    return true;
}

}  // namespace detail

/// Boyer-Myrvold planarity test; also returns a combinatorial embedding when planar.
inline PlanarityResult planarity(const Graph& g, bool want_embedding = true) {
    if (!detail::euler_prefilter(g)) return {false, std::nullopt};
    detail::BoostGraph bg(static_cast<std::size_t>(g.order()));
    int index = 0;
    for (const Edge& e : g.edges()) {
        auto added = boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
        boost::put(boost::edge_index, bg, added.first, index++);
    }
    using EdgeDesc = boost::graph_traits<detail::BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> order(static_cast<std::size_t>(g.order()));
    auto embedding_map = boost::make_iterator_property_map(order.begin(), boost::get(boost::vertex_index, bg));
    bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                      boost::boyer_myrvold_params::embedding = embedding_map);
    PlanarityResult result{planar, std::nullopt};
    if (planar && want_embedding) {
        std::vector<std::vector<Vertex>> rotation(static_cast<std::size_t>(g.order()));
        for (Vertex v = 0; v < g.order(); ++v) {
            for (const EdgeDesc& e : order[v]) {
                auto s = static_cast<Vertex>(boost::source(e, bg));
                auto t = static_cast<Vertex>(boost::target(e, bg));
                rotation[v].push_back(s == v ? t : s);
            }
        }
        result.embedding = make_embedding(std::move(rotation));
    }
    return result;
}

inline bool is_planar(const Graph& g) { return planarity(g, false).planar; }

}  // namespace totbond
