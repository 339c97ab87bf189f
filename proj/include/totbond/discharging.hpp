#pragma once

#include <vector>

#include <boost/rational.hpp>

#include "embedding.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace totbond {

using Charge = boost::rational<long long>;

struct ChargeTransfer {
    Vertex from;
    Vertex to;
    Charge amount;
};

/// Balanced charging (vertex d(v) - 4, face l(f) - 4) followed by rule R: every 3-vertex takes
/// 1/3 from each neighbour.
struct ChargeLedger {
    std::vector<Charge> vertex_initial;
    std::vector<Charge> face_initial;
    std::vector<ChargeTransfer> transfers;
    std::vector<Charge> vertex_final;
    std::vector<Charge> face_final;

    Charge initial_total() const {
        Charge t = 0;
        for (const auto& c : vertex_initial) t += c;
        for (const auto& c : face_initial) t += c;
        return t;
    }
    Charge final_total() const {
        Charge t = 0;
        for (const auto& c : vertex_final) t += c;
        for (const auto& c : face_final) t += c;
        return t;
    }
    std::vector<Vertex> negative_vertices() const {
        std::vector<Vertex> out;
        for (std::size_t v = 0; v < vertex_final.size(); ++v) {
            if (vertex_final[v] < 0) out.push_back(static_cast<Vertex>(v));
        }
        return out;
    }
    std::vector<int> negative_faces() const {
        std::vector<int> out;
        for (std::size_t f = 0; f < face_final.size(); ++f) {
            if (face_final[f] < 0) out.push_back(static_cast<int>(f));
        }
        return out;
    }
    bool any_negative() const { return !negative_vertices().empty() || !negative_faces().empty(); }
};

/// Initial charges only (no rule applied); needs a plane embedding but no degree or girth
/// condition. The total is -8 whenever the graph is connected.
inline ChargeLedger balanced_charging(const Graph& g, const Embedding& emb) {
    if (!is_plane_embedding(g, emb)) throw InputError("balanced charging requires a planar embedding of the graph");
    ChargeLedger ledger;
    for (Vertex v = 0; v < g.order(); ++v) ledger.vertex_initial.emplace_back(g.degree(v) - 4);
    for (std::size_t f = 0; f < emb.faces.size(); ++f) ledger.face_initial.emplace_back(emb.face_length(f) - 4);
    ledger.vertex_final = ledger.vertex_initial;
    ledger.face_final = ledger.face_initial;
    return ledger;
}

/// Rule R on top of the current final charges: each 3-vertex takes 1/3 from every neighbour.
inline void apply_rule_r(const Graph& g, ChargeLedger& ledger) {
    const Charge third(1, 3);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 3) continue;
        for (Vertex u : g.neighbors(v)) {
            ledger.transfers.push_back({u, v, third});
            ledger.vertex_final[static_cast<std::size_t>(u)] -= third;
            ledger.vertex_final[static_cast<std::size_t>(v)] += third;
        }
    }
}

inline ChargeLedger discharge_audit(const Graph& g, const Embedding& emb) {
    if (g.order() > 0 && g.min_degree() < 3) throw InputError("discharging audit requires minimum degree >= 3");
    auto gi = girth(g);
    if (gi && *gi < 4) throw InputError("discharging audit requires girth >= 4");
    if (!is_plane_embedding(g, emb)) throw InputError("discharging audit requires a planar embedding of the graph");
    ChargeLedger ledger = balanced_charging(g, emb);
    apply_rule_r(g, ledger);
    return ledger;
}

}  // namespace totbond
