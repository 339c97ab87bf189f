#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "bondage.hpp"
#include "configurations.hpp"
#include "corpus.hpp"
#include "discharging.hpp"
#include "domination.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "isomorphism.hpp"
#include "planarity.hpp"
#include "witness.hpp"

namespace totbond {

using Json = nlohmann::ordered_json;

enum class CampaignTag {
    paths,
    cycles,
    bipartite,
    tree_rad,
    tree_sridharan,
    tree_n23,
    planar_d8,
    girth4_d3,
    dist2_d1,
    multipartite,
    config_g4,
    config_borodin,
};

inline constexpr std::array<CampaignTag, 12> all_campaign_tags = {
    CampaignTag::paths,     CampaignTag::cycles,    CampaignTag::bipartite,    CampaignTag::tree_rad,
    CampaignTag::tree_sridharan, CampaignTag::tree_n23, CampaignTag::planar_d8, CampaignTag::girth4_d3,
    CampaignTag::dist2_d1,  CampaignTag::multipartite, CampaignTag::config_g4, CampaignTag::config_borodin,
};

inline std::string to_string(CampaignTag t) {
    switch (t) {
        case CampaignTag::paths: return "thm-paths";
        case CampaignTag::cycles: return "thm-cycles";
        case CampaignTag::bipartite: return "thm-bipartite";
        case CampaignTag::tree_rad: return "thm-tree-rad";
        case CampaignTag::tree_sridharan: return "thm-tree-sridharan";
        case CampaignTag::tree_n23: return "thm-tree-n23";
        case CampaignTag::planar_d8: return "thm-planar-d8";
        case CampaignTag::girth4_d3: return "thm-girth4-d3";
        case CampaignTag::dist2_d1: return "thm-dist2-d1";
        case CampaignTag::multipartite: return "thm-multipartite";
        case CampaignTag::config_g4: return "config-g4";
        case CampaignTag::config_borodin: return "config-borodin";
    }
    return "?";
}

/// Accepts the ASCII names above and the spelled-out forms (thm-tree-(n-2)/3, thm-planar-Δ+8, ...).
inline std::optional<CampaignTag> campaign_tag_from_name(std::string_view name) {
    for (auto t : all_campaign_tags) {
        if (to_string(t) == name) return t;
    }
    static const std::map<std::string, CampaignTag, std::less<>> aliases = {
        {"thm-tree-(n-2)/3", CampaignTag::tree_n23},     {"thm-tree-(n−2)/3", CampaignTag::tree_n23},
        {"thm-planar-Δ+8", CampaignTag::planar_d8},      {"thm-planar-delta+8", CampaignTag::planar_d8},
        {"thm-girth4-Δ+3", CampaignTag::girth4_d3},      {"thm-girth4-delta+3", CampaignTag::girth4_d3},
        {"thm-dist2-Δ+1", CampaignTag::dist2_d1},        {"thm-dist2-delta+1", CampaignTag::dist2_d1},
    };
    if (auto it = aliases.find(name); it != aliases.end()) return it->second;
    return std::nullopt;
}

struct CampaignLimits {
    /// User ceiling on |B|; the solver always stops at bound + 1 anyway.
    std::optional<int> cap;
    int jobs = 1;
    /// Search nodes per graph before the solver gives up (deterministic, no clocks).
    long long node_budget = 20'000'000;
};

/// Worker count from TOTBOND_JOBS, else `fallback`.
inline int jobs_from_env(int fallback = 1) {
    if (const char* s = std::getenv("TOTBOND_JOBS")) {
        try {
            int v = std::stoi(s);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return fallback;
}

enum class Verdict { holds, violation, skipped, filtered };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violation: return "violation";
        case Verdict::skipped: return "skipped";
        case Verdict::filtered: return "filtered";
    }
    return "?";
}

struct GraphOutcome {
    Verdict verdict = Verdict::filtered;
    std::string reason;
    Json record;
    std::map<std::string, long long> counters;
};

struct CampaignResult {
    std::string tag;
    std::string corpus;
    std::size_t considered = 0;
    std::size_t checked = 0;
    std::size_t holds = 0;
    std::size_t skipped = 0;
    std::vector<Json> violations;
    std::map<std::string, std::size_t> filtered_reasons;
    std::map<std::string, std::size_t> skipped_reasons;
    std::map<std::string, long long> counters;

    std::size_t filtered() const { return considered - checked; }
    bool consistent() const { return checked == holds + violations.size() + skipped; }

    Json summary() const {
        Json j;
        j["summary"] = true;
        j["tag"] = tag;
        j["corpus"] = corpus;
        j["considered"] = considered;
        j["filtered"] = filtered();
        j["filtered_reasons"] = filtered_reasons;
        j["checked"] = checked;
        j["holds"] = holds;
        j["violations"] = violations.size();
        j["skipped"] = skipped;
        j["skipped_reasons"] = skipped_reasons;
        j["counters"] = counters;
        j["consistent"] = consistent();
        return j;
    }
};

// ---------------------------------------------------------------------------
// record helpers
// ---------------------------------------------------------------------------

inline Json edges_json(const EdgeSet& es) {
    Json a = Json::array();
    for (const Edge& e : es) a.push_back({e.u, e.v});
    return a;
}

inline Json to_json(const BondageCertificate& c) {
    Json j;
    j["status"] = to_string(c.status);
    if (c.status == BondageStatus::finite) {
        j["value"] = c.value;
    } else if (c.status == BondageStatus::infinite) {
        j["value"] = "INF";
    } else {
        j["value"] = nullptr;
    }
    j["cap"] = c.cap;
    j["witness"] = edges_json(c.witness);
    j["gamma_before"] = c.gamma_before;
    j["gamma_after"] = c.gamma_after;
    j["infinity_by_matching"] = c.infinity_by_matching;
    j["budget_exhausted"] = c.budget_exhausted;
    return j;
}

inline Json to_json(const WitnessReport& r) {
    Json j;
    j["rule"] = to_string(r.rule);
    j["anchors"] = r.anchors;
    j["chosen"] = r.chosen;
    if (!r.construction_case.empty()) j["case"] = r.construction_case;
    j["edges"] = edges_json(r.edges);
    j["claimed_bound"] = r.claimed_bound;
    if (r.stated_bound) j["stated_bound"] = *r.stated_bound;
    j["observed"] = r.observed;
    j["isolate_free"] = r.isolate_free;
    j["isolated"] = r.isolated.to_vector();
    j["gamma_before"] = r.gamma_before;
    j["gamma_after"] = r.gamma_after;
    j["verdict"] = to_string(r.verdict);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline Json to_json(const ConfigurationHit& h) {
    Json j;
    j["tag"] = h.tag;
    if (h.face >= 0) j["face"] = h.face;
    j["vertices"] = h.vertices;
    j["degrees"] = h.degrees;
    return j;
}

inline Json to_json(const ChargeLedger& l) {
    auto str = [](const Charge& c) {
        return c.denominator() == 1 ? std::to_string(c.numerator())
                                    : std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
    };
    Json j;
    j["initial_total"] = str(l.initial_total());
    j["final_total"] = str(l.final_total());
    j["transfers"] = l.transfers.size();
    Json vf = Json::array();
    for (const auto& c : l.vertex_final) vf.push_back(str(c));
    j["vertex_final"] = vf;
    Json ff = Json::array();
    for (const auto& c : l.face_final) ff.push_back(str(c));
    j["face_final"] = ff;
    j["negative_vertices"] = l.negative_vertices();
    j["negative_faces"] = l.negative_faces();
    return j;
}

inline Json graph_header(const std::string& id, const Graph& g) {
    Json j;
    j["id"] = id;
    j["graph6"] = encode_graph6(g);
    j["n"] = g.order();
    j["m"] = g.size();
    j["max_degree"] = g.order() ? g.max_degree() : 0;
    j["min_degree"] = g.order() ? g.min_degree() : 0;
    return j;
}

// ---------------------------------------------------------------------------
// bound checking through the solver
// ---------------------------------------------------------------------------

/// Outcome of comparing the certified b_t against `bound`.
enum class BoundStatus { holds, violated, undecided_budget, undecided_cap };

inline BondageCertificate solve_up_to(const Graph& g, int bound, const CampaignLimits& lim) {
    BondageOptions o;
    o.cap = std::max(1, bound + 1);
    if (lim.cap) o.cap = std::min(*o.cap, std::max(1, *lim.cap));
    o.node_budget = lim.node_budget;
    return bondage(g, o);
}

inline BoundStatus compare_bound(const BondageCertificate& c, int bound) {
    switch (c.status) {
        case BondageStatus::finite: return c.value <= bound ? BoundStatus::holds : BoundStatus::violated;
        case BondageStatus::infinite: return BoundStatus::violated;
        case BondageStatus::unknown_above_cap:
            // every size up to cap was searched without success
            if (c.cap >= bound) return BoundStatus::violated;
            return c.budget_exhausted ? BoundStatus::undecided_budget : BoundStatus::undecided_cap;
    }
    return BoundStatus::undecided_cap;
}

namespace detail {

inline GraphOutcome filtered(Json rec, std::string why) {
    rec["verdict"] = "filtered";
    rec["reason"] = why;
    return {Verdict::filtered, std::move(why), std::move(rec), {}};
}

inline GraphOutcome finish(Json rec, Verdict v, std::string why, std::map<std::string, long long> counters = {}) {
    rec["verdict"] = to_string(v);
    if (!why.empty()) rec["reason"] = why;
    return {v, std::move(why), std::move(rec), std::move(counters)};
}

inline bool is_star(const Graph& g) { return is_tree(g) && g.order() >= 2 && g.max_degree() == g.order() - 1; }

/// Verdict for an upper bound from the solver alone.
inline GraphOutcome judge_upper_bound(const Graph& g, Json rec, int bound, const CampaignLimits& lim) {
    auto cert = solve_up_to(g, bound, lim);
    rec["bound"] = bound;
    rec["bt"] = to_json(cert);
    switch (compare_bound(cert, bound)) {
        case BoundStatus::holds: return finish(std::move(rec), Verdict::holds, "");
        case BoundStatus::violated:
            return finish(std::move(rec), Verdict::violation,
                          cert.status == BondageStatus::infinite ? "b_t is infinite" : "b_t exceeds the bound");
        case BoundStatus::undecided_budget: return finish(std::move(rec), Verdict::skipped, "solver-infeasible");
        case BoundStatus::undecided_cap: return finish(std::move(rec), Verdict::skipped, "cap-reached");
    }
    return finish(std::move(rec), Verdict::skipped, "cap-reached");
}

/// Verdict for a closed form; nullopt expected means b_t = infinity.
inline GraphOutcome judge_exact(const Graph& g, Json rec, std::optional<int> expected, const CampaignLimits& lim) {
    rec["expected"] = expected ? Json(*expected) : Json("INF");
    BondageCertificate cert = solve_up_to(g, expected.value_or(g.size()), lim);
    rec["bt"] = to_json(cert);
    if (cert.status == BondageStatus::infinite) {
        return expected ? finish(std::move(rec), Verdict::violation, "b_t is infinite") : finish(std::move(rec), Verdict::holds, "");
    }
    if (cert.status == BondageStatus::finite) {
        if (expected && cert.value == *expected) return finish(std::move(rec), Verdict::holds, "");
        return finish(std::move(rec), Verdict::violation, "b_t differs from the closed form");
    }
    if (expected && cert.cap >= *expected) return finish(std::move(rec), Verdict::violation, "b_t exceeds the closed form");
    return finish(std::move(rec), Verdict::skipped, cert.budget_exhausted ? "solver-infeasible" : "cap-reached");
}

/// The embedding carried by the corpus item when it is a plane embedding of the graph,
/// else one from the planarity test; nullopt when the graph is not planar.
inline std::optional<Embedding> plane_embedding(const CorpusItem& item) {
    if (item.embedding && is_plane_embedding(item.graph, *item.embedding)) return item.embedding;
    auto pr = planarity(item.graph);
    if (!pr.planar) return std::nullopt;
    return pr.embedding;
}

inline bool face_is_induced(const Graph& g, const std::vector<Vertex>& walk) {
    VertexSet s;
    for (Vertex v : walk) s.insert(v);
    return induced_edge_count(g, s) == static_cast<int>(walk.size());
}

/// Witness attempts, in order, for one Borodin hit (empty when the face is not induced).
inline std::vector<WitnessReport> borodin_witnesses(const Graph& g, const ConfigurationHit& hit) {
    const auto& w = hit.vertices;
    if (!face_is_induced(g, w)) return {};
    if (hit.tag == "borodin-a") return {witness_triangle(g, w[0], w[1], w[2])};
    if (hit.tag == "borodin-b") return {witness_cycle4(g, w), witness_cycle4(g, {w[1], w[2], w[3], w[0]})};
    // x5 is the vertex whose degree may exceed 3, x1..x4 the 3-vertices following it
    std::size_t j = 4;
    for (std::size_t i = 0; i < 5; ++i) {
        if (hit.degrees[i] != 3) {
            j = i;
            break;
        }
    }
    std::vector<Vertex> x;
    for (std::size_t k = 1; k <= 5; ++k) x.push_back(w[(j + k) % 5]);
    std::vector<Vertex> rev;
    for (std::size_t k = 1; k <= 5; ++k) rev.push_back(w[(j + 5 - k) % 5]);
    return {witness_cycle5(g, x), witness_cycle5(g, rev)};
}

/// Shared tail of the rule-backed campaigns: the witness route and the solver route are run
/// independently and must agree.
inline GraphOutcome judge_with_witness(const Graph& g, Json rec, int bound, const CampaignLimits& lim,
                                       const std::optional<WitnessReport>& certified, bool any_applicable,
                                       std::map<std::string, long long> counters) {
    auto cert = solve_up_to(g, bound, lim);
    rec["bound"] = bound;
    rec["bt"] = to_json(cert);
    rec["witness_certified"] = certified.has_value();
    if (certified) ++counters["witness-certified"];
    auto status = compare_bound(cert, bound);
    if (status == BoundStatus::holds) {
        ++counters["solver-certified"];
        return finish(std::move(rec), Verdict::holds, "", std::move(counters));
    }
    if (status == BoundStatus::violated) {
        ++counters["solver-certified"];
        if (certified) {
            ++counters["route-disagreement"];
            return finish(std::move(rec), Verdict::violation, "solver and witness disagree", std::move(counters));
        }
        return finish(std::move(rec), Verdict::violation,
                      cert.status == BondageStatus::infinite ? "b_t is infinite" : "b_t exceeds the bound", std::move(counters));
    }
    if (certified) return finish(std::move(rec), Verdict::holds, "witness-certified", std::move(counters));
    std::string why = !any_applicable ? "rule-inapplicable" : status == BoundStatus::undecided_budget ? "solver-infeasible" : "cap-reached";
    return finish(std::move(rec), Verdict::skipped, why, std::move(counters));
}

inline bool certifies(const WitnessReport& r, int bound) {
    return r.verdict == WitnessVerdict::valid_bondage_set && r.observed <= bound;
}

inline void count_witness(std::map<std::string, long long>& c, const WitnessReport& r) {
    ++c["witness-" + to_string(r.verdict)];
    if (r.verdict != WitnessVerdict::precondition_unmet && r.observed > r.claimed_bound) ++c["witness-over-claim"];
}

// ---------------------------------------------------------------------------
// per-tag evaluation
// ---------------------------------------------------------------------------

inline GraphOutcome eval_paths(const CorpusItem& it, const CampaignLimits& lim) {
    const Graph& g = it.graph;
    Json rec = graph_header(it.id, g);
    if (!is_tree(g) || g.max_degree() > 2) return filtered(std::move(rec), "not a path");
    if (g.order() < 4) return filtered(std::move(rec), "order below 4");
    return judge_exact(g, std::move(rec), g.order() % 4 == 2 ? 2 : 1, lim);
}

inline GraphOutcome eval_cycles(const CorpusItem& it, const CampaignLimits& lim) {
    const Graph& g = it.graph;
    Json rec = graph_header(it.id, g);
    if (g.order() < 3 || !is_connected(g) || g.min_degree() != 2 || g.max_degree() != 2) return filtered(std::move(rec), "not a cycle");
    std::optional<int> expected;
    if (g.order() > 3) expected = g.order() % 4 == 2 ? 3 : 2;
    return judge_exact(g, std::move(rec), expected, lim);
}

inline GraphOutcome eval_bipartite(const CorpusItem& it, const CampaignLimits& lim) {
    const Graph& g = it.graph;
    Json rec = graph_header(it.id, g);
    auto parts = multipartite_parts(g);
    if (!parts || parts->size() != 2) return filtered(std::move(rec), "not complete bipartite");
    const int small = parts->back().size();
    rec["parts"] = {parts->front().size(), small};
    if (small < 2) return filtered(std::move(rec), "part of size 1");
    return judge_exact(g, std::move(rec), small, lim);
}

inline GraphOutcome eval_tree(CampaignTag tag, const CorpusItem& it, const CampaignLimits& lim) {
    const Graph& g = it.graph;
    Json rec = graph_header(it.id, g);
    if (!is_tree(g)) return filtered(std::move(rec), "not a tree");
    if (g.order() < 2) return filtered(std::move(rec), "isolated vertex");
    const int n = g.order();
    const int delta = g.max_degree();
    if (tag != CampaignTag::tree_sridharan && delta < 3) return filtered(std::move(rec), "max degree below 3");
    if (tag == CampaignTag::tree_n23) {
        if (is_isomorphic(g, path_graph(4))) return filtered(std::move(rec), "excluded: P4");
        if (is_isomorphic(g, star_graph(3))) return filtered(std::move(rec), "excluded: K_{1,3}");
        if (is_isomorphic(g, tree_t1())) return filtered(std::move(rec), "excluded: T1");
    }
    if (is_star(g)) return filtered(std::move(rec), "star K_{1,n-1} (b_t infinite)");
    int bound = 0;
    switch (tag) {
        case CampaignTag::tree_rad:
            bound = delta - 1;
            rec["bound_expr"] = "Delta-1";
            break;
        case CampaignTag::tree_sridharan:
            bound = std::min(delta, (n - 1) / 3);
            rec["bound_expr"] = "min(Delta, floor((n-1)/3))";
            break;
        default:
            bound = (n - 2) / 3;
            rec["bound_expr"] = "floor((n-2)/3)";
    }
    return judge_upper_bound(g, std::move(rec), bound, lim);
}

inline GraphOutcome eval_planar_d8(const CorpusItem& it, const CampaignLimits& lim) {
    const Graph& g = it.graph;
    Json rec = graph_header(it.id, g);
    if (g.order() == 0 || g.min_degree() < 3) return filtered(std::move(rec), "min degree below 3");
    if (!is_connected(g)) return filtered(std::move(rec), "not connected");
    auto emb = plane_embedding(it);
    if (!emb) return filtered(std::move(rec), "not planar");
    const int bound = std::min(g.max_degree() + 8, 10);
    rec["bound_expr"] = "min(Delta+8, 10)";
    std::map<std::string, long long> counters;
    auto report = detect_borodin(g, *emb);
    rec["borodin_hits"] = report.hits.size();
    if (!report.found()) ++counters["borodin-missing"];
    Json attempts = Json::array();
    std::optional<WitnessReport> certified;
    bool any_applicable = false;
    for (const auto& hit : report.hits) {
        auto tries = borodin_witnesses(g, hit);
        if (tries.empty()) {
            ++counters["rule-inapplicable-faces"];
            attempts.push_back({{"hit", to_json(hit)}, {"applicable", false}, {"reason", "face is not an induced cycle"}});
            continue;
        }
        any_applicable = true;
        for (auto& w : tries) {
            count_witness(counters, w);
            attempts.push_back({{"hit", to_json(hit)}, {"applicable", true}, {"witness", to_json(w)}});
            if (certifies(w, bound)) {
                certified = w;
                break;
            }
        }
        if (certified) break;
    }
    rec["attempts"] = std::move(attempts);
    return judge_with_witness(g, std::move(rec), bound, lim, certified, any_applicable || report.hits.empty(), std::move(counters));
}

inline bool has_light_edge(const Graph& g, int max_sum) {
    for (const Edge& e : g.edges()) {
        if (g.degree(e.u) + g.degree(e.v) <= max_sum) return true;
    }
    return false;
}

inline GraphOutcome eval_girth4_d3(const CorpusItem& it, const CampaignLimits& lim) {
    const Graph& g = it.graph;
    Json rec = graph_header(it.id, g);
    if (g.order() == 0 || g.min_degree() < 3) return filtered(std::move(rec), "min degree below 3");
    if (!is_connected(g)) return filtered(std::move(rec), "not connected");
    if (girth(g).value_or(1000) < 4) return filtered(std::move(rec), "girth below 4");
    if (has_light_edge(g, 7)) return filtered(std::move(rec), "edge with degree sum at most 7");
    if (!is_planar(g)) return filtered(std::move(rec), "not planar");
    const int bound = g.max_degree() + 3;
    rec["bound_expr"] = "Delta+3";
    std::map<std::string, long long> counters;
    auto report = detect_girth4_config(g);
    if (!report.found()) ++counters["configuration-missing"];
    Json attempts = Json::array();
    std::optional<WitnessReport> certified;
    for (const auto& hit : report.hits) {
        if (hit.tag != "g4-b") continue;
        for (std::size_t i = 1; i < hit.vertices.size() && !certified; ++i) {
            for (std::size_t k = i + 1; k < hit.vertices.size() && !certified; ++k) {
                auto w = witness_deg3_dist2(g, hit.vertices[i], hit.vertices[k]);
                count_witness(counters, w);
                attempts.push_back({{"hit", to_json(hit)}, {"witness", to_json(w)}});
                if (certifies(w, bound)) certified = w;
            }
        }
        if (certified) break;
    }
    rec["attempts"] = std::move(attempts);
    return judge_with_witness(g, std::move(rec), bound, lim, certified, true, std::move(counters));
}

inline GraphOutcome eval_dist2_d1(const CorpusItem& it, const CampaignLimits& lim) {
    const Graph& g = it.graph;
    Json rec = graph_header(it.id, g);
    if (g.order() == 0 || g.min_degree() < 2) return filtered(std::move(rec), "min degree below 2");
    if (!is_connected(g)) return filtered(std::move(rec), "not connected");
    auto anchors = find_anchors(g, WitnessRule::deg2_dist3);
    if (anchors.empty()) return filtered(std::move(rec), "no two 2-vertices within distance 3");
    const int bound = g.max_degree() + 1;
    rec["bound_expr"] = "Delta+1";
    std::map<std::string, long long> counters;
    Json attempts = Json::array();
    std::optional<WitnessReport> certified;
    for (const auto& a : anchors) {
        if (a[0] > a[1]) continue;
        auto w = witness_deg2_dist3(g, a[0], a[1]);
        count_witness(counters, w);
        attempts.push_back(to_json(w));
        if (certifies(w, bound)) {
            certified = w;
            break;
        }
    }
    rec["attempts"] = std::move(attempts);
    return judge_with_witness(g, std::move(rec), bound, lim, certified, true, std::move(counters));
}

inline GraphOutcome eval_multipartite(const CorpusItem& it, const CampaignLimits& lim) {
    const Graph& g = it.graph;
    Json rec = graph_header(it.id, g);
    auto parts = multipartite_parts(g);
    if (!parts) return filtered(std::move(rec), "not complete multipartite");
    if (parts->back().size() < 2) return filtered(std::move(rec), "part of size 1");
    Json sizes = Json::array();
    for (auto p : *parts) sizes.push_back(p.size());
    rec["parts"] = sizes;
    const int n = g.order();
    const int n1 = parts->front().size();
    const int bound = 4 * n - 2 * n1 - 2;
    rec["bound_expr"] = "4n-2n1-2";
    std::map<std::string, long long> counters;
    auto w = witness_multipartite(g);
    count_witness(counters, w);
    rec["construction"] = to_json(w);
    if (w.verdict != WitnessVerdict::valid_bondage_set) ++counters["construction-invalid"];
    std::optional<WitnessReport> certified;
    if (certifies(w, bound)) certified = w;
    return judge_with_witness(g, std::move(rec), bound, lim, certified, true, std::move(counters));
}

inline GraphOutcome eval_config_g4(const CorpusItem& it) {
    const Graph& g = it.graph;
    Json rec = graph_header(it.id, g);
    if (g.order() == 0 || g.min_degree() < 3) return filtered(std::move(rec), "min degree below 3");
    if (!is_connected(g)) return filtered(std::move(rec), "not connected");
    if (girth(g).value_or(1000) < 4) return filtered(std::move(rec), "girth below 4");
    auto emb = plane_embedding(it);
    if (!emb) return filtered(std::move(rec), "not planar");
    std::map<std::string, long long> counters;
    auto report = detect_girth4_config(g);
    rec["g4_a"] = report.count("g4-a");
    rec["g4_b"] = report.count("g4-b");
    Json hits = Json::array();
    for (std::size_t i = 0; i < report.hits.size() && i < 8; ++i) hits.push_back(to_json(report.hits[i]));
    rec["hits"] = std::move(hits);
    auto ledger = discharge_audit(g, *emb);
    const bool balanced = ledger.initial_total() == Charge(-8);
    const bool conserved = ledger.final_total() == ledger.initial_total();
    rec["charge_initial_total"] = balanced ? "-8" : "unbalanced";
    rec["charge_conserved"] = conserved;
    rec["negative_after_R"] = ledger.any_negative();
    if (report.count("g4-a")) ++counters["has-g4-a"];
    if (report.count("g4-b")) ++counters["has-g4-b"];
    if (!balanced) ++counters["charge-unbalanced"];
    if (!conserved) ++counters["charge-not-conserved"];
    if (!report.found()) return finish(std::move(rec), Verdict::violation, "no configuration found", std::move(counters));
    if (!balanced || !conserved) return finish(std::move(rec), Verdict::violation, "charge identity failed", std::move(counters));
    return finish(std::move(rec), Verdict::holds, "", std::move(counters));
}

inline GraphOutcome eval_config_borodin(const CorpusItem& it) {
    const Graph& g = it.graph;
    Json rec = graph_header(it.id, g);
    if (g.order() == 0 || g.min_degree() < 3) return filtered(std::move(rec), "min degree below 3");
    if (!is_connected(g)) return filtered(std::move(rec), "not connected");
    auto emb = plane_embedding(it);
    if (!emb) return filtered(std::move(rec), "not planar");
    std::map<std::string, long long> counters;
    auto loose = detect_borodin(g, *emb, DegreeReading::at_most);
    auto exact = detect_borodin(g, *emb, DegreeReading::exact);
    for (const char* t : {"borodin-a", "borodin-b", "borodin-c"}) rec[t] = loose.count(t);
    rec["exact_reading_found"] = exact.found();
    if (exact.found()) ++counters["exact-reading-found"];
    else ++counters["exact-reading-missing"];
    Json hits = Json::array();
    for (std::size_t i = 0; i < loose.hits.size() && i < 8; ++i) hits.push_back(to_json(loose.hits[i]));
    rec["hits"] = std::move(hits);
    if (!loose.found()) return finish(std::move(rec), Verdict::violation, "no configuration found", std::move(counters));
    return finish(std::move(rec), Verdict::holds, "", std::move(counters));
}

/// Runs `work(i)` for i in [0, count) on `jobs` threads and hands results to `emit` in index
/// order as soon as the contiguous prefix is complete.
template <class T, class Work, class Emit>
void ordered_parallel(std::size_t count, int jobs, Work work, Emit emit) {
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) emit(work(i));
        return;
    }
    std::vector<std::optional<T>> slots(count);
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::condition_variable cv;
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                std::optional<T> out;
                try {
                    out = work(i);
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!failure) failure = std::current_exception();
                    next = count;
                }
                std::lock_guard lock(mu);
                slots[i] = std::move(out);
                cv.notify_all();
            }
        });
    }
    for (std::size_t i = 0; i < count; ++i) {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return slots[i].has_value() || failure; });
        if (failure) break;
        T value = std::move(*slots[i]);
        slots[i].reset();
        lock.unlock();
        emit(std::move(value));
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

/// One graph of a campaign.
inline GraphOutcome evaluate(CampaignTag tag, const CorpusItem& item, const CampaignLimits& lim = {}) {
    GraphOutcome out;
    switch (tag) {
        case CampaignTag::paths: out = detail::eval_paths(item, lim); break;
        case CampaignTag::cycles: out = detail::eval_cycles(item, lim); break;
        case CampaignTag::bipartite: out = detail::eval_bipartite(item, lim); break;
        case CampaignTag::tree_rad:
        case CampaignTag::tree_sridharan:
        case CampaignTag::tree_n23: out = detail::eval_tree(tag, item, lim); break;
        case CampaignTag::planar_d8: out = detail::eval_planar_d8(item, lim); break;
        case CampaignTag::girth4_d3: out = detail::eval_girth4_d3(item, lim); break;
        case CampaignTag::dist2_d1: out = detail::eval_dist2_d1(item, lim); break;
        case CampaignTag::multipartite: out = detail::eval_multipartite(item, lim); break;
        case CampaignTag::config_g4: out = detail::eval_config_g4(item); break;
        case CampaignTag::config_borodin: out = detail::eval_config_borodin(item); break;
    }
    Json rec;
    rec["tag"] = to_string(tag);
    for (auto& [k, v] : out.record.items()) rec[k] = std::move(v);
    out.record = std::move(rec);
    return out;
}

using RecordSink = std::function<void(const Json&)>;

inline CampaignResult run_campaign(CampaignTag tag, const std::vector<CorpusItem>& corpus, const CampaignLimits& lim,
                                   const RecordSink& sink = {}, std::string corpus_name = "") {
    CampaignResult res;
    res.tag = to_string(tag);
    res.corpus = std::move(corpus_name);
    detail::ordered_parallel<GraphOutcome>(
        corpus.size(), lim.jobs, [&](std::size_t i) { return evaluate(tag, corpus[i], lim); },
        [&](GraphOutcome o) {
            ++res.considered;
            switch (o.verdict) {
                case Verdict::filtered: ++res.filtered_reasons[o.reason]; break;
                case Verdict::holds: ++res.checked; ++res.holds; break;
                case Verdict::violation: ++res.checked; res.violations.push_back(o.record); break;
                case Verdict::skipped: ++res.checked; ++res.skipped; ++res.skipped_reasons[o.reason]; break;
            }
            for (const auto& [k, v] : o.counters) res.counters[k] += v;
            if (sink) sink(o.record);
        });
    return res;
}

inline CampaignResult run_campaign(CampaignTag tag, std::string_view corpus_source, const CampaignLimits& lim,
                                   const RecordSink& sink = {}) {
    return run_campaign(tag, load_corpus(corpus_source), lim, sink, std::string(corpus_source));
}

// ---------------------------------------------------------------------------
// search by value
// ---------------------------------------------------------------------------

struct SearchSummary {
    std::size_t scanned = 0;
    std::size_t matched = 0;
    std::size_t excluded = 0;   ///< isolated vertices: b_t undefined
    std::size_t undecided = 0;  ///< solver budget ran out below k
    Json to_json() const {
        return Json{{"summary", true}, {"scanned", scanned}, {"matched", matched}, {"excluded", excluded}, {"undecided", undecided}};
    }
};

/// Emits every corpus graph with certified b_t == k (search capped at k).
inline SearchSummary search_by_bondage(const std::vector<CorpusItem>& corpus, int k, const CampaignLimits& lim,
                                       const RecordSink& sink) {
    if (k < 1) throw InputError("search target must be at least 1");
    enum class Kind { match, miss, excluded, undecided };
    SearchSummary s;
    detail::ordered_parallel<std::pair<Kind, Json>>(
        corpus.size(), lim.jobs,
        [&](std::size_t i) -> std::pair<Kind, Json> {
            const Graph& g = corpus[i].graph;
            if (g.order() == 0 || has_isolated_vertex(g)) return {Kind::excluded, {}};
            BondageOptions o;
            o.cap = k;
            o.node_budget = lim.node_budget;
            auto cert = bondage(g, o);
            if (cert.status == BondageStatus::finite && cert.value == k) {
                Json rec = graph_header(corpus[i].id, g);
                rec["bt"] = to_json(cert);
                return {Kind::match, std::move(rec)};
            }
            if (cert.budget_exhausted) return {Kind::undecided, {}};
            return {Kind::miss, {}};
        },
        [&](std::pair<Kind, Json> r) {
            ++s.scanned;
            if (r.first == Kind::match) {
                ++s.matched;
                if (sink) sink(r.second);
            } else if (r.first == Kind::excluded) {
                ++s.excluded;
            } else if (r.first == Kind::undecided) {
                ++s.undecided;
            }
        });
    return s;
}

// ---------------------------------------------------------------------------
// earlier bounds
// ---------------------------------------------------------------------------

enum class PriorStatus { holds, violated, not_applicable, undecided };

inline std::string to_string(PriorStatus s) {
    switch (s) {
        case PriorStatus::holds: return "holds";
        case PriorStatus::violated: return "violated";
        case PriorStatus::not_applicable: return "not-applicable";
        case PriorStatus::undecided: return "undecided";
    }
    return "?";
}

struct PriorBoundCheck {
    std::string name;
    std::string expression;
    PriorStatus status = PriorStatus::not_applicable;
    std::optional<int> bound;
    std::string why;  ///< hypothesis that failed, when not applicable
};

struct PriorBoundsReport {
    std::optional<BondageCertificate> certificate;  ///< absent when b_t is undefined (isolated vertex)
    std::vector<PriorBoundCheck> checks;

    const PriorBoundCheck& get(std::string_view name) const {
        for (const auto& c : checks) {
            if (c.name == name) return c;
        }
        throw InputError("no bound named " + std::string(name));
    }
};

/// Checks the general-graph and tree bounds from earlier literature with the certified b_t.
/// A tree counts as girth >= 5 (acyclic) for the general bounds.
inline PriorBoundsReport verify_prior_bounds(const Graph& g, const CampaignLimits& lim = {}) {
    PriorBoundsReport rep;
    const int n = g.order();
    const bool connected = n > 0 && is_connected(g);
    const auto gi = girth(g);
    const bool tree = is_tree(g);
    const bool star = detail::is_star(g);
    const int delta = n ? g.max_degree() : 0;
    auto general = [&](std::string name, std::string expr, bool hyp, std::string hyp_text, int bound) {
        PriorBoundCheck c{std::move(name), std::move(expr), PriorStatus::not_applicable, std::nullopt, ""};
        if (!connected || n < 4) {
            c.why = "needs a connected graph of order >= 4";
        } else if (!hyp) {
            c.why = std::move(hyp_text);
        } else {
            c.bound = bound;
        }
        rep.checks.push_back(std::move(c));
    };
    bool triangle_support = false;
    bool triangle_deg2 = false;
    for (const auto& t : all_induced_cycles(g, 3)) {
        for (Vertex v : t) {
            triangle_support = triangle_support || is_support_vertex(g, v);
            triangle_deg2 = triangle_deg2 || g.degree(v) == 2;
        }
    }
    general("sridharan-girth5", "n-1", !gi || *gi >= 5, "girth below 5", n - 1);
    general("sridharan-girth4", "n-2", gi && *gi == 4, "girth is not 4", n - 2);
    general("sridharan-triangle-support", "n-2", triangle_support, "no triangle with a support vertex", n - 2);
    general("sridharan-triangle-deg2", "n-1", triangle_deg2, "no triangle with a 2-vertex", n - 1);
    auto tree_bound = [&](std::string name, std::string expr, bool hyp, std::string hyp_text, int bound) {
        PriorBoundCheck c{std::move(name), std::move(expr), PriorStatus::not_applicable, std::nullopt, ""};
        if (!tree || n < 2) {
            c.why = "not a tree";
        } else if (star) {
            c.why = "star K_{1,n-1}";
        } else if (!hyp) {
            c.why = std::move(hyp_text);
        } else {
            c.bound = bound;
        }
        rep.checks.push_back(std::move(c));
    };
    tree_bound("sridharan-tree", "min(Delta, floor((n-1)/3))", true, "", std::min(delta, (n - 1) / 3));
    tree_bound("rad-tree", "Delta-1", delta >= 3, "max degree below 3", delta - 1);
    int top = -1;
    for (const auto& c : rep.checks) {
        if (c.bound) top = std::max(top, *c.bound);
    }
    if (n == 0 || has_isolated_vertex(g)) {
        for (auto& c : rep.checks) {
            if (c.bound) {
                c.status = PriorStatus::not_applicable;
                c.why = "isolated vertex";
                c.bound.reset();
            }
        }
        return rep;
    }
    if (top < 0) return rep;
    rep.certificate = solve_up_to(g, top, lim);
    for (auto& c : rep.checks) {
        if (!c.bound) continue;
        switch (compare_bound(*rep.certificate, *c.bound)) {
            case BoundStatus::holds: c.status = PriorStatus::holds; break;
            case BoundStatus::violated: c.status = PriorStatus::violated; break;
            default: c.status = PriorStatus::undecided;
        }
    }
    return rep;
}

inline Json to_json(const PriorBoundsReport& r) {
    Json j;
    j["bt"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json x;
        x["name"] = c.name;
        x["expression"] = c.expression;
        x["status"] = to_string(c.status);
        if (c.bound) x["bound"] = *c.bound;
        if (!c.why.empty()) x["why"] = c.why;
        checks.push_back(std::move(x));
    }
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace totbond
