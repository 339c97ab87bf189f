#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "domination.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "matching.hpp"

namespace totbond {

enum class BondageStatus { finite, infinite, unknown_above_cap };

inline std::string to_string(BondageStatus s) {
    switch (s) {
        case BondageStatus::finite: return "finite";
        case BondageStatus::infinite: return "infinite";
        case BondageStatus::unknown_above_cap: return "unknown-above-cap";
    }
    return "?";
}

/// Outcome of the staged total bondage search.
///
/// finite: `value` = b_t, `witness` is the lexicographically least minimum total bondage edge
/// set (edges sorted, compared as index sequences), `gamma_after` = gamma_t(G - witness).
/// infinite: no total bondage edge set exists. unknown_above_cap: none of size <= cap.
struct BondageCertificate {
    BondageStatus status = BondageStatus::unknown_above_cap;
    int value = 0;
    EdgeSet witness;
    int gamma_before = 0;
    int gamma_after = 0;
    int cap = 0;
    /// True when infinity was decided by the matching criterion rather than exhaustion.
    bool infinity_by_matching = false;
    /// unknown_above_cap only: the node budget ran out, so `cap` is the last size fully searched.
    bool budget_exhausted = false;
};

struct BondageOptions {
    /// Largest |B| tried. Defaults to min(m, Delta + 9).
    std::optional<int> cap;
    /// Decide b_t = infinity via 2*nu(G) <= gamma_t(G) instead of exhausting all subsets.
    bool use_matching_criterion = true;
    /// Abort after this many search nodes (deterministic; no timers).
    std::optional<long long> node_budget;
};

/// True iff some total bondage edge set exists, decided by 2*nu(G) > gamma_t(G).
///
/// Edge-minimal isolate-free spanning subgraphs are star forests; a star forest with c
/// components has gamma_t = 2c, and the largest such c equals nu(G) (Gallai). Since deleting
/// edges never lowers gamma_t, the largest gamma_t reachable is 2*nu(G).
inline bool bondage_finite(const Graph& g) {
    int gamma = gamma_t(g).gamma_t;
    return 2 * max_matching_size(g) > gamma;
}

/// Finiteness by sweeping every edge subset; exponential, for validating bondage_finite.
inline bool bondage_finite_exhaustive(const Graph& g) {
    const int m = g.size();
    if (m > 24) throw InputError("bondage_finite_exhaustive supports m <= 24");
    const int gamma = exhaustive_gamma_t(g);
    const auto& edges = g.edges();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
        std::vector<std::uint64_t> rows(g.adjacency().begin(), g.adjacency().end());
        for (int i = 0; i < m; ++i) {
            if ((mask >> i) & 1U) {
                rows[edges[i].u] &= ~(std::uint64_t{1} << edges[i].v);
                rows[edges[i].v] &= ~(std::uint64_t{1} << edges[i].u);
            }
        }
        if (std::find(rows.begin(), rows.end(), 0) != rows.end()) continue;
        if (exhaustive_gamma_t(Graph::from_adjacency(rows)) > gamma) return true;
    }
    return false;
}

namespace detail {

/// Lexicographic enumeration of edge-index combinations of a fixed size, pruning any prefix
/// that isolates a vertex. Total dominating sets of size gamma found along the way are cached:
/// a candidate B is rejected cheaply when some cached set still dominates G - B.
class BondageSearch {
 public:
    BondageSearch(const Graph& g, int gamma, std::optional<long long> budget = std::nullopt)
        : g_(g), gamma_(gamma), budget_(budget), rows_(g.adjacency().begin(), g.adjacency().end()) {
        if (auto d = find_total_dominating_set(g, gamma)) cache_.push_back(*d);
    }

    std::optional<EdgeSet> find_of_size(int size) {
        chosen_.clear();
        if (extend(0, size)) {
            EdgeSet out;
            for (int i : found_) out.insert(g_.edges()[i]);
            return out;
        }
        return std::nullopt;
    }

    bool aborted() const { return aborted_; }

 private:
    bool extend(int from, int remaining) {
        if (budget_ && ++nodes_ > *budget_) aborted_ = true;
        if (aborted_) return false;
        if (remaining == 0) {
            if (!is_bondage_set()) return false;
            found_ = chosen_;
            return true;
        }
        const int m = g_.size();
        for (int i = from; i <= m - remaining; ++i) {
            const Edge e = g_.edges()[i];
            if (std::popcount(rows_[e.u]) == 1 || std::popcount(rows_[e.v]) == 1) continue;
            rows_[e.u] &= ~(std::uint64_t{1} << e.v);
            rows_[e.v] &= ~(std::uint64_t{1} << e.u);
            chosen_.push_back(i);
            bool hit = extend(i + 1, remaining - 1);
            chosen_.pop_back();
            rows_[e.u] |= std::uint64_t{1} << e.v;
            rows_[e.v] |= std::uint64_t{1} << e.u;
            if (hit) return true;
        }
        return false;
    }

    bool still_dominates(VertexSet d) const {
        for (auto row : rows_) {
            if ((row & d.bits()) == 0) return false;
        }
        return true;
    }

    bool is_bondage_set() {
        for (VertexSet d : cache_) {
            if (still_dominates(d)) return false;
        }
        auto d = TdsSearch(rows_).find(gamma_);
        if (!d) return true;
        if (cache_.size() < 256) cache_.push_back(*d);
        return false;
    }

    const Graph& g_;
    int gamma_;
    std::optional<long long> budget_;
    long long nodes_ = 0;
    bool aborted_ = false;
    std::vector<std::uint64_t> rows_;
    std::vector<int> chosen_;
    std::vector<int> found_;
    std::vector<VertexSet> cache_;
};

}  // namespace detail

/// Staged exact total bondage number: tries |B| = 1, 2, ... up to the cap.
inline BondageCertificate bondage(const Graph& g, const BondageOptions& opts = {}) {
    detail::require_isolate_free(g.adjacency());
    BondageCertificate cert;
    const int m = g.size();
    cert.cap = std::min(opts.cap.value_or(g.max_degree() + 9), m);
    cert.gamma_before = gamma_t(g).gamma_t;
    if (opts.use_matching_criterion && 2 * max_matching_size(g) <= cert.gamma_before) {
        cert.status = BondageStatus::infinite;
        cert.infinity_by_matching = true;
        return cert;
    }
    detail::BondageSearch search(g, cert.gamma_before, opts.node_budget);
    for (int size = 1; size <= cert.cap; ++size) {
        auto b = search.find_of_size(size);
        if (search.aborted()) {
            cert.status = BondageStatus::unknown_above_cap;
            cert.cap = size - 1;
            cert.budget_exhausted = true;
            return cert;
        }
        if (b) {
            cert.status = BondageStatus::finite;
            cert.value = size;
            cert.witness = *b;
            cert.gamma_after = gamma_t(delete_edges(g, *b).graph).gamma_t;
            return cert;
        }
    }
    cert.status = cert.cap >= m ? BondageStatus::infinite : BondageStatus::unknown_above_cap;
    return cert;
}

/// Re-checks a certificate through the exhaustive gamma_t path.
inline bool verify_certificate(const Graph& g, const BondageCertificate& cert) {
    if (cert.status != BondageStatus::finite) return true;
    if (static_cast<int>(cert.witness.size()) != cert.value) return false;
    auto cut = delete_edges(g, cert.witness);
    if (cut.has_isolated) return false;
    int before = exhaustive_gamma_t(g);
    int after = exhaustive_gamma_t(cut.graph);
    return before == cert.gamma_before && after == cert.gamma_after && after > before;
}

}  // namespace totbond
