#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace totbond {

/// gamma_t together with a total dominating set attaining it.
struct DominationCertificate {
    int gamma_t = 0;
    VertexSet witness;
};

namespace detail {

inline void require_isolate_free(std::span<const std::uint64_t> adj) {
    for (std::size_t v = 0; v < adj.size(); ++v) {
        if (adj[v] == 0) {
            throw DomainError("gamma_t is undefined: vertex " + std::to_string(v) + " is isolated");
        }
    }
}

/// Branch-and-bound search for a total dominating set of size at most `budget` over a raw
/// adjacency (one word per vertex). Branches on the undominated vertex with the fewest
/// admissible dominators; candidates whose coverage of the undominated set is contained in a
/// sibling's are skipped, and siblings already tried are forbidden in later branches.
class TdsSearch {
 public:
    explicit TdsSearch(std::span<const std::uint64_t> adj) : adj_(adj) {}

    std::optional<VertexSet> find(int budget) {
        const std::uint64_t all = VertexSet::range(static_cast<int>(adj_.size())).bits();
        std::uint64_t chosen = 0;
        if (!search(all, chosen, budget, 0)) return std::nullopt;
        return VertexSet(chosen);
    }

 private:
    bool search(std::uint64_t undominated, std::uint64_t& chosen, int budget, std::uint64_t forbidden) {
        if (undominated == 0) return true;
        if (budget == 0) return false;

        // most constrained undominated vertex
        int pick = -1;
        int fewest = 65;
        for (std::uint64_t rest = undominated; rest != 0; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            int c = std::popcount(adj_[v] & ~forbidden & ~chosen);
            if (c < fewest) {
                fewest = c;
                pick = v;
                if (c <= 1) break;
            }
        }
        if (fewest == 0) return false;

        std::array<int, 64> cand{};
        std::array<std::uint64_t, 64> cover{};
        int k = 0;
        int best_cover = 0;
        for (std::uint64_t rest = adj_[pick] & ~forbidden & ~chosen; rest != 0; rest &= rest - 1) {
            int u = std::countr_zero(rest);
            cand[k] = u;
            cover[k] = adj_[u] & undominated;
            ++k;
        }
        // global bound: no single unchosen, admissible vertex covers more than best_cover
        for (std::uint64_t rest = ~forbidden & ~chosen & VertexSet::range(static_cast<int>(adj_.size())).bits();
             rest != 0; rest &= rest - 1) {
            best_cover = std::max(best_cover, std::popcount(adj_[std::countr_zero(rest)] & undominated));
        }
        if (best_cover * budget < std::popcount(undominated)) return false;

        // order by coverage, largest first, ties by id
        std::array<int, 64> order{};
        for (int i = 0; i < k; ++i) order[i] = i;
        std::sort(order.begin(), order.begin() + k, [&](int a, int b) {
            int ca = std::popcount(cover[a]);
            int cb = std::popcount(cover[b]);
            return ca != cb ? ca > cb : cand[a] < cand[b];
        });

        std::uint64_t local_forbidden = forbidden;
        for (int oi = 0; oi < k; ++oi) {
            int i = order[oi];
            bool dominated = false;
            for (int oj = 0; oj < k && !dominated; ++oj) {
                if (oj == oi) continue;
                int j = order[oj];
                if ((local_forbidden >> cand[j]) & 1U) continue;
                if ((cover[i] & ~cover[j]) == 0 && (cover[i] != cover[j] || oj < oi)) dominated = true;
            }
            if (!dominated) {
                int u = cand[i];
                chosen |= std::uint64_t{1} << u;
                if (search(undominated & ~adj_[u], chosen, budget - 1, local_forbidden)) return true;
                chosen &= ~(std::uint64_t{1} << u);
            }
            local_forbidden |= std::uint64_t{1} << cand[i];
        }
        return false;
    }

    std::span<const std::uint64_t> adj_;
};

inline VertexSet greedy_tds(std::span<const std::uint64_t> adj) {
    const int n = static_cast<int>(adj.size());
    std::uint64_t undominated = VertexSet::range(n).bits();
    std::uint64_t chosen = 0;
    while (undominated != 0) {
        int best = -1;
        int best_cover = -1;
        for (int u = 0; u < n; ++u) {
            if ((chosen >> u) & 1U) continue;
            int c = std::popcount(adj[u] & undominated);
            if (c > best_cover) {
                best_cover = c;
                best = u;
            }
        }
        chosen |= std::uint64_t{1} << best;
        undominated &= ~adj[best];
    }
    return VertexSet(chosen);
}

/// Each component with at least one edge needs two vertices, and one vertex dominates at most Delta.
inline int tds_lower_bound(std::span<const std::uint64_t> adj) {
    const int n = static_cast<int>(adj.size());
    int delta = 1;
    for (auto row : adj) delta = std::max(delta, std::popcount(row));
    int components = 0;
    std::uint64_t left = VertexSet::range(n).bits();
    while (left != 0) {
        std::uint64_t seen = left & (~left + 1);
        std::uint64_t frontier = seen;
        while (frontier != 0) {
            std::uint64_t next = 0;
            for (std::uint64_t r = frontier; r != 0; r &= r - 1) next |= adj[std::countr_zero(r)];
            frontier = next & ~seen;
            seen |= frontier;
        }
        left &= ~seen;
        ++components;
    }
    return std::max(2 * components, (n + delta - 1) / delta);
}

inline DominationCertificate gamma_t_raw(std::span<const std::uint64_t> adj) {
    require_isolate_free(adj);
    VertexSet upper = greedy_tds(adj);
    TdsSearch search(adj);
    for (int k = tds_lower_bound(adj); k < upper.size(); ++k) {
        if (auto found = search.find(k)) return {found->size(), *found};
    }
    return {upper.size(), upper};
}

}  // namespace detail

/// Every vertex of g has a neighbor in d.
inline bool is_total_dominating(const Graph& g, VertexSet d) {
    detail::require_isolate_free(g.adjacency());
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!g.neighbors(v).intersects(d)) return false;
    }
    return true;
}

/// Exact total domination number with a minimum witness.
inline DominationCertificate gamma_t(const Graph& g) { return detail::gamma_t_raw(g.adjacency()); }

/// A total dominating set of size at most k, if one exists.
inline std::optional<VertexSet> find_total_dominating_set(const Graph& g, int k) {
    detail::require_isolate_free(g.adjacency());
    return detail::TdsSearch(g.adjacency()).find(k);
}

/// Exhaustive gamma_t over vertex subsets in order of size. Shares no code with the
/// branch-and-bound solver and is used to re-validate its certificates; exponential in n.
inline int exhaustive_gamma_t(const Graph& g) {
    detail::require_isolate_free(g.adjacency());
    const int n = g.order();
    if (n > 30) throw InputError("exhaustive_gamma_t supports n <= 30");
    for (int k = 2; k <= n; ++k) {
        // Gosper's hack over k-subsets of n bits
        std::uint64_t s = (std::uint64_t{1} << k) - 1;
        const std::uint64_t limit = std::uint64_t{1} << n;
        while (s < limit) {
            bool ok = true;
            for (Vertex v = 0; v < n && ok; ++v) ok = (g.adjacency()[v] & s) != 0;
            if (ok) return k;
            std::uint64_t c = s & (~s + 1);
            std::uint64_t r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return n;  // unreachable for isolate-free graphs: V itself dominates
}

}  // namespace totbond
