// Brute-force reference implementations used only as test oracles. Everything
// here works by exhaustive enumeration over bitmask subsets or permutations
// and stays independent of the production code paths it checks.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "codis/graph.hpp"

namespace oracle {

using codis::Graph;

inline std::vector<uint64_t> adjacency_masks(const Graph& g) {
    std::vector<uint64_t> adj(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1ULL << v;
        adj[v] |= 1ULL << u;
    }
    return adj;
}

inline bool mask_independent(const std::vector<uint64_t>& adj, uint64_t s) {
    uint64_t rest = s;
    while (rest) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        if (adj[v] & s) return false;
    }
    return true;
}

inline std::vector<uint64_t> all_independent_sets(const Graph& g) {
    auto adj = adjacency_masks(g);
    std::vector<uint64_t> out;
    for (uint64_t s = 0; s < (uint64_t(1) << g.n()); ++s)
        if (mask_independent(adj, s)) out.push_back(s);
    return out;
}

inline std::vector<uint64_t> maximal_independent_sets(const Graph& g) {
    auto adj = adjacency_masks(g);
    auto sets = all_independent_sets(g);
    std::vector<uint64_t> out;
    for (uint64_t s : sets) {
        bool maximal = true;
        for (int v = 0; v < g.n() && maximal; ++v)
            if (!((s >> v) & 1) && (adj[v] & s) == 0) maximal = false;
        if (maximal) out.push_back(s);
    }
    return out;
}

inline int independence_number(const Graph& g) {
    int best = 0;
    for (uint64_t s : all_independent_sets(g)) best = std::max(best, __builtin_popcountll(s));
    return best;
}

inline bool well_covered(const Graph& g) {
    auto mis = oracle::maximal_independent_sets(g);
    for (uint64_t s : mis)
        if (__builtin_popcountll(s) != __builtin_popcountll(mis.front())) return false;
    return true;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    int n = a.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (a.has_edge(i, j) != b.has_edge(perm[i], perm[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// G[S] isomorphic to a cycle: connected and 2-regular.
inline bool subset_induces_cycle(const Graph& g, uint64_t s) {
    int size = __builtin_popcountll(s);
    if (size < 3) return false;
    auto adj = adjacency_masks(g);
    uint64_t rest = s;
    while (rest) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        if (__builtin_popcountll(adj[v] & s) != 2) return false;
    }
    // connectivity within s
    uint64_t seen = s & (~s + 1);
    while (true) {
        uint64_t grow = seen;
        uint64_t r2 = seen;
        while (r2) {
            int v = __builtin_ctzll(r2);
            r2 &= r2 - 1;
            grow |= adj[v] & s;
        }
        if (grow == seen) break;
        seen = grow;
    }
    return seen == s;
}

inline int girth(const Graph& g) {  // 0 when acyclic
    int best = 0;
    for (uint64_t s = 0; s < (uint64_t(1) << g.n()); ++s)
        if (subset_induces_cycle(g, s)) {
            int len = __builtin_popcountll(s);
            if (best == 0 || len < best) best = len;
        }
    return best;
}

inline bool chordal(const Graph& g) {
    for (uint64_t s = 0; s < (uint64_t(1) << g.n()); ++s)
        if (__builtin_popcountll(s) >= 4 && subset_induces_cycle(g, s)) return false;
    return true;
}

inline bool has_induced_cycle_in(const Graph& g, const std::vector<int>& lengths) {
    for (uint64_t s = 0; s < (uint64_t(1) << g.n()); ++s)
        if (subset_induces_cycle(g, s)) {
            int len = __builtin_popcountll(s);
            for (int want : lengths)
                if (len == want) return true;
        }
    return false;
}

inline int matching_number(const Graph& g) {
    auto es = g.edges();
    int m = static_cast<int>(es.size());
    int best = 0;
    for (uint64_t pick = 0; pick < (uint64_t(1) << m); ++pick) {
        uint64_t used = 0;
        bool ok = true;
        for (int e = 0; e < m && ok; ++e) {
            if (!((pick >> e) & 1)) continue;
            uint64_t ends = (1ULL << es[e].first) | (1ULL << es[e].second);
            if (used & ends) ok = false;
            used |= ends;
        }
        if (ok) best = std::max(best, __builtin_popcountll(pick));
    }
    return best;
}

inline int induced_matching_number(const Graph& g) {
    auto es = g.edges();
    int m = static_cast<int>(es.size());
    int best = 0;
    for (uint64_t pick = 0; pick < (uint64_t(1) << m); ++pick) {
        bool ok = true;
        for (int e = 0; e < m && ok; ++e) {
            if (!((pick >> e) & 1)) continue;
            for (int f = e + 1; f < m && ok; ++f) {
                if (!((pick >> f) & 1)) continue;
                auto [a, b] = es[e];
                auto [c, d] = es[f];
                if (a == c || a == d || b == c || b == d || g.has_edge(a, c) || g.has_edge(a, d) ||
                    g.has_edge(b, c) || g.has_edge(b, d))
                    ok = false;
            }
        }
        if (ok) best = std::max(best, __builtin_popcountll(pick));
    }
    return best;
}

inline int domination_number(const Graph& g) {
    auto adj = adjacency_masks(g);
    uint64_t full = g.n() == 64 ? ~0ULL : (uint64_t(1) << g.n()) - 1;
    int best = g.n();
    for (uint64_t s = 0; s < (uint64_t(1) << g.n()); ++s) {
        uint64_t covered = s;
        uint64_t rest = s;
        while (rest) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            covered |= adj[v];
        }
        if (covered == full) best = std::min(best, __builtin_popcountll(s));
    }
    return best;
}

// Definitional shedding test over all independent sets of G - N[x].
inline bool shedding(const Graph& g, int x) {
    auto adj = adjacency_masks(g);
    uint64_t nx_closed = adj[x] | (1ULL << x);
    if (adj[x] == 0) return false;
    for (uint64_t s = 0; s < (uint64_t(1) << g.n()); ++s) {
        if (s & nx_closed) continue;
        if (!mask_independent(adj, s)) continue;
        bool extends = false;
        uint64_t nbrs = adj[x];
        while (nbrs && !extends) {
            int v = __builtin_ctzll(nbrs);
            nbrs &= nbrs - 1;
            if ((adj[v] & s) == 0) extends = true;
        }
        if (!extends) return false;
    }
    return true;
}

inline bool vertex_decomposable(const Graph& g) {
    if (g.edge_count() == 0) return true;
    for (int x = 0; x < g.n(); ++x) {
        if (!shedding(g, x)) continue;
        if (vertex_decomposable(g.remove_vertex(x).graph) &&
            vertex_decomposable(g.remove_closed_neighborhood(x).graph))
            return true;
    }
    return false;
}

inline bool codominated(const Graph& g, int x) {
    auto adj = adjacency_masks(g);
    uint64_t nx = adj[x] | (1ULL << x);
    for (int y = 0; y < g.n(); ++y) {
        if (y == x) continue;
        uint64_t ny = adj[y] | (1ULL << y);
        if ((ny & ~nx) == 0) return true;
    }
    return false;
}

inline bool codismantlable(const Graph& g) {
    if (g.edge_count() == 0) return true;
    for (int x = 0; x < g.n(); ++x)
        if (codominated(g, x) && codismantlable(g.remove_vertex(x).graph)) return true;
    return false;
}

// Dense GF(2) Gaussian elimination on an explicit boundary matrix; the faces
// arrive as sorted vertex lists.
inline int gf2_rank_dense(std::vector<std::vector<int>> rows) {
    int rank = 0;
    size_t cols = 0;
    for (const auto& r : rows) cols = std::max(cols, r.size());
    size_t pivot_row = 0;
    for (size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
        size_t pr = pivot_row;
        while (pr < rows.size() && (c >= rows[pr].size() || rows[pr][c] == 0)) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[pivot_row], rows[pr]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row) continue;
            if (c < rows[r].size() && rows[r][c]) {
                for (size_t j = 0; j < cols; ++j) {
                    int a = j < rows[r].size() ? rows[r][j] : 0;
                    int b = j < rows[pivot_row].size() ? rows[pivot_row][j] : 0;
                    if (j >= rows[r].size()) rows[r].resize(cols, 0);
                    rows[r][j] = a ^ b;
                }
            }
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

}  // namespace oracle
