#include "codis/matching.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace codis {

namespace {

// Edmonds' blossom algorithm, O(V^3) contraction-by-base variant.
struct Blossom {
    const Graph& g;
    int n;
    std::vector<int> match, parent, base;
    std::vector<bool> blossom, used;

    explicit Blossom(const Graph& graph) : g(graph), n(graph.n()), match(n, -1) {}

    int lca(int a, int b) {
        std::vector<bool> on_path(n, false);
        int x = a;
        while (true) {
            x = base[x];
            on_path[x] = true;
            if (match[x] == -1) break;
            x = parent[match[x]];
        }
        int y = b;
        while (true) {
            y = base[y];
            if (on_path[y]) return y;
            y = parent[match[y]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = true;
            blossom[base[match[v]]] = true;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    int find_path(int root) {
        used.assign(n, false);
        parent.assign(n, -1);
        base.resize(n);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = true;
        std::deque<int> q{root};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int to = g.neighbors(v).first(); to != -1; to = g.neighbors(v).next(to)) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    int cur_base = lca(v, to);
                    blossom.assign(n, false);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i) {
                        if (blossom[base[i]]) {
                            base[i] = cur_base;
                            if (!used[i]) {
                                used[i] = true;
                                q.push_back(i);
                            }
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = true;
                    q.push_back(match[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            int pv = parent[v], ppv = match[pv];
            match[v] = pv;
            match[pv] = v;
            v = ppv;
        }
    }

    void solve() {
        for (int v = 0; v < n; ++v) {
            if (match[v] == -1) {
                int u = find_path(v);
                if (u != -1) augment(u);
            }
        }
    }
};

}  // namespace

std::vector<std::pair<int, int>> maximum_matching(const Graph& g) {
    Blossom b(g);
    b.solve();
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < g.n(); ++v)
        if (b.match[v] > v) out.emplace_back(v, b.match[v]);
    return out;
}

int matching_number(const Graph& g) { return static_cast<int>(maximum_matching(g).size()); }

namespace {

// Conflict masks over the edge list: two edges conflict when they share an
// endpoint or are joined by an edge, so induced matchings are exactly the
// independent sets of the conflict relation.
struct ImSearch {
    std::vector<std::vector<uint64_t>> conflict;  // multiword masks
    int m;
    int words;

    explicit ImSearch(const Graph& g) {
        auto es = g.edges();
        m = static_cast<int>(es.size());
        words = (m + 63) / 64;
        conflict.assign(m, std::vector<uint64_t>(words, 0));
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                auto [a, b] = es[i];
                auto [c, d] = es[j];
                bool clash = a == c || a == d || b == c || b == d || g.has_edge(a, c) ||
                             g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d);
                if (clash) {
                    conflict[i][j >> 6] |= 1ULL << (j & 63);
                    conflict[j][i >> 6] |= 1ULL << (i & 63);
                }
            }
    }

    static int popcount(const std::vector<uint64_t>& w) {
        int c = 0;
        for (uint64_t x : w) c += __builtin_popcountll(x);
        return c;
    }

    int best = 0;
    std::vector<int> best_set, cur;

    void dfs(std::vector<uint64_t> avail, int from) {
        if (static_cast<int>(cur.size()) > best) {
            best = static_cast<int>(cur.size());
            best_set = cur;
        }
        if (static_cast<int>(cur.size()) + popcount(avail) <= best) return;
        for (int e = from; e < m; ++e) {
            if (!((avail[e >> 6] >> (e & 63)) & 1)) continue;
            if (static_cast<int>(cur.size()) + 1 + remaining_after(avail, e) <= best) continue;
            std::vector<uint64_t> next(avail);
            next[e >> 6] &= ~(1ULL << (e & 63));
            for (int w = 0; w < words; ++w) next[w] &= ~conflict[e][w];
            // clear everything below e: explored by earlier branches
            for (int w = 0; w < (e >> 6); ++w) next[w] = 0;
            next[e >> 6] &= ~((1ULL << (e & 63)) - 1);
            cur.push_back(e);
            dfs(std::move(next), e + 1);
            cur.pop_back();
        }
    }

    int remaining_after(const std::vector<uint64_t>& avail, int e) {
        int c = 0;
        for (int w = 0; w < words; ++w) {
            uint64_t x = avail[w] & ~conflict[e][w];
            if (w == (e >> 6)) x &= ~((1ULL << (e & 63)) | ((1ULL << (e & 63)) - 1));
            if (w < (e >> 6)) x = 0;
            c += __builtin_popcountll(x);
        }
        return c;
    }

    // Enumerate all maximum induced matchings once `best` is known.
    void enumerate(std::vector<uint64_t> avail, int from, int target,
                   const std::function<bool(const std::vector<int>&)>& cb, bool& stop) {
        if (stop) return;
        if (static_cast<int>(cur.size()) == target) {
            if (!cb(cur)) stop = true;
            return;
        }
        if (static_cast<int>(cur.size()) + popcount(avail) < target) return;
        for (int e = from; e < m && !stop; ++e) {
            if (!((avail[e >> 6] >> (e & 63)) & 1)) continue;
            std::vector<uint64_t> next(avail);
            for (int w = 0; w < words; ++w) next[w] &= ~conflict[e][w];
            next[e >> 6] &= ~(1ULL << (e & 63));
            cur.push_back(e);
            enumerate(next, e + 1, target, cb, stop);
            cur.pop_back();
        }
    }
};

}  // namespace

InducedMatching maximum_induced_matching(const Graph& g) {
    InducedMatching out;
    auto es = g.edges();
    if (es.empty()) return out;
    ImSearch s(g);
    std::vector<uint64_t> all((s.m + 63) / 64, 0);
    for (int e = 0; e < s.m; ++e) all[e >> 6] |= 1ULL << (e & 63);
    s.dfs(all, 0);
    out.size = s.best;
    for (int e : s.best_set) out.edges.push_back(es[e]);
    return out;
}

int induced_matching_number(const Graph& g) { return maximum_induced_matching(g).size; }

void for_each_maximum_induced_matching(const Graph& g,
                                       const std::function<bool(const std::vector<int>&)>& cb) {
    auto es = g.edges();
    if (es.empty()) {
        cb({});
        return;
    }
    ImSearch s(g);
    std::vector<uint64_t> all((s.m + 63) / 64, 0);
    for (int e = 0; e < s.m; ++e) all[e >> 6] |= 1ULL << (e & 63);
    s.dfs(all, 0);
    int target = s.best;
    s.cur.clear();
    bool stop = false;
    for (int e = 0; e < s.m; ++e) all[e >> 6] |= 1ULL << (e & 63);
    s.enumerate(all, 0, target, cb, stop);
}

bool is_induced_matching(const Graph& g, const std::vector<std::pair<int, int>>& m) {
    VertexSet used(g.n());
    for (auto [u, v] : m) {
        if (!g.has_edge(u, v)) return false;
        if (used.contains(u) || used.contains(v)) return false;
        used.add(u);
        used.add(v);
    }
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j) {
            auto [a, b] = m[i];
            auto [c, d] = m[j];
            if (g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d)) return false;
        }
    return true;
}

namespace {

struct DomSearch {
    const Graph& g;
    int n;
    std::vector<VertexSet> closed;
    int best;
    VertexSet best_set;
    VertexSet cur;

    explicit DomSearch(const Graph& graph)
        : g(graph), n(graph.n()), best(graph.n() + 1), best_set(graph.n()), cur(graph.n()) {
        for (int v = 0; v < n; ++v) closed.push_back(graph.closed_neighborhood(v));
    }

    void dfs(const VertexSet& covered, int size) {
        if (size >= best) return;
        VertexSet uncovered = covered.complement_in_universe();
        if (uncovered.empty()) {
            best = size;
            best_set = cur;
            return;
        }
        // Bound: each added vertex covers at most max |N[v] ∩ uncovered|.
        int max_cover = 0;
        for (int v = 0; v < n; ++v) max_cover = std::max(max_cover, (closed[v] & uncovered).count());
        int need = (uncovered.count() + max_cover - 1) / max_cover;
        if (size + need >= best) return;
        // Branch on the uncovered vertex with fewest potential dominators.
        int pick = -1, fewest = n + 1;
        for (int u = uncovered.first(); u != -1; u = uncovered.next(u)) {
            int c = closed[u].count();
            if (c < fewest) {
                fewest = c;
                pick = u;
            }
        }
        for (int v = closed[pick].first(); v != -1; v = closed[pick].next(v)) {
            cur.add(v);
            dfs(covered | closed[v], size + 1);
            cur.remove(v);
        }
    }
};

}  // namespace

DominatingSet minimum_dominating_set(const Graph& g) {
    DominatingSet out;
    out.vertices = VertexSet(g.n());
    if (g.n() == 0) return out;
    DomSearch s(g);
    s.dfs(VertexSet(g.n()), 0);
    out.size = s.best;
    out.vertices = s.best_set;
    return out;
}

int domination_number(const Graph& g) { return minimum_dominating_set(g).size; }

bool is_dominating_set(const Graph& g, const VertexSet& d) {
    VertexSet covered = g.closed_neighborhood(d);
    return covered == VertexSet::full(g.n());
}

std::vector<EdgeTag> classify_edges(const Graph& g) {
    std::vector<EdgeTag> out;
    for (auto [u, v] : g.edges()) {
        if (g.degree(u) == 1 || g.degree(v) == 1) {
            out.push_back(EdgeTag::Pendant);
        } else if (g.degree(u) == 2 && g.degree(v) == 2 && (g.neighbors(u) & g.neighbors(v)).count() > 0) {
            out.push_back(EdgeTag::Triangle);
        } else {
            out.push_back(EdgeTag::Other);
        }
    }
    return out;
}

}  // namespace codis
