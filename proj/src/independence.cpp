#include "codis/independence.hpp"

#include <algorithm>
#include <stdexcept>

namespace codis {

SimplicialComplex SimplicialComplex::from_facets(int ground, std::vector<VertexSet> facets) {
    for (const auto& f : facets)
        if (f.universe() != ground) throw std::invalid_argument("facet universe mismatch");
    // Drop faces contained in another facet, then dedup.
    std::vector<VertexSet> keep;
    for (size_t i = 0; i < facets.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < facets.size() && !dominated; ++j) {
            if (i == j) continue;
            if (facets[i].is_subset_of(facets[j]) && !(facets[j].is_subset_of(facets[i]) && i < j))
                dominated = true;
        }
        if (!dominated) keep.push_back(facets[i]);
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    return SimplicialComplex{ground, std::move(keep)};
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& f : facets) d = std::max(d, f.count() - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    if (facets.empty()) return true;
    int k = facets.front().count();
    for (const auto& f : facets)
        if (f.count() != k) return false;
    return true;
}

bool SimplicialComplex::contains_face(const VertexSet& f) const {
    for (const auto& fac : facets)
        if (f.is_subset_of(fac)) return true;
    return false;
}

namespace {

// Bron-Kerbosch with pivoting on the non-adjacency relation: maximal
// independent sets of g are maximal cliques of its complement.
struct MisEnum {
    const Graph& g;
    const std::function<bool(const VertexSet&)>& cb;
    int n;
    std::vector<VertexSet> nonadj;  // complement adjacency
    bool stopped = false;

    MisEnum(const Graph& graph, const std::function<bool(const VertexSet&)>& callback)
        : g(graph), cb(callback), n(graph.n()) {
        nonadj.reserve(n);
        for (int v = 0; v < n; ++v) {
            VertexSet s = g.neighbors(v).complement_in_universe();
            s.remove(v);
            nonadj.push_back(s);
        }
    }

    void expand(VertexSet r, VertexSet p, VertexSet x) {
        if (stopped) return;
        if (p.empty() && x.empty()) {
            if (!cb(r)) stopped = true;
            return;
        }
        // Pivot: vertex of p ∪ x maximizing |p ∩ nonadj(u)|.
        int pivot = -1, best = -1;
        VertexSet px = p | x;
        for (int u = px.first(); u != -1; u = px.next(u)) {
            int c = (p & nonadj[u]).count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        VertexSet cand = p - nonadj[pivot];
        for (int v = cand.first(); v != -1 && !stopped; v = cand.next(v)) {
            VertexSet r2 = r;
            r2.add(v);
            expand(r2, p & nonadj[v], x & nonadj[v]);
            p.remove(v);
            x.add(v);
        }
    }
};

}  // namespace

void for_each_maximal_independent_set(const Graph& g, const std::function<bool(const VertexSet&)>& cb) {
    if (g.n() == 0) {
        cb(VertexSet(0));
        return;
    }
    MisEnum e(g, cb);
    e.expand(VertexSet(g.n()), VertexSet::full(g.n()), VertexSet(g.n()));
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_maximal_independent_set(g, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_independent_set(const Graph& g, const std::function<bool(const VertexSet&)>& cb) {
    int n = g.n();
    VertexSet cur(n);
    bool stopped = false;
    std::function<void(int)> rec = [&](int v) {
        if (stopped) return;
        if (!cb(cur)) {
            stopped = true;
            return;
        }
        for (int w = v; w < n && !stopped; ++w) {
            if (cur.intersects(g.neighbors(w))) continue;
            cur.add(w);
            rec(w + 1);
            cur.remove(w);
        }
    };
    rec(0);
}

int independence_number(const Graph& g) {
    int best = 0;
    for_each_maximal_independent_set(g, [&](const VertexSet& s) {
        best = std::max(best, s.count());
        return true;
    });
    return best;
}

bool is_well_covered(const Graph& g) {
    int size = -1;
    bool ok = true;
    for_each_maximal_independent_set(g, [&](const VertexSet& s) {
        if (size == -1) {
            size = s.count();
            return true;
        }
        if (s.count() != size) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

bool is_very_well_covered(const Graph& g) {
    if (g.n() == 0 || g.n() % 2 != 0) return false;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) return false;
    if (!is_well_covered(g)) return false;
    return independence_number(g) * 2 == g.n();
}

SimplicialComplex independence_complex(const Graph& g) {
    return SimplicialComplex{g.n(), maximal_independent_sets(g)};
}

std::vector<VertexSet> minimal_vertex_covers(const Graph& g) {
    std::vector<VertexSet> out;
    for (const auto& s : maximal_independent_sets(g)) out.push_back(s.complement_in_universe());
    std::sort(out.begin(), out.end());
    return out;
}

bool is_vertex_cover(const Graph& g, const VertexSet& x) {
    for (auto [u, v] : g.edges())
        if (!x.contains(u) && !x.contains(v)) return false;
    return true;
}

bool is_minimal_vertex_cover(const Graph& g, const VertexSet& x) {
    if (!is_vertex_cover(g, x)) return false;
    for (int v = x.first(); v != -1; v = x.next(v)) {
        VertexSet y = x;
        y.remove(v);
        if (is_vertex_cover(g, y)) return false;
    }
    return true;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
    for (int v = s.first(); v != -1; v = s.next(v))
        if (s.intersects(g.neighbors(v))) return false;
    return true;
}

}  // namespace codis
