#include "codis/covers.hpp"

#include <algorithm>
#include <stdexcept>

#include "codis/matching.hpp"

namespace codis {

namespace {

Graph spanned_subgraph(const Graph& g, const std::vector<std::pair<int, int>>& es,
                       const std::vector<int>& edge_ids) {
    VertexSet verts(g.n());
    for (int e : edge_ids) {
        verts.add(es[e].first);
        verts.add(es[e].second);
    }
    std::vector<int> order = verts.to_vector();
    std::vector<int> newid(g.n(), -1);
    for (size_t i = 0; i < order.size(); ++i) newid[order[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> sub;
    for (int e : edge_ids) sub.emplace_back(newid[es[e].first], newid[es[e].second]);
    return Graph::from_edges(static_cast<int>(order.size()), sub);
}

}  // namespace

bool edge_set_cochordal(const Graph& g, const std::vector<int>& edge_ids) {
    if (edge_ids.empty()) return true;
    auto es = g.edges();
    return spanned_subgraph(g, es, edge_ids).is_cochordal();
}

namespace {

// General engine, per connected component.
//
// Classes may be assumed maximal co-chordal edge sets. Co-chordal graphs are
// 2K2-free (an induced 2K2 complements to an induced C4), so all edges of a
// class lie pairwise within distance one. Candidate classes are therefore
// enumerated per lowest member edge e0 inside the distance-one ball of e0.
struct GeneralCover {
    const Graph& g;
    std::vector<std::pair<int, int>> es;
    int m;
    std::vector<uint64_t> near;  // near[e] = edges within distance one of e

    explicit GeneralCover(const Graph& graph) : g(graph), es(graph.edges()) {
        m = static_cast<int>(es.size());
        if (m > 63) throw std::invalid_argument("general co-chordal cover engine supports at most 63 edges");
        near.assign(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (i == j) {
                    near[i] |= 1ULL << j;
                    continue;
                }
                auto [a, b] = es[i];
                auto [c, d] = es[j];
                bool close = a == c || a == d || b == c || b == d || g.has_edge(a, c) ||
                             g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d);
                if (close) near[i] |= 1ULL << j;
            }
    }

    bool cochordal_mask(uint64_t mask) const {
        std::vector<int> ids;
        uint64_t rest = mask;
        while (rest) {
            int e = __builtin_ctzll(rest);
            rest &= rest - 1;
            ids.push_back(e);
        }
        return edge_set_cochordal(g, ids);
    }

    // All maximal co-chordal edge sets, as masks.
    std::vector<uint64_t> maximal_classes() const {
        std::vector<uint64_t> all;
        for (int e0 = 0; e0 < m; ++e0) {
            // subsets with lowest member e0, pairwise within distance one
            std::vector<int> cand;
            for (int f = e0 + 1; f < m; ++f)
                if ((near[e0] >> f) & 1) cand.push_back(f);
            int k = static_cast<int>(cand.size());
            for (uint64_t pick = 0; pick < (uint64_t(1) << k); ++pick) {
                uint64_t mask = 1ULL << e0;
                bool close = true;
                for (int i = 0; i < k && close; ++i) {
                    if (!((pick >> i) & 1)) continue;
                    if ((mask & ~near[cand[i]]) != 0)
                        close = false;
                    else
                        mask |= 1ULL << cand[i];
                }
                if (!close) continue;
                if (cochordal_mask(mask)) all.push_back(mask);
            }
        }
        std::sort(all.begin(), all.end(), [](uint64_t a, uint64_t b) {
            int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
            return pa != pb ? pa > pb : a < b;
        });
        all.erase(std::unique(all.begin(), all.end()), all.end());
        std::vector<uint64_t> maximal;
        for (uint64_t s : all) {
            bool dominated = false;
            for (uint64_t t : maximal) {
                if ((s & ~t) == 0) {
                    dominated = true;
                    break;
                }
                if (__builtin_popcountll(t) <= __builtin_popcountll(s)) break;
            }
            if (!dominated) maximal.push_back(s);
        }
        return maximal;
    }

    int best = -1;
    std::vector<uint64_t> best_pick, cur;
    uint64_t full = 0;
    std::vector<uint64_t> classes;

    void cover_dfs(uint64_t covered) {
        if (covered == full) {
            if (best == -1 || static_cast<int>(cur.size()) < best) {
                best = static_cast<int>(cur.size());
                best_pick = cur;
            }
            return;
        }
        uint64_t uncovered = full & ~covered;
        if (best != -1) {
            // Bound: at least ceil(uncovered / best class gain) classes still needed.
            int max_gain = 0;
            for (uint64_t c : classes) max_gain = std::max(max_gain, __builtin_popcountll(c & uncovered));
            if (max_gain == 0) return;
            int need = (__builtin_popcountll(uncovered) + max_gain - 1) / max_gain;
            if (static_cast<int>(cur.size()) + need >= best) return;
        }
        int e = __builtin_ctzll(uncovered);
        for (uint64_t c : classes) {
            if (!((c >> e) & 1)) continue;
            cur.push_back(c);
            cover_dfs(covered | c);
            cur.pop_back();
        }
    }

    std::vector<uint64_t> solve() {
        full = m == 64 ? ~0ULL : ((uint64_t(1) << m) - 1);
        if (m == 0) return {};
        if (cochordal_mask(full)) return {full};
        classes = maximal_classes();
        // Larger classes first tightens the incumbent quickly.
        std::sort(classes.begin(), classes.end(), [](uint64_t a, uint64_t b) {
            int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
            return pa != pb ? pa > pb : a < b;
        });
        best = -1;
        cur.clear();
        cover_dfs(0);
        return best_pick;
    }
};

CochordalCover general_cover_component(const Graph& comp) {
    CochordalCover out;
    GeneralCover engine(comp);
    auto picks = engine.solve();
    out.size = static_cast<int>(picks.size());
    for (uint64_t mask : picks) {
        CoverClass c;
        for (int e = 0; e < engine.m; ++e)
            if ((mask >> e) & 1) c.edge_ids.push_back(e);
        out.classes.push_back(std::move(c));
    }
    return out;
}

CochordalCover line_graph_cover_component(const Graph& comp) {
    CochordalCover out;
    out.via_line_graph = true;
    if (comp.edge_count() == 0) return out;
    auto lg = comp.line_graph();
    DominatingSet dom = minimum_dominating_set(lg.graph);
    out.size = dom.size;
    auto es = comp.edges();
    for (int ei = dom.vertices.first(); ei != -1; ei = dom.vertices.next(ei)) {
        auto [u, v] = lg.edge_of_vertex[ei];
        CoverClass c;
        c.center = {u, v};
        for (int f = 0; f < static_cast<int>(es.size()); ++f) {
            auto [a, b] = es[f];
            if (a == u || b == u || a == v || b == v) c.edge_ids.push_back(f);
        }
        out.classes.push_back(std::move(c));
    }
    return out;
}

// Remaps a per-component cover into host edge ids.
void append_component_cover(const Graph& host, const VertexSet& comp_verts, const Graph& comp,
                            const std::vector<int>& origin, const CochordalCover& local,
                            CochordalCover& total) {
    (void)comp_verts;
    auto host_edges = host.edges();
    auto comp_edges = comp.edges();
    auto host_edge_id = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        for (size_t i = 0; i < host_edges.size(); ++i)
            if (host_edges[i] == std::make_pair(u, v)) return static_cast<int>(i);
        throw std::logic_error("edge remap failure");
    };
    for (const auto& cls : local.classes) {
        CoverClass c;
        for (int e : cls.edge_ids) c.edge_ids.push_back(host_edge_id(origin[comp_edges[e].first], origin[comp_edges[e].second]));
        if (cls.center) c.center = {origin[cls.center->first], origin[cls.center->second]};
        total.classes.push_back(std::move(c));
    }
    total.size += local.size;
}

}  // namespace

CochordalCover cochordal_cover_general(const Graph& g) {
    CochordalCover total;
    for (const auto& comp_set : g.components()) {
        auto comp = g.induced(comp_set);
        if (comp.graph.edge_count() == 0) continue;
        CochordalCover local = general_cover_component(comp.graph);
        append_component_cover(g, comp_set, comp.graph, comp.origin, local, total);
    }
    return total;
}

CochordalCover cochordal_cover_via_line_graph(const Graph& g) {
    auto girth = g.girth();
    if (girth && *girth < 5) throw std::invalid_argument("line-graph cover engine requires girth >= 5");
    CochordalCover total;
    total.via_line_graph = true;
    for (const auto& comp_set : g.components()) {
        auto comp = g.induced(comp_set);
        if (comp.graph.edge_count() == 0) continue;
        CochordalCover local = line_graph_cover_component(comp.graph);
        append_component_cover(g, comp_set, comp.graph, comp.origin, local, total);
    }
    return total;
}

CochordalCover cochordal_cover(const Graph& g) {
    auto girth = g.girth();
    bool high_girth = !girth || *girth >= 5;
    CochordalCover general = cochordal_cover_general(g);
    if (!high_girth) return general;
    CochordalCover via_lg = cochordal_cover_via_line_graph(g);
    if (via_lg.size != general.size)
        throw std::logic_error("co-chordal cover engines disagree: line-graph engine " +
                               std::to_string(via_lg.size) + " vs general engine " +
                               std::to_string(general.size));
    return via_lg;
}

int cochordal_cover_number(const Graph& g) { return cochordal_cover(g).size; }

bool cover_is_valid(const Graph& g, const CochordalCover& cover) {
    auto es = g.edges();
    std::vector<bool> covered(es.size(), false);
    for (const auto& cls : cover.classes) {
        for (int e : cls.edge_ids) {
            if (e < 0 || e >= static_cast<int>(es.size())) return false;
            covered[e] = true;
        }
        if (!edge_set_cochordal(g, cls.edge_ids)) return false;
    }
    for (bool b : covered)
        if (!b) return false;
    return static_cast<int>(cover.classes.size()) == cover.size;
}

CochordalShape cochordal_subgraph_shape(const Graph& h, int ambient_girth) {
    if (ambient_girth < 5) throw std::invalid_argument("shape classification requires ambient girth >= 5");
    if (!h.is_cochordal()) return CochordalShape::NotCochordal;
    auto es = h.edges();
    if (es.empty()) return CochordalShape::Star;
    for (int c = 0; c < h.n(); ++c) {
        bool all = true;
        for (auto [u, v] : es)
            if (u != c && v != c) {
                all = false;
                break;
            }
        if (all) return CochordalShape::Star;
    }
    for (auto [u, v] : es) {
        bool all = true;
        for (auto [a, b] : es)
            if (a != u && a != v && b != u && b != v) {
                all = false;
                break;
            }
        if (!all) continue;
        bool leaves_ok = true;
        for (int w = 0; w < h.n() && leaves_ok; ++w)
            if (w != u && w != v && h.degree(w) > 1) leaves_ok = false;
        if (leaves_ok) return CochordalShape::DoubleStar;
    }
    throw std::invalid_argument("co-chordal subgraph is neither star nor double-star; host girth must be < 5");
}

}  // namespace codis
