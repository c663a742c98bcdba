#include "codis/decomposition.hpp"

#include <algorithm>

#include "codis/canonical.hpp"
#include "codis/independence.hpp"
#include "codis/lru.hpp"

namespace codis {

std::vector<std::pair<int, int>> codominated_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    int n = g.n();
    for (int x = 0; x < n; ++x) {
        VertexSet nx = g.closed_neighborhood(x);
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            if (g.closed_neighborhood(y).is_subset_of(nx)) out.emplace_back(x, y);
        }
    }
    return out;
}

std::vector<int> codominated_vertices(const Graph& g) {
    std::vector<int> out;
    int last = -1;
    for (auto [x, y] : codominated_pairs(g)) {
        (void)y;
        if (x != last) out.push_back(x);
        last = x;
    }
    return out;
}

bool is_cns(const Graph& g) { return codominated_pairs(g).empty(); }

namespace {

LruCache<std::string, bool>& codis_memo() {
    static LruCache<std::string, bool> memo(memo_entry_budget());
    return memo;
}

bool codis_decide(const Graph& g) {
    if (g.edge_count() == 0) return true;
    std::vector<int> cands = codominated_vertices(g);
    if (cands.empty()) return false;
    std::string key = canonical_form(g).key;
    if (auto hit = codis_memo().get(key)) return *hit;
    bool ok = false;
    for (int x : cands) {
        if (codis_decide(g.remove_vertex(x).graph)) {
            ok = true;
            break;
        }
    }
    codis_memo().put(key, ok);
    return ok;
}

int first_witness(const Graph& g, int x) {
    VertexSet nx = g.closed_neighborhood(x);
    for (int y = 0; y < g.n(); ++y) {
        if (y == x) continue;
        if (g.closed_neighborhood(y).is_subset_of(nx)) return y;
    }
    return -1;
}

}  // namespace

CodismantleResult is_codismantlable(const Graph& g) {
    CodismantleResult res;
    if (!codis_decide(g)) return res;
    res.codismantlable = true;
    CdCertificate cert;
    // Rebuild a successful deletion order; every step is memo-hot.
    Graph cur = g;
    std::vector<int> origin(g.n());
    for (int v = 0; v < g.n(); ++v) origin[v] = v;
    while (cur.edge_count() > 0) {
        for (int x : codominated_vertices(cur)) {
            auto next = cur.remove_vertex(x);
            if (codis_decide(next.graph)) {
                cert.steps.push_back({origin[x], origin[first_witness(cur, x)]});
                std::vector<int> next_origin(next.graph.n());
                for (int v = 0; v < next.graph.n(); ++v) next_origin[v] = origin[next.origin[v]];
                origin = std::move(next_origin);
                cur = std::move(next.graph);
                break;
            }
        }
    }
    VertexSet residual(g.n());
    for (int v : origin) residual.add(v);
    cert.residual = residual;
    res.certificate = std::move(cert);
    return res;
}

bool is_codismantlable_greedy(const Graph& g) {
    Graph cur = g;
    while (cur.edge_count() > 0) {
        std::vector<int> cands = codominated_vertices(cur);
        if (cands.empty()) return false;
        cur = cur.remove_vertex(cands.front()).graph;
    }
    return true;
}

bool replay_cd_certificate(const Graph& g, const CdCertificate& cert) {
    VertexSet alive = g.vertex_set();
    for (const auto& step : cert.steps) {
        if (step.x < 0 || step.x >= g.n() || step.y < 0 || step.y >= g.n()) return false;
        if (!alive.contains(step.x) || !alive.contains(step.y) || step.x == step.y) return false;
        // N[y] ⊆ N[x] within the residual graph
        VertexSet nx = (g.neighbors(step.x) & alive);
        nx.add(step.x);
        VertexSet ny = (g.neighbors(step.y) & alive);
        ny.add(step.y);
        if (!ny.is_subset_of(nx)) return false;
        alive.remove(step.x);
    }
    if (alive != cert.residual) return false;
    auto rest = g.induced(alive);
    if (rest.graph.edge_count() != 0) return false;
    // The deleted set is a minimal vertex cover of the input graph.
    VertexSet deleted = alive.complement_in_universe();
    return is_minimal_vertex_cover(g, deleted);
}

bool is_shedding_vertex(const Graph& g, int x) {
    if (g.degree(x) == 0) return false;
    auto rest = g.remove_closed_neighborhood(x);
    VertexSet nx = g.neighbors(x);
    bool shedding = true;
    for_each_maximal_independent_set(rest.graph, [&](const VertexSet& s) {
        // Does s dominate N(x) back in g? If so, no neighbor of x extends it.
        bool dominates = true;
        for (int v = nx.first(); v != -1 && dominates; v = nx.next(v)) {
            bool hit = false;
            for (int i = s.first(); i != -1; i = s.next(i)) {
                if (g.has_edge(v, rest.origin[i])) {
                    hit = true;
                    break;
                }
            }
            if (!hit) dominates = false;
        }
        if (dominates) {
            shedding = false;
            return false;
        }
        return true;
    });
    return shedding;
}

std::vector<int> shedding_vertices(const Graph& g, bool c4c5_fast_path) {
    if (c4c5_fast_path && g.is_induced_cycle_free({4, 5})) return codominated_vertices(g);
    std::vector<int> out;
    for (int x = 0; x < g.n(); ++x)
        if (is_shedding_vertex(g, x)) out.push_back(x);
    return out;
}

namespace {

LruCache<std::string, bool>& vd_memo() {
    static LruCache<std::string, bool> memo(memo_entry_budget());
    return memo;
}

bool vd_decide(const Graph& g) {
    if (g.edge_count() == 0) return true;
    std::string key = canonical_form(g).key;
    if (auto hit = vd_memo().get(key)) return *hit;
    bool ok = false;
    for (int x = 0; x < g.n() && !ok; ++x) {
        if (!is_shedding_vertex(g, x)) continue;
        if (vd_decide(g.remove_vertex(x).graph) && vd_decide(g.remove_closed_neighborhood(x).graph)) ok = true;
    }
    vd_memo().put(key, ok);
    return ok;
}

std::unique_ptr<DecompositionTrace> vd_trace(const Graph& g, const std::vector<int>& origin) {
    auto node = std::make_unique<DecompositionTrace>();
    if (g.edge_count() == 0) {
        node->edgeless = true;
        return node;
    }
    for (int x = 0; x < g.n(); ++x) {
        if (!is_shedding_vertex(g, x)) continue;
        auto minus_x = g.remove_vertex(x);
        auto minus_nx = g.remove_closed_neighborhood(x);
        if (!vd_decide(minus_x.graph) || !vd_decide(minus_nx.graph)) continue;
        node->shed = origin[x];
        std::vector<int> o1(minus_x.graph.n()), o2(minus_nx.graph.n());
        for (int v = 0; v < minus_x.graph.n(); ++v) o1[v] = origin[minus_x.origin[v]];
        for (int v = 0; v < minus_nx.graph.n(); ++v) o2[v] = origin[minus_nx.origin[v]];
        node->minus_vertex = vd_trace(minus_x.graph, o1);
        node->minus_neighborhood = vd_trace(minus_nx.graph, o2);
        return node;
    }
    return nullptr;  // unreachable when vd_decide(g) holds
}

bool replay_node(const Graph& root, const VertexSet& alive, const DecompositionTrace& t) {
    auto sub = root.induced(alive);
    if (t.edgeless) return sub.graph.edge_count() == 0;
    if (t.shed < 0 || t.shed >= root.n() || !alive.contains(t.shed)) return false;
    int local = -1;
    for (int i = 0; i < sub.graph.n(); ++i)
        if (sub.origin[i] == t.shed) local = i;
    if (local == -1 || !is_shedding_vertex(sub.graph, local)) return false;
    if (!t.minus_vertex || !t.minus_neighborhood) return false;
    VertexSet minus_x = alive;
    minus_x.remove(t.shed);
    VertexSet closed = (root.neighbors(t.shed) & alive);
    closed.add(t.shed);
    return replay_node(root, minus_x, *t.minus_vertex) && replay_node(root, alive - closed, *t.minus_neighborhood);
}

}  // namespace

VertexDecomposabilityResult is_vertex_decomposable(const Graph& g) {
    VertexDecomposabilityResult res;
    if (!vd_decide(g)) return res;
    res.vertex_decomposable = true;
    std::vector<int> origin(g.n());
    for (int v = 0; v < g.n(); ++v) origin[v] = v;
    res.trace = vd_trace(g, origin);
    return res;
}

bool replay_decomposition_trace(const Graph& g, const DecompositionTrace& t) {
    return replay_node(g, g.vertex_set(), t);
}

}  // namespace codis
