#include "codis/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace codis {

Graph Graph::edgeless(int n) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, VertexSet(n));
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g = edgeless(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("edge endpoint outside 0.." + std::to_string(n - 1));
        if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
        if (!g.adj_[u].contains(v)) {
            g.adj_[u].add(v);
            g.adj_[v].add(u);
            ++g.m_;
        }
    }
    return g;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw std::invalid_argument("label count must match order");
    labels_ = std::move(labels);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v)) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::open_neighborhood(const VertexSet& u) const {
    if (u.universe() != n_) throw std::invalid_argument("vertex set from a different graph");
    VertexSet s(n_);
    u.for_each([&](int v) { s |= adj_[v]; });
    return s;
}

VertexSet Graph::closed_neighborhood(const VertexSet& u) const {
    VertexSet s = open_neighborhood(u);
    s |= u;
    return s;
}

VertexSet Graph::closed_neighborhood(int v) const {
    VertexSet s = adj_[v];
    s.add(v);
    return s;
}

Graph::Induced Graph::induced(const VertexSet& keep) const {
    if (keep.universe() != n_) throw std::invalid_argument("vertex set from a different graph");
    Induced out;
    out.origin = keep.to_vector();
    int k = static_cast<int>(out.origin.size());
    std::vector<int> newid(n_, -1);
    for (int i = 0; i < k; ++i) newid[out.origin[i]] = i;
    Graph g = edgeless(k);
    for (int i = 0; i < k; ++i) {
        for (int v = adj_[out.origin[i]].first(); v != -1; v = adj_[out.origin[i]].next(v)) {
            int j = newid[v];
            if (j > i) {
                g.adj_[i].add(j);
                g.adj_[j].add(i);
                ++g.m_;
            }
        }
    }
    if (!labels_.empty()) {
        std::vector<std::string> lab(k);
        for (int i = 0; i < k; ++i) lab[i] = labels_[out.origin[i]];
        g.labels_ = std::move(lab);
    }
    out.graph = std::move(g);
    return out;
}

Graph::Induced Graph::remove_vertex(int x) const {
    VertexSet keep = vertex_set();
    keep.remove(x);
    return induced(keep);
}

Graph::Induced Graph::remove_vertices(const VertexSet& drop) const {
    return induced(vertex_set() - drop);
}

Graph::Induced Graph::remove_closed_neighborhood(int x) const {
    return induced(vertex_set() - closed_neighborhood(x));
}

Graph::Induced Graph::remove_closed_neighborhood(const VertexSet& u) const {
    return induced(vertex_set() - closed_neighborhood(u));
}

Graph Graph::complement() const {
    Graph g = edgeless(n_);
    for (int v = 0; v < n_; ++v) {
        VertexSet s = adj_[v].complement_in_universe();
        s.remove(v);
        g.adj_[v] = s;
    }
    g.m_ = n_ * (n_ - 1) / 2 - m_;
    return g;
}

Graph::LineGraph Graph::line_graph() const {
    LineGraph out;
    out.edge_of_vertex = edges();
    int k = static_cast<int>(out.edge_of_vertex.size());
    std::vector<std::pair<int, int>> ledges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            auto [a, b] = out.edge_of_vertex[i];
            auto [c, d] = out.edge_of_vertex[j];
            if (a == c || a == d || b == c || b == d) ledges.emplace_back(i, j);
        }
    out.graph = from_edges(k, ledges);
    return out;
}

std::vector<VertexSet> Graph::components() const {
    std::vector<VertexSet> out;
    VertexSet seen(n_);
    for (int s = 0; s < n_; ++s) {
        if (seen.contains(s)) continue;
        VertexSet comp(n_);
        std::deque<int> q{s};
        comp.add(s);
        seen.add(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v = adj_[u].first(); v != -1; v = adj_[u].next(v)) {
                if (!seen.contains(v)) {
                    seen.add(v);
                    comp.add(v);
                    q.push_back(v);
                }
            }
        }
        out.push_back(comp);
    }
    return out;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    return components().size() == 1;
}

bool Graph::is_bipartite() const {
    std::vector<int> color(n_, -1);
    for (int s = 0; s < n_; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v = adj_[u].first(); v != -1; v = adj_[u].next(v)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<int> Graph::girth() const {
    // BFS from each vertex; the BFS rooted on a shortest cycle finds it.
    int best = -1;
    std::vector<int> dist(n_), par(n_);
    for (int s = 0; s < n_; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(par.begin(), par.end(), -1);
        dist[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (best != -1 && 2 * dist[u] >= best) break;
            for (int v = adj_[u].first(); v != -1; v = adj_[u].next(v)) {
                if (v == par[u]) continue;
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    par[v] = u;
                    q.push_back(v);
                } else {
                    int len = dist[u] + dist[v] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

namespace {

// DFS over chordless paths rooted at their minimum vertex; reports each
// induced cycle length up to max_len once.
bool induced_cycle_search(const Graph& g, const std::vector<bool>& want, int max_len) {
    int n = g.n();
    std::vector<int> path;
    VertexSet on_path(n);
    bool found = false;

    std::function<void(int)> extend = [&](int s) {
        if (found) return;
        int tip = path.back();
        for (int w = g.neighbors(tip).next(s); w != -1; w = g.neighbors(tip).next(w)) {
            if (found) return;
            if (on_path.contains(w)) continue;
            // w must avoid all interior path vertices; adjacency to the root
            // closes a cycle and forbids further extension through w.
            bool interior_hit = false;
            for (size_t i = 1; i + 1 < path.size(); ++i)
                if (g.has_edge(w, path[i])) {
                    interior_hit = true;
                    break;
                }
            if (interior_hit) continue;
            // Root adjacency of the second path vertex is the tree edge, not
            // a chord; from the third vertex on it closes an induced cycle.
            bool closes = path.size() >= 2 && g.has_edge(w, s);
            int len = static_cast<int>(path.size()) + 1;
            if (closes && len >= 3 && len <= max_len && want[len]) {
                found = true;
                return;
            }
            if (!closes && len + 1 <= max_len) {
                path.push_back(w);
                on_path.add(w);
                extend(s);
                on_path.remove(w);
                path.pop_back();
            }
        }
    };

    for (int s = 0; s < n && !found; ++s) {
        path.assign(1, s);
        on_path = VertexSet(n);
        on_path.add(s);
        extend(s);
    }
    return found;
}

}  // namespace

bool Graph::is_induced_cycle_free(const std::vector<int>& lengths) const {
    int max_len = 0;
    for (int len : lengths) {
        if (len < 3) throw std::invalid_argument("cycle length must be >= 3");
        max_len = std::max(max_len, len);
    }
    if (max_len == 0) return true;
    std::vector<bool> want(max_len + 1, false);
    for (int len : lengths) want[len] = true;
    return !induced_cycle_search(*this, want, max_len);
}

bool Graph::is_chordal() const {
    // Maximum cardinality search, then verify the reverse order is a
    // perfect elimination ordering.
    if (n_ == 0) return true;
    std::vector<int> weight(n_, 0), order;
    std::vector<bool> numbered(n_, false);
    order.reserve(n_);
    for (int step = 0; step < n_; ++step) {
        int best = -1;
        for (int v = 0; v < n_; ++v)
            if (!numbered[v] && (best == -1 || weight[v] > weight[best])) best = v;
        numbered[best] = true;
        order.push_back(best);
        for (int v = adj_[best].first(); v != -1; v = adj_[best].next(v))
            if (!numbered[v]) ++weight[v];
    }
    std::reverse(order.begin(), order.end());  // elimination order
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[order[i]] = i;
    for (int i = 0; i < n_; ++i) {
        int v = order[i];
        // Later neighbors of v must form a clique; it suffices to check the
        // earliest of them against the rest.
        int first = -1;
        VertexSet later(n_);
        for (int u = adj_[v].first(); u != -1; u = adj_[v].next(u)) {
            if (pos[u] > i) {
                later.add(u);
                if (first == -1 || pos[u] < pos[first]) first = u;
            }
        }
        if (first == -1) continue;
        later.remove(first);
        if (!later.is_subset_of(adj_[first])) return false;
    }
    return true;
}

bool Graph::is_cochordal() const { return complement().is_chordal(); }

}  // namespace codis
