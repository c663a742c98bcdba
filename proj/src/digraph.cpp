#include "codis/digraph.hpp"

#include <deque>
#include <stdexcept>
#include <string>

namespace codis {

Digraph Digraph::from_edges(int n, const std::vector<std::pair<int, int>>& arcs) {
    if (n < 0) throw std::invalid_argument("digraph order must be nonnegative");
    Digraph d;
    d.n_ = n;
    d.out_.assign(n, VertexSet(n));
    d.in_.assign(n, VertexSet(n));
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("arc endpoint outside 0.." + std::to_string(n - 1));
        if (u == v) throw std::invalid_argument("loop arc " + std::to_string(u));
        if (!d.out_[u].contains(v)) {
            d.out_[u].add(v);
            d.in_[v].add(u);
            ++d.m_;
        }
    }
    return d;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = out_[u].first(); v != -1; v = out_[u].next(v)) out.emplace_back(u, v);
    return out;
}

bool Digraph::is_acyclic() const {
    std::vector<int> indeg(n_, 0);
    for (int u = 0; u < n_; ++u)
        for (int v = out_[u].first(); v != -1; v = out_[u].next(v)) ++indeg[v];
    std::deque<int> q;
    for (int v = 0; v < n_; ++v)
        if (indeg[v] == 0) q.push_back(v);
    int seen = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        ++seen;
        for (int v = out_[u].first(); v != -1; v = out_[u].next(v))
            if (--indeg[v] == 0) q.push_back(v);
    }
    return seen == n_;
}

VertexSet Digraph::ancestors(int u) const {
    VertexSet a(n_);
    std::deque<int> q;
    for (int w = in_[u].first(); w != -1; w = in_[u].next(w)) {
        a.add(w);
        q.push_back(w);
    }
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int w = in_[x].first(); w != -1; w = in_[x].next(w)) {
            if (!a.contains(w)) {
                a.add(w);
                q.push_back(w);
            }
        }
    }
    return a;
}

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    Digraph d = Digraph::from_edges(n, covers);
    if (!d.is_acyclic()) throw std::invalid_argument("cover relation contains a cycle");
    Poset p;
    p.n_ = n;
    p.covers_ = covers;
    p.up_.assign(n, VertexSet(n));
    for (int u = 0; u < n; ++u) {
        // up-set via forward reachability
        VertexSet up(n);
        up.add(u);
        std::deque<int> q{u};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int w = d.out(x).first(); w != -1; w = d.out(x).next(w)) {
                if (!up.contains(w)) {
                    up.add(w);
                    q.push_back(w);
                }
            }
        }
        p.up_[u] = up;
    }
    return p;
}

VertexSet Poset::strictly_above(int u) const {
    VertexSet s = up_[u];
    s.remove(u);
    return s;
}

Digraph Poset::cover_digraph() const { return Digraph::from_edges(n_, covers_); }

}  // namespace codis
