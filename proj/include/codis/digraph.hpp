#pragma once

#include <utility>
#include <vector>

#include "codis/vertexset.hpp"

namespace codis {

// Directed graph on 0..n-1, loop-free. Acyclicity is a computed property.
class Digraph {
public:
    Digraph() = default;
    static Digraph from_edges(int n, const std::vector<std::pair<int, int>>& arcs);

    int n() const { return n_; }
    int arc_count() const { return m_; }
    bool has_arc(int u, int v) const { return out_[u].contains(v); }
    const VertexSet& out(int v) const { return out_[v]; }
    const VertexSet& in(int v) const { return in_[v]; }
    std::vector<std::pair<int, int>> arcs() const;

    bool is_acyclic() const;

    // Enemy set A(u): vertices with a dipath of length >= 1 ending at u.
    // A vertex belongs to its own enemy set only when it lies on a cycle.
    VertexSet ancestors(int u) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> out_, in_;
};

// Finite poset on 0..n-1 given by its strict order relation (transitively
// closed at construction; cycles are rejected).
class Poset {
public:
    Poset() = default;
    // covers: pairs (u,v) meaning u < v; closure is computed.
    static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);

    int n() const { return n_; }
    bool less(int u, int v) const { return up_[u].contains(v) && u != v; }
    // Strict up-set {z : u < z}.
    VertexSet strictly_above(int u) const;
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    // The cover relation as an acyclic digraph (arc u -> v when u < v is a cover).
    Digraph cover_digraph() const;

private:
    int n_ = 0;
    std::vector<VertexSet> up_;  // up_[u] = {z : u <= z} including u
    std::vector<std::pair<int, int>> covers_;
};

}  // namespace codis
