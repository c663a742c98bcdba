#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "codis/vertexset.hpp"

namespace codis {

// Immutable simple undirected graph on vertices 0..n-1.
// All derived graphs (induced subgraphs, deletions) are new values carrying a
// relabeling map back to the host, so certificates can be translated to
// original labels.
class Graph {
public:
    Graph() = default;

    static Graph edgeless(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int edge_count() const { return m_; }
    bool has_edge(int u, int v) const { return adj_[u].contains(v); }
    int degree(int v) const { return adj_[v].count(); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    VertexSet vertex_set() const { return VertexSet::full(n_); }

    // Edges in ascending (u,v) order with u < v.
    std::vector<std::pair<int, int>> edges() const;

    VertexSet open_neighborhood(const VertexSet& u) const;
    VertexSet closed_neighborhood(const VertexSet& u) const;
    VertexSet closed_neighborhood(int v) const;

    struct Induced;
    Induced induced(const VertexSet& keep) const;
    Induced remove_vertex(int x) const;
    Induced remove_vertices(const VertexSet& drop) const;
    Induced remove_closed_neighborhood(int x) const;
    Induced remove_closed_neighborhood(const VertexSet& u) const;

    Graph complement() const;

    struct LineGraph;
    LineGraph line_graph() const;

    bool is_connected() const;
    std::vector<VertexSet> components() const;
    bool is_bipartite() const;

    // Length of a shortest cycle; nullopt for forests.
    std::optional<int> girth() const;

    // True iff no induced cycle has its length in `lengths` (each >= 3).
    bool is_induced_cycle_free(const std::vector<int>& lengths) const;

    bool is_chordal() const;
    bool is_cochordal() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

struct Graph::Induced {
    Graph graph;
    std::vector<int> origin;  // origin[i] = host id of new vertex i
};

struct Graph::LineGraph {
    Graph graph;
    std::vector<std::pair<int, int>> edge_of_vertex;  // line-graph vertex -> host edge
};

}  // namespace codis
