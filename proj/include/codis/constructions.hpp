#pragma once

#include <string>
#include <vector>

#include "codis/digraph.hpp"
#include "codis/graph.hpp"

namespace codis {

// Basic families with fixed labelings.
Graph cycle_graph(int n);                    // vertices 0..n-1 around the cycle, n >= 3
Graph path_graph(int n);                     // 0-1-...-(n-1), n >= 1
Graph complete_graph(int n);                 // n >= 0
Graph star_graph(int leaves);                // center 0, leaves >= 0
Graph double_star_graph(int a, int b);       // centers 0,1 joined; a leaves on 0, b on 1
Graph pan_graph(int m);                      // cycle 0..m-1 plus pendant m at 0, m >= 3
Graph wheel_graph(int n);                    // cycle 0..n-1 plus hub n, n >= 3

// Chain of n blocks, 12 vertices each: a 10-cycle v1..v10 with pendants v11
// at v1 and v12 at v2 and the chord v2-v7, consecutive blocks joined by the
// binding edge v5^i - v9^{i+1}. Vertex id of v_j^i is 12(i-1) + (j-1).
// 12n vertices, 14n-1 edges, girth six.
Graph gn_family(int n);

// Edge-disjoint clique partition: every class of size >= 2 spans a clique,
// singleton classes only for isolated vertices, every edge in exactly one
// class.
struct EdgeCliquePartition {
    std::vector<VertexSet> classes;
};

EdgeCliquePartition partition_into_edges(const Graph& g);  // each edge its own class
void validate_partition(const Graph& g, const EdgeCliquePartition& pi);

// Cone vertex x_i (id n + i) joined to every vertex of class W_i.
Graph clique_whisker(const Graph& g, const EdgeCliquePartition& pi);

// x ~ y iff the closed enemy sets A[x], A[y] intersect, where A(u) is the set
// of vertices with a dipath of length >= 1 to u.
Graph common_enemy_graph(const Digraph& d);

// x ~ y iff some z has x <= z and y <= z.
Graph upper_bound_graph(const Poset& p);

// The five exceptional connected well-covered graphs of girth >= 5.
// Edge lists for P10/P13/Q13/P14 ship as data files; loading validates the
// expected properties and throws on any mismatch.
enum class OrphanName { C7, P10, P13, Q13, P14 };

OrphanName orphan_from_string(const std::string& name);
std::string orphan_to_string(OrphanName name);

Graph orphan(OrphanName name);

}  // namespace codis
