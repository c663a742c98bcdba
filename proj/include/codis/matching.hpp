#pragma once

#include <utility>
#include <vector>

#include "codis/graph.hpp"

namespace codis {

// Maximum matching via augmenting paths with blossom contraction.
std::vector<std::pair<int, int>> maximum_matching(const Graph& g);
int matching_number(const Graph& g);

struct InducedMatching {
    int size = 0;
    std::vector<std::pair<int, int>> edges;
};

// Exact maximum induced matching by branch and bound over the edge list.
InducedMatching maximum_induced_matching(const Graph& g);
int induced_matching_number(const Graph& g);

// Streams every maximum-size induced matching (as host edge index lists).
void for_each_maximum_induced_matching(const Graph& g,
                                       const std::function<bool(const std::vector<int>&)>& cb);

bool is_induced_matching(const Graph& g, const std::vector<std::pair<int, int>>& m);

struct DominatingSet {
    int size = 0;
    VertexSet vertices;
};

// Exact minimum dominating set by branch and bound.
DominatingSet minimum_dominating_set(const Graph& g);
int domination_number(const Graph& g);
bool is_dominating_set(const Graph& g, const VertexSet& d);

enum class EdgeTag { Pendant, Triangle, Other };

// Tags aligned with g.edges(): pendant = incident to a degree-one vertex;
// triangle = both endpoints of degree two sharing a common neighbor.
std::vector<EdgeTag> classify_edges(const Graph& g);

}  // namespace codis
