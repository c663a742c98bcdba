#pragma once

#include <optional>
#include <vector>

#include "codis/graph.hpp"

namespace codis {

// One class of a co-chordal edge cover: edge indices into g.edges(), plus the
// center edge when the class came from the line-graph domination route.
struct CoverClass {
    std::vector<int> edge_ids;
    std::optional<std::pair<int, int>> center;
};

struct CochordalCover {
    int size = 0;
    std::vector<CoverClass> classes;
    bool via_line_graph = false;
};

// Exact co-chordal cover number. For girth >= 5 inputs the domination number
// of the line graph (computed per component) is the default engine and the
// general cover search cross-checks it; both must agree.
CochordalCover cochordal_cover(const Graph& g);
int cochordal_cover_number(const Graph& g);

// Spanned subgraph of the given edge set (restricted to incident vertices)
// is co-chordal?
bool edge_set_cochordal(const Graph& g, const std::vector<int>& edge_ids);

bool cover_is_valid(const Graph& g, const CochordalCover& cover);

enum class CochordalShape { Star, DoubleStar, NotCochordal };

// Classification of a co-chordal subgraph living inside a host of girth >= 5.
CochordalShape cochordal_subgraph_shape(const Graph& h, int ambient_girth);

// General engine alone (exposed for cross-checks and tests).
CochordalCover cochordal_cover_general(const Graph& g);
// Line-graph domination engine alone; requires girth(g) >= 5.
CochordalCover cochordal_cover_via_line_graph(const Graph& g);

}  // namespace codis
