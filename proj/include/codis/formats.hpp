#pragma once

#include <string_view>

#include "codis/digraph.hpp"
#include "codis/graph.hpp"
#include "codis/graph6.hpp"

namespace codis {

// Plain text formats: header line "n m", then m lines "u v".
// Edge lists are undirected; digraph lines are ordered arcs; poset lines are
// cover relations u < v (transitive closure computed, cycles rejected).
Graph parse_edgelist(std::string_view text);
Digraph parse_digraph(std::string_view text);
Poset parse_poset(std::string_view text);

std::string emit_edgelist(const Graph& g);

}  // namespace codis
