#pragma once

#include <functional>
#include <vector>

#include "codis/graph.hpp"

namespace codis {

// Finite abstract simplicial complex given by its facets (pairwise
// inclusion-incomparable) over ground set 0..ground-1. A complex with no
// facets at all is the void complex; the complex {∅} is represented by a
// single empty facet.
struct SimplicialComplex {
    int ground = 0;
    std::vector<VertexSet> facets;

    static SimplicialComplex from_facets(int ground, std::vector<VertexSet> facets);

    bool is_void() const { return facets.empty(); }
    // Largest facet size minus one; -1 for {∅}, meaningless for the void complex.
    int dim() const;
    bool is_pure() const;
    bool contains_face(const VertexSet& f) const;
};

// Streams maximal independent sets; return false from the callback to stop.
void for_each_maximal_independent_set(const Graph& g, const std::function<bool(const VertexSet&)>& cb);

// All maximal independent sets in deterministic (lexicographic) order.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

// Streams all independent sets (including the empty set); return false to stop.
void for_each_independent_set(const Graph& g, const std::function<bool(const VertexSet&)>& cb);

int independence_number(const Graph& g);
bool is_well_covered(const Graph& g);
bool is_very_well_covered(const Graph& g);

SimplicialComplex independence_complex(const Graph& g);

// Minimal vertex covers are the complements of maximal independent sets.
std::vector<VertexSet> minimal_vertex_covers(const Graph& g);
bool is_vertex_cover(const Graph& g, const VertexSet& x);
bool is_minimal_vertex_cover(const Graph& g, const VertexSet& x);
bool is_independent_set(const Graph& g, const VertexSet& s);

}  // namespace codis
