#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "codis/graph.hpp"

namespace codis {

// All pairs (x, y), x != y, with N[y] ⊆ N[x]; x is the codominated vertex and
// y its witness. Ascending (x, y) order.
std::vector<std::pair<int, int>> codominated_pairs(const Graph& g);

// Vertices having at least one witness, ascending.
std::vector<int> codominated_vertices(const Graph& g);

// Closed-neighborhood-Sperner: the closed neighborhoods form an antichain.
bool is_cns(const Graph& g);

// Ordered codismantling trace: step i deletes x_i, a codominated vertex of
// the current residual graph with witness y_i. Labels refer to the input
// graph. residual is the final edgeless vertex set.
struct CdCertificate {
    struct Step {
        int x;
        int y;
    };
    std::vector<Step> steps;
    VertexSet residual;
};

struct CodismantleResult {
    bool codismantlable = false;
    std::optional<CdCertificate> certificate;
};

// Exhaustive over deletion orders (deletion order is not assumed confluent),
// memoized by canonical form.
CodismantleResult is_codismantlable(const Graph& g);

// Greedy variant: repeatedly deletes the first codominated vertex. Heuristic;
// a false answer proves nothing.
bool is_codismantlable_greedy(const Graph& g);

bool replay_cd_certificate(const Graph& g, const CdCertificate& cert);

// Shedding vertices by the definition: x such that every independent set of
// G - N[x] extends by some neighbor of x. With the fast path enabled, graphs
// with no induced C4 or C5 use the codominated set instead.
std::vector<int> shedding_vertices(const Graph& g, bool c4c5_fast_path = false);
bool is_shedding_vertex(const Graph& g, int x);

// Binary tree of shedding choices; the children cover G - x and G - N[x].
// Vertex ids refer to the graph at the root of the overall trace.
struct DecompositionTrace {
    bool edgeless = false;
    int shed = -1;
    std::unique_ptr<DecompositionTrace> minus_vertex;
    std::unique_ptr<DecompositionTrace> minus_neighborhood;
};

struct VertexDecomposabilityResult {
    bool vertex_decomposable = false;
    std::unique_ptr<DecompositionTrace> trace;
};

VertexDecomposabilityResult is_vertex_decomposable(const Graph& g);

bool replay_decomposition_trace(const Graph& g, const DecompositionTrace& t);

}  // namespace codis
