#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "codis/graph.hpp"

namespace codis {

// Universe filters for exhaustive enumeration. Hereditary gates (closed under
// induced subgraphs) prune the generation tree; final predicates apply only
// to the full-size output graphs.
struct GraphFilter {
    // hereditary gates
    std::optional<int> girth_min;
    std::vector<int> forbidden_induced_cycles;
    bool bipartite = false;
    // final predicates
    bool connected = false;
    std::function<bool(const Graph&)> predicate;

    bool hereditary_ok(const Graph& g) const;
    bool final_ok(const Graph& g) const;
    std::string describe() const;
};

// Streams exactly one representative per isomorphism class of graphs on n
// vertices passing the filter, generated by canonical augmentation. Return
// false from the callback to stop early. Returns the number of graphs
// delivered.
uint64_t enumerate_graphs(int n, const GraphFilter& filter, const std::function<bool(const Graph&)>& cb);

// Convenience: all orders from n_min to n_max inclusive.
uint64_t enumerate_graphs_up_to(int n_min, int n_max, const GraphFilter& filter,
                                const std::function<bool(const Graph&)>& cb);

constexpr int kMaxBuiltinEnumeration = 10;

}  // namespace codis
