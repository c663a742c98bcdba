#pragma once

#include <string>
#include <vector>

#include "codis/graph.hpp"

namespace codis {

// Total-order key with key equality <=> graph isomorphism.
struct CanonicalForm {
    std::string key;             // order prefix + packed canonical adjacency bits
    std::vector<int> labeling;   // labeling[v] = position of v in canonical order

    bool operator==(const CanonicalForm& o) const { return key == o.key; }
};

CanonicalForm canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

// Hex digest of the canonical key (stable across runs, used for cache keys
// and report ids).
std::string canonical_hash(const Graph& g);

}  // namespace codis
