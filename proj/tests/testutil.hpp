#pragma once

#include <random>
#include <vector>

#include "codis/constructions.hpp"
#include "codis/graph.hpp"

namespace testutil {

using codis::Graph;

inline Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

inline Graph relabeled(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.n(), es);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace testutil
