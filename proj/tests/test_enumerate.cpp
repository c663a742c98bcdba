#include <set>

#include "codis/canonical.hpp"
#include "codis/constructions.hpp"
#include "codis/enumerate.hpp"
#include "codis/independence.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace codis;

namespace {

uint64_t count_all(int n, const GraphFilter& f = {}) {
    return enumerate_graphs(n, f, [](const Graph&) { return true; });
}

// brute-force class count over all labeled graphs
uint64_t brute_count(int n) {
    std::set<std::string> keys;
    int bits = n * (n - 1) / 2;
    for (uint64_t mask = 0; mask < (uint64_t(1) << bits); ++mask) {
        std::vector<std::pair<int, int>> es;
        int b = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++b)
                if ((mask >> b) & 1) es.emplace_back(i, j);
        keys.insert(canonical_form(Graph::from_edges(n, es)).key);
    }
    return keys.size();
}

}  // namespace

TEST_CASE("enumeration counts match brute-force dedup up to n = 6") {
    for (int n = 1; n <= 6; ++n) CHECK(count_all(n) == brute_count(n));
}

TEST_CASE("known unfiltered counts") {
    CHECK(count_all(1) == 1);
    CHECK(count_all(2) == 2);
    CHECK(count_all(3) == 4);
    CHECK(count_all(4) == 11);
    CHECK(count_all(5) == 34);
    CHECK(count_all(6) == 156);
    CHECK(count_all(7) == 1044);
}

TEST_CASE("enumerated representatives are pairwise non-isomorphic and filtered") {
    GraphFilter girth5;
    girth5.girth_min = 5;
    girth5.connected = true;
    std::set<std::string> keys;
    uint64_t count = enumerate_graphs(7, girth5, [&](const Graph& g) {
        CHECK(g.is_connected());
        auto girth = g.girth();
        CHECK((!girth || *girth >= 5));
        keys.insert(canonical_form(g).key);
        return true;
    });
    CHECK(count == keys.size());
    CHECK(count > 0);
}

TEST_CASE("well-covered cycles within the cycle universe") {
    // enumerate connected 2-regular graphs on 3..7 vertices: exactly the cycles
    for (int n = 3; n <= 7; ++n) {
        GraphFilter f;
        f.connected = true;
        f.predicate = [](const Graph& g) {
            for (int v = 0; v < g.n(); ++v)
                if (g.degree(v) != 2) return false;
            return true;
        };
        uint64_t count = enumerate_graphs(n, f, [&](const Graph& g) {
            CHECK(are_isomorphic(g, cycle_graph(n)));
            bool want = (n == 3 || n == 4 || n == 5 || n == 7);
            CHECK(is_well_covered(g) == want);
            return true;
        });
        CHECK(count == 1);
    }
}

TEST_CASE("bipartite gate") {
    GraphFilter f;
    f.bipartite = true;
    uint64_t count = enumerate_graphs(5, f, [&](const Graph& g) {
        CHECK(g.is_bipartite());
        return true;
    });
    // bipartite graph classes on 5 vertices
    uint64_t expect = 0;
    GraphFilter all;
    enumerate_graphs(5, all, [&](const Graph& g) {
        if (g.is_bipartite()) ++expect;
        return true;
    });
    CHECK(count == expect);
}

TEST_CASE("enumeration bounds") {
    CHECK_THROWS_AS(count_all(0), std::invalid_argument);
    CHECK_THROWS_AS(count_all(11), std::invalid_argument);
}
