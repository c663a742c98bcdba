#include <functional>

#include "codis/canonical.hpp"
#include "codis/constructions.hpp"
#include "codis/covers.hpp"
#include "codis/decomposition.hpp"
#include "codis/homology.hpp"
#include "codis/independence.hpp"
#include "codis/matching.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace codis;

TEST_CASE("named families") {
    CHECK(cycle_graph(5).n() == 5);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(cycle_graph(5).girth() == 5);
    CHECK(wheel_graph(4).n() == 5);
    CHECK(wheel_graph(4).edge_count() == 8);
    CHECK(pan_graph(4).n() == 5);
    CHECK(pan_graph(4).edge_count() == 5);
    CHECK(star_graph(4).edge_count() == 4);
    CHECK(double_star_graph(2, 3).n() == 7);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(pan_graph(1), std::invalid_argument);
}

TEST_CASE("gn family structure") {
    Graph g1 = gn_family(1);
    CHECK(g1.n() == 12);
    CHECK(g1.edge_count() == 13);
    CHECK(g1.girth() == 6);
    Graph g2 = gn_family(2);
    CHECK(g2.n() == 24);
    CHECK(g2.edge_count() == 27);
    CHECK(g2.is_connected());
    CHECK(g2.girth() == 6);
    CHECK_THROWS_AS(gn_family(0), std::invalid_argument);
}

TEST_CASE("gn family invariants for n = 1") {
    Graph g1 = gn_family(1);
    CHECK(matching_number(g1) == 6);
    CHECK(induced_matching_number(g1) == 3);
    CHECK(cochordal_cover_number(g1) == 4);
    // the stated induced matching v1v11, v3v4, v8v9
    std::vector<std::pair<int, int>> witness{{0, 10}, {2, 3}, {7, 8}};
    CHECK(is_induced_matching(g1, witness));
    CHECK(is_vertex_decomposable(g1).vertex_decomposable);
    CHECK(regularity(g1, Field::GF2) == 3);
}

TEST_CASE("gn family invariants for n = 2") {
    Graph g2 = gn_family(2);
    CHECK(matching_number(g2) == 12);
    CHECK(induced_matching_number(g2) == 6);
    // One class fewer than the per-block cover: a double-star centered on
    // the binding edge absorbs two cycle edges from each adjacent block.
    auto cover = cochordal_cover(g2);
    CHECK(cover.size == 7);
    CHECK(cover_is_valid(g2, cover));
    CHECK(cochordal_cover_general(g2).size == 7);
}

TEST_CASE("clique whiskering") {
    Graph k2 = complete_graph(2);
    EdgeCliquePartition whole{{VertexSet::of(2, {0, 1})}};
    CHECK(oracle::isomorphic(clique_whisker(k2, whole), complete_graph(3)));

    Graph c4 = cycle_graph(4);
    Graph w = clique_whisker(c4, partition_into_edges(c4));
    CHECK(w.n() == 8);
    CHECK(w.edge_count() == 12);

    Graph c6 = cycle_graph(6);
    Graph w6 = clique_whisker(c6, partition_into_edges(c6));
    int min_deg = w6.n();
    for (int v = 0; v < w6.n(); ++v) min_deg = std::min(min_deg, w6.degree(v));
    CHECK(min_deg == 2);
}

TEST_CASE("partition validation failures") {
    Graph c4 = cycle_graph(4);
    // not a clique
    EdgeCliquePartition bad1{{VertexSet::of(4, {0, 2}), VertexSet::of(4, {0, 1}), VertexSet::of(4, {1, 2}),
                              VertexSet::of(4, {2, 3}), VertexSet::of(4, {0, 3})}};
    CHECK_THROWS_AS(clique_whisker(c4, bad1), std::invalid_argument);
    // singleton on a non-isolated vertex
    EdgeCliquePartition bad2 = partition_into_edges(c4);
    bad2.classes.push_back(VertexSet::of(4, {1}));
    CHECK_THROWS_AS(clique_whisker(c4, bad2), std::invalid_argument);
    // missing edge
    EdgeCliquePartition bad3{{VertexSet::of(4, {0, 1})}};
    CHECK_THROWS_AS(clique_whisker(c4, bad3), std::invalid_argument);
    // overlapping classes on a triangle
    Graph k3 = complete_graph(3);
    EdgeCliquePartition bad4{{VertexSet::of(3, {0, 1, 2}), VertexSet::of(3, {0, 1})}};
    CHECK_THROWS_AS(clique_whisker(k3, bad4), std::invalid_argument);
    // isolated vertices may carry singleton classes
    Graph lone = Graph::edgeless(1);
    EdgeCliquePartition ok{{VertexSet::of(1, {0})}};
    CHECK(clique_whisker(lone, ok).edge_count() == 1);
}

TEST_CASE("common enemy graphs") {
    Digraph empty = Digraph::from_edges(4, {});
    CHECK(common_enemy_graph(empty).edge_count() == 0);
    Digraph fork = Digraph::from_edges(3, {{2, 0}, {2, 1}});  // z -> a, z -> b
    CHECK(oracle::isomorphic(common_enemy_graph(fork), complete_graph(3)));
    // acyclic inputs produce vertex decomposable, codismantlable graphs
    std::mt19937 rng(191);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        std::vector<std::pair<int, int>> arcs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) arcs.emplace_back(i, j);
        Digraph d = Digraph::from_edges(n, arcs);
        REQUIRE(d.is_acyclic());
        Graph ce = common_enemy_graph(d);
        CHECK(is_vertex_decomposable(ce).vertex_decomposable);
        CHECK(is_codismantlable(ce).codismantlable);
    }
}

TEST_CASE("enemy sets require dipaths of positive length") {
    // a vertex is not its own enemy unless it lies on a cycle
    Digraph chain = Digraph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(chain.ancestors(0).contains(0));
    CHECK(chain.ancestors(2) == VertexSet::of(3, {0, 1}));
    Digraph loopy = Digraph::from_edges(2, {{0, 1}, {1, 0}});
    CHECK(loopy.ancestors(0).contains(0));
}

TEST_CASE("upper bound graphs") {
    Poset chain = Poset::from_covers(3, {{0, 1}, {1, 2}});
    CHECK(oracle::isomorphic(upper_bound_graph(chain), complete_graph(3)));
    Poset antichain = Poset::from_covers(4, {});
    CHECK(upper_bound_graph(antichain).edge_count() == 0);
    Poset vee = Poset::from_covers(3, {{0, 2}, {1, 2}});
    CHECK(oracle::isomorphic(upper_bound_graph(vee), complete_graph(3)));
}

TEST_CASE("upper bound graph equals the common enemy graph of the reversed cover digraph") {
    std::mt19937 rng(193);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        std::vector<std::pair<int, int>> covers;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) covers.emplace_back(i, j);
        Poset p = Poset::from_covers(n, covers);
        // reverse the cover digraph: enemies of x become elements above x
        std::vector<std::pair<int, int>> reversed;
        for (auto [u, v] : covers) reversed.emplace_back(v, u);
        Graph via_ce = common_enemy_graph(Digraph::from_edges(n, reversed));
        CHECK(via_ce == upper_bound_graph(p));
    }
}

TEST_CASE("orphan graphs load and validate") {
    Graph c7 = orphan(OrphanName::C7);
    CHECK(are_isomorphic(c7, cycle_graph(7)));
    Graph p10 = orphan(OrphanName::P10);
    CHECK(p10.n() == 10);
    Graph p13 = orphan(OrphanName::P13);
    CHECK(p13.n() == 13);
    Graph q13 = orphan(OrphanName::Q13);
    CHECK(q13.n() == 13);
    CHECK_FALSE(are_isomorphic(p13, q13));
    Graph p14 = orphan(OrphanName::P14);
    CHECK(p14.n() == 14);
    for (const Graph* g : {&p10, &p13, &q13, &p14}) {
        CHECK(is_well_covered(*g));
        CHECK(shedding_vertices(*g).empty());
        CHECK_FALSE(is_cohen_macaulay(*g, Field::GF2));
    }
    CHECK_THROWS_AS(orphan_from_string("bogus"), std::invalid_argument);
}
