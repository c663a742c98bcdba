#include "codis/constructions.hpp"
#include "codis/decomposition.hpp"
#include "codis/independence.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace codis;

TEST_CASE("codominated vertices") {
    // path a-b-c: the middle vertex is codominated with either leaf as witness
    auto pairs = codominated_pairs(path_graph(3));
    CHECK(pairs == std::vector<std::pair<int, int>>{{1, 0}, {1, 2}});
    CHECK(codominated_vertices(cycle_graph(6)).empty());
    CHECK(codominated_vertices(complete_graph(4)).size() == 4);
    std::mt19937 rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = testutil::random_graph(7, 0.35, rng);
        auto verts = codominated_vertices(g);
        for (int x = 0; x < g.n(); ++x) {
            bool in = std::find(verts.begin(), verts.end(), x) != verts.end();
            CHECK(in == oracle::codominated(g, x));
        }
    }
}

TEST_CASE("cns graphs") {
    CHECK(is_cns(cycle_graph(6)));
    CHECK(is_cns(cycle_graph(7)));
    CHECK_FALSE(is_cns(pan_graph(5)));  // support of the pendant is codominated
    CHECK_FALSE(is_cns(star_graph(3)));
}

TEST_CASE("codismantlability of named families") {
    // chordal graphs are codismantlable
    std::mt19937 rng(103);
    int chordal_seen = 0;
    for (int trial = 0; trial < 120 && chordal_seen < 15; ++trial) {
        Graph g = testutil::random_graph(7, 0.3, rng);
        if (!g.is_chordal()) continue;
        ++chordal_seen;
        CHECK(is_codismantlable(g).codismantlable);
    }
    CHECK(chordal_seen > 0);
    for (int n = 4; n <= 7; ++n) {
        CHECK_FALSE(is_codismantlable(wheel_graph(n)).codismantlable);
        CHECK(is_codismantlable(pan_graph(n)).codismantlable);
    }
    CHECK(is_codismantlable(Graph::edgeless(4)).codismantlable);
    CHECK(is_codismantlable(Graph::edgeless(0)).codismantlable);
    CHECK_FALSE(is_codismantlable(cycle_graph(4)).codismantlable);
    CHECK_FALSE(is_codismantlable(cycle_graph(5)).codismantlable);
}

TEST_CASE("codismantlability agrees with definitional brute force") {
    std::mt19937 rng(107);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = testutil::random_graph(6, 0.35, rng);
        CHECK(is_codismantlable(g).codismantlable == oracle::codismantlable(g));
    }
}

TEST_CASE("cd certificates replay and give minimal vertex covers") {
    std::mt19937 rng(109);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = testutil::random_graph(7, 0.3, rng);
        auto res = is_codismantlable(g);
        if (!res.codismantlable) continue;
        REQUIRE(res.certificate.has_value());
        CHECK(replay_cd_certificate(g, *res.certificate));
        VertexSet deleted(g.n());
        for (const auto& s : res.certificate->steps) deleted.add(s.x);
        CHECK(is_minimal_vertex_cover(g, deleted));
    }
}

TEST_CASE("greedy codismantling is consistent on confluent cases") {
    CHECK(is_codismantlable_greedy(pan_graph(5)));
    CHECK_FALSE(is_codismantlable_greedy(cycle_graph(6)));
}

TEST_CASE("shedding vertices definitional check") {
    auto shed_p3 = shedding_vertices(path_graph(3));
    CHECK(std::find(shed_p3.begin(), shed_p3.end(), 1) != shed_p3.end());
    CHECK(shedding_vertices(cycle_graph(4)).empty());
    CHECK(shedding_vertices(cycle_graph(6)).empty());
    std::mt19937 rng(113);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = testutil::random_graph(6, 0.35, rng);
        auto shed = shedding_vertices(g);
        for (int x = 0; x < g.n(); ++x) {
            bool in = std::find(shed.begin(), shed.end(), x) != shed.end();
            CHECK(in == oracle::shedding(g, x));
        }
    }
}

TEST_CASE("codominated vertices are shedding") {
    std::mt19937 rng(127);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = testutil::random_graph(7, 0.35, rng);
        auto shed = shedding_vertices(g);
        for (int x : codominated_vertices(g))
            CHECK(std::find(shed.begin(), shed.end(), x) != shed.end());
    }
}

TEST_CASE("fast path equals definitional shedding on C4C5-free graphs") {
    std::mt19937 rng(131);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 25; ++trial) {
        Graph g = testutil::random_graph(7, 0.25, rng);
        if (!g.is_induced_cycle_free({4, 5})) continue;
        ++checked;
        CHECK(shedding_vertices(g, true) == shedding_vertices(g, false));
    }
    CHECK(checked > 0);
}

TEST_CASE("vertex decomposability of small families") {
    CHECK(is_vertex_decomposable(complete_graph(5)).vertex_decomposable);
    CHECK(is_vertex_decomposable(cycle_graph(3)).vertex_decomposable);
    CHECK_FALSE(is_vertex_decomposable(cycle_graph(4)).vertex_decomposable);
    CHECK(is_vertex_decomposable(cycle_graph(5)).vertex_decomposable);
    for (int n = 6; n <= 9; ++n) CHECK_FALSE(is_vertex_decomposable(cycle_graph(n)).vertex_decomposable);
    CHECK(is_vertex_decomposable(Graph::edgeless(3)).vertex_decomposable);
    CHECK(is_vertex_decomposable(Graph::edgeless(0)).vertex_decomposable);
}

TEST_CASE("vertex decomposability agrees with definitional brute force") {
    std::mt19937 rng(137);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = testutil::random_graph(6, 0.35, rng);
        CHECK(is_vertex_decomposable(g).vertex_decomposable == oracle::vertex_decomposable(g));
    }
}

TEST_CASE("decomposition traces replay") {
    std::mt19937 rng(139);
    int replayed = 0;
    for (int trial = 0; trial < 80 && replayed < 20; ++trial) {
        Graph g = testutil::random_graph(7, 0.35, rng);
        auto res = is_vertex_decomposable(g);
        if (!res.vertex_decomposable) continue;
        ++replayed;
        REQUIRE(res.trace != nullptr);
        CHECK(replay_decomposition_trace(g, *res.trace));
    }
    CHECK(replayed > 0);
    // a tampered trace must fail
    auto res = is_vertex_decomposable(complete_graph(3));
    REQUIRE(res.trace);
    res.trace->shed = 2;
    auto res2 = is_vertex_decomposable(complete_graph(3));
    (void)res2;
    DecompositionTrace bogus;
    bogus.edgeless = true;
    CHECK_FALSE(replay_decomposition_trace(complete_graph(3), bogus));
}

TEST_CASE("whiskered four-cycle is vertex decomposable") {
    Graph c4 = cycle_graph(4);
    Graph whiskered = clique_whisker(c4, partition_into_edges(c4));
    CHECK(whiskered.n() == 8);
    CHECK(whiskered.edge_count() == 12);
    CHECK(is_vertex_decomposable(whiskered).vertex_decomposable);
    CHECK(is_codismantlable(whiskered).codismantlable);
}
