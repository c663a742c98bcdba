#include "codis/canonical.hpp"
#include "codis/constructions.hpp"
#include "codis/formats.hpp"
#include "codis/graph6.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace codis;

TEST_CASE("graph6 known encodings") {
    CHECK(emit_graph6(complete_graph(4)) == "C~");
    CHECK(emit_graph6(complete_graph(5)) == "D~{");
    CHECK(emit_graph6(Graph::edgeless(1)) == "@");
    Graph c5 = parse_graph6("Dhc");
    CHECK(c5.n() == 5);
    CHECK(are_isomorphic(c5, cycle_graph(5)));
    CHECK(parse_graph6(emit_graph6(Graph::edgeless(1))).n() == 1);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = testutil::random_graph(n, 0.4, rng);
        Graph back = parse_graph6(emit_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("graph6 multibyte order") {
    Graph big = Graph::edgeless(100);
    Graph back = parse_graph6(emit_graph6(big));
    CHECK(back.n() == 100);
    CHECK(back.edge_count() == 0);
    Graph p70 = path_graph(70);
    CHECK(parse_graph6(emit_graph6(p70)) == p70);
}

TEST_CASE("graph6 parse errors carry offsets") {
    CHECK_THROWS_AS(parse_graph6("D"), FormatError);
    CHECK_THROWS_AS(parse_graph6("Dhc?"), FormatError);
    CHECK_THROWS_AS(parse_graph6("\x05oops"), FormatError);
    // nonzero padding
    CHECK_THROWS_AS(parse_graph6("Dhd"), FormatError);
}

TEST_CASE("sparse6 known example") {
    // n = 7 with edges 01, 02, 12, 56
    Graph g = parse_sparse6(":Fa@x^");
    CHECK(g.n() == 7);
    CHECK(g.edge_count() == 4);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(5, 6));
}

TEST_CASE("parse_graph_line dispatches on format") {
    CHECK(parse_graph_line("Dhc\n").n() == 5);
    CHECK(parse_graph_line(":Fa@x^").n() == 7);
    CHECK(parse_graph_line(">>graph6<<C~").n() == 4);
}

TEST_CASE("edge list parsing") {
    Graph p3 = parse_edgelist("3 2\n0 1\n1 2\n");
    CHECK(p3 == path_graph(3));
    CHECK_THROWS_AS(parse_edgelist("3 1\n0 0\n"), FormatError);
    CHECK_THROWS_AS(parse_edgelist("3 2\n0 1\n1 0\n"), FormatError);
    CHECK_THROWS_AS(parse_edgelist("3 1\n0 5\n"), FormatError);
    CHECK_THROWS_AS(parse_edgelist("2 2\n0 1\n"), FormatError);
}

TEST_CASE("digraph and poset parsing") {
    Digraph two_cycle = parse_digraph("2 2\n0 1\n1 0\n");
    CHECK_FALSE(two_cycle.is_acyclic());
    Poset v_poset = parse_poset("3 2\n0 2\n1 2\n");
    CHECK(v_poset.less(0, 2));
    CHECK(v_poset.less(1, 2));
    CHECK_FALSE(v_poset.less(0, 1));
    CHECK_THROWS_AS(parse_poset("2 2\n0 1\n1 0\n"), FormatError);
}

TEST_CASE("poset closure is transitive") {
    Poset chain = parse_poset("4 3\n0 1\n1 2\n2 3\n");
    CHECK(chain.less(0, 3));
    CHECK(chain.less(0, 2));
    CHECK_FALSE(chain.less(3, 0));
}
