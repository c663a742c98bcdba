#include "codis/constructions.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "codis/canonical.hpp"
#include "codis/decomposition.hpp"
#include "codis/formats.hpp"
#include "codis/homology.hpp"
#include "codis/independence.hpp"

namespace codis {

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, es);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
    if (n < 0) throw std::invalid_argument("order must be nonnegative");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

Graph star_graph(int leaves) {
    if (leaves < 0) throw std::invalid_argument("leaf count must be nonnegative");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, es);
}

Graph double_star_graph(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("leaf counts must be nonnegative");
    std::vector<std::pair<int, int>> es{{0, 1}};
    for (int i = 0; i < a; ++i) es.emplace_back(0, 2 + i);
    for (int i = 0; i < b; ++i) es.emplace_back(1, 2 + a + i);
    return Graph::from_edges(2 + a + b, es);
}

Graph pan_graph(int m) {
    if (m < 3) throw std::invalid_argument("pan needs a cycle of length >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < m; ++i) es.emplace_back(i, (i + 1) % m);
    es.emplace_back(0, m);
    return Graph::from_edges(m + 1, es);
}

Graph wheel_graph(int n) {
    if (n < 3) throw std::invalid_argument("wheel needs a rim of length >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) {
        es.emplace_back(i, (i + 1) % n);
        es.emplace_back(i, n);
    }
    return Graph::from_edges(n + 1, es);
}

Graph gn_family(int n) {
    if (n < 1) throw std::invalid_argument("gn family needs n >= 1");
    std::vector<std::pair<int, int>> es;
    auto id = [](int block, int j) { return 12 * block + (j - 1); };  // v_j of block i
    for (int i = 0; i < n; ++i) {
        for (int j = 1; j <= 9; ++j) es.emplace_back(id(i, j), id(i, j + 1));
        es.emplace_back(id(i, 10), id(i, 1));
        es.emplace_back(id(i, 1), id(i, 11));
        es.emplace_back(id(i, 2), id(i, 7));
        es.emplace_back(id(i, 2), id(i, 12));
    }
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(id(i, 5), id(i + 1, 9));
    Graph g = Graph::from_edges(12 * n, es);
    if (g.n() != 12 * n || g.edge_count() != 14 * n - 1) throw std::logic_error("gn count mismatch");
    auto girth = g.girth();
    if (!girth || *girth != 6) throw std::logic_error("gn girth mismatch");
    return g;
}

EdgeCliquePartition partition_into_edges(const Graph& g) {
    EdgeCliquePartition pi;
    for (auto [u, v] : g.edges()) pi.classes.push_back(VertexSet::of(g.n(), {u, v}));
    return pi;
}

void validate_partition(const Graph& g, const EdgeCliquePartition& pi) {
    std::vector<std::vector<int>> seen(g.n(), std::vector<int>(g.n(), 0));
    for (size_t c = 0; c < pi.classes.size(); ++c) {
        const VertexSet& w = pi.classes[c];
        if (w.universe() != g.n()) throw std::invalid_argument("class " + std::to_string(c) + " has wrong universe");
        int size = w.count();
        if (size == 0) throw std::invalid_argument("class " + std::to_string(c) + " is empty");
        if (size == 1) {
            int x = w.first();
            if (g.degree(x) != 0)
                throw std::invalid_argument("class " + std::to_string(c) + " is a singleton on a non-isolated vertex");
            continue;
        }
        auto vs = w.to_vector();
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) {
                if (!g.has_edge(vs[i], vs[j]))
                    throw std::invalid_argument("class " + std::to_string(c) + " is not a clique");
                if (++seen[vs[i]][vs[j]] > 1)
                    throw std::invalid_argument("class " + std::to_string(c) + " overlaps another class on an edge");
            }
    }
    for (auto [u, v] : g.edges())
        if (seen[u][v] != 1) throw std::invalid_argument("edge not covered by any class");
}

Graph clique_whisker(const Graph& g, const EdgeCliquePartition& pi) {
    validate_partition(g, pi);
    int n = g.n();
    int k = static_cast<int>(pi.classes.size());
    std::vector<std::pair<int, int>> es = g.edges();
    for (int c = 0; c < k; ++c)
        pi.classes[c].for_each([&](int u) { es.emplace_back(u, n + c); });
    return Graph::from_edges(n + k, es);
}

Graph common_enemy_graph(const Digraph& d) {
    int n = d.n();
    std::vector<VertexSet> closed;
    closed.reserve(n);
    for (int u = 0; u < n; ++u) {
        VertexSet a = d.ancestors(u);
        a.add(u);
        closed.push_back(a);
    }
    std::vector<std::pair<int, int>> es;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (closed[x].intersects(closed[y])) es.emplace_back(x, y);
    return Graph::from_edges(n, es);
}

Graph upper_bound_graph(const Poset& p) {
    int n = p.n();
    std::vector<std::pair<int, int>> es;
    for (int x = 0; x < n; ++x) {
        VertexSet above_x = p.strictly_above(x);
        above_x.add(x);
        for (int y = x + 1; y < n; ++y) {
            VertexSet above_y = p.strictly_above(y);
            above_y.add(y);
            if (above_x.intersects(above_y)) es.emplace_back(x, y);
        }
    }
    return Graph::from_edges(n, es);
}

OrphanName orphan_from_string(const std::string& name) {
    if (name == "C7" || name == "c7") return OrphanName::C7;
    if (name == "P10" || name == "p10") return OrphanName::P10;
    if (name == "P13" || name == "p13") return OrphanName::P13;
    if (name == "Q13" || name == "q13") return OrphanName::Q13;
    if (name == "P14" || name == "p14") return OrphanName::P14;
    throw std::invalid_argument("unknown orphan name: " + name);
}

std::string orphan_to_string(OrphanName name) {
    switch (name) {
        case OrphanName::C7: return "C7";
        case OrphanName::P10: return "P10";
        case OrphanName::P13: return "P13";
        case OrphanName::Q13: return "Q13";
        case OrphanName::P14: return "P14";
    }
    return "?";
}

namespace {

std::string orphan_file(OrphanName name) {
    switch (name) {
        case OrphanName::P10: return "p10.edges";
        case OrphanName::P13: return "p13.edges";
        case OrphanName::Q13: return "q13.edges";
        case OrphanName::P14: return "p14.edges";
        default: return "";
    }
}

std::string read_data_file(const std::string& file) {
    std::vector<std::string> dirs;
    if (const char* env = std::getenv("CODIS_DATA_DIR")) dirs.push_back(std::string(env) + "/orphans");
#ifdef CODIS_SOURCE_DATA_DIR
    dirs.push_back(std::string(CODIS_SOURCE_DATA_DIR) + "/orphans");
#endif
    dirs.push_back("data/orphans");
    for (const auto& dir : dirs) {
        std::ifstream in(dir + "/" + file);
        if (in) {
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }
    }
    throw std::runtime_error("orphan data file not found: " + file +
                             " (set CODIS_DATA_DIR to the data directory)");
}

// Exists x (an independent set of the given size) with g - N[x] isomorphic
// to the target.
bool has_link_isomorphic_to(const Graph& g, int set_size, const Graph& target) {
    bool found = false;
    for_each_independent_set(g, [&](const VertexSet& ind) {
        if (ind.count() != set_size) return true;
        if (are_isomorphic(g.remove_closed_neighborhood(ind).graph, target)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

void validate_orphan(OrphanName name, const Graph& g) {
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("orphan data for " + orphan_to_string(name) + " failed validation: " + what);
    };
    if (!g.is_connected()) fail("not connected");
    auto girth = g.girth();
    if (girth && *girth < 5) fail("girth below five");
    if (!is_well_covered(g)) fail("not well-covered");
    if (!shedding_vertices(g).empty()) fail("has a shedding vertex");
    if (is_cohen_macaulay(g, Field::GF2)) fail("Cohen-Macaulay over GF(2)");
    Graph c7 = cycle_graph(7);
    switch (name) {
        case OrphanName::P10:
            if (g.n() != 10) fail("order is not 10");
            if (!has_link_isomorphic_to(g, 1, c7)) fail("no vertex link isomorphic to C7");
            break;
        case OrphanName::P13:
            if (g.n() != 13) fail("order is not 13");
            if (!has_link_isomorphic_to(g, 2, c7)) fail("no 2-set link isomorphic to C7");
            break;
        case OrphanName::Q13: {
            if (g.n() != 13) fail("order is not 13");
            Graph c7_k2 = Graph::from_edges(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {7, 8}});
            if (!has_link_isomorphic_to(g, 1, c7_k2)) fail("no vertex link isomorphic to C7 + K2");
            break;
        }
        case OrphanName::P14:
            if (g.n() != 14) fail("order is not 14");
            if (!has_link_isomorphic_to(g, 2, c7)) fail("no 2-set link isomorphic to C7");
            break;
        default: break;
    }
}

}  // namespace

Graph orphan(OrphanName name) {
    if (name == OrphanName::C7) return cycle_graph(7);
    Graph g = parse_edgelist(read_data_file(orphan_file(name)));
    validate_orphan(name, g);
    return g;
}

}  // namespace codis
