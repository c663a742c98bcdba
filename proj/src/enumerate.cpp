#include "codis/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "codis/canonical.hpp"
#include "codis/graph6.hpp"
#include "codis/independence.hpp"

namespace codis {

bool GraphFilter::hereditary_ok(const Graph& g) const {
    if (girth_min && *girth_min > 3) {
        auto girth = g.girth();
        if (girth && *girth < *girth_min) return false;
    }
    if (!forbidden_induced_cycles.empty() && !g.is_induced_cycle_free(forbidden_induced_cycles)) return false;
    if (bipartite && !g.is_bipartite()) return false;
    return true;
}

bool GraphFilter::final_ok(const Graph& g) const {
    if (connected && !g.is_connected()) return false;
    if (predicate && !predicate(g)) return false;
    return true;
}

std::string GraphFilter::describe() const {
    std::string s;
    if (connected) s += "connected ";
    if (bipartite) s += "bipartite ";
    if (girth_min) s += "girth>=" + std::to_string(*girth_min) + " ";
    if (!forbidden_induced_cycles.empty()) {
        s += "no-induced-C{";
        for (size_t i = 0; i < forbidden_induced_cycles.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(forbidden_induced_cycles[i]);
        }
        s += "} ";
    }
    if (predicate) s += "custom-predicate ";
    if (s.empty()) s = "all ";
    return s.substr(0, s.size() - 1);
}

uint64_t enumerate_graphs(int n, const GraphFilter& filter, const std::function<bool(const Graph&)>& cb) {
    if (n < 1 || n > kMaxBuiltinEnumeration)
        throw std::invalid_argument("builtin enumeration supports 1 <= n <= " +
                                    std::to_string(kMaxBuiltinEnumeration) +
                                    "; use an external graph6 stream beyond that");
    // level[k] holds one graph6 representative per class on k+1 vertices
    // passing the hereditary gates.
    std::vector<std::string> level{emit_graph6(Graph::edgeless(1))};
    for (int k = 1; k < n; ++k) {
        std::vector<std::string> next;
        for (const std::string& parent_g6 : level) {
            Graph parent = parse_graph6(parent_g6);
            std::string parent_key = canonical_form(parent).key;
            std::unordered_set<std::string> produced;
            for (uint64_t nb = 0; nb < (uint64_t(1) << k); ++nb) {
                std::vector<std::pair<int, int>> es = parent.edges();
                for (int v = 0; v < k; ++v)
                    if ((nb >> v) & 1) es.emplace_back(v, k);
                Graph child = Graph::from_edges(k + 1, es);
                if (!filter.hereditary_ok(child)) continue;
                // Deleting the vertex at the last canonical position is an
                // isomorphism-invariant choice; accept the child only when it
                // was expanded from that parent class.
                CanonicalForm child_cf = canonical_form(child);
                int victim = -1;
                for (int v = 0; v <= k; ++v)
                    if (child_cf.labeling[v] == k) victim = v;
                if (canonical_form(child.remove_vertex(victim).graph).key != parent_key) continue;
                if (produced.insert(child_cf.key).second) next.push_back(emit_graph6(child));
            }
        }
        level = std::move(next);
    }
    uint64_t count = 0;
    std::sort(level.begin(), level.end());
    for (const std::string& g6 : level) {
        Graph g = parse_graph6(g6);
        if (!filter.final_ok(g)) continue;
        ++count;
        if (!cb(g)) break;
    }
    return count;
}

uint64_t enumerate_graphs_up_to(int n_min, int n_max, const GraphFilter& filter,
                                const std::function<bool(const Graph&)>& cb) {
    uint64_t total = 0;
    for (int n = n_min; n <= n_max; ++n) total += enumerate_graphs(n, filter, cb);
    return total;
}

}  // namespace codis
