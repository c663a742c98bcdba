#include "codis/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace codis {

namespace {

int color_count(const std::vector<int>& color) {
    int k = 0;
    for (int c : color) k = std::max(k, c + 1);
    return k;
}

// Equitable refinement: split color classes by neighbor color multisets until
// stable. New colors are assigned by sorted signature, so the result is
// isomorphism-invariant.
void refine(const Graph& g, std::vector<int>& color) {
    int n = g.n();
    while (true) {
        int k = color_count(color);
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> cnt(k, 0);
            for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u)) ++cnt[color[u]];
            sig[v].reserve(k + 1);
            sig[v].push_back(color[v]);
            sig[v].insert(sig[v].end(), cnt.begin(), cnt.end());
        }
        std::vector<std::vector<int>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        if (static_cast<int>(uniq.size()) == k) return;
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    }
}

std::string key_from_discrete(const Graph& g, const std::vector<int>& color) {
    int n = g.n();
    std::vector<int> at_pos(n);
    for (int v = 0; v < n; ++v) at_pos[color[v]] = v;
    std::string key;
    key.reserve(4 + (static_cast<size_t>(n) * n / 2 + 7) / 8);
    for (int s = 24; s >= 0; s -= 8) key.push_back(static_cast<char>((static_cast<uint32_t>(n) >> s) & 0xff));
    uint8_t acc = 0;
    int nbits = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            acc = static_cast<uint8_t>((acc << 1) | (g.has_edge(at_pos[i], at_pos[j]) ? 1 : 0));
            if (++nbits == 8) {
                key.push_back(static_cast<char>(acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) key.push_back(static_cast<char>(acc << (8 - nbits)));
    return key;
}

// Individualization-refinement search for the minimum adjacency key.
//
// Two standard automorphism prunings keep symmetric graphs polynomial here:
//   - a sibling candidate lying in the orbit of an explored one (under the
//     subgroup fixing the individualized base pointwise) is skipped;
//   - when a leaf reproduces the best key, the discovered automorphism maps
//     the current branch onto an explored sibling branch at its first moved
//     base position, so the search unwinds straight back to that node.
struct Search {
    const Graph& g;
    std::string best;
    std::vector<int> best_labeling;
    bool have_best = false;
    std::vector<std::vector<int>> autos;
    std::vector<int> base;
    std::vector<std::vector<int>> explored_stack;
    int abort_depth = -1;

    explicit Search(const Graph& graph) : g(graph) {}

    static constexpr size_t kMaxStoredAutos = 128;

    void on_equal_leaf(const std::vector<int>& leaf_labeling) {
        int n = g.n();
        std::vector<int> at_pos(n);
        for (int v = 0; v < n; ++v) at_pos[leaf_labeling[v]] = v;
        std::vector<int> phi(n), inv(n);
        bool identity = true;
        for (int v = 0; v < n; ++v) {
            phi[v] = at_pos[best_labeling[v]];
            if (phi[v] != v) identity = false;
        }
        if (identity) return;
        for (int v = 0; v < n; ++v) inv[phi[v]] = v;
        if (autos.size() < kMaxStoredAutos) autos.push_back(phi);
        // First base position moved by the automorphism: if it lands on an
        // explored sibling there, the subtree is the image of explored work.
        for (size_t d = 0; d < base.size(); ++d) {
            if (phi[base[d]] == base[d]) continue;
            const auto& explored = explored_stack[d];
            for (int moved : {phi[base[d]], inv[base[d]]}) {
                if (std::find(explored.begin(), explored.end(), moved) != explored.end()) {
                    abort_depth = static_cast<int>(d);
                    return;
                }
            }
            break;
        }
    }

    std::vector<int> base_stable_orbits() const {
        int n = g.n();
        std::vector<int> parent(n);
        for (int v = 0; v < n; ++v) parent[v] = v;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& phi : autos) {
            bool fixes = true;
            for (int b : base)
                if (phi[b] != b) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) {
                int a = find(v), b = find(phi[v]);
                if (a != b) parent[a] = b;
            }
        }
        for (int v = 0; v < n; ++v) parent[v] = find(v);
        return parent;
    }

    void run(std::vector<int> color) {
        refine(g, color);
        int n = g.n();
        int k = color_count(color);
        int target = -1;
        std::vector<int> size(k, 0);
        for (int v = 0; v < n; ++v) ++size[color[v]];
        for (int c = 0; c < k; ++c)
            if (size[c] > 1) {
                target = c;
                break;
            }
        if (target == -1) {
            std::string key = key_from_discrete(g, color);
            if (!have_best || key < best) {
                best = std::move(key);
                best_labeling = color;
                have_best = true;
            } else if (key == best) {
                on_equal_leaf(color);
            }
            return;
        }
        int depth = static_cast<int>(base.size());
        explored_stack.emplace_back();
        for (int v = 0; v < n; ++v) {
            if (color[v] != target) continue;
            if (!explored_stack[depth].empty() && !autos.empty()) {
                std::vector<int> orbit = base_stable_orbits();
                bool skip = false;
                for (int u : explored_stack[depth])
                    if (orbit[u] == orbit[v]) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }
            explored_stack[depth].push_back(v);
            std::vector<int> child(color);
            for (int u = 0; u < n; ++u)
                if (u != v && child[u] >= target) ++child[u];
            base.push_back(v);
            run(std::move(child));
            base.pop_back();
            if (abort_depth != -1) {
                if (abort_depth < depth) {
                    explored_stack.pop_back();
                    return;  // unwind further
                }
                abort_depth = -1;  // this is the merge node; keep scanning siblings
            }
        }
        explored_stack.pop_back();
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    Search s(g);
    s.run(std::vector<int>(g.n(), 0));
    if (!s.have_best) {
        // n == 0: the empty coloring is already discrete.
        return {key_from_discrete(g, {}), {}};
    }
    return {std::move(s.best), std::move(s.best_labeling)};
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a).key == canonical_form(b).key;
}

std::string canonical_hash(const Graph& g) {
    std::string key = canonical_form(g).key;
    uint64_t h1 = 1469598103934665603ULL, h2 = 0x2d358dccaa6c78a5ULL;
    for (unsigned char c : key) {
        h1 = (h1 ^ c) * 1099511628211ULL;
        h2 = (h2 ^ c) * 0x8bb84b93962eacc9ULL;
        h2 ^= h2 >> 29;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(32, '0');
    for (int i = 0; i < 16; ++i) {
        uint64_t h = i < 8 ? h1 : h2;
        int shift = 56 - 8 * (i & 7);
        uint8_t byte = static_cast<uint8_t>((h >> shift) & 0xff);
        out[2 * i] = hex[byte >> 4];
        out[2 * i + 1] = hex[byte & 15];
    }
    return out;
}

}  // namespace codis
