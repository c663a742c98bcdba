#include "codis/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>

#include "codis/canonical.hpp"
#include "codis/lru.hpp"

namespace codis {

std::string field_name(Field f) { return f == Field::GF2 ? "gf2" : "q"; }

size_t FaceChain::face_count() const {
    size_t c = has_empty ? 1 : 0;
    for (const auto& d : by_dim) c += d.size();
    return c;
}

namespace {

void require_mask_ground(int ground) {
    if (ground > 63) throw CapExceeded(ground);
}

std::vector<uint64_t> lower_faces(const std::vector<uint64_t>& faces) {
    std::vector<uint64_t> out;
    out.reserve(faces.size() * 2);
    for (uint64_t m : faces) {
        uint64_t rest = m;
        while (rest) {
            uint64_t bit = rest & (~rest + 1);
            out.push_back(m ^ bit);
            rest ^= bit;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

FaceChain FaceChain::from_complex(const SimplicialComplex& k) {
    require_mask_ground(k.ground);
    FaceChain fc;
    fc.ground = k.ground;
    if (k.facets.empty()) return fc;  // void complex
    fc.has_empty = true;
    int d = k.dim();
    if (d < 0) return fc;  // {∅}
    fc.by_dim.assign(d + 1, {});
    std::vector<uint64_t> level;
    for (const auto& f : k.facets) level.push_back(f.low_word());
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    // Peel facets down dimension by dimension.
    while (!level.empty()) {
        std::vector<std::vector<uint64_t>> grouped(d + 1);
        for (uint64_t m : level) {
            int fd = __builtin_popcountll(m) - 1;
            if (fd >= 0) grouped[fd].push_back(m);
        }
        int top = d;
        while (top >= 0 && grouped[top].empty()) --top;
        if (top < 0) break;
        auto& dst = fc.by_dim[top];
        dst.insert(dst.end(), grouped[top].begin(), grouped[top].end());
        std::sort(dst.begin(), dst.end());
        dst.erase(std::unique(dst.begin(), dst.end()), dst.end());
        // next level: boundaries of the top faces plus all lower leftovers
        std::vector<uint64_t> next = lower_faces(grouped[top]);
        for (int fd = 0; fd < top; ++fd)
            next.insert(next.end(), grouped[fd].begin(), grouped[fd].end());
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level = std::move(next);
        d = top - 1;
    }
    return fc;
}

FaceChain FaceChain::from_independent_sets(const Graph& g) {
    require_mask_ground(g.n());
    int n = g.n();
    std::vector<uint64_t> adj(n, 0);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).low_word();
    FaceChain fc;
    fc.ground = n;
    fc.has_empty = true;
    std::vector<std::vector<uint64_t>> by_dim;
    std::vector<uint64_t> stack_masks;
    // Iterative DFS over independent sets.
    struct Frame {
        uint64_t set;
        uint64_t forbidden;
        int next;
    };
    std::vector<Frame> stack{{0, 0, 0}};
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        if (fr.set) {
            int d = __builtin_popcountll(fr.set) - 1;
            if (d >= static_cast<int>(by_dim.size())) by_dim.resize(d + 1);
            by_dim[d].push_back(fr.set);
        }
        for (int v = fr.next; v < n; ++v) {
            if ((fr.forbidden >> v) & 1) continue;
            stack.push_back({fr.set | (1ULL << v), fr.forbidden | adj[v], v + 1});
        }
    }
    for (auto& level : by_dim) std::sort(level.begin(), level.end());
    fc.by_dim = std::move(by_dim);
    return fc;
}

FaceChain FaceChain::pure_skeleton(int l) const {
    FaceChain fc;
    fc.ground = ground;
    if (l < 0) {
        fc.has_empty = has_empty;
        return fc;
    }
    if (l > dim() || by_dim[l].empty()) return fc;  // void
    fc.has_empty = true;
    fc.by_dim.assign(l + 1, {});
    fc.by_dim[l] = by_dim[l];
    for (int d = l; d > 0; --d) fc.by_dim[d - 1] = lower_faces(fc.by_dim[d]);
    return fc;
}

namespace {

// Rank over GF(2) of the boundary map C_d -> C_{d-1} by sparse column
// reduction (columns as sorted row-index lists, persistence style).
long gf2_boundary_rank(const std::vector<uint64_t>& rows, const std::vector<uint64_t>& cols) {
    if (rows.empty() || cols.empty()) return 0;
    auto row_index = [&](uint64_t m) {
        return static_cast<uint32_t>(std::lower_bound(rows.begin(), rows.end(), m) - rows.begin());
    };
    std::vector<int> owner(rows.size(), -1);
    std::vector<std::vector<uint32_t>> reduced;
    reduced.reserve(cols.size());
    long rank = 0;
    std::vector<uint32_t> col, merged;
    for (uint64_t m : cols) {
        col.clear();
        uint64_t rest = m;
        while (rest) {
            uint64_t bit = rest & (~rest + 1);
            col.push_back(row_index(m ^ bit));
            rest ^= bit;
        }
        std::sort(col.begin(), col.end());
        while (!col.empty()) {
            uint32_t low = col.back();
            int other = owner[low];
            if (other == -1) {
                owner[low] = static_cast<int>(reduced.size());
                ++rank;
                break;
            }
            const auto& o = reduced[other];
            merged.clear();
            std::set_symmetric_difference(col.begin(), col.end(), o.begin(), o.end(), std::back_inserter(merged));
            col.swap(merged);
        }
        reduced.push_back(col);
    }
    return rank;
}

using BigInt = boost::multiprecision::cpp_int;

// Rank over Q by fraction-free (Bareiss) elimination on the signed boundary
// matrix. Entries start in {-1,0,1}; all arithmetic stays integral.
long rational_boundary_rank(const std::vector<uint64_t>& rows, const std::vector<uint64_t>& cols) {
    if (rows.empty() || cols.empty()) return 0;
    size_t nr = rows.size(), nc = cols.size();
    std::vector<std::vector<BigInt>> a(nr, std::vector<BigInt>(nc, 0));
    for (size_t j = 0; j < nc; ++j) {
        uint64_t m = cols[j];
        uint64_t rest = m;
        int idx = 0;
        while (rest) {
            uint64_t bit = rest & (~rest + 1);
            uint64_t sub = m ^ bit;
            size_t ri = std::lower_bound(rows.begin(), rows.end(), sub) - rows.begin();
            a[ri][j] = (idx % 2 == 0) ? 1 : -1;
            rest ^= bit;
            ++idx;
        }
    }
    long rank = 0;
    size_t pr = 0;
    BigInt prev = 1;
    for (size_t pc = 0; pc < nc && pr < nr; ++pc) {
        size_t piv = pr;
        while (piv < nr && a[piv][pc] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[pr], a[piv]);
        for (size_t i = pr + 1; i < nr; ++i) {
            for (size_t j = pc + 1; j < nc; ++j) {
                a[i][j] = (a[pr][pc] * a[i][j] - a[i][pc] * a[pr][j]) / prev;
            }
            a[i][pc] = 0;
        }
        prev = a[pr][pc];
        ++rank;
        ++pr;
    }
    return rank;
}

long boundary_rank(const std::vector<uint64_t>& rows, const std::vector<uint64_t>& cols, Field f) {
    return f == Field::GF2 ? gf2_boundary_rank(rows, cols) : rational_boundary_rank(rows, cols);
}

}  // namespace

HomologyProfile reduced_homology(const FaceChain& fc, Field f) {
    HomologyProfile p;
    if (!fc.has_empty) return p;  // void complex: all ranks zero
    int dim = fc.dim();
    // counts per dimension, from -1 up
    std::vector<long> count(dim + 2, 0);
    count[0] = 1;  // the empty face
    for (int d = 0; d <= dim; ++d) count[d + 1] = static_cast<long>(fc.by_dim[d].size());
    // boundary ranks: r[d+1] = rank of d-th boundary map C_d -> C_{d-1}
    std::vector<long> r(dim + 3, 0);
    if (dim >= 0 && count[1] > 0) r[1] = 1;  // augmentation map onto the empty face
    for (int d = 1; d <= dim; ++d) r[d + 1] = boundary_rank(fc.by_dim[d - 1], fc.by_dim[d], f);
    p.ranks.assign(dim + 2, 0);
    for (int d = -1; d <= dim; ++d) p.ranks[d + 1] = count[d + 1] - r[d + 1] - r[d + 2];
    // Euler characteristic identity.
    long lhs = 0, rhs = 0, sign = 1;
    for (int d = -1; d <= dim; ++d) {
        lhs += sign * p.ranks[d + 1];
        rhs += sign * count[d + 1];
        sign = -sign;
    }
    assert(lhs == rhs);
    return p;
}

HomologyProfile reduced_betti_numbers(const SimplicialComplex& k, Field f) {
    return reduced_homology(FaceChain::from_complex(k), f);
}

namespace {

struct GraphFieldMemo {
    LruCache<std::string, bool> cache{memo_entry_budget()};
    std::string key(const Graph& g, Field f) { return field_name(f) + canonical_form(g).key; }
};

// True iff reduced homology of I(h) vanishes strictly below its dimension.
bool link_vanishing(const Graph& h, Field f) {
    static GraphFieldMemo memo;
    std::string key = memo.key(h, f);
    if (auto hit = memo.cache.get(key)) return *hit;
    FaceChain fc = FaceChain::from_independent_sets(h);
    HomologyProfile p = reduced_homology(fc, f);
    bool ok = p.vanishes_below(fc.dim());
    memo.cache.put(key, ok);
    return ok;
}

// True iff for every skeleton level l, the pure l-skeleton of I(h) has
// vanishing reduced homology below l.
bool skeletons_vanishing(const Graph& h, Field f) {
    static GraphFieldMemo memo;
    std::string key = memo.key(h, f);
    if (auto hit = memo.cache.get(key)) return *hit;
    FaceChain fc = FaceChain::from_independent_sets(h);
    bool ok = true;
    for (int l = 1; l <= fc.dim() && ok; ++l) {
        // l = 0 is a nonempty set of points: nothing below dimension 0
        // except H~_{-1}, which vanishes since the skeleton is nonempty.
        FaceChain sk = fc.pure_skeleton(l);
        HomologyProfile p = reduced_homology(sk, f);
        if (!p.vanishes_below(l)) ok = false;
    }
    memo.cache.put(key, ok);
    return ok;
}

}  // namespace

bool is_cohen_macaulay(const Graph& g, Field f) {
    if (g.n() == 0) return true;
    if (!is_well_covered(g)) return false;
    bool ok = true;
    for_each_independent_set(g, [&](const VertexSet& ind) {
        Graph link = g.remove_closed_neighborhood(ind).graph;
        if (!link_vanishing(link, f)) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

bool is_sequentially_cm(const Graph& g, Field f) {
    if (g.n() == 0) return true;
    bool ok = true;
    for_each_independent_set(g, [&](const VertexSet& ind) {
        Graph link = g.remove_closed_neighborhood(ind).graph;
        if (!skeletons_vanishing(link, f)) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

namespace {

// Enumerates independent sets of g[w] (as masks over the host vertex ids)
// grouped by dimension.
std::vector<std::vector<uint64_t>> induced_independent_faces(const std::vector<uint64_t>& adj, uint64_t w) {
    std::vector<std::vector<uint64_t>> by_dim;
    struct Frame {
        uint64_t set;
        uint64_t candidates;
    };
    std::vector<Frame> stack{{0, w}};
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        if (fr.set) {
            int d = __builtin_popcountll(fr.set) - 1;
            if (d >= static_cast<int>(by_dim.size())) by_dim.resize(d + 1);
            by_dim[d].push_back(fr.set);
        }
        uint64_t rest = fr.candidates;
        while (rest) {
            uint64_t bit = rest & (~rest + 1);
            int v = __builtin_ctzll(bit);
            rest ^= bit;
            stack.push_back({fr.set | bit, rest & ~adj[v]});
        }
    }
    for (auto& level : by_dim) std::sort(level.begin(), level.end());
    return by_dim;
}

template <class Visit>
void hochster_sweep(const Graph& g, Field f, int cap, Visit visit) {
    int n = g.n();
    if (n > cap || n > 62) throw CapExceeded(n);
    std::vector<uint64_t> adj(n, 0);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).low_word();
    for (uint64_t w = 0; w < (uint64_t(1) << n); ++w) {
        // Subsets inducing an isolated vertex contribute nothing: the
        // independence complex is then a cone.
        bool cone = false;
        uint64_t rest = w;
        while (rest) {
            uint64_t bit = rest & (~rest + 1);
            int v = __builtin_ctzll(bit);
            rest ^= bit;
            if ((adj[v] & w) == 0) {
                cone = true;
                break;
            }
        }
        if (cone && w != 0) continue;
        auto by_dim = induced_independent_faces(adj, w);
        FaceChain fc;
        fc.ground = n;
        fc.has_empty = true;
        fc.by_dim = std::move(by_dim);
        HomologyProfile p = reduced_homology(fc, f);
        int j = __builtin_popcountll(w);
        for (int d = -1; d <= p.top_dim(); ++d)
            if (p.rank(d) != 0) visit(j, d, p.rank(d));
    }
}

}  // namespace

int BettiTable::regularity() const {
    int reg = 0;
    for (const auto& [ij, beta] : entries)
        if (beta != 0) reg = std::max(reg, ij.second - ij.first);
    return reg;
}

BettiTable graded_betti_table(const Graph& g, Field f, int cap) {
    BettiTable t;
    t.field = f;
    hochster_sweep(g, f, cap, [&](int j, int d, long rank) {
        t.entries[{j - d - 1, j}] += rank;
    });
    return t;
}

int regularity(const Graph& g, Field f, int cap) {
    int reg = 0;
    hochster_sweep(g, f, cap, [&](int j, int d, long rank) {
        (void)j;
        (void)rank;
        reg = std::max(reg, d + 1);
    });
    return reg;
}

}  // namespace codis
