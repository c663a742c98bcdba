#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "codis/graph.hpp"
#include "codis/independence.hpp"

namespace codis {

// Exact coefficient fields for homology computations.
enum class Field { GF2, Rational };

std::string field_name(Field f);

// All faces of a complex grouped by dimension, as bit masks over a ground set
// of at most 63 vertices. by_dim[d] holds the sorted masks of the d-faces.
// has_empty distinguishes {∅} (true, no other faces) from the void complex.
struct FaceChain {
    int ground = 0;
    bool has_empty = false;
    std::vector<std::vector<uint64_t>> by_dim;

    int dim() const { return static_cast<int>(by_dim.size()) - 1; }
    size_t face_count() const;

    static FaceChain from_complex(const SimplicialComplex& k);
    static FaceChain from_independent_sets(const Graph& g);

    // Subcomplex generated by all faces of dimension exactly l.
    FaceChain pure_skeleton(int l) const;
};

// ranks[d+1] = dim of reduced homology in dimension d, for d = -1 .. top_dim.
struct HomologyProfile {
    std::vector<long> ranks;

    int top_dim() const { return static_cast<int>(ranks.size()) - 2; }
    long rank(int d) const {
        int i = d + 1;
        return (i >= 0 && i < static_cast<int>(ranks.size())) ? ranks[i] : 0;
    }
    bool vanishes_below(int d) const {
        for (int j = -1; j < d; ++j)
            if (rank(j) != 0) return false;
        return true;
    }
};

HomologyProfile reduced_homology(const FaceChain& faces, Field f);
HomologyProfile reduced_betti_numbers(const SimplicialComplex& k, Field f);

// Reisner criterion on the independence complex: every link (the independence
// complex of G - N[I] for independent I) has vanishing reduced homology below
// its dimension. Cohen-Macaulay complexes are pure, so non-well-covered
// graphs are rejected up front.
bool is_cohen_macaulay(const Graph& g, Field f);

// Duval criterion: every pure skeleton of the independence complex is
// Cohen-Macaulay.
bool is_sequentially_cm(const Graph& g, Field f);

struct CapExceeded : std::runtime_error {
    int required_cap;
    explicit CapExceeded(int required)
        : std::runtime_error("vertex count exceeds the configured cap; required cap " + std::to_string(required)),
          required_cap(required) {}
};

constexpr int kDefaultHochsterCap = 16;

// Graded Betti numbers of the edge ring via Hochster's formula:
// beta_{i,j} = sum over |W| = j of dim H~_{j-i-1}(I(G[W]); F).
struct BettiTable {
    Field field = Field::GF2;
    std::map<std::pair<int, int>, long> entries;  // (i, j) -> beta_{i,j}

    int regularity() const;
};

BettiTable graded_betti_table(const Graph& g, Field f, int cap = kDefaultHochsterCap);
int regularity(const Graph& g, Field f, int cap = kDefaultHochsterCap);

}  // namespace codis
