#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codis/graph.hpp"

namespace codis {

// Checkable claims. Each id maps to a hypothesis filter and a conclusion
// predicate over an exhaustively enumerated (or seeded random) universe.
enum class ClaimId {
    COR_2_3,          // chordal graphs are codismantlable
    PROP_2_4,         // cd-sets are minimal vertex covers (certificate replay)
    LEM_2_5,          // codominated vertices are shedding
    THM_2_6,          // no induced C4/C5: shedding <=> codominated
    PROP_2_7,         // C5-free, shedding with independent neighborhood => codominated
    COR_2_8,          // no induced C4/C5: vertex decomposable => codismantlable
    LEM_2_11,         // well-covered closed under links and codominated deletion
    COR_EXTEN,        // no induced C4/C5, well-covered: codominated <=> extendable
    PROP_LNK,         // no induced C4/C5/C7, well-covered: codismantlable link lifts
    PROP_WC_CNS,      // no induced C4/C5/C7, CNS with an edge: not well-covered
    COR_CM_CNS,       // no induced C4/C5/C7, CNS with an edge: not Cohen-Macaulay
    THM_TRI_UNMIXED,  // no induced C4/C5/C7, well-covered codismantlable => vertex decomposable
    THM_GIRTH3_6,     // no induced C4/C5/C7, well-covered: VD <=> codismantlable <=> CM
    COR_BIP_VD,       // bipartite vertex decomposable => codismantlable
    COR_VWC_VD,       // very well-covered: VD <=> codismantlable <=> CM
    PROP_ORPHANS,     // the five exceptional graphs are not Cohen-Macaulay
    THM_GI5,          // well-covered, girth >= 5: VD <=> CM
    LEM_3_3,          // codominated deletion: im monotone, im of the link drops
    THM_3_4,          // no induced C4/C5, vertex decomposable: reg = im
    COR_3_5,          // chordal: reg = im
    LEM_KR,           // im = m > 1: maximum induced matchings use pendant/triangle edges
    PROP_IM_M,        // im = m and N(y) = {x}: im(G-x) = m(G-x) = im(G) - 1
    THM_3_8,          // im = reg = m => codismantlable
    PROP_DOUBLE_STAR, // girth >= 5: co-chordal subgraphs are stars or double-stars
    THM_CD_DOM,       // girth >= 5 connected: center-edge covers <=> dominating sets of L(G)
    COR_CD_DOM,       // girth >= 5 connected: cochord = domination number of L(G)
    COR_ALLAN_LASKAR, // girth >= 5 connected, L(G) well-covered: cochord = m
    PROP_REG_CD,      // the 12n-vertex chain family: im = 3n, cochord = 4n, m = 6n, reg + n = cochord
    THM_4_2,          // acyclic digraphs: common-enemy graphs are VD and codismantlable
    COR_4_3,          // posets: upper-bound graphs are VD and codismantlable
    THM_4_5,          // clique-whiskerings are VD and codismantlable
    COR_4_6,          // no induced C4/C5 host: reg(whisker) = im(whisker)
    BOUND_KATZMAN,    // im <= reg
    BOUND_HVT,        // reg <= m
    BOUND_WOODROOFE,  // reg <= cochord
};

std::vector<ClaimId> all_claims();
ClaimId claim_from_string(const std::string& name);
std::string claim_to_string(ClaimId id);
std::string claim_description(ClaimId id);

struct CheckOptions {
    std::optional<int> max_n;   // universe size override
    bool slow = false;          // extended default universe
    uint64_t max_graphs = 0;    // 0 = unlimited
    double max_seconds = 0;     // 0 = unlimited
    uint64_t random_cases = 0;  // 0 = claim default, for randomized universes
    // External universe: graph6/sparse6 lines replacing builtin enumeration
    // for graph-swept claims; the claim's filters become hypothesis gates.
    std::optional<std::vector<std::string>> external_graphs;
};

struct VerdictReport {
    std::string claim;
    std::string universe;
    uint64_t tested = 0;
    // Graphs violating the claim after the slow-path recheck confirmed the
    // computation. A genuine entry here contradicts the source material, so
    // it is first treated as a suspected implementation bug.
    std::vector<std::string> violations;
    // Graphs where the fast path flagged a violation but the definitional
    // slow path disagreed: implementation bugs, never evidence.
    std::vector<std::string> suspected_bugs;
    double wall_ms = 0;
    bool complete = true;

    bool consistent_with_source() const { return violations.empty() && suspected_bugs.empty(); }
    std::string summary() const;
};

VerdictReport check_claim(ClaimId id, const CheckOptions& opts = {});

enum class ProblemId { WCCODIS_VD, CNS_CM };

ProblemId problem_from_string(const std::string& name);
std::string problem_to_string(ProblemId id);

struct SearchOutcome {
    std::optional<std::string> witness;  // graph6 of the first counterexample
    int frontier = 0;                    // largest order exhausted
    uint64_t tested = 0;
    double wall_ms = 0;
    bool complete = true;
};

SearchOutcome search_counterexample(ProblemId id, int n_max, const CheckOptions& opts = {});

// The separated-cycle rejector used by the CNS_CM search: some independent
// set U leaves a connected component of G - N[U] isomorphic to a cycle of
// length >= 6 (impossible in a Cohen-Macaulay graph).
bool has_separated_long_cycle(const Graph& g);

}  // namespace codis
