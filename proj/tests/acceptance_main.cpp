// Acceptance suite: reproduces the stated values on the named constructions
// and exhaustively verifies the theorem catalogue at desk scale. One PASS or
// FAIL line per criterion; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "codis/claims.hpp"
#include "codis/constructions.hpp"
#include "codis/covers.hpp"
#include "codis/decomposition.hpp"
#include "codis/enumerate.hpp"
#include "codis/graph6.hpp"
#include "codis/homology.hpp"
#include "codis/independence.hpp"
#include "codis/matching.hpp"
#include "codis/report.hpp"

using namespace codis;

namespace {

struct Expect {
    std::ostringstream msg;
    bool ok = true;

    template <class T, class U>
    void equals(const char* what, const T& got, const U& want) {
        if (!(got == static_cast<T>(want))) {
            ok = false;
            msg << " [" << what << ": got " << got << ", want " << want << "]";
        }
    }
    void holds(const char* what, bool cond) {
        if (!cond) {
            ok = false;
            msg << " [" << what << " failed]";
        }
    }
    void verdict(const VerdictReport& rep) {
        if (!rep.consistent_with_source() || !rep.complete) {
            ok = false;
            msg << " [" << rep.summary();
            for (const auto& g6 : rep.violations) msg << " violation " << g6;
            for (const auto& g6 : rep.suspected_bugs) msg << " suspected-bug " << g6;
            msg << "]";
        } else {
            msg << " " << rep.claim << ": " << rep.tested << " graphs ok;";
        }
    }
};

bool criterion_1(Expect& e) {
    auto start = std::chrono::steady_clock::now();
    std::vector<int> wc, cm;
    for (int n = 3; n <= 10; ++n) {
        Graph c = cycle_graph(n);
        if (is_well_covered(c)) wc.push_back(n);
        if (is_cohen_macaulay(c, Field::GF2)) cm.push_back(n);
        if (n >= 6) {
            e.holds("cycle not vertex decomposable", !is_vertex_decomposable(c).vertex_decomposable);
            e.holds("cycle has no codominated vertex", is_cns(c));
        }
    }
    e.equals("well-covered cycle count", wc.size(), size_t(4));
    e.holds("well-covered cycles are 3,4,5,7", wc == std::vector<int>{3, 4, 5, 7});
    e.holds("Cohen-Macaulay cycles are 3,5", cm == std::vector<int>{3, 5});
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    e.holds("under one minute", sec < 60.0);
    e.msg << " (" << wc.size() << " well-covered cycles, " << sec << " s)";
    return e.ok;
}

bool criterion_2(Expect& e) {
    auto start = std::chrono::steady_clock::now();
    Graph g1 = gn_family(1);
    e.equals("G1 order", g1.n(), 12);
    e.equals("G1 size", g1.edge_count(), 13);
    e.equals("G1 girth", g1.girth().value_or(-1), 6);
    e.equals("G1 im", induced_matching_number(g1), 3);
    e.equals("G1 m", matching_number(g1), 6);
    e.equals("G1 cochord", cochordal_cover_number(g1), 4);
    e.equals("G1 reg gf2", regularity(g1, Field::GF2), 3);
    e.holds("G1 vertex decomposable", is_vertex_decomposable(g1).vertex_decomposable);
    ReportOptions opts;
    (void)invariant_report(g1, opts);
    double g1_sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    e.holds("G1 full report under two minutes", g1_sec < 120.0);

    auto start2 = std::chrono::steady_clock::now();
    Graph g2 = gn_family(2);
    e.equals("G2 order", g2.n(), 24);
    e.equals("G2 size", g2.edge_count(), 27);
    e.equals("G2 im", induced_matching_number(g2), 6);
    e.equals("G2 m", matching_number(g2), 12);
    // Stated value 4n = 8; both engines compute 7 and the 7-class witness
    // replays (the binding edge centers a double-star reaching into both
    // blocks). Kept as stated; the failure is expected and documented.
    e.equals("G2 cochord (stated 4n)", cochordal_cover_number(g2), 8);
    (void)invariant_report(g2, opts);  // regularity skipped by the order cap
    double g2_sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start2).count();
    e.holds("G2 report without regularity under ten minutes", g2_sec < 600.0);
    e.msg << " (G1 " << g1_sec << " s, G2 " << g2_sec << " s)";
    return e.ok;
}

bool criterion_3(Expect& e) {
    CheckOptions opts;
    opts.max_n = 8;
    e.verdict(check_claim(ClaimId::THM_GIRTH3_6, opts));
    return e.ok;
}

bool criterion_4(Expect& e) {
    CheckOptions opts;
    opts.max_n = 9;
    e.verdict(check_claim(ClaimId::THM_GI5, opts));
    return e.ok;
}

bool criterion_5(Expect& e) {
    CheckOptions opts;
    opts.max_n = 7;
    e.verdict(check_claim(ClaimId::THM_3_4, opts));
    e.verdict(check_claim(ClaimId::THM_3_8, opts));
    return e.ok;
}

bool criterion_6(Expect& e) {
    CheckOptions opts;
    opts.max_n = 9;
    e.verdict(check_claim(ClaimId::COR_CD_DOM, opts));
    return e.ok;
}

bool criterion_7(Expect& e) {
    e.verdict(check_claim(ClaimId::THM_4_2, {}));
    e.verdict(check_claim(ClaimId::COR_4_3, {}));
    e.verdict(check_claim(ClaimId::THM_4_5, {}));
    return e.ok;
}

bool criterion_8(Expect& e) {
    for (int n = 4; n <= 8; ++n) {
        Graph host = cycle_graph(n);
        Graph w = clique_whisker(host, partition_into_edges(host));
        std::string tag = "whiskered C" + std::to_string(n);
        e.equals((tag + " order").c_str(), w.n(), 2 * n);
        int min_deg = w.n();
        for (int v = 0; v < w.n(); ++v) min_deg = std::min(min_deg, w.degree(v));
        e.holds((tag + " min degree >= 2").c_str(), min_deg >= 2);
        e.equals((tag + " alpha").c_str(), independence_number(w), n);
        e.holds((tag + " vertex decomposable").c_str(), is_vertex_decomposable(w).vertex_decomposable);
        e.holds((tag + " sequentially CM gf2").c_str(), is_sequentially_cm(w, Field::GF2));
        if (n >= 6)
            e.equals((tag + " reg = im").c_str(), regularity(w, Field::GF2), induced_matching_number(w));
    }
    return e.ok;
}

bool criterion_9(Expect& e) {
    CheckOptions opts;
    opts.max_n = 7;
    e.verdict(check_claim(ClaimId::PROP_2_4, opts));
    e.verdict(check_claim(ClaimId::LEM_2_5, opts));
    e.verdict(check_claim(ClaimId::LEM_2_11, opts));

    // sandwich im <= reg <= min(m, cochord) over every graph with at most 7
    // vertices, both fields
    uint64_t tested = 0;
    bool sandwich = true;
    for (int n = 1; n <= 7 && sandwich; ++n) {
        enumerate_graphs(n, {}, [&](const Graph& g) {
            ++tested;
            int im = induced_matching_number(g);
            int m = matching_number(g);
            int cochord = cochordal_cover_number(g);
            for (Field f : {Field::GF2, Field::Rational}) {
                int reg = regularity(g, f);
                if (!(im <= reg && reg <= std::min(m, cochord))) {
                    sandwich = false;
                    e.msg << " [sandwich fails on " << emit_graph6(g) << " over " << field_name(f) << "]";
                }
            }
            return sandwich;
        });
    }
    e.holds("sandwich im <= reg <= min(m, cochord)", sandwich);
    e.msg << " sandwich: " << tested << " graphs ok;";

    // Euler characteristic identity on every homology profile, both fields
    uint64_t complexes = 0;
    bool euler = true;
    for (int n = 1; n <= 6 && euler; ++n) {
        enumerate_graphs(n, {}, [&](const Graph& g) {
            FaceChain fc = FaceChain::from_independent_sets(g);
            long faces = fc.has_empty ? 1 : 0;
            long sign = -1;
            for (const auto& level : fc.by_dim) {
                faces += sign * static_cast<long>(level.size());
                sign = -sign;
            }
            for (Field f : {Field::GF2, Field::Rational}) {
                ++complexes;
                HomologyProfile p = reduced_homology(fc, f);
                long ranks = 0;
                sign = 1;
                for (int d = -1; d <= p.top_dim(); ++d) {
                    ranks += sign * p.rank(d);
                    sign = -sign;
                }
                if (ranks != faces) euler = false;
            }
            return euler;
        });
    }
    e.holds("Euler characteristic identity", euler);
    e.msg << " euler: " << complexes << " profiles ok;";
    return e.ok;
}

bool criterion_10(Expect& e) {
    // The loader itself enforces connected + well-covered + girth >= 5 +
    // no shedding vertex + not Cohen-Macaulay + the stated link
    // isomorphisms, and throws on any mismatch.
    for (OrphanName name : {OrphanName::P10, OrphanName::P13, OrphanName::Q13, OrphanName::P14}) {
        try {
            Graph g = orphan(name);
            e.msg << " " << orphan_to_string(name) << "(n=" << g.n() << ") ok;";
        } catch (const std::exception& ex) {
            e.holds(orphan_to_string(name).c_str(), false);
            e.msg << " [" << ex.what() << "]";
        }
    }
    return e.ok;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        std::function<bool(Expect&)> run;
    };
    std::vector<Criterion> criteria{
        {1, "cycle classification, n = 3..10", criterion_1},
        {2, "chain family values (G1 exact; G2 exact, computed cochord differs from the stated 4n)", criterion_2},
        {3, "equivalence VD = codismantlable = CM on connected well-covered graphs without induced C4/C5/C7, n <= 8",
         criterion_3},
        {4, "equivalence VD = CM on connected well-covered graphs of girth >= 5, n <= 9", criterion_4},
        {5, "reg = im on C4/C5-free vertex decomposable graphs and im = reg = m forces codismantlable, n <= 7",
         criterion_5},
        {6, "cochord equals the domination number of the line graph at girth >= 5, n <= 9", criterion_6},
        {7, "random acyclic digraphs, posets and clique-whiskerings: VD + codismantlable with replaying certificates",
         criterion_7},
        {8, "whiskered cycles: order, degree, independence number, VD, sequential CM, reg = im for n >= 6",
         criterion_8},
        {9, "property suites: certificate replay, shedding containment, well-covered closure, sandwich, Euler",
         criterion_9},
        {10, "orphan data gate", criterion_10},
    };

    int failures = 0;
    for (auto& c : criteria) {
        Expect e;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(e);
        } catch (const std::exception& ex) {
            e.msg << " [exception: " << ex.what() << "]";
        }
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  criterion %2d: %s (%.1f s)%s\n", ok ? "PASS" : "FAIL", c.id, c.label, sec,
                    e.msg.str().c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures)
        std::printf("%d criterion(s) failed\n", failures);
    else
        std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
