#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "codis/cache.hpp"
#include "codis/claims.hpp"
#include "codis/constructions.hpp"
#include "codis/formats.hpp"
#include "codis/graph6.hpp"
#include "codis/report.hpp"

using namespace codis;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitPartial = 3;
constexpr int kExitCertificate = 4;

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_input(const std::string& path) {
    if (path == "-") return read_stream(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_stream(in);
}

std::vector<std::string> nonempty_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

std::string girth_string(const Graph& g) {
    auto girth = g.girth();
    return girth ? std::to_string(*girth) : "inf";
}

std::string one_line_summary(const json& rep) {
    const json& inv = rep["invariants"];
    std::ostringstream out;
    out << rep["input"]["graph6"].get<std::string>() << "  n=" << rep["input"]["n"] << " m=" << rep["input"]["m"];
    auto put = [&](const std::string& key, const std::string& label) {
        if (!inv.contains(key)) return;
        const json& e = inv[key];
        if (e.contains("value")) {
            out << " " << label << "=" << e["value"].dump();
        } else if (e.is_object()) {  // per-field
            for (auto it = e.begin(); it != e.end(); ++it) {
                if (it.value().contains("value"))
                    out << " " << label << "(" << it.key() << ")=" << it.value()["value"].dump();
                else if (it.value().contains("skipped"))
                    out << " " << label << "(" << it.key() << ")=skipped";
            }
        }
    };
    put("girth", "girth");
    put("alpha", "alpha");
    put("matching", "m");
    put("induced_matching", "im");
    put("domination", "gamma");
    put("cochord", "cochord");
    put("well_covered", "wc");
    put("very_well_covered", "vwc");
    put("cns", "cns");
    put("codismantlable", "codis");
    put("vertex_decomposable", "vd");
    put("cohen_macaulay", "cm");
    put("sequentially_cm", "scm");
    put("regularity", "reg");
    if (!rep["consistency"]["ok"].get<bool>()) out << "  CONSISTENCY-FAILURE";
    return out.str();
}

int run_invariants(const std::string& input, const std::string& field, const std::string& only,
                   bool as_json, int cap, int scm_cap, const std::string& cache_dir, bool paranoid,
                   int threads) {
    ReportOptions opts;
    opts.gf2 = field == "gf2" || field == "both";
    opts.rational = field == "q" || field == "both";
    if (!opts.gf2 && !opts.rational) {
        std::cerr << "unknown field: " << field << " (expected gf2, q or both)\n";
        return kExitUsage;
    }
    opts.hochster_cap = cap;
    opts.scm_cap = scm_cap;
    std::unique_ptr<ResultCache> cache;
    std::string dir = cache_dir;
    if (dir.empty())
        if (const char* env = std::getenv("CODIS_CACHE_DIR")) dir = env;
    if (!dir.empty()) {
        cache = std::make_unique<ResultCache>(dir);
        opts.cache = cache.get();
    }
    opts.paranoid = paranoid;
    if (!only.empty()) {
        std::istringstream ss(only);
        std::string item;
        while (std::getline(ss, item, ',')) opts.only.insert(item);
    }

    std::vector<std::string> lines = nonempty_lines(read_input(input));
    std::vector<std::string> outputs(lines.size());
    std::vector<std::string> errors(lines.size());
    std::atomic<size_t> next{0};
    int worker_count = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    worker_count = std::max(1, std::min<int>(worker_count, static_cast<int>(lines.size())));
    auto work = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= lines.size()) return;
            try {
                Graph g = parse_graph_line(lines[i]);
                json rep = invariant_report(g, opts);
                outputs[i] = as_json ? rep.dump() : one_line_summary(rep);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < worker_count; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    bool any_error = false;
    for (size_t i = 0; i < lines.size(); ++i) {
        if (!errors[i].empty()) {
            any_error = true;
            std::cerr << "line " << (i + 1) << ": " << errors[i] << "\n";
            continue;
        }
        std::cout << outputs[i] << "\n";
    }
    return any_error ? kExitParse : kExitOk;
}

json verdict_to_json(const VerdictReport& rep) {
    return json{{"claim", rep.claim},
                {"universe", rep.universe},
                {"tested", rep.tested},
                {"violations", rep.violations},
                {"suspected_bugs", rep.suspected_bugs},
                {"wall_ms", rep.wall_ms},
                {"complete", rep.complete}};
}

int run_check(const std::string& claim, const CheckOptions& opts, bool as_json) {
    if (claim == "list") {
        for (ClaimId id : all_claims())
            std::cout << claim_to_string(id) << "  " << claim_description(id) << "\n";
        return kExitOk;
    }
    VerdictReport rep = check_claim(claim_from_string(claim), opts);
    if (as_json)
        std::cout << verdict_to_json(rep).dump(2) << "\n";
    else
        std::cout << rep.summary() << "\n";
    if (!rep.complete) return kExitPartial;
    return rep.consistent_with_source() ? kExitOk : kExitCertificate;
}

int run_search(const std::string& problem, int max_n, const CheckOptions& opts, bool as_json) {
    SearchOutcome out = search_counterexample(problem_from_string(problem), max_n, opts);
    if (as_json) {
        json j{{"problem", problem},
               {"tested", out.tested},
               {"frontier", out.frontier},
               {"complete", out.complete},
               {"wall_ms", out.wall_ms}};
        if (out.witness) j["witness"] = *out.witness;
        std::cout << j.dump(2) << "\n";
    } else if (out.witness) {
        std::cout << problem << ": counterexample found: " << *out.witness << "\n";
    } else {
        std::cout << problem << ": no counterexample up to n = " << out.frontier
                  << (out.complete ? "" : " (budget exceeded, partial)") << ", " << out.tested
                  << " graphs tested\n";
    }
    return out.complete ? kExitOk : kExitPartial;
}

int run_make(const std::string& family, const std::vector<std::string>& params) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family " + family + " expects " + std::to_string(k) + " parameter(s)");
    };
    auto arg = [&](size_t i) { return std::stoi(params[i]); };
    Graph g;
    if (family == "cycle") {
        need(1);
        g = cycle_graph(arg(0));
    } else if (family == "path") {
        need(1);
        g = path_graph(arg(0));
    } else if (family == "complete") {
        need(1);
        g = complete_graph(arg(0));
    } else if (family == "star") {
        need(1);
        g = star_graph(arg(0));
    } else if (family == "doublestar") {
        need(2);
        g = double_star_graph(arg(0), arg(1));
    } else if (family == "pan") {
        need(1);
        g = pan_graph(arg(0));
    } else if (family == "wheel") {
        need(1);
        g = wheel_graph(arg(0));
    } else if (family == "gn") {
        need(1);
        g = gn_family(arg(0));
    } else if (family == "orphan") {
        need(1);
        g = orphan(orphan_from_string(params[0]));
    } else if (family == "whisker") {
        // host graph6 from the parameter or stdin; classes are the edges
        std::string host_line = params.empty() ? nonempty_lines(read_stream(std::cin)).at(0) : params[0];
        Graph host = parse_graph_line(host_line);
        g = clique_whisker(host, partition_into_edges(host));
    } else if (family == "common-enemy") {
        need(1);
        g = common_enemy_graph(parse_digraph(read_input(params[0])));
    } else if (family == "upper-bound") {
        need(1);
        g = upper_bound_graph(parse_poset(read_input(params[0])));
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }
    std::cout << emit_graph6(g) << "\n";
    return kExitOk;
}

int run_cert_verify(const std::string& path) {
    json rep = json::parse(read_input(path), nullptr, false);
    if (rep.is_discarded()) {
        std::cerr << "not valid JSON: " << path << "\n";
        return kExitParse;
    }
    auto verify_one = [&](const json& r) -> int {
        if (auto err = verify_report(r)) {
            std::cerr << "certificate verification failed: " << *err << "\n";
            return kExitCertificate;
        }
        return kExitOk;
    };
    if (rep.is_array()) {
        for (const auto& r : rep)
            if (int rc = verify_one(r)) return rc;
        std::cout << rep.size() << " report(s) verified\n";
        return kExitOk;
    }
    int rc = verify_one(rep);
    if (rc == kExitOk) std::cout << "all certificates verified\n";
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graph invariants of edge ideals: decompositions, homology, covers"};
    app.set_version_flag("--version", kToolkitVersion);
    app.require_subcommand(1);

    // invariants
    auto* inv = app.add_subcommand("invariants", "invariant reports for graph6/sparse6 input, one per line");
    std::string inv_input = "-", inv_field = "gf2", inv_only, inv_cache;
    bool inv_json = false, inv_paranoid = false;
    int inv_cap = kDefaultHochsterCap, inv_scm_cap = 0, inv_threads = 0;
    inv->add_option("file", inv_input, "input file or - for stdin");
    inv->add_option("--field", inv_field, "coefficient field: gf2, q or both")->capture_default_str();
    inv->add_option("--only", inv_only, "comma-separated invariant subset");
    inv->add_flag("--json", inv_json, "emit one JSON report per line");
    inv->add_option("--cap", inv_cap, "largest order for regularity/Betti computations")->capture_default_str();
    inv->add_option("--scm-cap", inv_scm_cap, "skip sequential CM above this order (0 = never skip)");
    inv->add_option("--cache", inv_cache, "result cache directory (default: $CODIS_CACHE_DIR)");
    inv->add_flag("--paranoid", inv_paranoid, "replay cached certificates before trusting hits");
    inv->add_option("--threads", inv_threads, "worker threads for batch input (0 = hardware)");

    // check
    auto* chk = app.add_subcommand("check", "verify a claim over an enumerated universe ('check list' lists ids)");
    std::string chk_claim;
    CheckOptions chk_opts;
    int chk_max_n = -1;
    double chk_seconds = 0;
    uint64_t chk_graphs = 0, chk_cases = 0;
    bool chk_slow = false, chk_json = false;
    std::string chk_input;
    chk->add_option("claim", chk_claim, "claim id or 'list'")->required();
    chk->add_option("--max-n", chk_max_n, "universe size override");
    chk->add_flag("--slow", chk_slow, "extended default universe");
    chk->add_option("--max-graphs", chk_graphs, "graph budget (0 = unlimited)");
    chk->add_option("--max-seconds", chk_seconds, "wall-time budget (0 = unlimited)");
    chk->add_option("--cases", chk_cases, "random case count for sampled universes");
    chk->add_option("--input", chk_input, "graph6 file (or -) replacing the builtin universe");
    chk->add_flag("--json", chk_json, "JSON verdict");

    // search
    auto* sea = app.add_subcommand("search", "counterexample search for an open problem");
    std::string sea_problem;
    int sea_max_n = 7;
    double sea_seconds = 0;
    uint64_t sea_graphs = 0;
    bool sea_json = false;
    sea->add_option("problem", sea_problem, "WCCODIS_VD or CNS_CM")->required();
    sea->add_option("--max-n", sea_max_n, "largest order to exhaust")->required();
    sea->add_option("--max-graphs", sea_graphs, "graph budget (0 = unlimited)");
    sea->add_option("--max-seconds", sea_seconds, "wall-time budget (0 = unlimited)");
    sea->add_flag("--json", sea_json, "JSON outcome");

    // make
    auto* mk = app.add_subcommand("make", "emit a named construction as graph6");
    std::string mk_family;
    std::vector<std::string> mk_params;
    mk->add_option("family", mk_family,
                   "cycle path complete star doublestar pan wheel gn whisker orphan common-enemy upper-bound")
        ->required();
    mk->add_option("params", mk_params, "family parameters");

    // cert
    auto* cert = app.add_subcommand("cert", "certificate operations");
    auto* cert_verify = cert->add_subcommand("verify", "replay all certificates in a report");
    std::string cert_path;
    cert_verify->add_option("report", cert_path, "report JSON file or -")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitUsage : kExitOk;
    }

    try {
        if (*inv)
            return run_invariants(inv_input, inv_field, inv_only, inv_json, inv_cap, inv_scm_cap, inv_cache,
                                  inv_paranoid, inv_threads);
        if (*chk) {
            if (chk_max_n > 0) chk_opts.max_n = chk_max_n;
            chk_opts.slow = chk_slow;
            chk_opts.max_graphs = chk_graphs;
            chk_opts.max_seconds = chk_seconds;
            chk_opts.random_cases = chk_cases;
            if (!chk_input.empty()) chk_opts.external_graphs = nonempty_lines(read_input(chk_input));
            return run_check(chk_claim, chk_opts, chk_json);
        }
        if (*sea) {
            CheckOptions opts;
            opts.max_graphs = sea_graphs;
            opts.max_seconds = sea_seconds;
            return run_search(sea_problem, sea_max_n, opts, sea_json);
        }
        if (*mk) return run_make(mk_family, mk_params);
        if (*cert_verify) return run_cert_verify(cert_path);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const FormatError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CapExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitPartial;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
