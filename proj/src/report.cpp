#include "codis/report.hpp"

#include <chrono>
#include <memory>

#include "codis/cache.hpp"
#include "codis/canonical.hpp"
#include "codis/covers.hpp"
#include "codis/decomposition.hpp"
#include "codis/graph6.hpp"
#include "codis/independence.hpp"
#include "codis/matching.hpp"

namespace codis {

namespace {

using nlohmann::json;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
};

json set_to_json(const VertexSet& s) {
    json out = json::array();
    s.for_each([&](int v) { out.push_back(v); });
    return out;
}

json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
    json out = json::array();
    for (auto [u, v] : pairs) out.push_back(json::array({u, v}));
    return out;
}

json trace_to_json(const DecompositionTrace& t) {
    if (t.edgeless) return "edgeless";
    json j;
    j["x"] = t.shed;
    j["minus_vertex"] = trace_to_json(*t.minus_vertex);
    j["minus_neighborhood"] = trace_to_json(*t.minus_neighborhood);
    return j;
}

std::unique_ptr<DecompositionTrace> trace_from_json(const json& j) {
    auto node = std::make_unique<DecompositionTrace>();
    if (j.is_string() && j.get<std::string>() == "edgeless") {
        node->edgeless = true;
        return node;
    }
    node->shed = j.at("x").get<int>();
    node->minus_vertex = trace_from_json(j.at("minus_vertex"));
    node->minus_neighborhood = trace_from_json(j.at("minus_neighborhood"));
    return node;
}

json cover_to_json(const CochordalCover& cover, const std::vector<std::pair<int, int>>& es) {
    json classes = json::array();
    for (const auto& cls : cover.classes) {
        json c;
        json edges = json::array();
        for (int e : cls.edge_ids) edges.push_back(json::array({es[e].first, es[e].second}));
        c["edges"] = edges;
        if (cls.center) c["center"] = json::array({cls.center->first, cls.center->second});
        classes.push_back(c);
    }
    return json{{"classes", classes}, {"via", cover.via_line_graph ? "line-graph" : "general"}};
}

// Computes one invariant through the cache when present; `compute` returns
// the {"value": ..} entry, `validate` replays a cached certificate under
// --paranoid before the hit is trusted.
json cached_entry(const Graph& g, const std::string& hash, const std::string& name,
                  const std::string& field, const ReportOptions& opts,
                  const std::function<json()>& compute,
                  const std::function<bool(const json&)>& validate = nullptr) {
    if (opts.cache) {
        if (auto hit = opts.cache->get(hash, name, field)) {
            if (!opts.paranoid || !validate || validate(*hit)) {
                json entry = *hit;
                entry.erase("canonical_hash");
                entry.erase("invariant");
                entry.erase("field");
                entry.erase("version");
                entry["from_cache"] = true;
                return entry;
            }
        }
    }
    Timer t;
    json entry = compute();
    entry["ms"] = t.ms();
    if (opts.cache) opts.cache->put(hash, name, field, entry);
    (void)g;
    return entry;
}

bool validate_cd(const Graph& g, const json& entry) {
    if (!entry.value("value", false)) return true;
    if (!entry.contains("certificate")) return false;
    CdCertificate cert;
    cert.residual = VertexSet(g.n());
    for (const auto& s : entry["certificate"]["steps"]) cert.steps.push_back({s[0].get<int>(), s[1].get<int>()});
    for (const auto& v : entry["certificate"]["residual"]) cert.residual.add(v.get<int>());
    return replay_cd_certificate(g, cert);
}

bool validate_trace(const Graph& g, const json& entry) {
    if (!entry.value("value", false)) return true;
    if (!entry.contains("certificate")) return false;
    return replay_decomposition_trace(g, *trace_from_json(entry["certificate"]));
}

bool validate_matching(const Graph& g, const json& entry, bool induced) {
    if (!entry.contains("certificate") || !entry.contains("value")) return false;
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : entry["certificate"]) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    if (edges.size() != entry["value"].get<size_t>()) return false;
    if (induced) return is_induced_matching(g, edges);
    VertexSet used(g.n());
    for (auto [u, v] : edges) {
        if (!g.has_edge(u, v) || used.contains(u) || used.contains(v)) return false;
        used.add(u);
        used.add(v);
    }
    return true;
}

bool validate_domination(const Graph& g, const json& entry) {
    if (!entry.contains("certificate") || !entry.contains("value")) return false;
    VertexSet d(g.n());
    for (const auto& v : entry["certificate"]) d.add(v.get<int>());
    return d.count() == entry["value"].get<int>() && is_dominating_set(g, d);
}

bool validate_cover(const Graph& g, const json& entry) {
    if (!entry.contains("certificate") || !entry.contains("value")) return false;
    auto es = g.edges();
    CochordalCover cover;
    for (const auto& cls : entry["certificate"]["classes"]) {
        CoverClass c;
        for (const auto& e : cls["edges"]) {
            std::pair<int, int> p{e[0].get<int>(), e[1].get<int>()};
            if (p.first > p.second) std::swap(p.first, p.second);
            auto it = std::find(es.begin(), es.end(), p);
            if (it == es.end()) return false;
            c.edge_ids.push_back(static_cast<int>(it - es.begin()));
        }
        cover.classes.push_back(std::move(c));
    }
    cover.size = static_cast<int>(cover.classes.size());
    return cover.size == entry["value"].get<int>() && cover_is_valid(g, cover);
}

}  // namespace

const std::set<std::string>& known_invariants() {
    static const std::set<std::string> names{
        "girth",        "well_covered",    "very_well_covered",
        "cns",          "alpha",           "matching",
        "induced_matching", "domination",  "cochord",
        "codismantlable",   "vertex_decomposable", "cohen_macaulay",
        "sequentially_cm",  "regularity"};
    return names;
}

json invariant_report(const Graph& g, const ReportOptions& opts) {
    for (const auto& name : opts.only)
        if (!known_invariants().count(name)) throw std::invalid_argument("unknown invariant: " + name);
    auto want = [&](const std::string& name) { return opts.only.empty() || opts.only.count(name); };
    std::vector<Field> fields;
    if (opts.gf2) fields.push_back(Field::GF2);
    if (opts.rational) fields.push_back(Field::Rational);

    std::string hash = canonical_hash(g);
    json rep;
    rep["schema"] = kReportSchema;
    rep["toolkit_version"] = kToolkitVersion;
    rep["input"] = {{"graph6", emit_graph6(g)}, {"canonical_hash", hash}, {"n", g.n()}, {"m", g.edge_count()}};
    json fields_json = json::array();
    for (Field f : fields) fields_json.push_back(field_name(f));
    rep["fields"] = fields_json;
    json& inv = rep["invariants"] = json::object();
    json& certs = rep["certificates"] = json::object();

    if (want("girth"))
        inv["girth"] = cached_entry(g, hash, "girth", "", opts, [&] {
            auto girth = g.girth();
            return girth ? json{{"value", *girth}} : json{{"value", "inf"}};
        });
    if (want("well_covered"))
        inv["well_covered"] = cached_entry(g, hash, "well_covered", "", opts,
                                           [&] { return json{{"value", is_well_covered(g)}}; });
    if (want("very_well_covered"))
        inv["very_well_covered"] = cached_entry(g, hash, "very_well_covered", "", opts,
                                                [&] { return json{{"value", is_very_well_covered(g)}}; });
    if (want("cns"))
        inv["cns"] = cached_entry(g, hash, "cns", "", opts, [&] { return json{{"value", is_cns(g)}}; });
    if (want("alpha"))
        inv["alpha"] = cached_entry(g, hash, "alpha", "", opts,
                                    [&] { return json{{"value", independence_number(g)}}; });
    if (want("matching")) {
        json entry = cached_entry(
            g, hash, "matching", "", opts,
            [&] {
                auto matching = maximum_matching(g);
                return json{{"value", matching.size()}, {"certificate", pairs_to_json(matching)}};
            },
            [&](const json& e) { return validate_matching(g, e, false); });
        if (entry.contains("certificate")) certs["maximum_matching"] = entry["certificate"];
        entry.erase("certificate");
        inv["matching"] = entry;
    }
    if (want("induced_matching")) {
        json entry = cached_entry(
            g, hash, "induced_matching", "", opts,
            [&] {
                auto im = maximum_induced_matching(g);
                return json{{"value", im.size}, {"certificate", pairs_to_json(im.edges)}};
            },
            [&](const json& e) { return validate_matching(g, e, true); });
        if (entry.contains("certificate")) certs["maximum_induced_matching"] = entry["certificate"];
        entry.erase("certificate");
        inv["induced_matching"] = entry;
    }
    if (want("domination")) {
        json entry = cached_entry(
            g, hash, "domination", "", opts,
            [&] {
                auto dom = minimum_dominating_set(g);
                return json{{"value", dom.size}, {"certificate", set_to_json(dom.vertices)}};
            },
            [&](const json& e) { return validate_domination(g, e); });
        if (entry.contains("certificate")) certs["dominating_set"] = entry["certificate"];
        entry.erase("certificate");
        inv["domination"] = entry;
    }
    if (want("cochord")) {
        json entry = cached_entry(
            g, hash, "cochord", "", opts,
            [&] {
                auto cover = cochordal_cover(g);
                return json{{"value", cover.size}, {"certificate", cover_to_json(cover, g.edges())}};
            },
            [&](const json& e) { return validate_cover(g, e); });
        if (entry.contains("certificate")) certs["cochordal_cover"] = entry["certificate"];
        entry.erase("certificate");
        inv["cochord"] = entry;
    }
    if (want("codismantlable")) {
        json entry = cached_entry(
            g, hash, "codismantlable", "", opts,
            [&] {
                auto res = is_codismantlable(g);
                json e{{"value", res.codismantlable}};
                if (res.certificate) {
                    json steps = json::array();
                    for (const auto& st : res.certificate->steps) steps.push_back(json::array({st.x, st.y}));
                    e["certificate"] = {{"steps", steps}, {"residual", set_to_json(res.certificate->residual)}};
                }
                return e;
            },
            [&](const json& e) { return validate_cd(g, e); });
        if (entry.contains("certificate")) certs["cd_set"] = entry["certificate"];
        entry.erase("certificate");
        inv["codismantlable"] = entry;
    }
    if (want("vertex_decomposable")) {
        json entry = cached_entry(
            g, hash, "vertex_decomposable", "", opts,
            [&] {
                auto res = is_vertex_decomposable(g);
                json e{{"value", res.vertex_decomposable}};
                if (res.trace) e["certificate"] = trace_to_json(*res.trace);
                return e;
            },
            [&](const json& e) { return validate_trace(g, e); });
        if (entry.contains("certificate")) certs["decomposition_trace"] = entry["certificate"];
        entry.erase("certificate");
        inv["vertex_decomposable"] = entry;
    }
    for (Field f : fields) {
        std::string tag = field_name(f);
        if (want("cohen_macaulay"))
            inv["cohen_macaulay"][tag] = cached_entry(g, hash, "cohen_macaulay", tag, opts,
                                                      [&] { return json{{"value", is_cohen_macaulay(g, f)}}; });
        if (want("sequentially_cm")) {
            if (opts.scm_cap > 0 && g.n() > opts.scm_cap) {
                inv["sequentially_cm"][tag] = {{"skipped", "cap-exceeded"}, {"required_cap", g.n()}};
            } else {
                inv["sequentially_cm"][tag] = cached_entry(g, hash, "sequentially_cm", tag, opts, [&] {
                    return json{{"value", is_sequentially_cm(g, f)}};
                });
            }
        }
        if (want("regularity")) {
            if (g.n() > opts.hochster_cap) {
                inv["regularity"][tag] = {{"skipped", "cap-exceeded"}, {"required_cap", g.n()}};
            } else {
                inv["regularity"][tag] = cached_entry(g, hash, "regularity", tag, opts, [&] {
                    return json{{"value", regularity(g, f, opts.hochster_cap)}};
                });
            }
        }
    }

    // Cross-invariant sanity: any violation here is an implementation bug.
    json checks = json::array();
    bool ok = true;
    auto value_of = [&](const std::string& name) -> std::optional<long> {
        if (!inv.contains(name) || !inv[name].contains("value")) return std::nullopt;
        return inv[name]["value"].get<long>();
    };
    auto im = value_of("induced_matching");
    auto m = value_of("matching");
    auto cochord = value_of("cochord");
    for (Field f : fields) {
        std::string tag = field_name(f);
        if (!inv.contains("regularity") || !inv["regularity"].contains(tag) ||
            !inv["regularity"][tag].contains("value"))
            continue;
        long reg = inv["regularity"][tag]["value"].get<long>();
        if (im && m && cochord) {
            bool sandwich = *im <= reg && reg <= std::min(*m, *cochord);
            checks.push_back(json{{"check", "im <= reg(" + tag + ") <= min(m, cochord)"}, {"ok", sandwich}});
            ok = ok && sandwich;
        }
    }
    if (inv.contains("well_covered") && inv["well_covered"].contains("value")) {
        bool purity = independence_complex(g).is_pure() == inv["well_covered"]["value"].get<bool>();
        checks.push_back(json{{"check", "well_covered equals purity of the independence complex"}, {"ok", purity}});
        ok = ok && purity;
    }
    rep["consistency"] = {{"ok", ok}, {"checks", checks}};
    return rep;
}

std::optional<std::string> verify_report(const json& rep) {
    if (!rep.contains("input") || !rep["input"].contains("graph6")) return "report has no input graph";
    Graph g = parse_graph6(rep["input"]["graph6"].get<std::string>());
    const json& inv = rep.value("invariants", json::object());
    const json& certs = rep.value("certificates", json::object());

    auto edge_ids_of = [&](const json& edges) {
        auto es = g.edges();
        std::vector<int> ids;
        for (const auto& e : edges) {
            std::pair<int, int> p{e[0].get<int>(), e[1].get<int>()};
            if (p.first > p.second) std::swap(p.first, p.second);
            auto it = std::find(es.begin(), es.end(), p);
            if (it == es.end()) return std::vector<int>{-1};
            ids.push_back(static_cast<int>(it - es.begin()));
        }
        return ids;
    };

    if (certs.contains("cd_set")) {
        CdCertificate cert;
        cert.residual = VertexSet(g.n());
        for (const auto& s : certs["cd_set"]["steps"]) cert.steps.push_back({s[0].get<int>(), s[1].get<int>()});
        for (const auto& v : certs["cd_set"]["residual"]) cert.residual.add(v.get<int>());
        if (!replay_cd_certificate(g, cert)) return "codismantling certificate failed to replay";
        if (inv.contains("codismantlable") && !inv["codismantlable"].value("value", false))
            return "codismantling certificate present but value is false";
    }
    if (certs.contains("decomposition_trace")) {
        if (!replay_decomposition_trace(g, *trace_from_json(certs["decomposition_trace"])))
            return "decomposition trace failed to replay";
    }
    if (certs.contains("maximum_matching")) {
        VertexSet used(g.n());
        size_t count = 0;
        for (const auto& e : certs["maximum_matching"]) {
            int u = e[0].get<int>(), v = e[1].get<int>();
            if (!g.has_edge(u, v) || used.contains(u) || used.contains(v)) return "matching certificate invalid";
            used.add(u);
            used.add(v);
            ++count;
        }
        if (inv.contains("matching") && inv["matching"]["value"].get<size_t>() != count)
            return "matching certificate size disagrees with the reported value";
    }
    if (certs.contains("maximum_induced_matching")) {
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : certs["maximum_induced_matching"]) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        if (!is_induced_matching(g, edges)) return "induced matching certificate invalid";
        if (inv.contains("induced_matching") &&
            inv["induced_matching"]["value"].get<size_t>() != edges.size())
            return "induced matching certificate size disagrees with the reported value";
    }
    if (certs.contains("dominating_set")) {
        VertexSet d(g.n());
        for (const auto& v : certs["dominating_set"]) d.add(v.get<int>());
        if (!is_dominating_set(g, d)) return "dominating set certificate invalid";
        if (inv.contains("domination") && inv["domination"]["value"].get<int>() != d.count())
            return "dominating set size disagrees with the reported value";
    }
    if (certs.contains("cochordal_cover")) {
        CochordalCover cover;
        for (const auto& cls : certs["cochordal_cover"]["classes"]) {
            CoverClass c;
            c.edge_ids = edge_ids_of(cls["edges"]);
            if (!c.edge_ids.empty() && c.edge_ids.front() == -1) return "cover class references a non-edge";
            cover.classes.push_back(std::move(c));
        }
        cover.size = static_cast<int>(cover.classes.size());
        if (!cover_is_valid(g, cover)) return "co-chordal cover certificate invalid";
        if (inv.contains("cochord") && inv["cochord"]["value"].get<int>() != cover.size)
            return "co-chordal cover size disagrees with the reported value";
    }
    return std::nullopt;
}

}  // namespace codis
