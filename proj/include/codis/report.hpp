#pragma once

#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "codis/graph.hpp"
#include "codis/homology.hpp"

namespace codis {

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr const char* kReportSchema = "codis-report-v1";

class ResultCache;

struct ReportOptions {
    bool gf2 = true;
    bool rational = false;
    std::set<std::string> only;  // empty = every invariant
    int hochster_cap = kDefaultHochsterCap;
    // Sequential Cohen-Macaulayness sweeps every independent set; graphs
    // above this order get a skipped marker instead (0 = no cap).
    int scm_cap = 0;
    ResultCache* cache = nullptr;
    bool paranoid = false;
};

// Names accepted by ReportOptions::only.
const std::set<std::string>& known_invariants();

nlohmann::json invariant_report(const Graph& g, const ReportOptions& opts = {});

// Replays every certificate inside a report; returns an error description or
// nullopt when everything validates.
std::optional<std::string> verify_report(const nlohmann::json& report);

}  // namespace codis
