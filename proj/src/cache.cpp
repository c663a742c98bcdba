#include "codis/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "codis/report.hpp"

namespace codis {

namespace fs = std::filesystem;

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

std::string ResultCache::path_for(const std::string& canonical_hash, const std::string& invariant,
                                  const std::string& field) const {
    std::string shard = canonical_hash.substr(0, 2);
    std::string name = canonical_hash + "." + invariant + (field.empty() ? "" : "." + field) + ".v" +
                       std::string(kToolkitVersion) + ".json";
    return dir_ + "/" + shard + "/" + name;
}

std::optional<nlohmann::json> ResultCache::get(const std::string& canonical_hash,
                                               const std::string& invariant,
                                               const std::string& field) const {
    std::ifstream in(path_for(canonical_hash, invariant, field));
    if (!in) return std::nullopt;
    nlohmann::json entry = nlohmann::json::parse(in, nullptr, false);
    if (entry.is_discarded()) return std::nullopt;
    if (entry.value("canonical_hash", "") != canonical_hash) return std::nullopt;
    if (entry.value("version", "") != kToolkitVersion) return std::nullopt;
    return entry;
}

void ResultCache::put(const std::string& canonical_hash, const std::string& invariant,
                      const std::string& field, const nlohmann::json& entry) {
    nlohmann::json full = entry;
    full["canonical_hash"] = canonical_hash;
    full["invariant"] = invariant;
    if (!field.empty()) full["field"] = field;
    full["version"] = kToolkitVersion;
    std::string path = path_for(canonical_hash, invariant, field);
    fs::create_directories(fs::path(path).parent_path());
    std::string tmp = path + ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        out << full.dump();
    }
    fs::rename(tmp, path);
}

}  // namespace codis
