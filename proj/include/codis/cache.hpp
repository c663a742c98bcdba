#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace codis {

// Disk-backed key-value store for invariant results, keyed by canonical-form
// hash, invariant name, field tag and toolkit version. Writes go through a
// temp file plus rename, so concurrent readers never observe partial data;
// entries from other toolkit versions are ignored.
class ResultCache {
public:
    explicit ResultCache(std::string dir);

    std::optional<nlohmann::json> get(const std::string& canonical_hash, const std::string& invariant,
                                      const std::string& field) const;
    void put(const std::string& canonical_hash, const std::string& invariant, const std::string& field,
             const nlohmann::json& entry);

    const std::string& dir() const { return dir_; }

private:
    std::string path_for(const std::string& canonical_hash, const std::string& invariant,
                         const std::string& field) const;
    std::string dir_;
};

}  // namespace codis
