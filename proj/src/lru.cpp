#include "codis/lru.hpp"

#include <cstdlib>
#include <string>

namespace codis {

size_t memo_entry_budget() {
    static const size_t budget = [] {
        if (const char* env = std::getenv("CODIS_MEMO_ENTRIES")) {
            long long v = std::atoll(env);
            if (v > 0) return static_cast<size_t>(v);
        }
        return kDefaultMemoEntries;
    }();
    return budget;
}

}  // namespace codis
