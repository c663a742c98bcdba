#pragma once

#include <list>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>

namespace codis {

// Thread-safe LRU-evicting map for memoized decision procedures.
template <class K, class V, class Hash = std::hash<K>>
class LruCache {
public:
    explicit LruCache(size_t capacity) : cap_(capacity) {}

    std::optional<V> get(const K& key) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        order_.splice(order_.begin(), order_, it->second.second);
        return it->second.first;
    }

    void put(const K& key, V value) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it != map_.end()) {
            it->second.first = std::move(value);
            order_.splice(order_.begin(), order_, it->second.second);
            return;
        }
        order_.push_front(key);
        map_.emplace(key, std::make_pair(std::move(value), order_.begin()));
        if (map_.size() > cap_) {
            map_.erase(order_.back());
            order_.pop_back();
        }
    }

    size_t size() const {
        std::lock_guard<std::mutex> lock(mu_);
        return map_.size();
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mu_);
        map_.clear();
        order_.clear();
    }

private:
    size_t cap_;
    mutable std::mutex mu_;
    std::list<K> order_;
    std::unordered_map<K, std::pair<V, typename std::list<K>::iterator>, Hash> map_;
};

constexpr size_t kDefaultMemoEntries = size_t(1) << 22;

// Entry bound for the shared decision memos; CODIS_MEMO_ENTRIES overrides
// the default.
size_t memo_entry_budget();

}  // namespace codis
