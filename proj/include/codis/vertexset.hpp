#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace codis {

// Bit-indexed subset of a fixed vertex range 0..n-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), w_(words_for(universe), 0) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (size_t i = 0; i < s.w_.size(); ++i) s.w_[i] = ~0ULL;
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        check(v);
        return (w_[v >> 6] >> (v & 63)) & 1ULL;
    }

    void add(int v) {
        check(v);
        w_[v >> 6] |= 1ULL << (v & 63);
    }

    void remove(int v) {
        check(v);
        w_[v >> 6] &= ~(1ULL << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const VertexSet& o) const {
        require_same(o);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        require_same(o);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        require_same(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        require_same(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        require_same(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement_in_universe() const {
        VertexSet s(n_);
        for (size_t i = 0; i < w_.size(); ++i) s.w_[i] = ~w_[i];
        s.trim();
        return s;
    }

    // Smallest member, or -1 when empty.
    int first() const { return next(-1); }

    // Smallest member strictly greater than `after`, or -1.
    int next(int after) const {
        int start = after + 1;
        if (start >= n_) return -1;
        size_t wi = static_cast<size_t>(start) >> 6;
        uint64_t w = w_[wi] & (~0ULL << (start & 63));
        while (true) {
            if (w) return static_cast<int>((wi << 6) + __builtin_ctzll(w));
            if (++wi >= w_.size()) return -1;
            w = w_[wi];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v != -1; v = next(v)) out.push_back(v);
        return out;
    }

    template <class F>
    void for_each(F f) const {
        for (int v = first(); v != -1; v = next(v)) f(v);
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // Lexicographic order on the sorted member lists (deterministic output order).
    bool operator<(const VertexSet& o) const {
        int a = first(), b = o.first();
        while (a != -1 && b != -1) {
            if (a != b) return a < b;
            a = next(a);
            b = o.next(b);
        }
        return a == -1 && b != -1;
    }

    size_t hash() const {
        size_t h = std::hash<int>()(n_);
        for (uint64_t w : w_) h ^= std::hash<uint64_t>()(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    // Low 64 bits; valid as a full encoding only when universe() <= 64.
    uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for (int v = first(); v != -1; v = next(v)) {
            if (sep) s += ",";
            s += std::to_string(v);
            sep = true;
        }
        return s + "}";
    }

private:
    static size_t words_for(int n) { return (static_cast<size_t>(n) + 63) / 64; }

    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex id " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
    }

    void require_same(const VertexSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet universe mismatch");
    }

    void trim() {
        if (n_ & 63) w_.back() &= (~0ULL >> (64 - (n_ & 63)));
        if (n_ == 0) w_.clear();
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace codis
