#ifndef DOMCX_VERTEX_SET_HPP
#define DOMCX_VERTEX_SET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace domcx {

// Subset of a fixed ground set {0..n-1}, packed into 64-bit words.
// The ground-set size is part of the value; mixing universes is a bug.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(universe), words_(word_count(universe), 0) {
        assert(universe >= 0);
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.set(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~0ULL;
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (words_[v >> 6] >> (v & 63)) & 1ULL;
    }

    void set(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] |= 1ULL << (v & 63);
    }

    void reset(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] &= ~(1ULL << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    // this ⊆ other
    bool subset_of(const VertexSet& other) const {
        assert(n_ == other.n_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        assert(n_ == other.n_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet operator|(const VertexSet& o) const { VertexSet r = *this; r |= o; return r; }
    VertexSet operator&(const VertexSet& o) const { VertexSet r = *this; r &= o; return r; }

    // this ∖ other
    VertexSet minus(const VertexSet& o) const {
        assert(n_ == o.n_);
        VertexSet r = *this;
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
        return r;
    }

    VertexSet complement() const {
        VertexSet r = *this;
        for (auto& w : r.words_) w = ~w;
        r.trim();
        return r;
    }

    // Lowest member, -1 if empty.
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i << 6) + std::countr_zero(words_[i]);
        return -1;
    }

    // Highest member, -1 if empty.
    int last() const {
        for (size_t i = words_.size(); i-- > 0;)
            if (words_[i]) return int(i << 6) + 63 - std::countl_zero(words_[i]);
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                f(int(i << 6) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size_t(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    // Same bits on a larger ground set.
    VertexSet widened(int new_universe) const {
        assert(new_universe >= n_);
        VertexSet r(new_universe);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i];
        return r;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // Lexicographic order of the sorted vertex lists; exact for equal-size
    // sets (the only use), and a total order in general.
    bool lex_less(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t d = words_[i] ^ o.words_[i];
            if (d) {
                uint64_t low = d & (~d + 1);
                return (words_[i] & low) != 0;
            }
        }
        return false;
    }

    size_t hash() const {
        size_t h = std::hash<int>{}(n_);
        for (uint64_t w : words_) h = h * 1000003ULL ^ std::hash<uint64_t>{}(w);
        return h;
    }

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for_each([&](int v) {
            if (sep) s += ",";
            s += std::to_string(v);
            sep = true;
        });
        return s + "}";
    }

private:
    static size_t word_count(int n) { return size_t(n + 63) >> 6; }

    void trim() {
        int r = n_ & 63;
        if (r && !words_.empty()) words_.back() &= (1ULL << r) - 1;
    }

    int n_ = 0;
    std::vector<uint64_t> words_;
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace domcx

#endif
