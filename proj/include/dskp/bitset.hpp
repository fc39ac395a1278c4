#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace dskp {

// Fixed-length bit vector backed by 64-bit words. Used for vertex sets;
// n is allowed to exceed the machine word size.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), words_((n + 63) / 64, 0) {}

    static Bitset full(int n) {
        Bitset b(n);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    static Bitset from_mask(std::uint64_t mask, int n) {
        assert(n <= 64);
        Bitset b(n);
        if (!b.words_.empty()) b.words_[0] = mask;
        b.trim();
        return b;
    }

    int size() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set(int i) {
        assert(i >= 0 && i < n_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        assert(i >= 0 && i < n_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void flip(int i) {
        assert(i >= 0 && i < n_);
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // Indices of set bits, ascending.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<int>(wi * 64 + b));
                w &= w - 1;
            }
        }
        return out;
    }

    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                fn(static_cast<int>(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

private:
    void trim() {
        if (n_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace dskp
