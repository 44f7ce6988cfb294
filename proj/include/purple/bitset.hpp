#pragma once

// Dynamic multi-word bitset used for adjacency rows and vertex sets.
// Word count is fixed by the bit capacity given at construction; all
// binary operations require operands of the same capacity.

#include <cstdint>
#include <cassert>
#include <bit>
#include <vector>

namespace purple {

class Bitset {
public:
    static constexpr int kWordBits = 64;

    Bitset() = default;
    explicit Bitset(int nbits)
        : nbits_(nbits), words_((nbits + kWordBits - 1) / kWordBits, 0) {}

    int capacity() const { return nbits_; }
    int word_count() const { return static_cast<int>(words_.size()); }
    const std::uint64_t* data() const { return words_.data(); }

    void set(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i / kWordBits] |= word_bit(i);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i / kWordBits] &= ~word_bit(i);
    }
    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (words_[i / kWordBits] & word_bit(i)) != 0;
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }
    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
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

    // Index of the lowest set bit, or -1.
    int find_first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i) * kWordBits + std::countr_zero(words_[i]);
        return -1;
    }

    // Index of the lowest set bit strictly greater than pos, or -1.
    int find_next(int pos) const {
        ++pos;
        if (pos >= nbits_) return -1;
        std::size_t wi = static_cast<std::size_t>(pos) / kWordBits;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (pos % kWordBits));
        while (true) {
            if (w) return static_cast<int>(wi) * kWordBits + std::countr_zero(w);
            if (++wi == words_.size()) return -1;
            w = words_[wi];
        }
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                fn(static_cast<int>(i) * kWordBits + b);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    // this &= ~o
    Bitset& and_not(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    Bitset complement() const {
        Bitset r(nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }
    friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

    // Lexicographic on word sequence; used for deterministic orderings.
    friend bool operator<(const Bitset& a, const Bitset& b) {
        assert(a.nbits_ == b.nbits_);
        return a.words_ < b.words_;
    }

private:
    static std::uint64_t word_bit(int i) { return std::uint64_t{1} << (i % kWordBits); }
    void trim() {
        int tail = nbits_ % kWordBits;
        if (tail != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << tail) - 1;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace purple
