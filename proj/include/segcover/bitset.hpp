#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace segcover {

// Fixed-width dynamic bitset; just the operations the cover search needs.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static Bitset all(std::size_t nbits) {
        Bitset b(nbits);
        for (std::size_t i = 0; i < b.words_.size(); ++i) b.words_[i] = ~0ULL;
        b.trim();
        return b;
    }

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { words_[i / 64] |= 1ULL << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(1ULL << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1ULL; }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const {
        for (std::uint64_t w : words_) {
            if (w != 0) return false;
        }
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) {
        a |= b;
        return a;
    }

    // True iff every bit of o is also set here.
    bool contains_all(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (o.words_[i] & ~words_[i]) return false;
        }
        return true;
    }

    bool subset_of(const Bitset& o) const { return o.contains_all(*this); }

    // Lowest index set in `want` but missing here; npos if want is covered.
    std::size_t first_missing(const Bitset& want) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            const std::uint64_t m = want.words_[i] & ~words_[i];
            if (m != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(m));
        }
        return npos;
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ULL;
        for (std::uint64_t w : words_) {
            h ^= w;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h ^ nbits_);
    }

    struct Hash {
        std::size_t operator()(const Bitset& b) const { return b.hash(); }
    };

private:
    void trim() {
        const std::size_t rem = nbits_ % 64;
        if (rem != 0 && !words_.empty()) words_.back() &= (1ULL << rem) - 1;
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace segcover
