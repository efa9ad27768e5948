#pragma once

// Colors are distinct primes. Face stickers multiply, so "which colors does
// this product contain, and how often" is ordinary factorization; the
// exponent_vector view makes that additive and packable into one word.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "insanity/errors.hpp"

namespace insanity {

namespace detail {

inline bool is_prime(std::uint32_t v) {
    if (v < 2) return false;
    for (std::uint32_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

} // namespace detail

// An ordered set of distinct primes, one per color. A puzzle over a basis of
// n primes has n colors and n cubes.
class color_basis {
public:
    static constexpr std::size_t max_colors = 16; // 4-bit exponent lanes in a 64-bit word

    explicit color_basis(std::vector<std::uint32_t> primes) : primes_(std::move(primes)) {
        if (primes_.size() < 2) fail(errc::bad_basis, "a basis needs at least two primes");
        if (primes_.size() > max_colors) fail(errc::bad_basis, "at most 16 colors supported");
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            if (!detail::is_prime(primes_[i]))
                fail(errc::bad_basis, std::to_string(primes_[i]) + " is not prime");
            if (i > 0 && primes_[i] <= primes_[i - 1])
                fail(errc::bad_basis, "basis primes must be strictly increasing");
        }
    }

    // First n primes: standard(4) = (2,3,5,7); 5 adds 11; 6 adds 13.
    static color_basis standard(std::size_t n) {
        static constexpr std::uint32_t first[max_colors] = {2,  3,  5,  7,  11, 13, 17, 19,
                                                            23, 29, 31, 37, 41, 43, 47, 53};
        if (n < 2 || n > max_colors) fail(errc::bad_basis, "standard basis size out of range");
        return color_basis(std::vector<std::uint32_t>(first, first + n));
    }

    std::size_t size() const { return primes_.size(); }
    std::uint32_t prime(std::size_t i) const { return primes_[i]; }
    const std::vector<std::uint32_t>& primes() const { return primes_; }

    std::optional<std::uint8_t> index_of(std::uint32_t p) const {
        for (std::size_t i = 0; i < primes_.size(); ++i)
            if (primes_[i] == p) return static_cast<std::uint8_t>(i);
        return std::nullopt;
    }

    std::uint8_t require_index(std::uint32_t p) const {
        auto i = index_of(p);
        if (!i) fail(errc::unknown_color, std::to_string(p) + " is not a basis color");
        return *i;
    }

    // Product of all basis primes: a face-product multiset uses every color
    // exactly when the product is divisible by this.
    std::uint64_t radical() const {
        std::uint64_t r = 1;
        for (auto p : primes_) r *= p;
        return r;
    }

    friend bool operator==(const color_basis&, const color_basis&) = default;

private:
    std::vector<std::uint32_t> primes_;
};

// Per-color multiplicity of a product of color labels. packed() puts each
// multiplicity in a 4-bit lane of one word, so sums of up to 15 per color
// are exact and comparisons are single integer compares.
class exponent_vector {
public:
    exponent_vector() = default;
    explicit exponent_vector(std::size_t n) : exps_(n, 0) {}
    explicit exponent_vector(std::vector<std::uint8_t> exps) : exps_(std::move(exps)) {}

    std::size_t size() const { return exps_.size(); }
    std::uint8_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint8_t& operator[](std::size_t i) { return exps_[i]; }

    int sum() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

    std::uint64_t packed() const {
        std::uint64_t w = 0;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            w |= static_cast<std::uint64_t>(exps_[i] & 0xF) << (4 * i);
        return w;
    }

    // The integer this vector denotes over the given basis.
    std::uint64_t value(const color_basis& basis) const {
        if (basis.size() != exps_.size()) fail(errc::length_mismatch, "basis size mismatch");
        std::uint64_t v = 1;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            for (int k = 0; k < exps_[i]; ++k) v *= basis.prime(i);
        return v;
    }

    exponent_vector& operator+=(const exponent_vector& o) {
        if (o.size() != size()) fail(errc::length_mismatch, "exponent vector size mismatch");
        for (std::size_t i = 0; i < exps_.size(); ++i)
            exps_[i] = static_cast<std::uint8_t>(exps_[i] + o.exps_[i]);
        return *this;
    }
    friend exponent_vector operator+(exponent_vector a, const exponent_vector& b) { return a += b; }

    friend bool operator==(const exponent_vector&, const exponent_vector&) = default;
    friend auto operator<=>(const exponent_vector&, const exponent_vector&) = default;

private:
    std::vector<std::uint8_t> exps_;
};

// Product of two (possibly equal) basis primes: one opposite-face color pair.
class pair_product {
public:
    pair_product() = default;

    static pair_product of(const color_basis& basis, std::uint8_t i, std::uint8_t j) {
        if (i >= basis.size() || j >= basis.size()) fail(errc::unknown_color, "color index out of range");
        if (i > j) std::swap(i, j);
        pair_product pp;
        pp.lo_ = i;
        pp.hi_ = j;
        pp.value_ = static_cast<std::uint64_t>(basis.prime(i)) * basis.prime(j);
        return pp;
    }

    // Parse an integer as a product of exactly two basis primes.
    static pair_product from_value(const color_basis& basis, std::uint64_t v) {
        for (std::uint8_t i = 0; i < basis.size(); ++i) {
            if (v % basis.prime(i) != 0) continue;
            std::uint64_t rest = v / basis.prime(i);
            for (std::uint8_t j = i; j < basis.size(); ++j)
                if (rest == basis.prime(j)) return of(basis, i, j);
        }
        fail(errc::bad_pair_product, std::to_string(v) + " is not a product of two basis primes");
    }

    std::uint64_t value() const { return value_; }
    std::uint8_t lo() const { return lo_; } // smaller color index
    std::uint8_t hi() const { return hi_; } // larger color index

    exponent_vector ev(const color_basis& basis) const {
        exponent_vector e(basis.size());
        ++e[lo_];
        ++e[hi_];
        return e;
    }
    std::uint64_t packed_ev() const {
        return (std::uint64_t{1} << (4 * lo_)) + (std::uint64_t{1} << (4 * hi_));
    }

    // Distinct unordered prime pairs give distinct products, so comparing by
    // value is comparing the pair. Only meaningful within one basis.
    friend bool operator==(const pair_product& a, const pair_product& b) { return a.value_ == b.value_; }
    friend auto operator<=>(const pair_product& a, const pair_product& b) { return a.value_ <=> b.value_; }

private:
    std::uint64_t value_ = 0;
    std::uint8_t lo_ = 0;
    std::uint8_t hi_ = 0;
};

// All n(n+1)/2 two-prime products, ascending by value.
inline std::vector<pair_product> pair_products(const color_basis& basis) {
    std::vector<pair_product> out;
    out.reserve(basis.size() * (basis.size() + 1) / 2);
    for (std::uint8_t i = 0; i < basis.size(); ++i)
        for (std::uint8_t j = i; j < basis.size(); ++j)
            out.push_back(pair_product::of(basis, i, j));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace insanity
