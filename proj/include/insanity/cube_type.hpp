#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "insanity/basis.hpp"

namespace insanity {

// A cube abstracted to its three opposite-face pair products, stored sorted
// ascending by value. Proper = every basis color appears on some face.
class cube_type {
public:
    cube_type() = default;
    cube_type(pair_product a, pair_product b, pair_product c) : pairs_{a, b, c} {
        std::sort(pairs_.begin(), pairs_.end());
    }

    const std::array<pair_product, 3>& pairs() const { return pairs_; }
    const pair_product& pair(std::size_t i) const { return pairs_[i]; }

    std::array<std::uint64_t, 3> values() const {
        return {pairs_[0].value(), pairs_[1].value(), pairs_[2].value()};
    }

    // How often each color appears on the cube; sums to 6.
    exponent_vector coverage(const color_basis& basis) const {
        exponent_vector e = pairs_[0].ev(basis);
        e += pairs_[1].ev(basis);
        e += pairs_[2].ev(basis);
        return e;
    }

    bool proper(const color_basis& basis) const {
        exponent_vector cov = coverage(basis);
        for (std::size_t i = 0; i < cov.size(); ++i)
            if (cov[i] == 0) return false;
        return true;
    }

    // Same predicate through plain integer arithmetic: the product of all six
    // stickers must be divisible by the product of the basis primes.
    bool proper_by_product(const color_basis& basis) const {
        std::uint64_t prod = pairs_[0].value() * pairs_[1].value() * pairs_[2].value();
        return prod % basis.radical() == 0;
    }

    std::string to_string() const {
        return "{" + std::to_string(pairs_[0].value()) + "," + std::to_string(pairs_[1].value()) +
               "," + std::to_string(pairs_[2].value()) + "}";
    }

    friend bool operator==(const cube_type& a, const cube_type& b) { return a.values() == b.values(); }
    friend auto operator<=>(const cube_type& a, const cube_type& b) { return a.values() <=> b.values(); }

private:
    std::array<pair_product, 3> pairs_{};
};

inline cube_type cube_type_from_values(const color_basis& basis, std::uint64_t a, std::uint64_t b,
                                       std::uint64_t c) {
    return cube_type(pair_product::from_value(basis, a), pair_product::from_value(basis, b),
                     pair_product::from_value(basis, c));
}

} // namespace insanity
