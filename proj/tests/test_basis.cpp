#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace insanity;

TEST_CASE("standard bases are the first n primes") {
    CHECK(color_basis::standard(4).primes() == std::vector<std::uint32_t>{2, 3, 5, 7});
    CHECK(color_basis::standard(6).primes() == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13});
    CHECK(color_basis::standard(4).radical() == 210);
    CHECK(color_basis::standard(5).radical() == 2310);
    CHECK(color_basis::standard(6).radical() == 30030);
}

TEST_CASE("invalid bases are rejected") {
    CHECK_THROWS_MATCHES(color_basis({4, 6}), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::bad_basis; }));
    CHECK_THROWS_AS(color_basis({3, 2}), error);     // not increasing
    CHECK_THROWS_AS(color_basis({2, 2, 5}), error);  // repeated prime
    CHECK_THROWS_AS(color_basis({2}), error);        // too small
    CHECK_THROWS_AS(color_basis::standard(1), error);
    CHECK_THROWS_AS(color_basis::standard(17), error);
    std::vector<std::uint32_t> seventeen{2,  3,  5,  7,  11, 13, 17, 19, 23,
                                         29, 31, 37, 41, 43, 47, 53, 59};
    CHECK_THROWS_AS(color_basis(seventeen), error);
}

TEST_CASE("color lookup") {
    const color_basis b = color_basis::standard(4);
    CHECK(b.index_of(5) == std::uint8_t{2});
    CHECK_FALSE(b.index_of(11).has_value());
    CHECK(b.require_index(7) == 3);
    CHECK_THROWS_MATCHES(b.require_index(6), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::unknown_color; }));
}

TEST_CASE("pair products of the four-color basis") {
    const color_basis b = color_basis::standard(4);
    std::vector<std::uint64_t> got;
    for (const pair_product& pp : pair_products(b)) got.push_back(pp.value());
    CHECK(got == std::vector<std::uint64_t>{4, 6, 9, 10, 14, 15, 21, 25, 35, 49});
}

TEST_CASE("pair products of a two-color basis") {
    const color_basis b = color_basis::standard(2);
    std::vector<std::uint64_t> got;
    for (const pair_product& pp : pair_products(b)) got.push_back(pp.value());
    CHECK(got == std::vector<std::uint64_t>{4, 6, 9});
}

TEST_CASE("pair product list matches a direct double loop") {
    for (std::size_t n = 2; n <= 9; ++n) {
        const color_basis b = color_basis::standard(n);
        std::vector<std::uint64_t> expected;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                expected.push_back(std::uint64_t{b.prime(i)} * b.prime(j));
        std::sort(expected.begin(), expected.end());

        const std::vector<pair_product> got = pair_products(b);
        REQUIRE(got.size() == n * (n + 1) / 2);
        REQUIRE(got.size() == expected.size());
        for (std::size_t k = 0; k < got.size(); ++k) {
            CHECK(got[k].value() == expected[k]);
            if (k > 0) CHECK(got[k - 1].value() < got[k].value());
        }
    }
}

TEST_CASE("integer and exponent views of a pair agree") {
    const color_basis b = color_basis::standard(6);
    for (const pair_product& pp : pair_products(b)) {
        const exponent_vector e = pp.ev(b);
        CHECK(e.sum() == 2);
        CHECK(e.value(b) == pp.value());
        CHECK(e.packed() == pp.packed_ev());
        CHECK(pp.lo() <= pp.hi());
        CHECK(std::uint64_t{b.prime(pp.lo())} * b.prime(pp.hi()) == pp.value());
    }
}

TEST_CASE("pair products parse back from their value") {
    const color_basis b = color_basis::standard(4);
    const pair_product pp = pair_product::from_value(b, 15);
    CHECK(pp.lo() == 1);
    CHECK(pp.hi() == 2);
    CHECK(pp.value() == 15);
    CHECK(pair_product::from_value(b, 4).lo() == 0);
    CHECK(pair_product::from_value(b, 4).hi() == 0);
    for (std::uint64_t bad : {1ull, 2ull, 8ull, 11ull, 30ull, 44100ull}) {
        CHECK_THROWS_MATCHES(pair_product::from_value(b, bad), error,
                             Catch::Matchers::Predicate<error>([](const error& e) {
                                 return e.code() == errc::bad_pair_product;
                             }));
    }
}

TEST_CASE("exponent vectors add lane-wise in packed form") {
    const color_basis b = color_basis::standard(4);
    exponent_vector a(4), c(4);
    a[0] = 2;
    a[3] = 1;
    c[0] = 1;
    c[1] = 2;
    const exponent_vector s = a + c;
    CHECK(s.packed() == a.packed() + c.packed());
    CHECK(s.sum() == 6);
    CHECK(s.value(b) == 8 * 9 * 7);

    exponent_vector wrong(5);
    CHECK_THROWS_MATCHES(a + wrong, error, Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::length_mismatch;
                         }));
}

TEST_CASE("the all-twos vector denotes the squared radical") {
    for (std::size_t n : {2u, 4u, 5u, 6u}) {
        const color_basis b = color_basis::standard(n);
        exponent_vector e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = 2;
        CHECK(e.value(b) == b.radical() * b.radical());
    }
}
