#include <algorithm>
#include <numeric>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace insanity;

namespace {

auto code_is(errc c) {
    return Catch::Matchers::Predicate<error>([c](const error& e) { return e.code() == c; });
}

using raw_matrix = std::vector<std::array<std::uint64_t, 3>>;

puzzle puzzle_from_raw(const color_basis& basis, const raw_matrix& m) {
    std::vector<cube_type> rows;
    for (const auto& r : m) rows.push_back(cube_type_from_values(basis, r[0], r[1], r[2]));
    return puzzle(basis, std::move(rows));
}

constexpr std::array<std::array<int, 3>, 6> entry_perms{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

// Literal definition of equivalence: some row permutation and some entry
// permutation per row turn b into a.
bool oracle_equivalent(const raw_matrix& a, raw_matrix b) {
    if (a.size() != b.size()) return false;
    const std::size_t n = a.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 6;

    std::sort(b.begin(), b.end());
    do {
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            bool all = true;
            for (std::size_t i = 0; i < n && all; ++i) {
                const auto& pm = entry_perms[c % 6];
                c /= 6;
                for (int k = 0; k < 3; ++k)
                    if (b[i][pm[k]] != a[i][k]) {
                        all = false;
                        break;
                    }
            }
            if (all) return true;
        }
    } while (std::next_permutation(b.begin(), b.end()));
    return false;
}

raw_matrix raw_of(const puzzle& p) {
    raw_matrix m;
    for (const cube_type& r : p.rows()) m.push_back(r.values());
    return m;
}

} // namespace

TEST_CASE("cube type sorts its pairs on construction") {
    const color_basis b = color_basis::standard(4);
    const std::array<std::uint64_t, 3> vals{6, 10, 35};
    for (const auto& pm : entry_perms) {
        const cube_type t =
            cube_type_from_values(b, vals[pm[0]], vals[pm[1]], vals[pm[2]]);
        CHECK(t.values() == vals);
    }
    CHECK(cube_type_from_values(b, 35, 10, 6).to_string() == "{6,10,35}");
}

TEST_CASE("cube type coverage and properness") {
    const color_basis b = color_basis::standard(4);
    const cube_type t = cube_type_from_values(b, 14, 25, 15);
    const exponent_vector cov = t.coverage(b);
    CHECK(cov.sum() == 6);
    CHECK(cov[0] == 1);
    CHECK(cov[1] == 1);
    CHECK(cov[2] == 3); // 5 shows up twice in 25 and once in 15
    CHECK(cov[3] == 1);
    CHECK(t.proper(b));
    CHECK_FALSE(cube_type_from_values(b, 4, 6, 9).proper(b)); // colors 5,7 missing
}

TEST_CASE("both properness routes agree on every pair triple") {
    for (std::size_t n : {4u, 5u, 6u}) {
        const color_basis b = color_basis::standard(n);
        const std::vector<pair_product> pps = pair_products(b);
        for (std::size_t i = 0; i < pps.size(); ++i)
            for (std::size_t j = i; j < pps.size(); ++j)
                for (std::size_t k = j; k < pps.size(); ++k) {
                    const cube_type t(pps[i], pps[j], pps[k]);
                    CHECK(t.proper(b) == t.proper_by_product(b));
                }
    }
}

TEST_CASE("the three equivalent matrices canonicalize identically") {
    const color_basis b = color_basis::standard(4);
    const raw_matrix m1{{14, 25, 15}, {6, 35, 10}, {6, 14, 15}, {9, 14, 35}};
    const raw_matrix m2{{14, 25, 15}, {6, 14, 15}, {6, 35, 10}, {9, 14, 35}};
    const raw_matrix m3{{14, 15, 25}, {6, 14, 15}, {6, 10, 35}, {9, 14, 35}};

    const puzzle p1 = puzzle_from_raw(b, m1);
    const puzzle p2 = puzzle_from_raw(b, m2);
    const puzzle p3 = puzzle_from_raw(b, m3);
    CHECK(p1 == p2);
    CHECK(p2 == p3);

    CHECK(p1.row(0).values() == std::array<std::uint64_t, 3>{6, 10, 35});
    CHECK(p1.row(1).values() == std::array<std::uint64_t, 3>{6, 14, 15});
    CHECK(p1.row(2).values() == std::array<std::uint64_t, 3>{9, 14, 35});
    CHECK(p1.row(3).values() == std::array<std::uint64_t, 3>{14, 15, 25});
}

TEST_CASE("two-stage sort worked example") {
    const color_basis b = color_basis::standard(4);
    const puzzle p =
        puzzle_from_raw(b, {{25, 14, 15}, {35, 6, 10}, {14, 6, 15}, {35, 9, 14}});
    CHECK(p.row(0).values() == std::array<std::uint64_t, 3>{6, 10, 35});
    CHECK(p.row(1).values() == std::array<std::uint64_t, 3>{6, 14, 15});
    CHECK(p.row(2).values() == std::array<std::uint64_t, 3>{9, 14, 35});
    CHECK(p.row(3).values() == std::array<std::uint64_t, 3>{14, 15, 25});
}

TEST_CASE("canonicalization is idempotent") {
    const color_basis b = color_basis::standard(4);
    const puzzle p =
        puzzle_from_raw(b, {{14, 25, 15}, {6, 35, 10}, {6, 14, 15}, {9, 14, 35}});
    const puzzle again = canonicalize_puzzle(b, p.rows());
    CHECK(again == p);
    CHECK(again.rows() == p.rows());
}

TEST_CASE("puzzle construction rejects bad input") {
    const color_basis b = color_basis::standard(4);
    const cube_type good = cube_type_from_values(b, 6, 10, 35);
    const cube_type other = cube_type_from_values(b, 6, 14, 15);
    const cube_type third = cube_type_from_values(b, 9, 14, 35);
    const cube_type fourth = cube_type_from_values(b, 14, 15, 25);
    const cube_type improper = cube_type_from_values(b, 4, 6, 9);

    CHECK_THROWS_MATCHES(puzzle(b, {good, other, third}), error, code_is(errc::wrong_arity));
    CHECK_THROWS_MATCHES(puzzle(b, {good, other, third, improper}), error,
                         code_is(errc::improper_row));
    CHECK_THROWS_MATCHES(puzzle(b, {good, other, good, third}), error,
                         code_is(errc::duplicate_cube));

    const puzzle repeated(b, {good, other, good, third}, true);
    CHECK(repeated.allow_repeats());
    CHECK(repeated.row(0) == repeated.row(1));
}

TEST_CASE("relabeling by a permutation and its inverse round-trips") {
    const color_basis b = color_basis::standard(4);
    const puzzle p =
        puzzle_from_raw(b, {{14, 25, 15}, {6, 35, 10}, {6, 14, 15}, {9, 14, 35}});
    const std::vector<std::uint8_t> perm{2, 0, 3, 1};
    std::vector<std::uint8_t> inv(4);
    for (std::uint8_t i = 0; i < 4; ++i) inv[perm[i]] = i;

    const puzzle q = relabel_colors(p, perm);
    CHECK(q != p);
    CHECK(relabel_colors(q, inv) == p);
    CHECK_THROWS_MATCHES(relabel_colors(p, {0, 1, 2}), error, code_is(errc::length_mismatch));
}

TEST_CASE("canonical equality agrees with the permutation oracle") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t n = 2 + rng() % 3; // 2, 3, or 4 colors
        const color_basis b = color_basis::standard(n);
        const std::vector<cube_type> types = enumerate_cube_types(b);

        auto random_puzzle = [&] {
            std::vector<std::uint32_t> idx(types.size());
            std::iota(idx.begin(), idx.end(), 0u);
            std::shuffle(idx.begin(), idx.end(), rng);
            std::vector<cube_type> rows;
            for (std::size_t i = 0; i < n; ++i) rows.push_back(types[idx[i]]);
            return puzzle(b, std::move(rows));
        };
        auto scramble = [&](raw_matrix m) {
            std::shuffle(m.begin(), m.end(), rng);
            for (auto& row : m) std::shuffle(row.begin(), row.end(), rng);
            return m;
        };

        const puzzle pa = random_puzzle();
        const raw_matrix a = scramble(raw_of(pa));
        if (iter % 2 == 0) {
            const raw_matrix a2 = scramble(raw_of(pa));
            REQUIRE(puzzle_from_raw(b, a) == puzzle_from_raw(b, a2));
            REQUIRE(oracle_equivalent(a, a2));
        } else {
            const puzzle pb = random_puzzle();
            const raw_matrix bm = scramble(raw_of(pb));
            const bool canon_eq = puzzle_from_raw(b, a) == puzzle_from_raw(b, bm);
            REQUIRE(canon_eq == oracle_equivalent(a, bm));
        }
    }
}
