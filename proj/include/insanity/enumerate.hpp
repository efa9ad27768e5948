#pragma once

// Exhaustive enumeration: all proper cube types over a basis, all puzzles
// over those types, and the census (solution-count histogram over every
// puzzle). The census partitions work by colexicographic combination rank,
// so any thread count walks the same puzzles and merges to identical output.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "insanity/detail/solve_core.hpp"
#include "insanity/puzzle.hpp"
#include "insanity/tower.hpp"

namespace insanity {

// All proper cube types, ascending by value triple.
inline std::vector<cube_type> enumerate_cube_types(const color_basis& basis) {
    const std::vector<pair_product> pps = pair_products(basis);
    std::vector<cube_type> out;
    for (std::size_t i = 0; i < pps.size(); ++i)
        for (std::size_t j = i; j < pps.size(); ++j)
            for (std::size_t k = j; k < pps.size(); ++k) {
                cube_type t(pps[i], pps[j], pps[k]);
                if (t.proper(basis)) out.push_back(t);
            }
    return out; // the loop order is already the sorted order
}

// Exact for every value that fits in 64 bits; the intermediate product is
// kept divisible at each step.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Number of puzzles over t cube types: n-subsets, or n-multisets when
// repeated cubes are allowed.
inline std::uint64_t puzzle_count(std::size_t num_types, std::size_t n, bool allow_repeats) {
    return allow_repeats ? binomial(num_types + n - 1, n) : binomial(num_types, n);
}

namespace detail {

// Strict ascending index combos c0 < c1 < ... over [0, domain). Multiset
// combos are handled by the usual shift to strict ones (d_i = c_i + i).
inline std::vector<std::uint32_t> colex_unrank(std::uint64_t rank, std::size_t k,
                                               std::size_t domain) {
    std::vector<std::uint32_t> c(k);
    std::size_t hi = domain;
    for (std::size_t i = k; i-- > 0;) {
        std::size_t m = hi - 1;
        while (binomial(m, i + 1) > rank) --m;
        c[i] = static_cast<std::uint32_t>(m);
        rank -= binomial(m, i + 1);
        hi = m;
    }
    return c;
}

inline void colex_successor(std::vector<std::uint32_t>& c) {
    std::size_t i = 0;
    while (i + 1 < c.size() && c[i] + 1 == c[i + 1]) ++i;
    ++c[i];
    for (std::size_t j = 0; j < i; ++j) c[j] = static_cast<std::uint32_t>(j);
}

} // namespace detail

struct census_options {
    bool allow_repeats = false;
    unsigned threads = 1;
    bool crosscheck = false; // run the integer route alongside and compare
};

// Histogram of count_solutions over every puzzle, plus one witness puzzle
// per occurring count: the lexicographically least tuple of indices into the
// sorted type table (equivalently, the first such puzzle in canonical
// enumeration order).
class census_result {
public:
    census_result(color_basis basis, bool allow_repeats, std::vector<cube_type> types)
        : basis_(std::move(basis)), allow_repeats_(allow_repeats), types_(std::move(types)) {}

    const color_basis& basis() const { return basis_; }
    bool allow_repeats() const { return allow_repeats_; }
    const std::vector<cube_type>& types() const { return types_; }
    std::uint64_t total() const { return total_; }
    const std::map<std::uint32_t, std::uint64_t>& histogram() const { return histogram_; }
    const std::map<std::uint32_t, std::vector<std::uint32_t>>& witness_indices() const {
        return witness_indices_;
    }

    std::uint32_t max_count() const {
        return histogram_.empty() ? 0 : histogram_.rbegin()->first;
    }

    puzzle witness(std::uint32_t count) const {
        auto it = witness_indices_.find(count);
        if (it == witness_indices_.end())
            fail(errc::wrong_count, "no puzzle has " + std::to_string(count) + " solutions");
        std::vector<cube_type> rows;
        for (std::uint32_t t : it->second) rows.push_back(types_[t]);
        return puzzle(basis_, std::move(rows), allow_repeats_);
    }

    std::uint64_t total_ = 0;
    std::map<std::uint32_t, std::uint64_t> histogram_;
    std::map<std::uint32_t, std::vector<std::uint32_t>> witness_indices_;

private:
    color_basis basis_;
    bool allow_repeats_;
    std::vector<cube_type> types_;
};

// Occurring solution counts, and the missing values below the maximum.
inline std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> achievable_counts(
    const census_result& r) {
    std::vector<std::uint32_t> achieved, gaps;
    for (const auto& [count, puzzles] : r.histogram()) achieved.push_back(count);
    std::uint32_t next = 0;
    for (std::uint32_t a : achieved) {
        for (; next < a; ++next) gaps.push_back(next);
        next = a + 1;
    }
    return {achieved, gaps};
}

namespace detail {

struct census_worker_out {
    std::map<std::uint32_t, std::uint64_t> hist;
    std::map<std::uint32_t, std::vector<std::uint32_t>> wit;
    bool route_mismatch = false;
};

// Walks combos with colex ranks [lo, hi) and accumulates locally.
inline void census_range(const std::vector<packed_row>& type_rows, std::size_t n,
                         bool allow_repeats, std::uint64_t magic, bool crosscheck,
                         std::uint64_t lo, std::uint64_t hi, census_worker_out& acc) {
    const std::size_t domain = type_rows.size() + (allow_repeats ? n - 1 : 0);
    std::vector<std::uint32_t> d = colex_unrank(lo, n, domain);
    std::vector<std::uint32_t> idx(n);
    std::vector<packed_row> rows(n);
    std::vector<selection> sels, sels2;
    for (std::uint64_t r = lo; r < hi; ++r, colex_successor(d)) {
        for (std::size_t i = 0; i < n; ++i) {
            idx[i] = allow_repeats ? d[i] - static_cast<std::uint32_t>(i) : d[i];
            rows[i] = type_rows[idx[i]];
        }
        scan_by_exponent(rows, sels);
        if (crosscheck) {
            scan_by_product(rows, magic, sels2);
            if (sels != sels2) acc.route_mismatch = true;
        }
        const std::uint32_t count = count_independent_pairs(sels, static_cast<int>(n));
        ++acc.hist[count];
        auto [it, inserted] = acc.wit.try_emplace(count, idx);
        if (!inserted && idx < it->second) it->second = idx;
    }
}

} // namespace detail

inline census_result census(const color_basis& basis, const census_options& opt = {}) {
    const std::size_t n = basis.size();
    std::vector<cube_type> types = enumerate_cube_types(basis);
    std::vector<detail::packed_row> type_rows;
    type_rows.reserve(types.size());
    for (const cube_type& t : types) type_rows.push_back(detail::pack_row(t));

    census_result result(basis, opt.allow_repeats, std::move(types));
    result.total_ = puzzle_count(type_rows.size(), n, opt.allow_repeats);

    const unsigned threads = opt.threads == 0 ? 1 : opt.threads;
    std::vector<detail::census_worker_out> outs(threads);
    if (threads == 1) {
        detail::census_range(type_rows, n, opt.allow_repeats, magic_value(basis), opt.crosscheck,
                             0, result.total_, outs[0]);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t per = result.total_ / threads, extra = result.total_ % threads;
        std::uint64_t lo = 0;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t hi = lo + per + (t < extra ? 1 : 0);
            pool.emplace_back(detail::census_range, std::cref(type_rows), n, opt.allow_repeats,
                              magic_value(basis), opt.crosscheck, lo, hi, std::ref(outs[t]));
            lo = hi;
        }
        for (std::thread& th : pool) th.join();
    }

    for (const detail::census_worker_out& o : outs) {
        if (o.route_mismatch)
            throw std::logic_error("exponent and integer solvers disagree on some puzzle");
        for (const auto& [count, puzzles] : o.hist) result.histogram_[count] += puzzles;
        for (const auto& [count, idx] : o.wit) {
            auto [it, inserted] = result.witness_indices_.try_emplace(count, idx);
            if (!inserted && idx < it->second) it->second = idx;
        }
    }
    return result;
}

// Streams every puzzle over the basis in canonical (row-lexicographic)
// order. Meant for tests and small bases; the census does not go through
// here.
template <class F>
inline void for_each_puzzle(const color_basis& basis, bool allow_repeats, F&& f) {
    const std::vector<cube_type> types = enumerate_cube_types(basis);
    const std::size_t n = basis.size();
    const std::size_t t = types.size();
    if (!allow_repeats && t < n) return;

    std::vector<std::uint32_t> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = allow_repeats ? 0 : static_cast<std::uint32_t>(i);
    for (;;) {
        std::vector<cube_type> rows;
        rows.reserve(n);
        for (std::uint32_t i : c) rows.push_back(types[i]);
        f(puzzle(basis, std::move(rows), allow_repeats));

        // lexicographic successor of the index combo
        std::size_t i = n;
        while (i-- > 0) {
            const std::uint32_t cap =
                allow_repeats ? static_cast<std::uint32_t>(t - 1)
                              : static_cast<std::uint32_t>(t - n + i);
            if (c[i] < cap) break;
            if (i == 0) return;
        }
        ++c[i];
        for (std::size_t j = i + 1; j < n; ++j) c[j] = allow_repeats ? c[i] : c[j - 1] + 1;
    }
}

} // namespace insanity
