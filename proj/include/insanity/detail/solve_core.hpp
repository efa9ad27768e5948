#pragma once

// Hot inner machinery shared by the tower solver and the census: rows are
// packed into 64-bit exponent lanes (4 bits per color) so that "product of
// picked entries" becomes lane-wise addition, and column picks are packed
// two bits per row into one word. Everything here is deterministic: scans
// emit selections in lexicographic column order.

#include <array>
#include <cstdint>
#include <vector>

#include "insanity/puzzle.hpp"

namespace insanity::detail {

// One row's three entries in both arithmetic forms.
struct packed_row {
    std::array<std::uint64_t, 3> ev{};  // packed exponent lanes
    std::array<std::uint64_t, 3> val{}; // plain integer products
};

inline packed_row pack_row(const cube_type& t) {
    packed_row r;
    for (int k = 0; k < 3; ++k) {
        r.ev[k] = t.pair(k).packed_ev();
        r.val[k] = t.pair(k).value();
    }
    return r;
}

inline std::vector<packed_row> pack_rows(const puzzle& p) {
    std::vector<packed_row> rows;
    rows.reserve(p.size());
    for (const cube_type& r : p.rows()) rows.push_back(pack_row(r));
    return rows;
}

// Column picks, two bits per row, row 0 in the low bits.
using selection = std::uint32_t;

inline int selection_col(selection s, int row) { return (s >> (2 * row)) & 3; }

inline std::uint64_t lane_ones(int n) {
    std::uint64_t ones = 0;
    for (int i = 0; i < n; ++i) ones |= std::uint64_t{1} << (4 * i);
    return ones;
}

// Exponent route: a selection is magic iff every color lane sums to exactly
// two. A lane can only grow, so prune as soon as one reaches three; adding
// the all-ones pattern flags lanes >= 3 in the 4s bit without overflow
// (lanes stay far below 15 for n <= 16 rows).
inline void scan_by_exponent(const std::vector<packed_row>& rows, std::vector<selection>& out) {
    const int n = static_cast<int>(rows.size());
    const std::uint64_t ones = lane_ones(n);
    const std::uint64_t target = ones << 1;
    const std::uint64_t fours = ones << 2;

    out.clear();
    std::array<std::uint64_t, color_basis::max_colors + 1> sum{};
    std::array<selection, color_basis::max_colors + 1> sel{};
    std::array<int, color_basis::max_colors + 1> col{};
    int d = 0;
    col[0] = -1;
    while (d >= 0) {
        if (++col[d] == 3) {
            --d;
            continue;
        }
        const std::uint64_t s = sum[d] + rows[d].ev[col[d]];
        if ((s + ones) & fours) continue;
        const selection picked = sel[d] | (selection(col[d]) << (2 * d));
        if (d + 1 == n) {
            if (s == target) out.push_back(picked);
            continue;
        }
        sum[d + 1] = s;
        sel[d + 1] = picked;
        col[d + 1] = -1;
        ++d;
    }
}

// Integer route, same walk: multiply the picked entries and prune branches
// whose running product does not divide the magic number.
inline void scan_by_product(const std::vector<packed_row>& rows, std::uint64_t magic,
                            std::vector<selection>& out) {
    const int n = static_cast<int>(rows.size());
    out.clear();
    std::array<std::uint64_t, color_basis::max_colors + 1> prod{};
    std::array<selection, color_basis::max_colors + 1> sel{};
    std::array<int, color_basis::max_colors + 1> col{};
    prod[0] = 1;
    int d = 0;
    col[0] = -1;
    while (d >= 0) {
        if (++col[d] == 3) {
            --d;
            continue;
        }
        const std::uint64_t p = prod[d] * rows[d].val[col[d]];
        if (magic % p != 0) continue;
        const selection picked = sel[d] | (selection(col[d]) << (2 * d));
        if (d + 1 == n) {
            if (p == magic) out.push_back(picked);
            continue;
        }
        prod[d + 1] = p;
        sel[d + 1] = picked;
        col[d + 1] = -1;
        ++d;
    }
}

// Two selections are independent iff their picks differ in every row. Picks
// are 0..2 per two-bit lane, so "differs" is "xor lane nonzero"; folding each
// lane's bits into its low bit turns that into one mask compare.
inline selection pick_lanes_low(int n) {
    selection m = 0;
    for (int i = 0; i < n; ++i) m |= selection{1} << (2 * i);
    return m;
}

inline bool independent_packed(selection a, selection b, selection lanes_low) {
    const selection d = a ^ b;
    return ((d | (d >> 1)) & lanes_low) == lanes_low;
}

inline std::uint32_t count_independent_pairs(const std::vector<selection>& v, int n) {
    const selection m = pick_lanes_low(n);
    std::uint32_t count = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (independent_packed(v[i], v[j], m)) ++count;
    return count;
}

inline bool any_independent_pair(const std::vector<selection>& v, int n) {
    const selection m = pick_lanes_low(n);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (independent_packed(v[i], v[j], m)) return true;
    return false;
}

} // namespace insanity::detail
