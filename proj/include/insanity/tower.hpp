#pragma once

// Solves the n-cube tower: pick one opposite-face pair per cube so that the
// picked pair products multiply to the magic number (every color twice), and
// combine independent picks into solution sets. Counting is done over column
// picks; the physical orientations come out of realize_tower.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "insanity/detail/solve_core.hpp"
#include "insanity/puzzle.hpp"

namespace insanity {

// Exponent form of the magic number: every color exactly twice.
inline exponent_vector magic_number(const color_basis& basis) {
    exponent_vector e(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) e[i] = 2;
    return e;
}

// Integer form: the square of the product of the basis primes.
inline std::uint64_t magic_value(const color_basis& basis) {
    return basis.radical() * basis.radical();
}

// One column pick per row (0..2, rows in canonical order) whose selected
// pair products multiply to the magic number.
struct partial_solution {
    std::vector<std::uint8_t> cols;

    friend bool operator==(const partial_solution&, const partial_solution&) = default;
    friend auto operator<=>(const partial_solution&, const partial_solution&) = default;
};

namespace detail {

inline partial_solution unpack_selection(selection s, std::size_t n) {
    partial_solution ps;
    ps.cols.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        ps.cols[i] = static_cast<std::uint8_t>(selection_col(s, static_cast<int>(i)));
    return ps;
}

inline selection pack_selection(const partial_solution& ps) {
    selection s = 0;
    for (std::size_t i = 0; i < ps.cols.size(); ++i) s |= selection(ps.cols[i] & 3) << (2 * i);
    return s;
}

} // namespace detail

// All partial solutions in lexicographic column order, found by lane-packed
// exponent addition.
inline std::vector<partial_solution> partial_solutions(const puzzle& p) {
    std::vector<detail::selection> sels;
    detail::scan_by_exponent(detail::pack_rows(p), sels);
    std::vector<partial_solution> out;
    out.reserve(sels.size());
    for (auto s : sels) out.push_back(detail::unpack_selection(s, p.size()));
    return out;
}

// The same set found by 64-bit multiplication and divisibility instead of
// exponent addition; the two routes are cross-checked in the tests.
inline std::vector<partial_solution> partial_solutions_by_product(const puzzle& p) {
    std::vector<detail::selection> sels;
    detail::scan_by_product(detail::pack_rows(p), magic_value(p.basis()), sels);
    std::vector<partial_solution> out;
    out.reserve(sels.size());
    for (auto s : sels) out.push_back(detail::unpack_selection(s, p.size()));
    return out;
}

// Independent = the picks differ in every row, i.e. no face pair is used by
// both. Two independent picks can be built as one physical tower (one pair
// facing front/back, the other left/right).
inline bool independent(const partial_solution& a, const partial_solution& b) {
    if (a.cols.size() != b.cols.size()) fail(errc::length_mismatch, "partial solution size mismatch");
    for (std::size_t i = 0; i < a.cols.size(); ++i)
        if (a.cols[i] == b.cols[i]) return false;
    return true;
}

// A set of pairwise independent partial solutions, members sorted.
struct solution_set {
    std::vector<partial_solution> members;

    friend bool operator==(const solution_set&, const solution_set&) = default;
    friend auto operator<=>(const solution_set&, const solution_set&) = default;
};

// All size-l sets of pairwise independent partial solutions, sorted. Each
// row offers three pair products and a solution set uses l of them per row,
// so l beyond 3 is meaningless; 1..3 is enforced.
inline std::vector<solution_set> solution_sets(const puzzle& p, int l) {
    if (l < 1 || l > 3) fail(errc::bad_l, "solution set size must be 1, 2, or 3");
    const std::vector<partial_solution> v = partial_solutions(p);
    std::vector<solution_set> out;
    if (l == 1) {
        for (const auto& u : v) out.push_back(solution_set{{u}});
        return out;
    }
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (!independent(v[i], v[j])) continue;
            if (l == 2) {
                out.push_back(solution_set{{v[i], v[j]}});
                continue;
            }
            for (std::size_t k = j + 1; k < v.size(); ++k)
                if (independent(v[i], v[k]) && independent(v[j], v[k]))
                    out.push_back(solution_set{{v[i], v[j], v[k]}});
        }
    return out;
}

// Number of 2-element solution sets, without materializing them.
inline std::uint32_t count_solutions(const puzzle& p) {
    std::vector<detail::selection> sels;
    detail::scan_by_exponent(detail::pack_rows(p), sels);
    return detail::count_independent_pairs(sels, static_cast<int>(p.size()));
}

// Physical tower configurations per 2-element solution set: cube order times
// the symmetries of an upright square tower.
inline std::uint64_t symmetry_factor(int n) {
    std::uint64_t f = 8;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// One cube's orientation inside a realized tower. Columns index the cube's
// pair products (0..2); colors are basis indices.
struct cube_orientation {
    std::uint8_t fb_col = 0, lr_col = 0, ud_col = 0;
    std::uint8_t front = 0, back = 0, left = 0, right = 0, up = 0, down = 0;
};

struct tower_realization {
    std::vector<cube_orientation> cubes; // in canonical row order
};

namespace detail {

// The picked pairs form a 2-regular multigraph on colors (vertices = colors,
// one edge per cube, loops allowed), i.e. disjoint cycles. Walking each cycle
// and facing every edge's departure vertex forward shows each color exactly
// once in front and once in back. Walk order is fixed: start each cycle at
// its smallest vertex, first step toward its smallest neighbour.
inline std::vector<std::uint8_t> orient_pairs(
    const std::vector<std::pair<std::uint8_t, std::uint8_t>>& edges, std::size_t n) {
    struct half {
        int edge;
        std::uint8_t other;
    };
    std::vector<std::vector<half>> adj(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].first].push_back({static_cast<int>(e), edges[e].second});
        adj[edges[e].second].push_back({static_cast<int>(e), edges[e].first});
    }
    for (const auto& a : adj)
        if (a.size() != 2) throw std::logic_error("pair graph is not 2-regular");

    std::vector<char> used(edges.size(), 0);
    std::vector<std::uint8_t> front(edges.size(), 0);
    for (std::size_t v0 = 0; v0 < n; ++v0) {
        std::uint8_t cur = static_cast<std::uint8_t>(v0);
        for (;;) {
            const half* next = nullptr;
            for (const half& h : adj[cur]) {
                if (used[h.edge]) continue;
                if (!next || h.other < next->other ||
                    (h.other == next->other && h.edge < next->edge))
                    next = &h;
            }
            if (!next) break;
            used[next->edge] = 1;
            front[next->edge] = cur;
            cur = next->other;
        }
    }
    return front;
}

} // namespace detail

// Turns a 2-element solution set into explicit orientations: the first
// member's pairs face front/back, the second member's left/right, and the
// leftover pair of each cube points up/down with its smaller color up.
inline tower_realization realize_tower(const puzzle& p, const solution_set& s) {
    if (s.members.size() != 2) fail(errc::wrong_count, "a realizable solution set has two members");
    const partial_solution& u = s.members[0];
    const partial_solution& v = s.members[1];
    if (u.cols.size() != p.size() || v.cols.size() != p.size())
        fail(errc::length_mismatch, "partial solution length does not match the puzzle");
    if (!independent(u, v)) fail(errc::not_independent, "solution set members are not independent");

    const exponent_vector target = magic_number(p.basis());
    for (const partial_solution* ps : {&u, &v}) {
        exponent_vector sum(p.basis().size());
        for (std::size_t i = 0; i < p.size(); ++i) sum += p.row(i).pair(ps->cols[i]).ev(p.basis());
        if (sum != target) fail(errc::not_magic, "member does not multiply to the magic number");
    }

    std::vector<std::pair<std::uint8_t, std::uint8_t>> fb_edges, lr_edges;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const pair_product& fb = p.row(i).pair(u.cols[i]);
        const pair_product& lr = p.row(i).pair(v.cols[i]);
        fb_edges.emplace_back(fb.lo(), fb.hi());
        lr_edges.emplace_back(lr.lo(), lr.hi());
    }
    const std::vector<std::uint8_t> fronts = detail::orient_pairs(fb_edges, p.basis().size());
    const std::vector<std::uint8_t> lefts = detail::orient_pairs(lr_edges, p.basis().size());

    tower_realization out;
    out.cubes.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        cube_orientation& c = out.cubes[i];
        c.fb_col = u.cols[i];
        c.lr_col = v.cols[i];
        c.ud_col = static_cast<std::uint8_t>(3 - u.cols[i] - v.cols[i]);
        const pair_product& fb = p.row(i).pair(c.fb_col);
        const pair_product& lr = p.row(i).pair(c.lr_col);
        const pair_product& ud = p.row(i).pair(c.ud_col);
        c.front = fronts[i];
        c.back = (c.front == fb.lo()) ? fb.hi() : fb.lo();
        c.left = lefts[i];
        c.right = (c.left == lr.lo()) ? lr.hi() : lr.lo();
        c.up = ud.lo();
        c.down = ud.hi();
    }

    // The walk guarantees each long side shows every color exactly once.
    for (auto side : {&cube_orientation::front, &cube_orientation::back, &cube_orientation::left,
                      &cube_orientation::right}) {
        std::vector<int> seen(p.basis().size(), 0);
        for (const cube_orientation& c : out.cubes) ++seen[c.*side];
        for (int k : seen)
            if (k != 1) throw std::logic_error("tower side does not show every color once");
    }
    return out;
}

} // namespace insanity
