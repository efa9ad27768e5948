#pragma once

// The flat 2x2x1 block puzzle: place four colored cubes in a square so that
// every face of the resulting prism is monochromatic. Positions are indexed
//
//        back
//      2     3          position 0 = (x 0, y 0) front-left
//      0     1          x grows right, y grows back
//        front
//
// and cube 0 is pinned to position 0, which quotients away nothing but the
// relabeling of identical assemblies by translation; whole-block symmetry is
// handled separately by dedupe.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <thread>
#include <vector>

#include "insanity/coloring.hpp"
#include "insanity/detail/solve_core.hpp"
#include "insanity/enumerate.hpp"
#include "insanity/tower.hpp"

namespace insanity {

// The twelve edge-sharing face pairs of one cube, in fixed slot order. The
// multiset of their products is a rotation invariant (rotations permute
// edges), refining the opposite-pair type.
class edge_pair_profile {
public:
    static constexpr std::array<std::array<std::uint8_t, 2>, 12> edges{{
        {face_up, face_front},
        {face_up, face_back},
        {face_up, face_left},
        {face_up, face_right},
        {face_down, face_front},
        {face_down, face_back},
        {face_down, face_left},
        {face_down, face_right},
        {face_front, face_left},
        {face_front, face_right},
        {face_back, face_left},
        {face_back, face_right},
    }};

    static edge_pair_profile of(const cube_coloring& c, const color_basis& basis) {
        edge_pair_profile p;
        for (std::size_t e = 0; e < edges.size(); ++e)
            p.products_[e] = pair_product::of(basis, c.faces[edges[e][0]], c.faces[edges[e][1]]);
        return p;
    }

    const std::array<pair_product, 12>& products() const { return products_; }

    std::array<std::uint64_t, 12> sorted_values() const {
        std::array<std::uint64_t, 12> v;
        for (std::size_t e = 0; e < 12; ++e) v[e] = products_[e].value();
        std::sort(v.begin(), v.end());
        return v;
    }

private:
    std::array<pair_product, 12> products_{};
};

// cube[q] = which input cube sits at position q, rot[q] = its orientation as
// an index into the published rotation table.
struct block_placement {
    std::array<std::uint8_t, 4> cube{};
    std::array<std::uint8_t, 4> rot{};

    friend bool operator==(const block_placement&, const block_placement&) = default;
    friend auto operator<=>(const block_placement&, const block_placement&) = default;
};

// The six prism face colors of a placement: up, down, front, back, left,
// right (color indices).
inline std::array<std::uint8_t, num_faces> block_faces(const std::vector<cube_coloring>& cubes,
                                                       const block_placement& bp) {
    const rotation_group& rg = rotation_group::instance();
    std::array<cube_coloring, 4> at;
    for (int q = 0; q < 4; ++q) at[q] = apply(rg[bp.rot[q]], cubes[bp.cube[q]]);
    return {at[0].faces[face_up],   at[0].faces[face_down], at[0].faces[face_front],
            at[2].faces[face_back], at[0].faces[face_left], at[1].faces[face_right]};
}

// Symmetry of the assembled block: a position shuffle plus a direction
// permutation, closed under composition (16 elements: the quarter turns
// about the vertical axis, the end-over-end flip, and the top-bottom
// mirror).
struct box_symmetry {
    std::array<std::uint8_t, 4> pos{};
    std::array<std::uint8_t, num_faces> dir{};

    friend bool operator==(const box_symmetry&, const box_symmetry&) = default;
    friend auto operator<=>(const box_symmetry&, const box_symmetry&) = default;
};

inline box_symmetry compose(const box_symmetry& a, const box_symmetry& b) {
    box_symmetry r;
    for (int q = 0; q < 4; ++q) r.pos[q] = a.pos[b.pos[q]];
    for (int d = 0; d < num_faces; ++d) r.dir[d] = a.dir[b.dir[d]];
    return r;
}

inline const std::vector<box_symmetry>& box_symmetries() {
    static const std::vector<box_symmetry> group = [] {
        const box_symmetry id{{0, 1, 2, 3}, {0, 1, 2, 3, 4, 5}};
        box_symmetry rz90; // quarter turn, seen from above: front edge swings right
        rz90.pos = {1, 3, 0, 2};
        rz90.dir = id.dir;
        rz90.dir[face_front] = face_right;
        rz90.dir[face_right] = face_back;
        rz90.dir[face_back] = face_left;
        rz90.dir[face_left] = face_front;
        box_symmetry rx180; // end-over-end about the left-right axis
        rx180.pos = {2, 3, 0, 1};
        rx180.dir = id.dir;
        rx180.dir[face_up] = face_down;
        rx180.dir[face_down] = face_up;
        rx180.dir[face_front] = face_back;
        rx180.dir[face_back] = face_front;
        box_symmetry mz; // top-bottom mirror
        mz.pos = id.pos;
        mz.dir = id.dir;
        mz.dir[face_up] = face_down;
        mz.dir[face_down] = face_up;

        std::vector<box_symmetry> seen{id};
        for (std::size_t head = 0; head < seen.size(); ++head)
            for (const box_symmetry& g : {rz90, rx180, mz}) {
                box_symmetry next = compose(g, seen[head]);
                if (std::find(seen.begin(), seen.end(), next) == seen.end()) seen.push_back(next);
            }
        std::sort(seen.begin(), seen.end());
        return seen;
    }();
    return group;
}

namespace detail {

// Position q holds cube id byte then six sticker colors; 28 bytes total.
using block_state = std::array<std::uint8_t, 28>;

inline block_state block_state_of(const std::vector<cube_coloring>& cubes,
                                  const block_placement& bp) {
    const rotation_group& rg = rotation_group::instance();
    block_state st{};
    for (int q = 0; q < 4; ++q) {
        const cube_coloring c = apply(rg[bp.rot[q]], cubes[bp.cube[q]]);
        st[q * 7] = bp.cube[q];
        for (int d = 0; d < num_faces; ++d) st[q * 7 + 1 + d] = c.faces[d];
    }
    return st;
}

inline block_state transform(const box_symmetry& g, const block_state& st) {
    block_state out{};
    for (int q = 0; q < 4; ++q) {
        const int to = g.pos[q];
        out[to * 7] = st[q * 7];
        for (int d = 0; d < num_faces; ++d) out[to * 7 + 1 + g.dir[d]] = st[q * 7 + 1 + d];
    }
    return out;
}

inline block_state canonical_block_state(const std::vector<cube_coloring>& cubes,
                                         const block_placement& bp) {
    const block_state st = block_state_of(cubes, bp);
    block_state best = st;
    for (const box_symmetry& g : box_symmetries()) {
        const block_state t = transform(g, st);
        if (t < best) best = t;
    }
    return best;
}

} // namespace detail

inline constexpr std::uint64_t no_limit = std::numeric_limits<std::uint64_t>::max();

// All ways to fill the square with the four cubes so every prism face is one
// color. Cube 0 stays at position 0; the list is sorted by (cube, rot). With
// dedupe, placements equal modulo a box symmetry collapse to the least
// placement of their class. limit caps the search (existence checks pass 1);
// a truncated list holds the first matches in scan order.
inline std::vector<block_placement> solve_block(const std::vector<cube_coloring>& cubes,
                                                bool dedupe = false,
                                                std::uint64_t limit = no_limit) {
    if (cubes.size() != 4) fail(errc::wrong_count, "the block puzzle takes exactly four cubes");
    const rotation_group& rg = rotation_group::instance();
    std::array<std::array<cube_coloring, rotation_group::order>, 4> oriented;
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < rotation_group::order; ++r) oriented[c][r] = apply(rg[r], cubes[c]);

    static constexpr std::array<std::array<std::uint8_t, 3>, 6> perms{{
        {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1},
    }};

    std::vector<block_placement> out;
    for (int r0 = 0; r0 < rotation_group::order && out.size() < limit; ++r0) {
        const cube_coloring& a = oriented[0][r0];
        const std::uint8_t top = a.faces[face_up], bottom = a.faces[face_down];
        const std::uint8_t west = a.faces[face_left], south = a.faces[face_front];
        for (const auto& pm : perms) {
            for (int r1 = 0; r1 < rotation_group::order && out.size() < limit; ++r1) {
                const cube_coloring& b = oriented[pm[0]][r1];
                if (b.faces[face_up] != top || b.faces[face_down] != bottom ||
                    b.faces[face_front] != south)
                    continue;
                const std::uint8_t east = b.faces[face_right];
                for (int r2 = 0; r2 < rotation_group::order && out.size() < limit; ++r2) {
                    const cube_coloring& c = oriented[pm[1]][r2];
                    if (c.faces[face_up] != top || c.faces[face_down] != bottom ||
                        c.faces[face_left] != west)
                        continue;
                    const std::uint8_t north = c.faces[face_back];
                    for (int r3 = 0; r3 < rotation_group::order && out.size() < limit; ++r3) {
                        const cube_coloring& d = oriented[pm[2]][r3];
                        if (d.faces[face_up] != top || d.faces[face_down] != bottom ||
                            d.faces[face_right] != east || d.faces[face_back] != north)
                            continue;
                        out.push_back(block_placement{
                            {0, pm[0], pm[1], pm[2]},
                            {static_cast<std::uint8_t>(r0), static_cast<std::uint8_t>(r1),
                             static_cast<std::uint8_t>(r2), static_cast<std::uint8_t>(r3)}});
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());

    if (dedupe) {
        std::map<detail::block_state, block_placement> classes;
        for (const block_placement& bp : out)
            classes.try_emplace(detail::canonical_block_state(cubes, bp), bp);
        out.clear();
        for (const auto& [key, bp] : classes) out.push_back(bp);
        std::sort(out.begin(), out.end());
    }
    return out;
}

// One result of the search below: four cubes (by universe index and by
// value) that work both as a tower and as a block.
struct mutando_hit {
    std::array<std::uint32_t, 4> universe;
    std::array<cube_coloring, 4> cubes;
    std::uint32_t tower_solutions = 0;
    std::uint64_t block_placements = 0;   // raw, cube 0 pinned
    std::uint64_t block_classes = 0;      // modulo box symmetry

    friend bool operator==(const mutando_hit& a, const mutando_hit& b) {
        return a.universe == b.universe;
    }
    friend auto operator<=>(const mutando_hit& a, const mutando_hit& b) {
        return a.universe <=> b.universe;
    }
};

// Every physically distinct cube whose type is proper over the basis.
inline std::vector<cube_coloring> coloring_universe(const color_basis& basis) {
    std::vector<cube_coloring> all;
    for (const cube_type& t : enumerate_cube_types(basis))
        for (const cube_coloring& c : expand_colorings(t, basis)) all.push_back(c);
    std::sort(all.begin(), all.end());
    return all;
}

namespace detail {

struct mutando_entry {
    cube_coloring coloring;
    packed_row row;
    std::uint16_t pair_mask; // bit per pair-product value the type contains
};

inline void mutando_range(const std::vector<mutando_entry>& uni, std::uint64_t lo,
                          std::uint64_t hi, std::vector<std::array<std::uint32_t, 4>>& hits) {
    std::vector<std::uint32_t> d = colex_unrank(lo, 4, uni.size());
    std::vector<packed_row> rows(4);
    std::vector<cube_coloring> cubes(4);
    std::vector<selection> sels;
    for (std::uint64_t r = lo; r < hi; ++r, colex_successor(d)) {
        for (int i = 0; i < 4; ++i) rows[i] = uni[d[i]].row;
        scan_by_exponent(rows, sels);
        if (!any_independent_pair(sels, 4)) continue;
        // A block solution exposes some opposite pair on top+bottom of all
        // four cubes at once, so the four types must share a pair value.
        if ((uni[d[0]].pair_mask & uni[d[1]].pair_mask & uni[d[2]].pair_mask &
             uni[d[3]].pair_mask) == 0)
            continue;
        for (int i = 0; i < 4; ++i) cubes[i] = uni[d[i]].coloring;
        if (solve_block(cubes, false, 1).empty()) continue;
        hits.push_back({d[0], d[1], d[2], d[3]});
    }
}

} // namespace detail

// Searches every 4-subset of the proper-coloring universe for sets that
// solve both ways: at least one tower solution and at least one block
// placement. Output is deterministic (sorted by universe index tuple) for
// any thread count.
inline std::vector<mutando_hit> mutando_search(const color_basis& basis, unsigned threads = 1) {
    if (basis.size() != 4) fail(errc::wrong_arity, "the block search is over four-color bases");

    const std::vector<cube_coloring> universe = coloring_universe(basis);
    const std::vector<pair_product> pps = pair_products(basis);
    std::vector<detail::mutando_entry> uni;
    uni.reserve(universe.size());
    for (const cube_coloring& c : universe) {
        detail::mutando_entry e;
        e.coloring = c;
        const cube_type t = coloring_to_cube_type(c, basis);
        e.row = detail::pack_row(t);
        e.pair_mask = 0;
        for (std::size_t v = 0; v < pps.size(); ++v)
            for (int k = 0; k < 3; ++k)
                if (t.pair(k) == pps[v]) e.pair_mask |= std::uint16_t(1) << v;
        uni.push_back(e);
    }

    const std::uint64_t total = binomial(uni.size(), 4);
    const unsigned nthreads = threads == 0 ? 1 : threads;
    std::vector<std::vector<std::array<std::uint32_t, 4>>> found(nthreads);
    if (nthreads == 1) {
        detail::mutando_range(uni, 0, total, found[0]);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t per = total / nthreads, extra = total % nthreads;
        std::uint64_t lo = 0;
        for (unsigned t = 0; t < nthreads; ++t) {
            const std::uint64_t hi = lo + per + (t < extra ? 1 : 0);
            pool.emplace_back(detail::mutando_range, std::cref(uni), lo, hi,
                              std::ref(found[t]));
            lo = hi;
        }
        for (std::thread& th : pool) th.join();
    }

    std::vector<std::array<std::uint32_t, 4>> all;
    for (const auto& f : found) all.insert(all.end(), f.begin(), f.end());
    std::sort(all.begin(), all.end());

    std::vector<mutando_hit> hits;
    hits.reserve(all.size());
    for (const auto& idx : all) {
        mutando_hit h;
        h.universe = idx;
        std::vector<cube_coloring> cubes;
        std::vector<detail::packed_row> rows;
        for (int i = 0; i < 4; ++i) {
            h.cubes[i] = universe[idx[i]];
            cubes.push_back(universe[idx[i]]);
            rows.push_back(uni[idx[i]].row);
        }
        std::vector<detail::selection> sels;
        detail::scan_by_exponent(rows, sels);
        h.tower_solutions = detail::count_independent_pairs(sels, 4);
        h.block_placements = solve_block(cubes, false).size();
        h.block_classes = solve_block(cubes, true).size();
        hits.push_back(h);
    }
    return hits;
}

} // namespace insanity
