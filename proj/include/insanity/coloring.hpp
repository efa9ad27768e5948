#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "insanity/basis.hpp"
#include "insanity/cube_type.hpp"
#include "insanity/rotations.hpp"

namespace insanity {

// A fully colored oriented cube: one color index per face slot. Two colorings
// are the same physical cube iff some rotation maps one onto the other; the
// canonical form (lexicographic minimum of the orbit, slot order up, down,
// front, back, left, right) decides that with a single comparison.
struct cube_coloring {
    std::array<std::uint8_t, num_faces> faces{};

    friend bool operator==(const cube_coloring&, const cube_coloring&) = default;
    friend auto operator<=>(const cube_coloring&, const cube_coloring&) = default;
};

inline cube_coloring apply(const rotation& r, const cube_coloring& c) {
    cube_coloring out;
    for (int s = 0; s < num_faces; ++s) out.faces[r.perm[s]] = c.faces[s];
    return out;
}

inline cube_coloring canonical_form(const cube_coloring& c) {
    cube_coloring best = c;
    for (const rotation& r : rotation_group::instance().all()) {
        cube_coloring t = apply(r, c);
        if (t < best) best = t;
    }
    return best;
}

inline bool is_canonical(const cube_coloring& c) { return canonical_form(c) == c; }

// Forgets orientation: the three opposite-slot products.
inline cube_type coloring_to_cube_type(const cube_coloring& c, const color_basis& basis) {
    return cube_type(pair_product::of(basis, c.faces[face_up], c.faces[face_down]),
                     pair_product::of(basis, c.faces[face_front], c.faces[face_back]),
                     pair_product::of(basis, c.faces[face_left], c.faces[face_right]));
}

// The unfolded cross used by the input format, stored as prime labels:
//
//            +----+
//            | s4 |
//   +----+---+----+
//   |left| s3|righ|         cells = (s1, s2, s3, s4, left, right)
//   +----+---+----+
//            | s2 |
//            +----+
//            | s1 |
//            +----+
//
// Folding wraps the vertical strip away from the viewer: s1 stays in front,
// s2 folds up, s3 to the back, s4 underneath, and the flaps on s3 become the
// left and right faces. Opposite pairs: (s1,s3), (s2,s4), (left,right).
struct net {
    std::array<std::uint32_t, num_faces> cells{};

    friend bool operator==(const net&, const net&) = default;
};

inline cube_coloring net_to_coloring(const net& n, const color_basis& basis) {
    cube_coloring c;
    c.faces[face_front] = basis.require_index(n.cells[0]);
    c.faces[face_up] = basis.require_index(n.cells[1]);
    c.faces[face_back] = basis.require_index(n.cells[2]);
    c.faces[face_down] = basis.require_index(n.cells[3]);
    c.faces[face_left] = basis.require_index(n.cells[4]);
    c.faces[face_right] = basis.require_index(n.cells[5]);
    return canonical_form(c);
}

inline net to_net(const cube_coloring& c, const color_basis& basis) {
    net n;
    n.cells[0] = basis.prime(c.faces[face_front]);
    n.cells[1] = basis.prime(c.faces[face_up]);
    n.cells[2] = basis.prime(c.faces[face_back]);
    n.cells[3] = basis.prime(c.faces[face_down]);
    n.cells[4] = basis.prime(c.faces[face_left]);
    n.cells[5] = basis.prime(c.faces[face_right]);
    return n;
}

// Every rotation-inequivalent coloring whose opposite-face products are the
// given type: assign the three pairs to the three axes (3! ways), flip each
// pair (2^3), and keep one representative per rotation orbit. Sorted.
inline std::vector<cube_coloring> expand_colorings(const cube_type& t, const color_basis& basis) {
    static constexpr std::array<std::array<std::uint8_t, 3>, 6> axis_orders{{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    static constexpr std::array<std::array<std::uint8_t, 2>, 3> axis_slots{{
        {face_up, face_down}, {face_front, face_back}, {face_left, face_right},
    }};

    std::vector<cube_coloring> out;
    for (const auto& order : axis_orders) {
        for (int flips = 0; flips < 8; ++flips) {
            cube_coloring c;
            for (int axis = 0; axis < 3; ++axis) {
                const pair_product& pp = t.pair(order[axis]);
                bool flip = (flips >> axis) & 1;
                c.faces[axis_slots[axis][0]] = flip ? pp.hi() : pp.lo();
                c.faces[axis_slots[axis][1]] = flip ? pp.lo() : pp.hi();
            }
            out.push_back(canonical_form(c));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace insanity
