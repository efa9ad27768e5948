#pragma once

// The 24 orientation-preserving symmetries of the cube, acting on face slots.
// The table is generated once (breadth-first closure of two quarter turns),
// sorted lexicographically, and then fixed: rotation indices appearing in
// reports and placements refer to this order. Index 0 is the identity.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace insanity {

enum face : std::uint8_t {
    face_up = 0,
    face_down = 1,
    face_front = 2,
    face_back = 3,
    face_left = 4,
    face_right = 5,
};
inline constexpr int num_faces = 6;

inline const char* face_name(int f) {
    static constexpr const char* names[num_faces] = {"up", "down", "front", "back", "left", "right"};
    return names[f];
}

// perm[s] = the slot that the sticker currently in slot s moves to.
struct rotation {
    std::array<std::uint8_t, num_faces> perm{};

    friend bool operator==(const rotation&, const rotation&) = default;
    friend auto operator<=>(const rotation&, const rotation&) = default;
};

inline constexpr rotation rotation_identity() { return rotation{{0, 1, 2, 3, 4, 5}}; }

// a after b.
inline rotation compose(const rotation& a, const rotation& b) {
    rotation r;
    for (int s = 0; s < num_faces; ++s) r.perm[s] = a.perm[b.perm[s]];
    return r;
}

inline rotation inverse(const rotation& a) {
    rotation r;
    for (int s = 0; s < num_faces; ++s) r.perm[a.perm[s]] = static_cast<std::uint8_t>(s);
    return r;
}

class rotation_group {
public:
    static constexpr int order = 24;

    static const rotation_group& instance() {
        static const rotation_group g;
        return g;
    }

    const std::array<rotation, order>& all() const { return rots_; }
    const rotation& operator[](int i) const { return rots_[i]; }

    // -1 if r is not one of the 24.
    int index_of(const rotation& r) const {
        auto it = std::lower_bound(rots_.begin(), rots_.end(), r);
        if (it == rots_.end() || !(*it == r)) return -1;
        return static_cast<int>(it - rots_.begin());
    }

    int compose_index(int a, int b) const { return comp_[a][b]; }
    int inverse_index(int a) const { return inv_[a]; }

private:
    rotation_group() {
        // Quarter turn about the left-right axis: front goes up, up goes back.
        rotation x;
        x.perm[face_front] = face_up;
        x.perm[face_up] = face_back;
        x.perm[face_back] = face_down;
        x.perm[face_down] = face_front;
        x.perm[face_left] = face_left;
        x.perm[face_right] = face_right;
        // Quarter turn about the up-down axis: front goes right, right goes back.
        rotation y;
        y.perm[face_front] = face_right;
        y.perm[face_right] = face_back;
        y.perm[face_back] = face_left;
        y.perm[face_left] = face_front;
        y.perm[face_up] = face_up;
        y.perm[face_down] = face_down;

        std::vector<rotation> seen{rotation_identity()};
        for (std::size_t head = 0; head < seen.size(); ++head) {
            for (const rotation& g : {x, y}) {
                rotation next = compose(g, seen[head]);
                if (std::find(seen.begin(), seen.end(), next) == seen.end()) seen.push_back(next);
            }
        }
        if (seen.size() != order) throw std::logic_error("rotation closure is not 24 elements");
        std::sort(seen.begin(), seen.end());
        std::copy(seen.begin(), seen.end(), rots_.begin());

        for (int a = 0; a < order; ++a) {
            for (int b = 0; b < order; ++b) {
                auto it = std::lower_bound(rots_.begin(), rots_.end(), compose(rots_[a], rots_[b]));
                comp_[a][b] = static_cast<std::uint8_t>(it - rots_.begin());
            }
            auto it = std::lower_bound(rots_.begin(), rots_.end(), inverse(rots_[a]));
            inv_[a] = static_cast<std::uint8_t>(it - rots_.begin());
        }
    }

    std::array<rotation, order> rots_{};
    std::array<std::array<std::uint8_t, order>, order> comp_{};
    std::array<std::uint8_t, order> inv_{};
};

} // namespace insanity
