#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "insanity/basis.hpp"
#include "insanity/cube_type.hpp"

namespace insanity {

// n proper cubes over an n-color basis, held in canonical form: each row's
// entries ascend (cube_type does that) and rows are sorted lexicographically.
// Two row lists describe the same puzzle iff they canonicalize identically;
// construction is the canonicalization.
class puzzle {
public:
    puzzle(color_basis basis, std::vector<cube_type> rows, bool allow_repeats = false)
        : basis_(std::move(basis)), rows_(std::move(rows)), allow_repeats_(allow_repeats) {
        if (rows_.size() != basis_.size())
            fail(errc::wrong_arity, "expected " + std::to_string(basis_.size()) + " cubes, got " +
                                        std::to_string(rows_.size()));
        for (const cube_type& r : rows_)
            if (!r.proper(basis_))
                fail(errc::improper_row, "cube " + r.to_string() + " does not show every color");
        std::sort(rows_.begin(), rows_.end());
        if (!allow_repeats_)
            for (std::size_t i = 1; i < rows_.size(); ++i)
                if (rows_[i] == rows_[i - 1])
                    fail(errc::duplicate_cube, "cube " + rows_[i].to_string() + " appears twice");
    }

    const color_basis& basis() const { return basis_; }
    const std::vector<cube_type>& rows() const { return rows_; }
    const cube_type& row(std::size_t i) const { return rows_[i]; }
    std::size_t size() const { return rows_.size(); }
    bool allow_repeats() const { return allow_repeats_; }

    friend bool operator==(const puzzle& a, const puzzle& b) {
        return a.basis_ == b.basis_ && a.rows_ == b.rows_;
    }
    friend auto operator<=>(const puzzle& a, const puzzle& b) { return a.rows_ <=> b.rows_; }

private:
    color_basis basis_;
    std::vector<cube_type> rows_;
    bool allow_repeats_;
};

inline puzzle canonicalize_puzzle(const color_basis& basis, std::vector<cube_type> rows,
                                  bool allow_repeats = false) {
    return puzzle(basis, std::move(rows), allow_repeats);
}

// Renames color i to perm[i] everywhere (perm must be a permutation of the
// color indices). Relabeling commutes with canonicalization, which the
// property tests lean on.
inline puzzle relabel_colors(const puzzle& p, const std::vector<std::uint8_t>& perm) {
    if (perm.size() != p.basis().size()) fail(errc::length_mismatch, "permutation size mismatch");
    std::vector<cube_type> rows;
    rows.reserve(p.size());
    for (const cube_type& r : p.rows())
        rows.emplace_back(pair_product::of(p.basis(), perm[r.pair(0).lo()], perm[r.pair(0).hi()]),
                          pair_product::of(p.basis(), perm[r.pair(1).lo()], perm[r.pair(1).hi()]),
                          pair_product::of(p.basis(), perm[r.pair(2).lo()], perm[r.pair(2).hi()]));
    return puzzle(p.basis(), std::move(rows), p.allow_repeats());
}

} // namespace insanity
