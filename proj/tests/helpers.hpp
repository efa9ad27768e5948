#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "insanity/insanity.hpp"

namespace testutil {

inline std::string data_path(const char* name) {
    return std::string(INSANITY_DATA_DIR "/") + name;
}

inline insanity::puzzle puzzle_from_values(
    const insanity::color_basis& basis,
    std::initializer_list<std::array<std::uint64_t, 3>> rows, bool allow_repeats = false) {
    std::vector<insanity::cube_type> types;
    for (const auto& r : rows)
        types.push_back(insanity::cube_type_from_values(basis, r[0], r[1], r[2]));
    return insanity::puzzle(basis, std::move(types), allow_repeats);
}

} // namespace testutil
