#pragma once

#include <stdexcept>
#include <string>

namespace insanity {

enum class errc {
    bad_basis,
    unknown_color,
    bad_pair_product,
    improper_row,
    duplicate_cube,
    wrong_arity,
    length_mismatch,
    bad_l,
    not_independent,
    not_magic,
    wrong_count,
    parse_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::bad_basis: return "bad_basis";
        case errc::unknown_color: return "unknown_color";
        case errc::bad_pair_product: return "bad_pair_product";
        case errc::improper_row: return "improper_row";
        case errc::duplicate_cube: return "duplicate_cube";
        case errc::wrong_arity: return "wrong_arity";
        case errc::length_mismatch: return "length_mismatch";
        case errc::bad_l: return "bad_l";
        case errc::not_independent: return "not_independent";
        case errc::not_magic: return "not_magic";
        case errc::wrong_count: return "wrong_count";
        case errc::parse_error: return "parse_error";
    }
    return "unknown";
}

// Domain error: parse_error marks malformed input text, everything else a
// semantic violation of the puzzle model.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace insanity
