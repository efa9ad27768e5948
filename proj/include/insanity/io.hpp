#pragma once

// Text formats. A puzzle file is ASCII lines:
//
//   # comment
//   colors: 2 3 5 7
//   net: 3 5 5 5 7 2        (cells s1 s2 s3 s4 left right)
//   pairs: 14 25 15         (three opposite-face products)
//
// one colors line first, then one net/pairs line per cube, in any mix.
// Reports and the census CSV are plain deterministic text: same input and
// options, same bytes.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "insanity/block.hpp"
#include "insanity/coloring.hpp"
#include "insanity/enumerate.hpp"
#include "insanity/puzzle.hpp"
#include "insanity/tower.hpp"

namespace insanity {

// Parsed puzzle file: every row has a cube type; rows given as nets keep
// their coloring too (pairs lines carry no orientation information).
struct puzzle_file {
    color_basis basis;
    std::vector<cube_type> rows;
    std::vector<std::optional<cube_coloring>> colorings;

    bool all_nets() const {
        for (const auto& c : colorings)
            if (!c) return false;
        return true;
    }

    // Colorings for every row: rows given as pairs fall back to the first
    // expanded coloring of their type.
    std::vector<cube_coloring> realize_colorings() const {
        std::vector<cube_coloring> out;
        out.reserve(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            out.push_back(colorings[i] ? *colorings[i] : expand_colorings(rows[i], basis).at(0));
        return out;
    }
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline std::uint64_t parse_uint(const std::string& tok, int line_no) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    const bool digits = !tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos;
    if (digits) {
        try {
            v = std::stoull(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
    }
    if (!digits || used != tok.size())
        fail(errc::parse_error, "line " + std::to_string(line_no) + ": '" + tok +
                                    "' is not an unsigned integer");
    return v;
}

} // namespace detail

inline puzzle_file read_puzzle_file(std::istream& in) {
    std::optional<color_basis> basis;
    std::vector<cube_type> rows;
    std::vector<std::optional<cube_coloring>> colorings;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        const std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            fail(errc::parse_error, "line " + std::to_string(line_no) + ": expected 'keyword: ...'");
        const std::string keyword = line.substr(first, colon - first);
        std::vector<std::string> toks = detail::split_ws(line.substr(colon + 1));

        if (keyword == "colors") {
            if (basis) fail(errc::parse_error, "line " + std::to_string(line_no) +
                                                   ": duplicate colors line");
            std::vector<std::uint32_t> primes;
            for (const std::string& t : toks)
                primes.push_back(static_cast<std::uint32_t>(detail::parse_uint(t, line_no)));
            basis.emplace(std::move(primes));
            continue;
        }
        if (!basis)
            fail(errc::parse_error, "line " + std::to_string(line_no) +
                                        ": the colors line must come first");
        if (keyword == "net") {
            if (toks.size() != num_faces)
                fail(errc::parse_error, "line " + std::to_string(line_no) +
                                            ": a net has six cells");
            net n;
            for (int i = 0; i < num_faces; ++i)
                n.cells[i] = static_cast<std::uint32_t>(detail::parse_uint(toks[i], line_no));
            const cube_coloring c = net_to_coloring(n, *basis);
            rows.push_back(coloring_to_cube_type(c, *basis));
            colorings.emplace_back(c);
        } else if (keyword == "pairs") {
            if (toks.size() != 3)
                fail(errc::parse_error, "line " + std::to_string(line_no) +
                                            ": a pairs line has three products");
            rows.push_back(cube_type_from_values(*basis, detail::parse_uint(toks[0], line_no),
                                                 detail::parse_uint(toks[1], line_no),
                                                 detail::parse_uint(toks[2], line_no)));
            colorings.emplace_back(std::nullopt);
        } else {
            fail(errc::parse_error, "line " + std::to_string(line_no) + ": unknown keyword '" +
                                        keyword + "'");
        }
    }
    if (!basis) fail(errc::parse_error, "missing colors line");
    return puzzle_file{std::move(*basis), std::move(rows), std::move(colorings)};
}

inline puzzle_file load_puzzle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open " + path);
    return read_puzzle_file(in);
}

inline puzzle to_puzzle(const puzzle_file& f, bool allow_repeats = false) {
    return puzzle(f.basis, f.rows, allow_repeats);
}

inline void write_colors_line(const color_basis& basis, std::ostream& out) {
    out << "colors:";
    for (std::uint32_t p : basis.primes()) out << ' ' << p;
    out << '\n';
}

inline void write_pairs_file(const puzzle& p, std::ostream& out) {
    write_colors_line(p.basis(), out);
    for (const cube_type& r : p.rows()) {
        out << "pairs:";
        for (const pair_product& pp : r.pairs()) out << ' ' << pp.value();
        out << '\n';
    }
}

// One cube's unfolded cross as '#' comment lines, labels right-aligned in
// three-character cells.
inline void write_net_art(const net& n, std::ostream& out) {
    auto cell = [](std::uint32_t v) {
        std::string s = std::to_string(v);
        while (s.size() < 3) s.insert(s.begin(), ' ');
        return s;
    };
    const std::string gap(4, ' ');
    out << "#     " << gap << "+---+\n";
    out << "#     " << gap << "|" << cell(n.cells[3]) << "|\n";
    out << "#     +---+---+---+\n";
    out << "#     |" << cell(n.cells[4]) << "|" << cell(n.cells[2]) << "|" << cell(n.cells[5])
        << "|\n";
    out << "#     +---+---+---+\n";
    out << "#     " << gap << "|" << cell(n.cells[1]) << "|\n";
    out << "#     " << gap << "+---+\n";
    out << "#     " << gap << "|" << cell(n.cells[0]) << "|\n";
    out << "#     " << gap << "+---+\n";
}

// Writes a parseable puzzle file of net lines; with art, each net line is
// preceded by its unfolded picture in comments.
inline void write_nets_file(const color_basis& basis, const std::vector<cube_coloring>& cubes,
                            std::ostream& out, bool art = false) {
    write_colors_line(basis, out);
    for (std::size_t i = 0; i < cubes.size(); ++i) {
        const net n = to_net(cubes[i], basis);
        if (art) {
            out << "#\n# cube " << i << "\n";
            write_net_art(n, out);
        }
        out << "net:";
        for (std::uint32_t cell : n.cells) out << ' ' << cell;
        out << '\n';
    }
}

// Tower report: the canonical puzzle, the magic number, every partial
// solution (column picks are 0-based, rows in canonical order), the
// solution sets of size l, and the symmetry factor.
inline void write_solve_report(const puzzle& p, int l, std::ostream& out) {
    write_colors_line(p.basis(), out);
    out << "cubes:\n";
    for (const cube_type& r : p.rows()) {
        out << " ";
        for (const pair_product& pp : r.pairs()) out << ' ' << pp.value();
        out << '\n';
    }
    out << "magic number: " << magic_value(p.basis()) << '\n';

    const std::vector<partial_solution> v = partial_solutions(p);
    out << "partial solutions: " << v.size() << '\n';
    if (!v.empty())
        out << "  (column picks are 0-based; add 1 for the 1-based (cube, column) notation)\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out << "  v" << i << ": cols";
        for (std::uint8_t c : v[i].cols) out << ' ' << int(c);
        out << '\n';
    }

    const std::vector<solution_set> sets = solution_sets(p, l);
    if (l == 2)
        out << "solutions: " << sets.size() << '\n';
    else
        out << "solution sets (l=" << l << "): " << sets.size() << '\n';
    for (const solution_set& s : sets) {
        out << " ";
        for (const partial_solution& m : s.members) {
            const auto it = std::find(v.begin(), v.end(), m);
            out << " v" << (it - v.begin());
        }
        out << '\n';
    }
    out << "symmetry factor: " << symmetry_factor(static_cast<int>(p.size())) << '\n';
}

inline void write_block_report(const color_basis& basis, const std::vector<cube_coloring>& cubes,
                               const std::vector<block_placement>& placements,
                               std::ostream& out) {
    out << "placements: " << placements.size() << '\n';
    for (std::size_t i = 0; i < placements.size(); ++i) {
        const block_placement& bp = placements[i];
        out << "  [" << i << "] cubes";
        for (std::uint8_t c : bp.cube) out << ' ' << int(c);
        out << "  rot";
        for (std::uint8_t r : bp.rot) out << ' ' << int(r);
        const std::array<std::uint8_t, num_faces> faces = block_faces(cubes, bp);
        out << "  faces";
        for (int f = 0; f < num_faces; ++f)
            out << ' ' << face_name(f) << '=' << basis.prime(faces[f]);
        out << '\n';
    }
}

inline void write_census_csv(const census_result& r, std::ostream& out) {
    out << "n,solutions,puzzles\n";
    for (const auto& [count, puzzles] : r.histogram())
        out << r.basis().size() << ',' << count << ',' << puzzles << '\n';
}

// One pairs-format file per occurring count: <dir>/witness-<count>.puzzle.
inline void write_witness_files(const census_result& r, const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& [count, idx] : r.witness_indices()) {
        const std::string path = dir + "/witness-" + std::to_string(count) + ".puzzle";
        std::ofstream out(path);
        if (!out) fail(errc::parse_error, "cannot write " + path);
        out << "# first puzzle with " << count << " solutions, of "
            << r.histogram().at(count) << '\n';
        write_pairs_file(r.witness(count), out);
    }
}

} // namespace insanity
