#pragma once

// Command-line front end. run() is the whole program minus process setup so
// the tests can drive it with captured streams. Data goes to out, messages
// to err; exit code 0 = success, 1 = domain error, 2 = usage or file syntax.

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "insanity/block.hpp"
#include "insanity/enumerate.hpp"
#include "insanity/io.hpp"
#include "insanity/puzzle.hpp"
#include "insanity/tower.hpp"

namespace insanity {

namespace detail {

inline unsigned default_threads() {
    if (const char* env = std::getenv("INSANITY_THREADS")) {
        const std::string s(env);
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || v == 0)
            fail(errc::parse_error, "INSANITY_THREADS must be a positive integer");
        return static_cast<unsigned>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

} // namespace detail

// args is argv without the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"prime-labeled cube puzzles: towers, censuses, and flat blocks"};
    app.require_subcommand(1);

    int n = 4;
    int l = 2;
    unsigned threads = 0; // 0 = INSANITY_THREADS, then hardware
    bool allow_repeats = false;
    bool dedupe = false;
    std::string file, csv_path, witness_dir;

    const std::string n_desc = "number of colors/cubes (first n primes)";
    const std::string threads_desc = "worker threads (default: INSANITY_THREADS, then hardware)";

    CLI::App* cubes = app.add_subcommand("cubes", "list every proper cube type, one per line");
    cubes->add_option("-n,--colors", n, n_desc)->check(CLI::Range(2, 9));

    CLI::App* solve = app.add_subcommand("solve", "tower-solve a puzzle file");
    solve->add_option("file", file, "puzzle file")->required();
    solve->add_option("-l,--set-size", l, "solution set size")->check(CLI::Range(1, 3));
    solve->add_flag("--allow-repeats", allow_repeats, "accept repeated cubes");

    CLI::App* census_cmd =
        app.add_subcommand("census", "solution-count histogram over every puzzle");
    census_cmd->add_option("-n,--colors", n, n_desc)->check(CLI::Range(2, 9));
    census_cmd->add_option("--threads", threads, threads_desc);
    census_cmd->add_flag("--allow-repeats", allow_repeats, "count multisets of cubes");
    census_cmd->add_option("--csv", csv_path, "write the histogram here instead of stdout");
    census_cmd->add_option("--witnesses", witness_dir, "write one witness puzzle per count");

    CLI::App* block = app.add_subcommand("block", "2x2x1 block-solve a four-cube puzzle file");
    block->add_option("file", file, "puzzle file")->required();
    block->add_flag("--dedupe", dedupe, "collapse placements equal modulo block symmetry");

    CLI::App* mutando =
        app.add_subcommand("mutando", "search four-color cube sets solvable both ways");
    mutando->add_option("-n,--colors", n, "must be 4")->check(CLI::Range(4, 4));
    mutando->add_option("--threads", threads, threads_desc);

    CLI::App* render = app.add_subcommand("render", "print a puzzle as unfolded nets");
    render->add_option("file", file, "puzzle file")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);

        if (app.got_subcommand(cubes)) {
            for (const cube_type& t : enumerate_cube_types(color_basis::standard(n)))
                out << t.pair(0).value() << ' ' << t.pair(1).value() << ' ' << t.pair(2).value()
                    << '\n';
        } else if (app.got_subcommand(solve)) {
            const puzzle p = to_puzzle(load_puzzle_file(file), allow_repeats);
            write_solve_report(p, l, out);
        } else if (app.got_subcommand(census_cmd)) {
            census_options opt;
            opt.allow_repeats = allow_repeats;
            opt.threads = threads == 0 ? detail::default_threads() : threads;
            const census_result r = census(color_basis::standard(n), opt);
            if (csv_path.empty()) {
                write_census_csv(r, out);
            } else {
                std::ofstream f(csv_path);
                if (!f) fail(errc::parse_error, "cannot write " + csv_path);
                write_census_csv(r, f);
            }
            if (!witness_dir.empty()) write_witness_files(r, witness_dir);
        } else if (app.got_subcommand(block)) {
            const puzzle_file pf = load_puzzle_file(file);
            if (!pf.all_nets())
                fail(errc::parse_error,
                     "block solving needs net rows; pairs rows carry no adjacency");
            const std::vector<cube_coloring> cubes_in = pf.realize_colorings();
            const std::vector<block_placement> placements = solve_block(cubes_in, dedupe);
            write_block_report(pf.basis, cubes_in, placements, out);
        } else if (app.got_subcommand(mutando)) {
            const unsigned t = threads == 0 ? detail::default_threads() : threads;
            const std::vector<mutando_hit> hits = mutando_search(color_basis::standard(4), t);
            out << "hits: " << hits.size() << '\n';
            for (std::size_t i = 0; i < hits.size(); ++i) {
                const mutando_hit& h = hits[i];
                out << "hit " << i << ": tower solutions " << h.tower_solutions
                    << ", block placements " << h.block_placements << ", block classes "
                    << h.block_classes << '\n';
                write_nets_file(color_basis::standard(4),
                                {h.cubes.begin(), h.cubes.end()}, out);
            }
        } else if (app.got_subcommand(render)) {
            const puzzle_file pf = load_puzzle_file(file);
            write_nets_file(pf.basis, pf.realize_colorings(), out, true);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == errc::parse_error ? 2 : 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace insanity
