#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "insanity/cli.hpp"

using namespace insanity;

namespace {

struct cli_result {
    int code = -1;
    std::string out;
    std::string err;
};

cli_result run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    cli_result r;
    r.code = run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::size_t line_count(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

std::string write_temp(const std::string& name, const std::string& text) {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / name;
    std::ofstream f(path);
    f << text;
    return path.string();
}

const std::string b6_csv = "n,solutions,puzzles\n6,0,3525\n6,3,1260\n6,6,120\n6,18,100\n";

} // namespace

TEST_CASE("cubes lists the type table") {
    const cli_result six = run_cli({"cubes", "-n", "6"});
    CHECK(six.code == 0);
    CHECK(six.err.empty());
    CHECK(line_count(six.out) == 15);
    CHECK(six.out.starts_with("6 35 143\n"));

    const cli_result four = run_cli({"cubes"});
    CHECK(four.code == 0);
    CHECK(line_count(four.out) == 52);
    CHECK(four.out.starts_with("4 6 35\n"));
}

TEST_CASE("solve reports the worked example") {
    const cli_result r = run_cli({"solve", testutil::data_path("instant-insanity.puzzle")});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.find("partial solutions: 3") != std::string::npos);
    CHECK(r.out.find("solutions: 1") != std::string::npos);
    CHECK(r.out.find("symmetry factor: 192") != std::string::npos);

    const cli_result l3 =
        run_cli({"solve", "-l", "3", testutil::data_path("instant-insanity.puzzle")});
    CHECK(l3.code == 0);
    CHECK(l3.out.find("solution sets (l=3): 0") != std::string::npos);
}

TEST_CASE("solve distinguishes domain errors from usage errors") {
    const cli_result missing = run_cli({"solve", "/no/such/file.puzzle"});
    CHECK(missing.code == 2);
    CHECK(missing.out.empty());
    CHECK_FALSE(missing.err.empty());

    const std::string dup = write_temp("insanity-cli-dup.puzzle",
                                       "colors: 2 3 5 7\npairs: 6 10 35\npairs: 6 10 35\n"
                                       "pairs: 9 14 35\npairs: 14 15 25\n");
    const cli_result rejected = run_cli({"solve", dup});
    CHECK(rejected.code == 1);
    CHECK(rejected.err.find("twice") != std::string::npos);
    const cli_result allowed = run_cli({"solve", "--allow-repeats", dup});
    CHECK(allowed.code == 0);

    const std::string improper = write_temp("insanity-cli-improper.puzzle",
                                            "colors: 2 3 5 7\npairs: 4 6 9\npairs: 6 10 35\n"
                                            "pairs: 9 14 35\npairs: 14 15 25\n");
    CHECK(run_cli({"solve", improper}).code == 1);

    CHECK(run_cli({"solve"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"cubes", "-n", "12"}).code == 2);
    CHECK(run_cli({"cubes", "--no-such-flag"}).code == 2);

    const cli_result help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("Usage") != std::string::npos);
}

TEST_CASE("census prints or writes deterministic csv") {
    const cli_result six = run_cli({"census", "-n", "6", "--threads", "1"});
    CHECK(six.code == 0);
    CHECK(six.out == b6_csv);

    const cli_result threaded = run_cli({"census", "-n", "6", "--threads", "3"});
    CHECK(threaded.out == six.out);

    namespace fs = std::filesystem;
    const fs::path csv = fs::temp_directory_path() / "insanity-cli-census.csv";
    fs::remove(csv);
    const cli_result filed =
        run_cli({"census", "-n", "6", "--threads", "2", "--csv", csv.string()});
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    std::ifstream in(csv);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == b6_csv);
    fs::remove(csv);

    CHECK(run_cli({"census", "--csv", "/no/such/dir/out.csv"}).code == 2);
}

TEST_CASE("census writes witness files on request") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "insanity-cli-witness";
    fs::remove_all(dir);
    const cli_result r = run_cli({"census", "-n", "6", "--witnesses", dir.string()});
    CHECK(r.code == 0);
    for (int count : {0, 3, 6, 18})
        CHECK(fs::exists(dir / ("witness-" + std::to_string(count) + ".puzzle")));
    const puzzle_file f = load_puzzle_file((dir / "witness-18.puzzle").string());
    CHECK(count_solutions(to_puzzle(f)) == 18);
    fs::remove_all(dir);
}

TEST_CASE("the thread environment variable is honored") {
    setenv("INSANITY_THREADS", "3", 1);
    const cli_result env = run_cli({"census", "-n", "6"});
    unsetenv("INSANITY_THREADS");
    CHECK(env.code == 0);
    CHECK(env.out == b6_csv);

    setenv("INSANITY_THREADS", "nope", 1);
    const cli_result bad = run_cli({"census", "-n", "6"});
    unsetenv("INSANITY_THREADS");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("INSANITY_THREADS") != std::string::npos);
}

TEST_CASE("block solves net files and rejects pairs files") {
    const cli_result raw = run_cli({"block", testutil::data_path("mutando.puzzle")});
    CHECK(raw.code == 0);
    CHECK(raw.out.starts_with("placements: 8\n"));

    const cli_result deduped =
        run_cli({"block", "--dedupe", testutil::data_path("mutando.puzzle")});
    CHECK(deduped.code == 0);
    CHECK(deduped.out.starts_with("placements: 1\n"));

    const std::string pairs = write_temp("insanity-cli-pairs.puzzle",
                                         "colors: 2 3 5 7\npairs: 6 10 35\npairs: 6 14 15\n"
                                         "pairs: 9 14 35\npairs: 14 15 25\n");
    const cli_result rejected = run_cli({"block", pairs});
    CHECK(rejected.code == 2);
    CHECK(rejected.err.find("net") != std::string::npos);
}

TEST_CASE("the joint search subcommand summarizes every hit") {
    const cli_result r = run_cli({"mutando", "--threads", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.starts_with("hits: 70422\n"));
    CHECK(r.out.find("hit 0: tower solutions 1, block placements 96, block classes 24") !=
          std::string::npos);
    CHECK(run_cli({"mutando", "-n", "5"}).code == 2);
}

TEST_CASE("render round-trips through the parser") {
    const cli_result r = run_cli({"render", testutil::data_path("instant-insanity.puzzle")});
    CHECK(r.code == 0);
    CHECK(r.out.find("# cube 0") != std::string::npos);

    std::istringstream back(r.out);
    const puzzle_file reparsed = read_puzzle_file(back);
    const puzzle_file original =
        load_puzzle_file(testutil::data_path("instant-insanity.puzzle"));
    CHECK(to_puzzle(reparsed) == to_puzzle(original));
    REQUIRE(reparsed.colorings.size() == original.colorings.size());
    for (std::size_t i = 0; i < reparsed.colorings.size(); ++i)
        CHECK(*reparsed.colorings[i] == *original.colorings[i]);
}
