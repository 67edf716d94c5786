#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct CommandResult {
    int exit_code = -1;
    std::string output;
    std::string error;
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "strkern_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

CommandResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path out = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
    fs::path err = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    std::string command = std::string(STRKERN_CLI_PATH) + " " + args + " > " + out.string() + " 2> " +
                          err.string() + " < /dev/null";
    int status = std::system(command.c_str());
    CommandResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.output = read_file(out);
    result.error = read_file(err);
    return result;
}

}  // namespace

TEST_CASE("kernelize emits the reduced instance") {
    fs::path input = scratch_dir() / "star.hs";
    write_file(input, "p hs 2 1 4\ns 0 1\ns 0 2\ns 0 3\n");
    auto result = run_cli("kernelize --problem hs " + input.string());
    CHECK(result.exit_code == 0);
    CHECK(result.error.empty());
    CHECK(result.output == "c kernel bits=72 verdict=REDUCED\np hs 2 1 3\ns 0 1\ns 0 2\n");
}

TEST_CASE("identical runs produce byte-identical output") {
    fs::path input = scratch_dir() / "repeat.hs";
    write_file(input, "p hs 3 2 9\ns 0 1 2\ns 0 3 4\ns 5\ns 5\ns 2 8\n");
    auto first = run_cli("kernelize --problem hs --stats " + input.string());
    auto second = run_cli("kernelize --problem hs --stats " + input.string());
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(first.output.find("c stats stored_sets=") != std::string::npos);
}

TEST_CASE("parse errors exit with code 2") {
    fs::path input = scratch_dir() / "broken.hs";
    write_file(input, "p hs 2 1 4\ns 0 0\n");
    auto result = run_cli("kernelize --problem hs " + input.string());
    CHECK(result.exit_code == 2);
    CHECK(result.output.empty());
    CHECK(result.error.find("line 2") != std::string::npos);
}

TEST_CASE("pass budget violations exit with code 3") {
    fs::path input = scratch_dir() / "two_edges.eds";
    write_file(input, "p eds 1 4\ne 0 1\ne 2 3\n");
    auto result = run_cli("kernelize --problem eds --max-passes 1 " + input.string());
    CHECK(result.exit_code == 3);
}

TEST_CASE("eds kernelize emits a NO verdict line at k=0") {
    fs::path input = scratch_dir() / "one_edge.eds";
    write_file(input, "p eds 0 2\ne 0 1\n");
    auto result = run_cli("kernelize --problem eds " + input.string());
    CHECK(result.exit_code == 0);
    CHECK(result.output == "c kernel bits=64 verdict=NO\n");
}

TEST_CASE("eds kernel pipes into solve") {
    fs::path input = scratch_dir() / "star_probe.eds";
    write_file(input, "p eds 1 6\ne 4 0\ne 4 1\ne 4 2\ne 4 3\ne 5 0\n");
    auto kernel = run_cli("kernelize --problem eds " + input.string());
    CHECK(kernel.exit_code == 0);
    CHECK(kernel.output == "c kernel bits=88 verdict=REDUCED\np eds 1 5\ne 0 1\ne 1 2\ne 1 3\ne 0 4\n");

    fs::path kernel_file = scratch_dir() / "star_probe.kernel";
    write_file(kernel_file, kernel.output);
    auto solved = run_cli("solve --problem eds " + kernel_file.string());
    CHECK(solved.exit_code == 0);
    CHECK(solved.output == "YES\n");
    // matches the answer on the full instance
    auto full = run_cli("solve --problem eds " + input.string());
    CHECK(full.output == "YES\n");
}

TEST_CASE("problem tag mismatches are configuration errors") {
    fs::path input = scratch_dir() / "tagged.hs";
    write_file(input, "p hs 2 1 4\ns 0 1\n");
    auto result = run_cli("kernelize --problem sm " + input.string());
    CHECK(result.exit_code == 2);
}

TEST_CASE("solve handles predicates") {
    fs::path path_graph = scratch_dir() / "path.eds";
    write_file(path_graph, "p eds 0 4\ne 0 1\ne 1 2\ne 2 3\n");
    CHECK(run_cli("solve --problem predicate:is_forest " + path_graph.string()).output == "YES\n");
    CHECK(run_cli("solve --problem predicate:is_cluster_graph " + path_graph.string()).output == "NO\n");
    CHECK(run_cli("solve --problem predicate:has_star --s 2 " + path_graph.string()).output == "YES\n");
    CHECK(run_cli("solve --problem predicate:has_star --s 3 " + path_graph.string()).output == "NO\n");

    fs::path c5 = scratch_dir() / "c5.eds";
    write_file(c5, "p eds 0 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 0 4\n");
    // the two chordality readings split on the five-cycle
    CHECK(run_cli("solve --problem predicate:is_chordal --chordal c4 " + c5.string()).output == "YES\n");
    CHECK(run_cli("solve --problem predicate:is_chordal --chordal standard " + c5.string()).output ==
          "NO\n");
    auto both = run_cli("solve --problem predicate:is_chordal --chordal both " + c5.string());
    CHECK(both.exit_code == 1);
    CHECK(both.output == "c4=YES standard=NO\n");

    fs::path bipartite = scratch_dir() / "bcn.eds";
    write_file(bipartite, "p eds 1 4\ne 0 1\ne 0 3\n");
    CHECK(run_cli("solve --problem predicate:has_colorful_neighborhood " + bipartite.string()).output ==
          "YES\n");
}

TEST_CASE("gen eds-star round trips through solve") {
    auto hit = run_cli("gen --family eds-star --n 4 --leaves 0,2 --probe 2");
    CHECK(hit.exit_code == 0);
    fs::path hit_file = scratch_dir() / "gen_hit.eds";
    write_file(hit_file, hit.output);
    CHECK(run_cli("solve --problem eds " + hit_file.string()).output == "YES\n");

    auto miss = run_cli("gen --family eds-star --n 4 --leaves 0,2 --probe fresh");
    fs::path miss_file = scratch_dir() / "gen_miss.eds";
    write_file(miss_file, miss.output);
    CHECK(run_cli("solve --problem eds " + miss_file.string()).output == "NO\n");
}

TEST_CASE("gen obstruction output is parseable and annotated") {
    auto result = run_cli("gen --family obstruction:cluster-editing --m 3");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("c obstruction problem=cluster-editing m=3 c=1 k=0 polarity=notinf\n") == 0);
    CHECK(result.output.find("p eds 0 7\n") != std::string::npos);
    CHECK(result.output.find("c remainder 0 1 6\n") != std::string::npos);
}

TEST_CASE("verification subcommands succeed on the shipped constructions") {
    CHECK(run_cli("verify-kernel --problem hs --trials 25 --seed 7").exit_code == 0);
    CHECK(run_cli("verify-kernel --problem sm --trials 25 --seed 7").exit_code == 0);
    CHECK(run_cli("verify-kernel --problem eds --trials 25 --seed 7").exit_code == 0);
    CHECK(run_cli("verify-obstruction --problem min-fill-in --m 4").exit_code == 0);
    CHECK(run_cli("verify-obstruction --problem star-packing --m 3 --s 3").exit_code == 0);
    auto fooling = run_cli("verify-fooling --game ce --nprime 3");
    CHECK(fooling.exit_code == 0);
    CHECK(fooling.output.find("members=8 pairs=28 ok") != std::string::npos);
    CHECK(run_cli("verify-fooling --game mfi --nprime 3").exit_code == 0);
}

TEST_CASE("dump-trie lists every subset with its count") {
    fs::path input = scratch_dir() / "dump.hs";
    write_file(input, "p hs 2 1 4\ns 0 1\n");
    auto result = run_cli("kernelize --problem hs --dump-trie " + input.string());
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("c trie count=1\n") != std::string::npos);      // root = {}
    CHECK(result.output.find("c trie 0 count=1\n") != std::string::npos);
    CHECK(result.output.find("c trie 0 1 count=1\n") != std::string::npos);
    CHECK(result.output.find("c trie 1 count=1\n") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("kernelize").exit_code == 2);          // missing --problem
    CHECK(run_cli("frobnicate").exit_code == 2);         // unknown subcommand
    CHECK(run_cli("solve --problem nope /dev/null").exit_code == 2);
}
