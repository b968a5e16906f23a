/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// End-to-end tests of the command line tool: exit codes (0 verdict holds,
// 1 verdict fails with a certificate on stdout, 2 usage or input trouble)
// and the machine-readable certificate lines.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "sctree/fixtures.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

const fs::path& temp_dir() {
    struct Dir {
        fs::path p;
        Dir() {
            p = fs::temp_directory_path() /
                ("sctree-cli-" + std::to_string(static_cast<long>(::getpid())));
            fs::create_directories(p);
        }
        ~Dir() {
            std::error_code ec;
            fs::remove_all(p, ec);
        }
    };
    static Dir dir;
    return dir.p;
}

std::string temp_file(const std::string& name) { return (temp_dir() / name).string(); }

std::string data_file(const std::string& name) {
    return (fs::path(SCTREE_DATA_DIR) / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

CliResult run_cli(const std::string& args) {
    static int call = 0;
    std::string out_path = temp_file("out" + std::to_string(call) + ".txt");
    std::string err_path = temp_file("err" + std::to_string(call) + ".txt");
    ++call;
    std::string cmd =
        std::string(SCTREE_CLI_PATH) + " " + args + " >'" + out_path + "' 2>'" + err_path + "'";
    int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("check-order accepts the reference strong order") {
    auto r = run_cli("check-order --graph '" + data_file("fig1.gr") +
                     "' --order a,b,c,w,x,y,z --strong");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
}

TEST_CASE("check-order rejects the bottom-up order with the violating quadruple") {
    auto r =
        run_cli("check-order --graph '" + data_file("fig3.gr") + "' --order i,j,k,l --strong");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "quadruple: 1,2,3,4"));
    CHECK(contains(r.out, "labels: i,j,k,l"));
}

TEST_CASE("the rejected strong order is still a perfect elimination order") {
    auto r =
        run_cli("check-order --graph '" + data_file("fig3.gr") + "' --order i,j,k,l --perfect");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
}

TEST_CASE("recognize by brute force exhausts all orders of a sun") {
    auto r = run_cli("recognize --graph '" + data_file("sun3.gr") + "' --method bruteforce");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "exhausted: 720"));
}

TEST_CASE("recognize by greedy elimination reports the stuck residue") {
    auto r = run_cli("recognize --graph '" + data_file("sun3.gr") + "' --method greedy");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "stuck: "));
}

TEST_CASE("recognize by definition certifies with an even cycle lacking an odd chord") {
    auto r = run_cli("recognize --graph '" + data_file("sun3.gr") + "' --method definition");
    CHECK(r.exit_code == 1);
    std::string line = first_line(r.out);
    CHECK(contains(line, "cycle: "));
    // Three rim and three inner vertices.
    CHECK(std::count(line.begin(), line.end(), ',') == 5);
}

TEST_CASE("build, extract, and re-check round trip on the worked example") {
    std::string rep = temp_file("fig1_built.rep");
    auto built = run_cli("build-rep --graph '" + data_file("fig1.gr") +
                         "' --order a,b,c,w,x,y,z --out '" + rep + "'");
    REQUIRE(built.exit_code == 0);

    auto extracted = run_cli("extract-order --rep '" + rep + "'");
    REQUIRE(extracted.exit_code == 0);
    std::string order = first_line(extracted.out);
    CHECK(!order.empty());

    auto rechecked = run_cli("check-order --graph '" + data_file("fig1.gr") + "' --order " +
                             order + " --strong");
    CHECK(rechecked.exit_code == 0);

    auto verified =
        run_cli("verify-rep --rep '" + rep + "' --graph '" + data_file("fig1.gr") + "'");
    CHECK(verified.exit_code == 0);
}

TEST_CASE("recognition output feeds back through the pipeline") {
    // The greedy sequence is only a simple elimination order (the bottom-up
    // counterexample shows those can fail the strong test); the brute-force
    // certificate is a strong order, so it survives the round trip.
    auto greedy = run_cli("recognize --graph '" + data_file("fig3.gr") + "' --method greedy");
    REQUIRE(greedy.exit_code == 0);
    REQUIRE(contains(first_line(greedy.out), "sequence: "));

    auto recognized =
        run_cli("recognize --graph '" + data_file("fig3.gr") + "' --method bruteforce");
    REQUIRE(recognized.exit_code == 0);
    std::string line = first_line(recognized.out);
    REQUIRE(contains(line, "order: "));
    std::string order = line.substr(std::string("order: ").size());

    std::string rep = temp_file("fig3_built.rep");
    auto built = run_cli("build-rep --graph '" + data_file("fig3.gr") + "' --order " + order +
                         " --out '" + rep + "'");
    REQUIRE(built.exit_code == 0);
    auto extracted = run_cli("extract-order --rep '" + rep + "'");
    REQUIRE(extracted.exit_code == 0);
    auto rechecked = run_cli("check-order --graph '" + data_file("fig3.gr") + "' --order " +
                             first_line(extracted.out) + " --strong");
    CHECK(rechecked.exit_code == 0);
}

TEST_CASE("build-rep refuses an order that fails the strong test") {
    std::string rep = temp_file("fig3_refused.rep");
    auto r = run_cli("build-rep --graph '" + data_file("fig3.gr") + "' --order i,j,k,l --out '" +
                     rep + "'");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "quadruple: 1,2,3,4"));
    CHECK(!fs::exists(rep));
}

TEST_CASE("unit-weight construction from a perfect order can break compatibility") {
    std::string rep = temp_file("fig3_unit.rep");
    auto built = run_cli("build-rep --graph '" + data_file("fig3.gr") +
                         "' --order i,j,k,l --unit-weights --out '" + rep + "'");
    REQUIRE(built.exit_code == 0);

    // Both directions of (k,l) fail, so extraction must report a cycle and
    // verification must name the pair with its witnesses.
    auto extracted = run_cli("extract-order --rep '" + rep + "'");
    CHECK(extracted.exit_code == 1);
    CHECK(contains(extracted.out, "cycle: k,l"));

    auto verified = run_cli("verify-rep --rep '" + rep + "'");
    CHECK(verified.exit_code == 1);
    CHECK(contains(verified.out, "pair: k,l"));
    CHECK(contains(verified.out, "cutoff: 2"));
    CHECK(contains(verified.out, "witness: l"));
    CHECK(contains(verified.out, "witness: j"));
}

TEST_CASE("extract-order reports the two-vertex mutual failure cycle") {
    std::string rep = temp_file("mutual.rep");
    spit(rep, sct::fixtures::mutual_failure_representation_text());
    auto r = run_cli("extract-order --rep '" + rep + "'");
    CHECK(r.exit_code == 1);
    CHECK(first_line(r.out) == "cycle: v,w");
}

TEST_CASE("subdivision preserves the graph, breaks compatibility, and verify-rep certifies it") {
    std::string rep = temp_file("fig1_subdivided.rep");
    auto sub = run_cli("subdivide --rep '" + data_file("fig1.rep") +
                       "' --policy extend-none --out '" + rep + "'");
    REQUIRE(sub.exit_code == 0);
    CHECK(contains(sub.out, "intersection-preserved: yes"));
    CHECK(contains(sub.out, "compatible: no"));
    CHECK(contains(sub.out, "pair: x,y"));

    auto graph_check =
        run_cli("verify-rep --rep '" + rep + "' --graph '" + data_file("fig1.gr") + "'");
    CHECK(graph_check.exit_code == 1);  // incompatibility precedes graph equality
    CHECK(contains(graph_check.out, "pair: "));
    CHECK(contains(graph_check.out, "cutoff: "));
    CHECK(contains(graph_check.out, "witness: "));
}

TEST_CASE("generated downward-path instances verify and extract cleanly") {
    std::string rep = temp_file("gen.rep");
    std::string manifest = temp_file("gen_manifest.tsv");
    auto gen = run_cli("generate --kind rdv --seed 5 --nodes 6 --verts 8 --max-weight 3 --out '" +
                       rep + "' --manifest '" + manifest + "'");
    REQUIRE(gen.exit_code == 0);
    std::string tsv = slurp(manifest);
    CHECK(contains(tsv, "kind\tparams\tseed\tfile\tcompatible\tstrongly-chordal"));
    CHECK(contains(tsv, "rdv\tnodes=6,verts=8,max-weight=3\t5\t"));
    CHECK(contains(tsv, "\tyes\tyes"));

    CHECK(run_cli("verify-rep --rep '" + rep + "'").exit_code == 0);
    CHECK(run_cli("extract-order --rep '" + rep + "'").exit_code == 0);
}

TEST_CASE("generated suns are recognized as not strongly chordal") {
    std::string graph = temp_file("sun4.gr");
    auto gen = run_cli("generate --kind sun --k 4 --out '" + graph + "'");
    REQUIRE(gen.exit_code == 0);
    auto r = run_cli("recognize --graph '" + graph + "' --method greedy");
    CHECK(r.exit_code == 1);
}

TEST_CASE("selftest passes") {
    CHECK(run_cli("selftest").exit_code == 0);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").exit_code == 2);  // a subcommand is required
    CHECK(run_cli("check-order --graph '" + data_file("fig1.gr") + "'").exit_code == 2);
    CHECK(run_cli("check-order --graph '" + data_file("fig1.gr") +
                  "' --order a --strong --bogus-flag")
              .exit_code == 2);
    CHECK(run_cli("recognize --graph '" + data_file("sun3.gr") + "' --method sorcery").exit_code ==
          2);
}

TEST_CASE("input errors exit with code 2 and a stderr diagnostic") {
    auto missing = run_cli("check-order --graph '" + temp_file("no-such-file.gr") +
                           "' --order a --strong");
    CHECK(missing.exit_code == 2);
    CHECK(contains(missing.err, "error: "));

    std::string garbage = temp_file("garbage.gr");
    spit(garbage, "this is not a graph\n");
    auto malformed = run_cli("check-order --graph '" + garbage + "' --order a --strong");
    CHECK(malformed.exit_code == 2);
    CHECK(contains(malformed.err, "error: "));

    auto not_permutation = run_cli("check-order --graph '" + data_file("fig1.gr") +
                                   "' --order a,a,b,c,w,x,y --strong");
    CHECK(not_permutation.exit_code == 2);
    CHECK(contains(not_permutation.err, "error: "));
}
