#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "oneplanar/generate.hpp"
#include "oneplanar/io.hpp"
#include "oneplanar/run.hpp"
#include "oneplanar/solver.hpp"

using namespace oneplanar;

namespace {

struct CliResult {
    int code = -1;
    std::string out;  // stdout and stderr interleaved
};

std::string scratch_dir() {
    static std::string dir = [] {
        char tmpl[] = "/tmp/oneplanar_cli_XXXXXX";
        char* d = mkdtemp(tmpl);
        REQUIRE(d != nullptr);
        return std::string(d);
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& body) {
    std::string path = scratch_dir() + "/" + name;
    std::ofstream out(path);
    out << body;
    return path;
}

CliResult run_cli(const std::string& args, const std::string& stdin_path = "/dev/null") {
    std::string cmd =
        std::string(ONEPLANAR_CLI_PATH) + " " + args + " < " + stdin_path + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// First "key: value" occurrence in a text report.
std::string field(const std::string& out, const std::string& key) {
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
    return "";
}

std::string witness_lines(const std::string& out) {
    std::istringstream in(out);
    std::string line, acc;
    while (std::getline(in, line))
        if (line.rfind("cross ", 0) == 0) acc += line + "\n";
    return acc;
}

}  // namespace

TEST_CASE("echo round-trips random graphs byte for byte") {
    std::mt19937 rng(7001);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 2 + rand_below(rng, 14);
        int cap = n * (n - 1) / 2;
        int m = rand_below(rng, cap + 1);
        Graph g = make_random_gnm(n, m, rng());
        std::string text = emit_graph(g);
        std::string path = write_file("echo.graph", text);
        CliResult r = run_cli("echo --input " + path);
        CHECK(r.code == 0);
        CHECK(r.out == text);
        // Same graph through stdin.
        CliResult piped = run_cli("echo", path);
        CHECK(piped.out == text);
    }
}

TEST_CASE("decide verdicts and exit codes") {
    std::string k5 = write_file("k5.graph", emit_graph(make_complete(5)));
    CliResult pos = run_cli("decide --input " + k5);
    CHECK(pos.code == 0);
    CHECK(field(pos.out, "verdict") == "one-planar");
    CHECK(field(pos.out, "crossings") == "1");

    std::string k7 = write_file("k7.graph", emit_graph(make_complete(7)));
    CliResult neg = run_cli("decide --input " + k7 + " --strategy exact");
    CHECK(neg.code == 0);
    CHECK(field(neg.out, "verdict") == "not-one-planar");
    CHECK(field(neg.out, "reason") == "edgeDensity");

    std::string k66 =
        write_file("k66.graph", emit_graph(make_complete_bipartite(6, 6)));
    CliResult over = run_cli("decide --input " + k66 + " --strategy exact --budget 10");
    CHECK(over.code == 2);
    CHECK(field(over.out, "verdict") == "unknown");
}

TEST_CASE("malformed input reports the offending line") {
    std::string bad = write_file("bad.graph", "0 1\n1 2\n0 1\n");
    CliResult dup = run_cli("decide --input " + bad);
    CHECK(dup.code == 1);
    CHECK(dup.out.find("error:") != std::string::npos);
    CHECK(dup.out.find("line 3") != std::string::npos);

    std::string loop = write_file("loop.graph", "# comment\n3 3\n");
    CliResult self = run_cli("echo --input " + loop);
    CHECK(self.code == 1);
    CHECK(self.out.find("line 2") != std::string::npos);

    CliResult missing = run_cli("decide --input " + scratch_dir() + "/nope.graph");
    CHECK(missing.code == 1);
}

TEST_CASE("verify accepts emitted witnesses and rejects corrupted ones") {
    std::string k6 = write_file("k6.graph", emit_graph(make_complete(6)));
    CliResult dec = run_cli("decide --input " + k6 + " --strategy exact --witness");
    REQUIRE(dec.code == 0);
    std::string w = witness_lines(dec.out);
    REQUIRE(!w.empty());
    std::string wpath = write_file("k6.witness", w);
    CliResult ok = run_cli("verify --input " + k6 + " --witness-file " + wpath);
    CHECK(ok.code == 0);
    CHECK(ok.out == "valid\n");

    // Drop one crossing: the leftover planarization keeps a K6 minor.
    std::string clipped = w.substr(w.find('\n') + 1);
    std::string cpath = write_file("k6_clipped.witness", clipped);
    CliResult bad = run_cli("verify --input " + k6 + " --witness-file " + cpath);
    CHECK(bad.code == 1);
    CHECK(bad.out == "invalid\n");
}

TEST_CASE("constraints flow through decide and verify") {
    Graph g5 = make_complete(5);
    std::string k5 = write_file("k5c.graph", emit_graph(g5));
    // Freezing every edge leaves no legal crossing for K5.
    std::string all;
    for (const Edge& e : g5.edges())
        all += "uncrossable " + std::to_string(e.first) + " " +
               std::to_string(e.second) + "\n";
    std::string cs = write_file("k5.cons", all);
    CliResult neg = run_cli("decide --input " + k5 + " --constraints " + cs);
    CHECK(neg.code == 0);
    CHECK(field(neg.out, "verdict") == "not-one-planar");

    std::string badc = write_file("bad.cons", "uncrossable 0 9\n");
    CliResult err = run_cli("decide --input " + k5 + " --constraints " + badc);
    CHECK(err.code == 1);
    CHECK(err.out.find("line 1") != std::string::npos);
}

TEST_CASE("record output is byte-identical across runs") {
    std::mt19937 rng(7002);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 5 + rand_below(rng, 5);
        int cap = std::min(4 * n - 8, n * (n - 1) / 2);
        Graph g = make_random_gnm(n, rand_below(rng, cap + 1), rng());
        std::string path = write_file("rec.graph", emit_graph(g));
        std::string args = "decide --input " + path + " --output record --witness";
        CliResult a = run_cli(args);
        CliResult b = run_cli(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.out.find("\"verdict\"") != std::string::npos);
    }
}

TEST_CASE("strategies agree on graphs where all of them apply") {
    std::mt19937 rng(7003);
    const char* strategies[] = {"auto", "exact", "vc", "cyclomatic"};
    for (int iter = 0; iter < 12; ++iter) {
        Graph g = make_random_with_cover(8 + rand_below(rng, 4), 2, rng());
        std::string path = write_file("agree.graph", emit_graph(g));
        std::string verdict;
        for (const char* s : strategies) {
            CliResult r = run_cli("decide --input " + path + " --strategy " + s);
            REQUIRE(r.code == 0);
            if (verdict.empty())
                verdict = field(r.out, "verdict");
            else
                CHECK(field(r.out, "verdict") == verdict);
        }
    }
}

TEST_CASE("kernel subcommand reports plan shape") {
    std::string path =
        write_file("k28.graph", emit_graph(make_complete_bipartite(2, 8)));
    CliResult vc = run_cli("kernel --input " + path + " --strategy vc");
    CHECK(vc.code == 0);
    CHECK(field(vc.out, "k") == "2");
    CliResult td = run_cli("kernel --input " + path + " --strategy treedepth");
    CHECK(td.code == 0);
    CHECK(field(td.out, "depth") == "3");
    CliResult cy = run_cli("kernel --input " + path + " --strategy cyclomatic");
    CHECK(cy.code == 0);
    CliResult bad = run_cli("kernel --input " + path + " --strategy exact");
    CHECK(bad.code == 1);
}

TEST_CASE("generate matches the in-process generators") {
    CliResult k44 = run_cli("generate --family bipartite --a 4 --b 4");
    CHECK(k44.code == 0);
    CHECK(k44.out == emit_graph(make_complete_bipartite(4, 4)));
    CliResult gnm = run_cli("generate --family gnm --a 9 --b 14 --seed 42");
    CHECK(gnm.out == emit_graph(make_random_gnm(9, 14, 42)));
    CliResult bad = run_cli("generate --family moebius --a 4");
    CHECK(bad.code == 1);
}

TEST_CASE("paranoid flag leaves verdicts unchanged") {
    std::string path =
        write_file("k2_10.graph", emit_graph(make_complete_bipartite(2, 10)));
    CliResult fast = run_cli("decide --input " + path + " --strategy treedepth");
    CliResult slow =
        run_cli("decide --input " + path + " --strategy treedepth --no-td-reject");
    REQUIRE(fast.code == 0);
    REQUIRE(slow.code == 0);
    CHECK(field(fast.out, "verdict") == field(slow.out, "verdict"));
}
