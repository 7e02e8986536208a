#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "conserv/cli.hpp"

using namespace conserv;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kExample1 = std::string(CONSERV_SOURCE_DIR) + "/scenarios/example1.scn";

}  // namespace

TEST_CASE("update prints the conservative posterior") {
    const Run r = run({"update", "--scenario", kExample1, "--event", "r", "--delta", "0.5"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("P(R)\t0.625\t0.8\t0.7125") != std::string::npos);
    CHECK(r.out.find("Rr\t0.5\t0.8\t0.65") != std::string::npos);
}

TEST_CASE("builtin scenarios need no file") {
    const Run r = run({"update", "--scenario", "builtin:example1", "--event", "r"});
    CHECK(r.code == kExitOk);
    // The scenario stores delta(r) = 1/4.
    CHECK(r.out.find("P(R)\t0.625\t0.8\t0.75625") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"update"}).code == kExitUsage);
    CHECK(run({"update", "--scenario", kExample1, "--event", "r", "--delta", "abc"}).code == kExitUsage);
    CHECK(run({"audit", "--scenario", kExample1, "--axiom", "xyz"}).code == kExitUsage);
    const Run bad_event = run({"update", "--scenario", kExample1, "--event", "zz"});
    CHECK(bad_event.code == kExitDomain);
    CHECK_FALSE(bad_event.err.empty());
    CHECK(run({"update", "--scenario", "/nonexistent.scn", "--event", "r"}).code == kExitDomain);
    CHECK(run({"update", "--scenario", kExample1, "--event", "r", "--delta", "1.5"}).code == kExitDomain);
}

TEST_CASE("reproduce") {
    const Run t = run({"reproduce", "table3"});
    CHECK(t.code == kExitOk);
    CHECK(t.out.find("MISMATCH") == std::string::npos);
    for (const char* target : {"example1", "example3"}) CHECK(run({"reproduce", target}).code == kExitOk);
    CHECK(run({"reproduce", "nothing"}).code != kExitOk);
}

TEST_CASE("audit summary and determinism") {
    const std::vector<std::string> args{"audit", "--scenario", kExample1, "--axiom", "dom-c", "--event", "r"};
    const Run a = run(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out.rfind("dom-c: 0 violations", 0) == 0);

    const std::vector<std::string> dc{"audit", "--scenario", kExample1, "--axiom", "dc", "--event", "r", "--limit", "5"};
    const Run first = run(dc), second = run(dc);
    CHECK(first.code == kExitOk);
    CHECK(first.out == second.out);
    CHECK(first.out.find("... ") != std::string::npos);

    const Run wuc = run({"audit", "--scenario", "builtin:example3", "--axiom", "wuc", "--event", "r"});
    CHECK(wuc.code == kExitOk);
    CHECK(wuc.out.rfind("wuc: 0 violations", 0) == 0);
}

TEST_CASE("other subcommands") {
    CHECK(run({"elicit", "--scenario", kExample1, "--event", "r", "--posterior", "0.65,0.1625,0.0625,0.125"}).out.find(
              "0.5") != std::string::npos);
    CHECK(run({"compare", "--scenario", kExample1, "--against", kExample1}).code == kExitOk);
    CHECK(run({"sets", "--scenario", "builtin:example3", "--op", "bayes", "--event", "r"}).code == kExitOk);
    CHECK(run({"value", "--scenario", "builtin:example3", "--act", "betR", "--alpha", "0.5", "--event", "r"}).code ==
          kExitOk);
}

TEST_CASE("--out writes the report to a file") {
    const auto path = std::filesystem::temp_directory_path() / "conserv_cli_out.tsv";
    std::filesystem::remove(path);
    const Run r = run({"update", "--scenario", kExample1, "--event", "r", "--delta", "0.5", "--out", path.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream body;
    body << in.rdbuf();
    CHECK(body.str() == run({"update", "--scenario", kExample1, "--event", "r", "--delta", "0.5"}).out);
    std::filesystem::remove(path);
}
