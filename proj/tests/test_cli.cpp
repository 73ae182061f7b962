#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "combilab/cli.hpp"

using namespace combilab;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
    CHECK(run({"count", "--family", "minpart", "-n", "8", "-p", "2"}).out == "13\n");
    CHECK(run({"count", "--family", "marked", "-n", "4", "-k", "1", "-p", "2"}).out == "2\n");
    CHECK(run({"count", "--family", "insets", "-n", "2", "-k", "1", "-m", "1"}).out == "8\n");
    CHECK(run({"count", "--family", "insets-ie", "-n", "2", "-k", "1", "-m", "1"}).out == "8\n");
    CHECK(run({"count", "--family", "exact-large", "--total", "5", "-k", "1", "-a", "3"}).out == "8\n");
    CHECK(run({"count", "--family", "weak-zeros", "-n", "3", "-k", "1"}).out == "12\n");
    CHECK(run({"count", "--family", "minpart", "-n", "300", "-p", "1"}).out == "1018517988167243043134222844204689080525734196832968125318070224677190649881668353091698688\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"count", "--family", "nope", "-n", "1"}).code == kExitUsage);
    CHECK(run({"count", "--family", "minpart", "-n", "4", "-p", "0"}).code == kExitUsage);
    CHECK(run({"count", "--family", "insets", "-n", "2", "-k", "9", "-m", "1"}).code == kExitUsage);
    CHECK(run({"verify", "--identity", "prop9"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitSuccess);
}

TEST_CASE("enumerate") {
    const Run eight = run({"enumerate", "--family", "exact-large", "--total", "5", "-k", "1", "-a", "3"});
    CHECK(eight.code == 0);
    CHECK(eight.out == "(1,1,3)\n(1,3,1)\n(1,4)\n(2,3)\n(3,1,1)\n(3,2)\n(4,1)\n(5)\n");
    CHECK(run({"enumerate", "--family", "minpart", "-n", "4", "-p", "2"}).out == "(2,2)\n(4)\n");
    CHECK(run({"enumerate", "--family", "minpart", "-n", "0", "-p", "3"}).out == "()\n");
    CHECK(run({"enumerate", "--family", "usequences", "-n", "2", "-k", "0"}).out == "11\n1|1\n");
    CHECK(run({"enumerate", "--family", "insets", "-n", "1", "-k", "0"}).out == "F | {}\nS | {}\n");
}

TEST_CASE("enumerate jsonl") {
    CHECK(run({"enumerate", "--family", "minpart", "-n", "4", "-p", "2", "--format", "jsonl"}).out ==
          "{\"parts\":[2,2]}\n{\"parts\":[4]}\n");
    CHECK(run({"enumerate", "--family", "usequences", "-n", "1", "-k", "1", "--format", "jsonl"}).out ==
          "{\"symbols\":\"x\"}\n");
    CHECK(run({"enumerate", "--family", "insets", "-n", "1", "-k", "1", "-m", "1", "--format", "jsonl"}).out ==
          "{\"extra\":[],\"main\":[\"both\"]}\n{\"extra\":[0],\"main\":[\"first\"]}\n"
          "{\"extra\":[0],\"main\":[\"second\"]}\n");
}

TEST_CASE("JSON outputs survive a parse and re-dump unchanged") {
    const std::vector<std::vector<std::string>> commands{
        {"enumerate", "--family", "marked", "-n", "5", "-k", "1", "-p", "2", "--format", "jsonl"},
        {"enumerate", "--family", "insets", "-n", "2", "-k", "1", "-m", "1", "--format", "jsonl"},
        {"charpoly", "-n", "12", "-p", "3", "--format", "json"},
    };
    for (const auto& cmd : commands) {
        std::istringstream lines(run(cmd).out);
        std::string line;
        int count = 0;
        while (std::getline(lines, line)) {
            CHECK(nlohmann::json::parse(line).dump() == line);
            ++count;
        }
        CHECK(count > 0);
    }
}

TEST_CASE("size guards exit with 3 and name the guard") {
    const Run big = run({"enumerate", "--family", "minpart", "-n", "31", "-p", "1"});
    CHECK(big.code == kExitSizeGuard);
    CHECK(big.err.find("guard 30") != std::string::npos);
    CHECK(run({"enumerate", "--family", "minpart", "-n", "6", "-p", "1", "--max-enum", "5"}).code == kExitSizeGuard);
    CHECK(run({"charpoly", "-n", "2001", "-p", "2"}).code == kExitSizeGuard);
}

TEST_CASE("COMBILAB_MAX_ENUM overrides the guards") {
    ::setenv("COMBILAB_MAX_ENUM", "3", 1);
    CHECK(run({"enumerate", "--family", "minpart", "-n", "4", "-p", "2"}).code == kExitSizeGuard);
    ::setenv("COMBILAB_MAX_ENUM", "40", 1);
    CHECK(run({"enumerate", "--family", "exact-large", "--total", "21", "-k", "1", "-a", "20"}).code == kExitSuccess);
    ::unsetenv("COMBILAB_MAX_ENUM");
}

TEST_CASE("charpoly") {
    CHECK(run({"charpoly", "-n", "4", "-p", "2"}).out == "x^4 + 3x^2 - 2x + 2\n");
    CHECK(run({"charpoly", "-n", "1", "-p", "1"}).out == "x - 1\n");
    CHECK(run({"charpoly", "-n", "0", "-p", "2"}).out == "1\n");
    CHECK(run({"charpoly", "-n", "4", "-p", "2", "--format", "json"}).out == "{\"coeffs\":[\"2\",\"-2\",\"3\",\"0\",\"1\"]}\n");
}

TEST_CASE("verify") {
    const Run det = run({"verify", "--identity", "prop5-det", "--max-n", "40", "--max-p", "5"});
    CHECK(det.code == kExitSuccess);
    CHECK(det.out.find("cases: 200\n") != std::string::npos);
    CHECK(det.out.find("result: PASS") != std::string::npos);

    const Run cor2 = run({"verify", "--identity", "cor2-flagged"});
    CHECK(cor2.code == kExitSuccess);
    CHECK(cor2.out.find("result: PASS") != std::string::npos);

    CHECK(run({"verify", "--identity", "prop4-s2-example"}).code == kExitSuccess);
}

TEST_CASE("identical invocations give identical output") {
    const std::vector<std::string> cmd{"verify", "--identity", "prop6-minors", "--max-n", "6"};
    CHECK(run(cmd).out == run(cmd).out);
    const std::vector<std::string> table{"table", "--family", "marked", "--max-n", "6", "--max-k", "3", "-p", "2"};
    CHECK(run(table).out == run(table).out);
}

TEST_CASE("table") {
    CHECK(run({"table", "--family", "minor-sums", "--max-n", "4", "--max-k", "2", "-p", "2"}).out ==
          "n\\k,0,1,2\n0,1,,\n1,0,1,\n2,1,0,1\n3,1,2,0\n4,2,2,3\n");
    CHECK(run({"table", "--family", "cheb-t", "--max-n", "1", "--max-k", "3"}).out == "n\\k,0,1,2,3\n0,1,-1,,\n1,2,-3,1,\n");
    CHECK(run({"table", "--family", "weak-zeros", "--max-n", "2", "--max-k", "1"}).out == "n\\k,0,1\n0,1,1\n1,1,2\n2,2,5\n");
    CHECK(run({"table", "--family", "marked", "--max-n", "2", "-p", "0"}).code == kExitUsage);
}
