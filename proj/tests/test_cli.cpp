#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gwdt/cli.hpp"

using namespace gwdt;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gw command prints canonical values") {
    auto r = run({"gw", "--l1", "0", "--l2", "-1", "--d", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 / (lambda1)\n");

    auto r2 = run({"gw", "--l1", "0", "--l2", "0", "--d", "2"});
    CHECK(r2.code == 0);
    CHECK(r2.out == "-(lambda1 + lambda2) / (8*lambda1*lambda2)\n");
}

TEST_CASE("dt command extracts the sheaf count") {
    auto r = run({"dt", "--l1", "0", "--l2", "-1", "--d", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");
    auto r1 = run({"dt", "--l1", "0", "--l2", "-1", "--d", "1"});
    CHECK(r1.out == "1 / (lambda1)\n");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"gw", "--l1", "0"}).code == 2);                              // missing flag
    CHECK(run({"frobnicate"}).code == 2);                                   // unknown command
    CHECK(run({"gw", "--l1", "0", "--l2", "0", "--d", "99"}).code == 2);    // bad range
    CHECK(run({"gw", "--l1", "-3", "--l2", "0"}).code == 2);                // non-Fano geometry
    CHECK(run({"invert", "--file", "/nonexistent", "--insertions", "0"}).code == 2);
}

TEST_CASE("sweep emits the stated table") {
    auto r = run({"sweep", "--d", "2", "--bound", "1", "--format", "csv"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "l1,l2,gw,dt_extracted,oracle_match");
    int rows = 0, matches = 0;
    std::string line;
    bool saw_conifold = false;
    while (std::getline(lines, line)) {
        ++rows;
        if (line.find("true") != std::string::npos) ++matches;
        if (line.rfind("0,-1,", 0) == 0) {
            saw_conifold = true;
            CHECK(line == "0,-1,1 / (8*lambda1),0,true");
        }
    }
    CHECK(rows == 8);  // (l1,l2) in [-1,1]^2 with l1+l2 >= -1
    CHECK(matches == rows);
    CHECK(saw_conifold);

    // identical content in all three formats
    auto json_run = run({"sweep", "--d", "2", "--bound", "1", "--format", "json"});
    auto j = nlohmann::json::parse(json_run.out);
    CHECK(j.size() == 8);
    CHECK(j[0]["oracle_match"] == true);
    auto text_run = run({"sweep", "--d", "2", "--bound", "1", "--format", "text"});
    CHECK(text_run.out.find("1 / (8*lambda1)") != std::string::npos);
}

TEST_CASE("emit_table handles the empty case") {
    CHECK(emit_table({}, "csv") == "l1,l2,gw,dt_extracted,oracle_match\n");
    CHECK_THROWS_AS(emit_table({}, "yaml"), std::invalid_argument);
}

TEST_CASE("invert command") {
    std::string path = "cli_invert_input.tmp";
    {
        std::ofstream f(path);
        f << "1: 3\n2: -45/8\n";
    }
    auto r = run({"invert", "--file", path, "--insertions", "0"});
    std::remove(path.c_str());
    CHECK(r.code == 0);
    CHECK(r.out ==
          "1 : 3\n"
          "2 : -6\n"
          "# non-integral classes: none\n");
}

TEST_CASE("verify command reports JSON and exit status") {
    auto r = run({"verify", "--bound", "1", "--dmax", "2", "--samples", "50", "--seed", "9",
                  "--check", "d1", "--check", "conifold", "--check", "parity"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int reports = 0;
    while (std::getline(lines, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j["status"] == "pass");
        ++reports;
    }
    CHECK(reports == 3);
}

TEST_CASE("parity command") {
    auto r = run({"parity", "--r", "8", "--samples", "100", "--seed", "5"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["checkId"] == "parity");
    CHECK(j["params"]["seed"] == "5");
}
