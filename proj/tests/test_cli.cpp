#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "repshift/cli.hpp"

using namespace repshift;
using namespace repshift::testing;
using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_run(args, out, err);
    return {code, out.str(), err.str()};
}

json result_of(const Run& r) {
    json report = json::parse(r.out);
    REQUIRE(report.at("schema") == 1);
    REQUIRE(report.contains("input_digest"));
    REQUIRE(report.contains("version"));
    return report.at("result");
}

} // namespace

TEST_CASE("classify emits the published counts") {
    Run r = cli({"classify", fixture_path("ex2_1.zg"), "--target", "Z3"});
    CHECK(r.code == 0);
    json res = result_of(r);
    CHECK(res.at("class") == "finite");
    CHECK(res.at("count") == 3);

    Run r2 = cli({"classify", fixture_path("ex3_7.zg"), "--target", "S5"});
    CHECK(r2.code == 0);
    CHECK(result_of(r2).at("class") == "countable");
}

TEST_CASE("graph reports structure and writes deterministic dot files") {
    Run r = cli({"graph", fixture_path("ex2_1.zg"), "--target", "Z3", "--json"});
    CHECK(r.code == 0);
    json res = result_of(r);
    CHECK(res.at("vertices") == 3);
    CHECK(res.at("edges") == 3);
    CHECK(res.at("graph").at("vertices") == json::array({"0", "1", "2"}));

    std::string dot_path = "cli_test_graph.dot";
    Run d1 = cli({"graph", fixture_path("ex2_1.zg"), "--target", "Z3", "--dot", dot_path});
    CHECK(d1.code == 0);
    std::ifstream in(dot_path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().find("digraph") != std::string::npos);
    std::remove(dot_path.c_str());
}

TEST_CASE("identical invocations are byte-identical") {
    auto args = std::vector<std::string>{"graph", fixture_path("ex4_4a.zg"),
                                         "--target", "S3", "--json"};
    Run a = cli(args), b = cli(args);
    CHECK(a.out == b.out);
    CHECK(a.err.empty());

    Run c = cli({"alex", "cover3", "--matrix", fixture_path("ex4_4_t6.mat")});
    Run d = cli({"alex", "cover3", "--matrix", fixture_path("ex4_4_t6.mat")});
    CHECK(c.out == d.out);
}

TEST_CASE("subgroup counting") {
    Run r = cli({"subgroups", fixture_path("ex2_1.zg"), "--index", "3"});
    CHECK(r.code == 0);
    json res = result_of(r);
    CHECK(res.at("class") == "finite");
    CHECK(res.at("count") == 1);
    CHECK(res.at("index") == 3);

    Run r5 = cli({"subgroups", fixture_path("ex3_7.zg"), "--index", "5"});
    CHECK(result_of(r5).at("class") == "countable");
}

TEST_CASE("lift verdicts") {
    Run r = cli({"lift", fixture_path("ex4_4b.zg"), "--ext", "S3/S2",
                 "--all-periodic", "--max-period", "2"});
    CHECK(r.code == 0);
    json res = result_of(r);
    CHECK(res.at("lift_exists") == true);
    CHECK(res.at("surjective_lift_exists") == false);

    Run r2 = cli({"lift", fixture_path("ex4_4a.zg"), "--ext", "S3/S2",
                  "--rep", "cycle:(12).(12)"});
    json res2 = result_of(r2);
    CHECK(res2.at("lift_exists") == true);
    CHECK(res2.at("surjective_lift_exists") == false);

    Run both = cli({"lift", fixture_path("ex4_4a.zg"), "--ext", "S3/S2",
                    "--rep", "cycle:e.e", "--all-periodic"});
    CHECK(both.code == 2);
}

TEST_CASE("polynomial subcommands") {
    Run r = cli({"alex", "pullback", "--poly", "t^2-3t+1", "--r", "2"});
    CHECK(r.code == 0);
    CHECK(result_of(r).at("poly") == "s^2-7s+1");

    Run c2 = cli({"alex", "cover2", "--matrix", fixture_path("ex4_4_t2.mat"), "--mod", "3"});
    CHECK(c2.code == 0);
    json res2 = result_of(c2);
    CHECK(res2.at("detSum") == "s-3");
    CHECK(res2.at("detDiff") == "s-1");
    CHECK(res2.at("verdict").get<std::string>().find("no surjective") == 0);

    Run c3 = cli({"alex", "cover3", "--matrix", fixture_path("ex4_4_t6.mat"), "--mod", "2"});
    CHECK(c3.code == 0);
    json res3 = result_of(c3);
    CHECK(res3.at("FFbar") == "s^2-2s+1");
    CHECK(res3.at("sMinus1SquaredFactor") == true);
    CHECK(res3.at("verdict").get<std::string>().find("no surjective") == 0);
}

TEST_CASE("exit codes and single-line diagnostics") {
    // usage problems -> 2
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"classify", fixture_path("ex2_1.zg")}).code == 2); // missing --target
    CHECK(cli({"classify", "no_such_file.zg", "--target", "Z3"}).code == 2);
    CHECK(cli({"classify", fixture_path("ex2_1.zg"), "--target", "Q8"}).code == 2);

    // syntax errors -> 2 with a position
    std::string bad = "cli_test_bad.zg";
    std::ofstream(bad) << "zgroup\ngens a\nrel a[1\n";
    Run r = cli({"classify", bad, "--target", "Z3"});
    std::remove(bad.c_str());
    CHECK(r.code == 2);
    CHECK(r.err.rfind("error: parse:", 0) == 0);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

    // runtime limits -> 1
    Run budget = cli({"classify", fixture_path("ex3_7.zg"), "--target", "S5",
                      "--budget", "10"});
    CHECK(budget.code == 1);
    CHECK(budget.err.rfind("error: resource:", 0) == 0);

    // domain errors -> 1
    Run dom = cli({"lift", fixture_path("ex2_1.zg"), "--ext", "A4/Z3",
                   "--rep", "cycle:1.1"});
    CHECK(dom.code == 1);
    CHECK(dom.err.rfind("error: domain:", 0) == 0);

    Run zero = cli({"alex", "pullback", "--poly", "0", "--r", "2"});
    CHECK(zero.code == 1);
    CHECK(zero.err.rfind("error: domain:", 0) == 0);
}

TEST_CASE("timing is opt-in and goes to the error stream") {
    Run quiet = cli({"classify", fixture_path("ex2_1.zg"), "--target", "Z3"});
    CHECK(quiet.err.empty());
    Run timed = cli({"classify", fixture_path("ex2_1.zg"), "--target", "Z3", "--timing"});
    CHECK(timed.err.find("timing_ms:") != std::string::npos);
    CHECK(timed.out == quiet.out);
}
