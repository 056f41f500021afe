#include "cli.hh"

#include <ehf/io.hh>

#include "support/graphs.hh"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

using namespace ehf;
using nlohmann::json;

namespace
{
    struct Run
    {
        int status;
        std::string out, err;
    };

    auto run(std::vector<std::string> args, const std::string & stdin_text = "") -> Run
    {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int status = cli::run(args, in, out, err);
        return { status, out.str(), err.str() };
    }

    const std::string c5 = "Dhc";
}

TEST_CASE("detect")
{
    auto r = run({ "detect", "even-hole", "-" }, c5);
    CHECK(r.status == cli::ok);
    CHECK(r.out == "absent:certified\n");

    r = run({ "detect", "even-hole", "-", "--require" }, c5);
    CHECK(r.status == cli::absent);

    r = run({ "detect", "odd-hole", "-", "--format", "graph6" }, c5);
    CHECK(r.status == cli::ok);
    auto j = json::parse(r.out);
    CHECK(j["kind"] == "hole");
    CHECK(j["length"] == 5);

    r = run({ "detect", "theta", "-" }, to_edgelist(test::complete_bipartite(2, 3)));
    CHECK(r.status == cli::ok);
    CHECK(json::parse(r.out)["kind"] == "theta");

    r = run({ "detect", "pyramid", "-", "--apex", "0" }, to_graph6(test::complete(4)));
    CHECK(r.out == "absent:certified\n");

    r = run({ "detect", "extended-near-prism", "-", "--cross-edge", "0,2" }, c5);
    CHECK(r.status == cli::input_error);
    CHECK(r.err.find("not an edge") != std::string::npos);
}

TEST_CASE("bisimplicial")
{
    auto r = run({ "bisimplicial", "-", "--clique", "0,1" }, c5);
    CHECK(r.status == cli::ok);
    auto j = json::parse(r.out);
    CHECK(j["witness"] == 3);
    CHECK(j["outcome"] == "holds");

    r = run({ "bisimplicial", "-" }, c5);
    CHECK(json::parse(r.out)["bisimplicial"].size() == 5);

    // K_{3,3} is not even-hole-free; told otherwise, the check reports the violation
    auto k33 = to_graph6(test::complete_bipartite(3, 3));
    r = run({ "bisimplicial", "-", "--clique", "", "--trust-even-hole-free" }, k33);
    CHECK(r.status == cli::falsified);
    r = run({ "bisimplicial", "-", "--clique", "0" }, k33);
    CHECK(r.status == cli::ok);
    CHECK(json::parse(r.out)["outcome"] == "inapplicable");
}

TEST_CASE("splendid and decompose")
{
    auto r = run({ "splendid", "0", "-" }, c5);
    CHECK(r.status == cli::ok);
    CHECK(json::parse(r.out).contains("splendid"));

    r = run({ "splendid", "9", "-" }, c5);
    CHECK(r.status == cli::input_error);

    // the (2,2,2) pyramid: apex 0, paths 0-1-2, 0-3-4, 0-5-6, base 2 4 6
    std::string pyramid = "7 9\n0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n2 4\n4 6\n2 6\n";
    r = run({ "decompose", "pyramid-strip", "-", "--apex", "0" }, pyramid);
    CHECK(r.status == cli::ok);
    auto j = json::parse(r.out);
    CHECK(j["maximality"] == "certified-optimal");
    CHECK(j["valid"] == true);
    CHECK(j["system"]["strips"].size() == 3);

    r = run({ "decompose", "tree-strip", "-", "--edge", "0,1" }, pyramid);
    CHECK(r.status == cli::ok);
    CHECK(json::parse(r.out)["system"].is_null());
    r = run({ "decompose", "tree-strip", "-", "--edge", "0,1", "--require" }, pyramid);
    CHECK(r.status == cli::absent);
    r = run({ "decompose", "tree-strip", "-", "--edge", "0,2" }, pyramid);
    CHECK(r.status == cli::input_error);
}

TEST_CASE("verify")
{
    auto r = run({ "verify", "SUBGRAPHS", "--n", "6" });
    CHECK(r.status == cli::ok);
    auto j = json::parse(r.out);
    CHECK(j["fails"] == 0);
    CHECK(j["suite"] == "SUBGRAPHS");

    r = run({ "verify", "GETLOCAL", "--count", "300", "--seed", "3", "--jobs", "2", "--pretty" });
    CHECK(r.status == cli::ok);
    CHECK(r.out.find("instances tested") != std::string::npos);

    CHECK(run({ "verify", "NOSUCH" }).status == cli::input_error);
    CHECK(run({ "verify", "SUBGRAPHS", "--n", "9" }).status == cli::input_error);
    CHECK(run({ "verify", "MAIN", "--mode", "sideways" }).status == cli::input_error);
}

TEST_CASE("convert")
{
    auto r = run({ "convert", "-", "--to", "edgelist" }, c5);
    CHECK(r.status == cli::ok);
    CHECK(from_edgelist(r.out) == from_graph6(c5));
    r = run({ "convert", "-" }, r.out);
    CHECK(json::parse(r.out)["n"] == 5);
    r = run({ "convert", "-", "--to", "graph6" }, r.out);
    CHECK(r.out == c5 + "\n");
}

TEST_CASE("budgets")
{
    auto petersen = to_graph6(test::petersen());
    auto r = run({ "detect", "even-hole", "-", "--budget", "1" }, petersen);
    CHECK(r.status == cli::budget_exceeded);
    CHECK(r.out == "absent:budget-exceeded\n");

    setenv("EHL_BUDGET", "1", 1);
    CHECK(run({ "detect", "odd-hole", "-" }, to_graph6(test::cycle(8))).status == cli::budget_exceeded);
    setenv("EHL_BUDGET", "lots", 1);
    CHECK(run({ "detect", "odd-hole", "-" }, c5).status == cli::input_error);
    unsetenv("EHL_BUDGET");
}

TEST_CASE("input errors")
{
    auto r = run({ "detect", "hole", "-" }, "2 1\n0 0\n");
    CHECK(r.status == cli::input_error);
    CHECK(r.err.find("self-loop") != std::string::npos);
    CHECK(run({ "detect", "hole", "/no/such/file" }).status == cli::input_error);
    CHECK(run({}).status == cli::input_error);
    CHECK(run({ "detect", "spiral", "-" }, c5).status == cli::input_error);
    CHECK(run({ "--help" }).status == cli::ok);
}
