#include "heun/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

using namespace heun::cli;

namespace
{

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const ExitReport r = run(args, out, err);
    return {r.code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s)
{
    std::size_t n = 0;
    for (const char c : s) {
        n += c == '\n';
    }
    return n;
}

} // namespace

TEST_CASE("grid parsing")
{
    const auto g = parse_grid("0:1:0.1");
    CHECK(g.size() == 11);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == doctest::Approx(1.0));
    CHECK(parse_grid("0.5:0.5:1").size() == 1);
    CHECK_THROWS_AS(parse_grid("0:1:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("1:0:0.1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("0:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("a:1:0.1"), std::invalid_argument);
    CHECK(parse_points("0.1,0.2,-3") == std::vector<double>{0.1, 0.2, -3});
}

TEST_CASE("mutation parsing")
{
    const IdentityMutation m = parse_mutation("B:3:bottom:-1");
    CHECK(m.identity == 'B');
    CHECK(m.mutation.binomial == 3);
    CHECK(m.mutation.arg == heun::BinomialMutation::Arg::bottom);
    CHECK(m.mutation.delta == -1);
    CHECK_THROWS(parse_mutation("C:0:top:1"));
    CHECK_THROWS(parse_mutation("A:5:top:1"));
    CHECK_THROWS(parse_mutation("A:0:side:1"));
    CHECK_THROWS(parse_mutation("A:0:top:0"));
}

TEST_CASE("table round trip is bit exact")
{
    const std::vector<TableRow> rows{
        {0.1, 1.0 / 3.0, 1e-17, "definitional"},
        {0.2, -2.5e-300, 0.0, "with,comma \"quoted\""},
        {std::numeric_limits<double>::denorm_min(), 0.30000000000000004, 5e-324, "x"},
    };
    for (const TableFormat f : {TableFormat::csv, TableFormat::json}) {
        std::stringstream s;
        CHECK(emit_table(rows, f, s) == rows.size());
        CHECK(parse_table(s, f) == rows);
    }
}

TEST_CASE("empty table is a header-only CSV and an empty JSON array")
{
    std::ostringstream csv, json;
    CHECK(emit_table({}, TableFormat::csv, csv) == 0);
    CHECK(csv.str() == "x,value,error_estimate,method\n");
    emit_table({}, TableFormat::json, json);
    CHECK(json.str() == "[]\n");
}

TEST_CASE("failing sinks raise IoError")
{
    std::ostringstream bad;
    bad.setstate(std::ios::badbit);
    const std::vector<TableRow> rows{{0, 1, 0, "m"}};
    CHECK_THROWS_AS(emit_table(rows, TableFormat::csv, bad), IoError);
    std::istringstream garbage("not,a,table\n");
    CHECK_THROWS_AS(parse_table(garbage, TableFormat::csv), IoError);
}

TEST_CASE("eval prints 17 significant digits")
{
    const Run r = call({"eval", "--target", "F", "--n", "2", "--x", "0.5", "--method", "established"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.375\n");
    const Run k = call({"eval", "--target", "K", "--n", "1", "--x", "0.1"});
    CHECK(k.code == 0);
    CHECK(std::stod(k.out) == doctest::Approx(0.82693855163432930842).epsilon(1e-15));
}

TEST_CASE("table over an 11-point grid")
{
    const Run r = call({"table", "--target", "K", "--n", "1", "--grid", "0:1:0.1", "--output", "csv"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 12);
    std::istringstream in(r.out);
    const auto rows = parse_table(in, TableFormat::csv);
    REQUIRE(rows.size() == 11);
    CHECK(rows.front().value == 1.0);
    CHECK(rows.back().method == "definitional");

    const Run j = call({"table", "--target", "G", "--n", "3", "--points", "0,0.5,2", "--output", "json", "--method", "factored"});
    CHECK(j.code == 0);
    std::istringstream jin(j.out);
    CHECK(parse_table(jin, TableFormat::json).size() == 3);
}

TEST_CASE("table writes to a file")
{
    const auto path = std::filesystem::temp_directory_path() / "heun_cli_table_test.csv";
    const Run r = call({"table", "--target", "F", "--n", "4", "--grid", "0:1:0.25", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    CHECK(parse_table(in, TableFormat::csv).size() == 5);
    std::filesystem::remove(path);
    CHECK(call({"table", "--target", "F", "--n", "4", "--grid", "0:1:0.25", "--out", "/nonexistent/dir/t.csv"}).code == 2);
}

TEST_CASE("entropy subcommand")
{
    CHECK(call({"entropy", "--s", "1"}).out == "0\n");
    CHECK(call({"entropy", "--s", "0.375", "--kind", "tsallis"}).out == "0.625\n");
    const Run r = call({"entropy", "--target", "F", "--n", "2", "--x", "0.5"});
    CHECK(r.code == 0);
    CHECK(std::stod(r.out) == doctest::Approx(0.98082925301172623).epsilon(1e-15));
    const Run g = call({"entropy", "--target", "K", "--n", "2", "--grid", "0:1:0.5", "--kind", "tsallis"});
    CHECK(g.code == 0);
    CHECK(count_lines(g.out) == 4);
    CHECK(call({"entropy", "--s", "0"}).code == 2);
    CHECK(call({"entropy", "--target", "heun", "--x", "0.1"}).code == 2);
}

TEST_CASE("usage errors exit 2 with a diagnostic")
{
    const Run unknown = call({"eval", "--target", "nope", "--x", "0.1"});
    CHECK(unknown.code == 2);
    CHECK_FALSE(unknown.err.empty());
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"eval", "--target", "F", "--x", "0.1"}).code == 2);                              // missing --n
    CHECK(call({"eval", "--target", "F", "--n", "2", "--x", "0.1", "--method", "magic"}).code == 2); // bad route
    CHECK(call({"eval", "--target", "F", "--n", "2", "--x", "1.5", "--method", "definitional"}).code == 2);
    CHECK(call({"table", "--target", "F", "--n", "2", "--grid", "0:1:-1"}).code == 2);
    CHECK(call({"eval", "--target", "G", "--n", "2", "--x", "-0.5", "--method", "factored"}).code == 2);
    CHECK(call({"verify", "--relations", "rel_0_0"}).code == 2);
    CHECK(call({"eval", "--target", "F", "--n", "2", "--x", "0.1", "--output", "xml"}).code == 2);
}

TEST_CASE("numerical failures exit 3")
{
    const Run r = call({"eval", "--target", "G", "--n", "2", "--x", "0.5", "--max-terms", "3"});
    CHECK(r.code == 3);
    CHECK_FALSE(r.err.empty());
    CHECK(call({"eval", "--target", "3f2", "--a1", "1", "--a2", "1", "--a3", "1", "--b1", "1", "--b2", "1.5"}).code == 3);
}

TEST_CASE("verify passes unmodified and fails under mutation")
{
    CHECK(call({"verify", "--max-n", "10", "--trials", "10"}).code == 0);
    const Run m = call({"verify", "--max-n", "10", "--relations", "none", "--mutate", "A:1:bottom:1"});
    CHECK(m.code == 1);
    CHECK(m.out.find("identity_A") != std::string::npos);
    CHECK(m.out.find("FAIL") != std::string::npos);
}

TEST_CASE("output is deterministic")
{
    const std::vector<std::vector<std::string>> invocations{
        {"verify", "--max-n", "8", "--trials", "20", "--seed", "3"},
        {"table", "--target", "heun", "--a", "0.5", "--q", "1", "--alpha", "2", "--beta", "1", "--gamma", "1", "--delta",
         "1", "--grid", "0:0.4:0.1", "--output", "json"},
        {"crosscheck", "--target", "G", "--n", "5", "--grid", "0:3:0.5"},
    };
    for (const auto& args : invocations) {
        const Run a = call(args);
        const Run b = call(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("crosscheck reports agreement and disagreement")
{
    CHECK(call({"crosscheck", "--target", "F", "--n", "6", "--grid", "0:1:0.1"}).code == 0);
    CHECK(call({"crosscheck", "--target", "sample-family", "--n", "5", "--i", "2", "--grid", "-0.4:0.4:0.1"}).code == 0);
    CHECK(call({"crosscheck", "--target", "2f1", "--a", "3", "--b", "1", "--c", "8", "--points", "0.1,0.5,0.9"}).code == 0);
    // a tolerance below what the quadrature can deliver must be reported as a failure
    CHECK(call({"crosscheck", "--target", "Kderiv", "--n", "9", "--j", "6", "--grid", "0:0.9:0.3", "--tol", "1e-30"}).code == 1);
    CHECK(call({"crosscheck", "--target", "confluent", "--p", "1", "--gamma", "1", "--delta", "0", "--alpha", "1", "--sigma", "1",
                "--x", "0.1"})
              .code == 2);
}
