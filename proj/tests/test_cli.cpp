#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <set>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "zetaval/rational.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = zetaval::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s)
{
    return s.substr(0, s.find('\n'));
}

} // namespace

TEST(CliValue, Examples)
{
    EXPECT_EQ(run({"value", "zeta", "--n", "-1"}).out, "-1/12\n");
    EXPECT_EQ(run({"value", "lvalue", "--char", "chi4", "--n", "-2"}).out, "-1/2\n");
    EXPECT_EQ(run({"value", "gbernoulli", "--char", "kronecker:11", "--n", "5"}).out, "-12750/11\n");
    EXPECT_EQ(run({"value", "zeta", "--n=0"}).out, "-1/2\n");
    EXPECT_EQ(run({"value", "zeta", "--n", "4"}).out, "1/90*pi^4\n");
    EXPECT_EQ(run({"value", "hurwitz", "--n", "-1", "--a", "1/2"}).out, "1/24\n");
    EXPECT_EQ(run({"value", "twisted", "--char", "kronecker:3", "--n", "0", "--a", "1"}).out, "1/3\n");
    EXPECT_EQ(run({"value", "chi4", "--n", "-4"}).out, "5/2\n");
    EXPECT_EQ(run({"value", "lerch", "--c", "1", "--k", "3", "--a", "1/2"}).out, "-1/8\n");
    EXPECT_EQ(run({"value", "bernoulli", "--n", "12"}).out, "-691/2730\n");
}

TEST(CliValue, RoutesAgree)
{
    const auto with_route = [](std::vector<std::string> args, const std::string& route) {
        args.insert(args.end(), {"--route", route});
        return run(args);
    };
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> cases{
        {{"value", "zeta", "--n", "-5"}, {"closed_form", "integral"}},
        {{"value", "hurwitz", "--n", "-3", "--a", "2/3"}, {"closed_form", "integral"}},
        {{"value", "lvalue", "--char", "kronecker:7", "--n", "-3"}, {"closed_form", "integral", "hurwitz_scaled"}},
        {{"value", "twisted", "--char", "kronecker:5", "--n", "-2", "--a", "1/3"},
         {"closed_form", "integral", "hurwitz_scaled"}},
        {{"value", "chi4", "--n", "-6"}, {"closed_form", "integral", "euler_poly", "hurwitz_scaled"}},
    };
    for (const auto& [args, routes] : cases) {
        const std::string base = run(args).out;
        for (const auto& route : routes) {
            const Result r = with_route(args, route);
            EXPECT_EQ(r.code, 0) << route;
            EXPECT_EQ(r.out, base + "route: " + route + "\n") << args[1] << ' ' << route;
        }
    }
}

TEST(CliValue, RoundTrip)
{
    for (int s = 0; s >= -20; --s) {
        const std::string printed = first_line(run({"value", "zeta", "--n", std::to_string(s)}).out);
        EXPECT_EQ(zetaval::Rational::parse(printed).to_string(), printed);
        const std::string l = first_line(run({"value", "lvalue", "--char", "kronecker:5", "--n", std::to_string(s)}).out);
        EXPECT_EQ(zetaval::Rational::parse(l).to_string(), l);
    }
}

TEST(CliValue, UsageErrorsExitTwo)
{
    const std::vector<std::vector<std::string>> bad{
        {"value"},
        {"value", "nonsense"},
        {"value", "zeta", "--n", "3"},
        {"value", "zeta", "--n", "x"},
        {"value", "zeta", "--n", "-1", "--route", "euler_poly"},
        {"value", "zeta", "--n", "-1", "--route", "bogus"},
        {"value", "hurwitz", "--n", "-1", "--a", "0"},
        {"value", "lvalue", "--n", "-1"},
        {"value", "lvalue", "--char", "trivial:1", "--n", "-1"},
        {"value", "lvalue", "--char", "kronecker:9", "--n", "-1"},
        {"value", "twisted", "--char", "table:8:1,0,-1,0,1,0,-1,0", "--n", "-1", "--a", "1/2"},
        {"value", "lerch", "--c", "-1", "--k", "2"},
        {"value", "lerch", "--c", "0", "--k", "2"},
        {"value", "bernoulli", "--n", "-1"},
        {"value", "zeta", "--unknown"},
        {},
        {"frobnicate"},
    };
    for (const auto& args : bad) {
        const Result r = run(args);
        std::string joined;
        for (const auto& a : args) {
            joined += a + ' ';
        }
        EXPECT_EQ(r.code, 2) << joined;
        EXPECT_TRUE(r.out.empty() || r.code != 0) << joined;
        EXPECT_FALSE(r.err.empty()) << joined;
    }
}

TEST(CliValue, HelpExitsZero)
{
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"value", "--help"}).code, 0);
}

TEST(CliTable, GoldenAppendix)
{
    const Result small = run({"table", "--chars", "B,kronecker:3,chi4,kronecker:5,kronecker:7,kronecker:11", "--n", "0..12",
                              "--golden", "appendix"});
    EXPECT_EQ(small.code, 0) << small.out;
    EXPECT_NE(small.out.find("golden appendix: 78/78 cells match"), std::string::npos);
    const Result large =
        run({"table", "--chars", "kronecker:13,kronecker:17,kronecker:19,kronecker:23", "--n", "0..12", "--golden", "appendix"});
    EXPECT_EQ(large.code, 0) << large.out;
    EXPECT_NE(large.out.find("golden appendix: 52/52 cells match"), std::string::npos);
}

TEST(CliTable, Csv)
{
    const Result r = run({"table", "--chars", "chi4", "--n", "0..3", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n,chi4\n0,0\n1,-1/2\n2,0\n3,3/2\n");
}

TEST(CliTable, MarkdownAndJson)
{
    const Result md = run({"table", "--chars", "B,kronecker:3", "--n", "0..1"});
    EXPECT_EQ(md.out, "| n | B | kronecker:3 |\n|---|---|---|\n| 0 | 1 | 0 |\n| 1 | -1/2 | -1/3 |\n");
    const Result js = run({"table", "--chars", "kronecker:5,table:4:1,0,-1,0", "--n", "2..3", "--format", "json"});
    ASSERT_EQ(js.code, 0);
    const auto doc = nlohmann::json::parse(js.out);
    EXPECT_EQ(doc["columns"][0]["label"], "kronecker:5");
    EXPECT_EQ(doc["columns"][0]["values"][0], "4/5");
    EXPECT_EQ(doc["columns"][1]["label"], "table:4:1,0,-1,0");
    EXPECT_EQ(doc["columns"][1]["values"][1], "3/2");
}

TEST(CliTable, Errors)
{
    EXPECT_EQ(run({"table", "--chars", "chi4", "--n", "0..65"}).code, 2);
    EXPECT_EQ(run({"table", "--chars", "chi4", "--n", "5..2"}).code, 2);
    EXPECT_EQ(run({"table", "--chars", "kronecker:4", "--n", "0..2"}).code, 2);
    EXPECT_EQ(run({"table", "--chars", "chi4", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"table", "--chars", "kronecker:29", "--golden", "appendix"}).code, 2);
    EXPECT_EQ(run({"table", "--chars", "chi4", "--n", "0..13", "--golden", "appendix"}).code, 2);
    EXPECT_EQ(run({"table"}).code, 2);
}

TEST(CliTable, GoldenFile)
{
    const auto dir = std::filesystem::temp_directory_path() / "zetaval_golden_test";
    std::filesystem::create_directories(dir);
    const auto good = dir / "good.csv";
    const auto bad = dir / "bad.csv";
    std::ofstream(good) << "n,chi4,kronecker:3\n0,0,0\n1,-1/2,-1/3\n2,0,0\n3,3/2,2/3\n";
    std::ofstream(bad) << "n,chi4,kronecker:3\n0,0,0\n1,-1/2,-1/3\n2,0,0\n3,5/2,2/3\n";

    const Result ok = run({"table", "--chars", "chi4,kronecker:3", "--n", "0..3", "--golden", good.string()});
    EXPECT_EQ(ok.code, 0) << ok.out << ok.err;
    const Result mismatch = run({"table", "--chars", "chi4,kronecker:3", "--n", "0..3", "--golden", bad.string()});
    EXPECT_EQ(mismatch.code, 1);
    EXPECT_NE(mismatch.out.find("- n=3 chi4: 5/2"), std::string::npos) << mismatch.out;
    EXPECT_NE(mismatch.out.find("+ n=3 chi4: 3/2"), std::string::npos) << mismatch.out;
    EXPECT_NE(mismatch.out.find("7/8 cells match"), std::string::npos) << mismatch.out;

    EXPECT_EQ(run({"table", "--chars", "kronecker:5", "--n", "0..3", "--golden", good.string()}).code, 2);
    EXPECT_EQ(run({"table", "--chars", "chi4", "--n", "0..3", "--golden", (dir / "missing.csv").string()}).code, 1);
    std::filesystem::remove_all(dir);
}

TEST(CliVerify, Suites)
{
    const Result h = run({"verify", "hurwitz-integral", "--nmax", "30"});
    EXPECT_EQ(h.code, 0) << h.out;
    EXPECT_NE(h.out.find("hurwitz-integral:"), std::string::npos);
    EXPECT_EQ(run({"verify", "prop-a1", "--primes", "3,5,7,11,13,17,19,23", "--nmax", "12"}).code, 0);
    EXPECT_EQ(run({"verify", "chi4", "--nmax", "12"}).code, 0);
    EXPECT_EQ(run({"verify", "sums-oracle", "--jobs", "3"}).code, 0);
    EXPECT_EQ(run({"verify", "lfunction-routes", "--primes", "4,13"}).code, 0);
}

TEST(CliVerify, Errors)
{
    EXPECT_EQ(run({"verify", "nope"}).code, 2);
    EXPECT_EQ(run({"verify"}).code, 2);
    EXPECT_EQ(run({"verify", "prop-a1", "--primes", "9"}).code, 2);
    EXPECT_EQ(run({"verify", "hurwitz-integral", "--a", "3/2"}).code, 2);
    EXPECT_EQ(run({"verify", "hurwitz-integral", "--nmax", "-3"}).code, 2);
}

TEST(CliPlot, Examples)
{
    const Result r = run({"plot", "sn", "--n", "2", "--range", "0..1", "--samples", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "series,x,y,x_decimal,y_decimal\nS_2,0,0,0,0\nS_2,1/2,0,0.5,0\nS_2,1,0,1,0\n");
    const Result a = run({"plot", "sna", "--n", "0", "--a", "1/2", "--range", "1/2..3/2", "--samples", "2"});
    EXPECT_EQ(a.out, "series,x,y,x_decimal,y_decimal\nS_{0,1/2},1/2,-1/2,0.5,-0.5\nS_{0,1/2},3/2,1/2,1.5,0.5\n");
}

TEST(CliPlot, FileOutputWithThreeSeries)
{
    const auto dir = std::filesystem::temp_directory_path() / "zetaval_cli_test";
    std::filesystem::create_directories(dir);
    const auto csv = dir / "sn_odd.csv";
    const Result r = run({"plot", "sn", "--n", "1,3,5", "--range", "0..1", "--samples", "101", "--out", csv.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "series,x,y,x_decimal,y_decimal");
    std::size_t rows = 0;
    std::set<std::string> labels;
    while (std::getline(in, line)) {
        ++rows;
        labels.insert(line.substr(0, line.find(',')));
    }
    EXPECT_EQ(rows, 303U);
    EXPECT_EQ(labels, (std::set<std::string>{"S_1", "S_3", "S_5"}));

    const auto json = dir / "phi.json";
    ASSERT_EQ(run({"plot", "phi", "--n", "0,1", "--samples", "5", "--out", json.string()}).code, 0);
    std::ifstream jin(json);
    const auto doc = nlohmann::json::parse(jin);
    ASSERT_EQ(doc["series"].size(), 2U);
    const auto& points = doc["series"][0]["points"];
    ASSERT_EQ(points.size(), 5U);
    std::string prev_x;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto x = zetaval::Rational::parse(points[i]["x"].get<std::string>());
        EXPECT_DOUBLE_EQ(points[i]["xf"].get<double>(), x.to_double());
        if (i > 0) {
            EXPECT_LT(zetaval::Rational::parse(prev_x), x);
        }
        prev_x = points[i]["x"].get<std::string>();
    }
    EXPECT_EQ(points[2]["y"], "1/8");
    std::filesystem::remove_all(dir);
}

TEST(CliPlot, Errors)
{
    EXPECT_EQ(run({"plot", "sn", "--n", "1", "--samples", "1"}).code, 2);
    EXPECT_EQ(run({"plot", "sn", "--n", "1", "--range", "1..0"}).code, 2);
    EXPECT_EQ(run({"plot", "sn", "--n", "1", "--range", "a..b"}).code, 2);
    EXPECT_EQ(run({"plot", "sna", "--n", "1", "--a", "2"}).code, 2);
    EXPECT_EQ(run({"plot", "zz", "--n", "1"}).code, 2);
    EXPECT_EQ(run({"plot", "sn", "--n", "1", "--format", "xml"}).code, 2);
    const Result io = run({"plot", "sn", "--n", "1", "--out", "/nonexistent-dir/x/y.csv"});
    EXPECT_EQ(io.code, 1);
    EXPECT_NE(io.err.find("cannot write"), std::string::npos);
}
