#include "zetaseq/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "zetaseq/euler_cache.hpp"
#include "zetaseq/series.hpp"

using namespace zetaseq;
using zetaseq::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream in(line);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("zetaseq_cli_" + name + "_" + std::to_string(::getpid()));
}

// Parses "label,v1,v2,..." rows into integer sequences keyed by label.
std::map<std::string, std::vector<Integer>> parse_csv_table(const std::string& text) {
  std::map<std::string, std::vector<Integer>> rows;
  for (const auto& line : lines(text)) {
    auto cells = split(line, ',');
    std::vector<Integer> values;
    for (std::size_t i = 1; i < cells.size(); ++i) values.emplace_back(cells[i], 10);
    rows[cells[0]] = std::move(values);
  }
  return rows;
}

}  // namespace

TEST(CliTable, SigmaCsv) {
  const auto r = invoke({"table", "sigma", "--terms", "12", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], "a,1,3,4,7,6,12,8,15,13,18,12,28");
  EXPECT_EQ(rows[1], "b,1,1,1,1,1,1,1,1,1,1,1,1");
  EXPECT_EQ(rows[2], "A,1,1,2,3,5,7,11,15,22,30,42,56,77");
}

TEST(CliTable, TauARow) {
  const auto r = invoke({"table", "tau", "--terms", "8", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out)[2], "A,1,-24,252,-1472,4830,-6048,-16744,84480,-113643");
}

TEST(CliTable, EulerSingleTerm) {
  const auto r = invoke({"table", "euler", "--terms", "1", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "a,1\nb,1\nA,1,1\n");
}

TEST(CliTable, JsonUsesStrings) {
  const auto r = invoke({"table", "gabcke", "--terms", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "{\"table\":\"gabcke\",\"row\":\"a\",\"offset\":1,\"values\":[\"2\",\"160\"]}\n"
            "{\"table\":\"gabcke\",\"row\":\"b\",\"offset\":1,\"values\":[\"2\",\"79\"]}\n"
            "{\"table\":\"gabcke\",\"row\":\"lambda\",\"offset\":0,\"values\":[\"1\",\"2\",\"82\"]}\n");
}

TEST(CliTable, PrettyIsAligned) {
  const auto r = invoke({"table", "pow16", "--terms", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "pow16\n"
            "n  0  1   2    3\n"
            "a     2  32  512\n"
            "b     2  15  170\n"
            "A  1  2  18  204\n");
}

TEST(CliTable, ParsedOutputSatisfiesIdentities) {
  for (const std::string name : {"euler", "pow16", "gabcke", "sigma", "tau", "tangent"}) {
    const auto r = invoke({"table", name, "--terms", "10", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << name << ": " << r.err;
    auto rows = parse_csv_table(r.out);
    const IntegerSequence a(1, rows["a"]);
    const IntegerSequence b(1, rows["b"]);
    const auto& zeta = rows.count("A") ? rows["A"] : rows["lambda"];
    EXPECT_EQ(seq_to_b(a, 10).integers(), b) << name;
    EXPECT_EQ(exp_transform(a, 10), RationalSeries::from_integers(zeta)) << name;
  }
}

TEST(CliTable, OutputIsDeterministic) {
  for (const std::string format : {"csv", "json", "pretty"}) {
    const auto first = invoke({"table", "gabcke", "--terms", "20", "--format", format});
    const auto second = invoke({"table", "gabcke", "--terms", "20", "--format", format});
    EXPECT_EQ(first.out, second.out);
  }
}

TEST(CliTable, UsageErrors) {
  EXPECT_EQ(invoke({"table", "bogus", "--terms", "3"}).code, 2);
  EXPECT_EQ(invoke({"table", "sigma", "--terms", "0"}).code, 2);
  EXPECT_EQ(invoke({"table", "sigma"}).code, 2);
  EXPECT_EQ(invoke({"table", "sigma", "--terms", "3", "--format", "xml"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
}

TEST(CliHelp, ExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("table"), std::string::npos);
}

TEST(CliCheck, GabckeValuationRows) {
  const auto r = invoke({"check", "gabcke-valuation", "--terms", "300", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 302u);
  EXPECT_EQ(rows[0], "valuation,0,0,0,0,ok");
  EXPECT_EQ(rows[3], "valuation,3,2,2,2,ok");
  EXPECT_EQ(rows.back(), "result,gabcke-valuation,pass");
}

TEST(CliCheck, GabckeIntegrality) {
  const auto r = invoke({"check", "gabcke-integrality", "--terms", "60", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).back(), "result,gabcke-integrality,pass");
}

TEST(CliCheck, RealizableEuler) {
  const auto r = invoke({"check", "realizable", "--seq", "euler-abs", "--terms", "50", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).front(), "report,realizable,1,50,0,50,0,pass");
}

TEST(CliCheck, FailureExitsOneWithWitness) {
  const auto r = invoke({"check", "realizable", "--values", "1,2", "--terms", "2", "--format", "csv"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(lines(r.out)[1], "violation,realizable,2,2,1,b_2 = 1/2");
}

TEST(CliCheck, PrerealizableRunsAllThreeCriteria) {
  const auto r = invoke({"check", "prerealizable", "--seq", "gabcke", "--terms", "20", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].rfind("report,prerealizable-b,", 0), 0u);
  EXPECT_EQ(rows[1].rfind("report,prerealizable-A,", 0), 0u);
  EXPECT_EQ(rows[2].rfind("report,prerealizable-c,", 0), 0u);
}

TEST(CliCheck, GeometricInput) {
  EXPECT_EQ(invoke({"check", "realizable", "--base", "16", "--div", "8", "--terms", "20"}).code, 0);
  const auto bad = invoke({"check", "realizable", "--base", "6", "--div", "3", "--terms", "5"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("prime 3"), std::string::npos) << bad.err;
}

TEST(CliCheck, Kummer) {
  EXPECT_EQ(invoke({"check", "kummer", "--p", "3", "--e", "1", "--w", "2", "--n", "2", "--m", "2"}).code, 0);
  EXPECT_EQ(invoke({"check", "kummer", "--p", "3", "--e", "1", "--w", "3", "--n", "2", "--m", "2"}).code, 2);
  EXPECT_EQ(invoke({"check", "kummer", "--p", "3", "--e", "1"}).code, 2);
  const auto fail = invoke({"check", "kummer", "--p", "3", "--e", "1", "--w", "2", "--n", "1", "--m", "1", "--values",
                            "1,0,2", "--format", "csv"});
  EXPECT_EQ(fail.code, 1);
  EXPECT_EQ(lines(fail.out)[1], "violation,kummer,1;3,3,2,alternating sum = -1");
}

TEST(CliCheck, Shifted) {
  EXPECT_EQ(invoke({"check", "shifted", "--shift", "2", "--terms", "24"}).code, 0);
  EXPECT_EQ(invoke({"check", "shifted", "--terms", "24"}).code, 2);
}

TEST(CliCheck, EquivalenceSweepDeterministic) {
  const std::vector<std::string> args{"check", "equivalence-sweep", "--trials", "200", "--len", "24", "--seed", "9",
                                      "--format", "json"};
  const auto first = invoke(args);
  const auto second = invoke(args);
  EXPECT_EQ(first.code, 0);
  EXPECT_EQ(first.out, second.out);
  EXPECT_NE(first.out.find("\"seed\":\"9\""), std::string::npos);
}

TEST(CliCheck, MalformedParameters) {
  EXPECT_EQ(invoke({"check", "realizable"}).code, 2);
  EXPECT_EQ(invoke({"check", "realizable", "--terms", "3", "--values", "1,x"}).code, 2);
  EXPECT_EQ(invoke({"check", "realizable", "--terms", "5", "--values", "1,2"}).code, 2);
  EXPECT_EQ(invoke({"check", "realizable", "--terms", "5", "--seq", "nope"}).code, 2);
  EXPECT_EQ(invoke({"check", "realizable", "--terms", "5", "--base", "4"}).code, 2);
  EXPECT_EQ(invoke({"check", "realizable", "--terms", "5", "--seq", "sigma", "--values", "1"}).code, 2);
  EXPECT_EQ(invoke({"check", "frobnicate", "--terms", "5"}).code, 2);
}

TEST(CliCache, WriteThenVerify) {
  const auto path = temp_file("cache");
  const auto w = invoke({"cache", "write", "--path", path.string(), "--terms", "40"});
  ASSERT_EQ(w.code, 0) << w.err;
  EXPECT_EQ(read_euler_cache(path).size(), 41u);
  EXPECT_EQ(invoke({"cache", "verify", "--path", path.string(), "--terms", "40"}).code, 0);
  EXPECT_EQ(invoke({"cache", "verify", "--path", path.string(), "--terms", "41"}).code, 1);
  EXPECT_EQ(invoke({"table", "gabcke", "--terms", "30", "--cache", path.string()}).out,
            invoke({"table", "gabcke", "--terms", "30"}).out);
  std::filesystem::remove(path);
}

TEST(CliCache, VerifyRejectsCorruption) {
  const auto path = temp_file("corrupt");
  {
    std::ofstream out(path);
    out << "# euler E0..E6\n1\n-1\n5\n-62\n";
  }
  const auto wrong = invoke({"cache", "verify", "--path", path.string(), "--format", "csv"});
  EXPECT_EQ(wrong.code, 1);
  EXPECT_NE(wrong.out.find("E6"), std::string::npos);
  {
    std::ofstream out(path);
    out << "# euler E0..E6\n1\n-1\n";
  }
  const auto truncated = invoke({"cache", "verify", "--path", path.string()});
  EXPECT_EQ(truncated.code, 1);
  EXPECT_NE(truncated.err.find("holds 2 values"), std::string::npos) << truncated.err;
  EXPECT_EQ(invoke({"table", "euler", "--terms", "2", "--cache", path.string()}).code, 2);
  std::filesystem::remove(path);
}

TEST(CliCache, EnvironmentDefaultPath) {
  const auto path = temp_file("env");
  ::setenv("ZETASEQ_CACHE", path.string().c_str(), 1);
  EXPECT_EQ(invoke({"cache", "write", "--terms", "5"}).code, 0);
  ::unsetenv("ZETASEQ_CACHE");
  EXPECT_EQ(read_euler_cache(path).size(), 6u);
  EXPECT_EQ(invoke({"cache", "write", "--terms", "5"}).code, 2);
  std::filesystem::remove(path);
}
