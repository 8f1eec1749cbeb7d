#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nashcert/cli.hpp"

namespace nashcert::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "nashcert");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, SplitExamples) {
  const auto a = invoke({"split", "--annihilator", "t - z1"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "Re f: t - x1\nIm f: t - y1\n");
  EXPECT_EQ(invoke({"split", "--annihilator", "0"}).code, 2);
  const auto v = invoke({"split", "--annihilator", "t - z1^2", "--verify", "z1^2"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("Re f: t - x1^2 + y1^2"), std::string::npos);
  EXPECT_NE(v.out.find("Im f: t - 2*x1*y1"), std::string::npos);
  EXPECT_EQ(v.out.find("FAIL"), std::string::npos);
}

TEST(Cli, LiftExamples) {
  const auto a = invoke({"lift", "--real-annihilator", "t - x1^2 + y1^2", "--base", "0", "--value", "0"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "f: t - z1^2\n");
  const auto d = invoke({"lift", "--real-annihilator", "x1^2 + y1^2", "--base", "0", "--value", "0"});
  EXPECT_EQ(d.code, 2);
  EXPECT_NE(d.err.find("degenerate"), std::string::npos);
  const auto v = invoke({"lift", "--real-annihilator", "t - x1", "--base", "1", "--value", "1", "--verify", "z1"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("f: t - z1\n"), std::string::npos);
}

TEST(Cli, LiftHigherDimensionNeedsVerification) {
  EXPECT_EQ(invoke({"lift", "--real-annihilator", "t - x1 - x2", "--base", "0,0", "--value", "0"}).code, 4);
  EXPECT_EQ(invoke({"lift", "--real-annihilator", "t - x1 - x2", "--base", "0,0", "--value", "0", "--verify",
                    "z1 + z2"})
                .code,
            0);
  EXPECT_EQ(invoke({"lift", "--real-annihilator", "t - x1 - x2", "--base", "0,0", "--value", "0", "--verify",
                    "z1 + 2*z2"})
                .code,
            3);
}

TEST(Cli, MergeExamples) {
  const auto a = invoke({"merge", "--p1", "t - x1", "--p2", "t - y1"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "f: t - z1\n  flags: requires-verification\n");
  const auto c = invoke({"merge", "--p1", "t - x1", "--p2", "t + y1", "--verify", "conj(z1)"});
  EXPECT_EQ(c.code, 3);
  EXPECT_EQ(invoke({"merge", "--p1", "y1*t - x1*y1", "--p2", "t - y1", "--slice", "0"}).code, 2);
}

TEST(Cli, ResultantExample) {
  const auto r = invoke({"resultant", "--p", "w - z1", "--q", "t - w", "--var", "w"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "t - z1\n");
  EXPECT_EQ(invoke({"resultant", "--p", "w - z1", "--q", "t - w", "--var", "q"}).code, 4);
}

TEST(Cli, VerifyCommand) {
  EXPECT_EQ(invoke({"verify", "--poly", "t^2 - z1^2 - 1", "--expr", "sqrt(1+z1^2)"}).code, 0);
  EXPECT_EQ(invoke({"verify", "--poly", "t - z1", "--expr", "conj(z1)"}).code, 3);
  EXPECT_EQ(invoke({"verify", "--poly", "t - x1^2 + y1^2", "--part", "re", "--expr", "z1^2"}).code, 0);
  EXPECT_EQ(invoke({"verify", "--poly", "t - x1", "--part", "f", "--expr", "z1"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--poly", "t - z1", "--expr", "exp(z1)"}).code, 4);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 4);
  EXPECT_EQ(invoke({"frobnicate"}).code, 4);
  EXPECT_EQ(invoke({"split"}).code, 4);
  EXPECT_EQ(invoke({"split", "--annihilator", "t -"}).code, 4);
  EXPECT_EQ(invoke({"split", "--annihilator", "t - z1", "--format", "xml"}).code, 4);
  EXPECT_EQ(invoke({"verify", "--poly", "t - z1", "--expr", "z1", "--tol", "0"}).code, 4);
  EXPECT_EQ(invoke({"verify", "--poly", "t - z1", "--expr", "z1", "--count", "0"}).code, 4);
  EXPECT_EQ(invoke({"split", "--annihilator", "@/nonexistent/file.txt"}).code, 4);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, FileInput) {
  const auto path = std::filesystem::temp_directory_path() / "nashcert_cli_input.txt";
  {
    std::ofstream f(path);
    f << "t - z1^2\n";
  }
  const auto a = invoke({"split", "--annihilator", "@" + path.string()});
  std::filesystem::remove(path);
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("Re f: t - x1^2 + y1^2"), std::string::npos);
}

TEST(Cli, MachineDocument) {
  const auto a = invoke({"split", "--annihilator", "t - z1^2", "--verify", "z1^2", "--format", "machine"});
  EXPECT_EQ(a.code, 0);
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["command"], "split");
  EXPECT_EQ(doc["exit"], 0);
  ASSERT_EQ(doc["certificates"].size(), 2u);
  EXPECT_EQ(doc["certificates"][0]["polynomial"], "t - x1^2 + y1^2");
  EXPECT_EQ(doc["certificates"][0]["part"], "re");
  EXPECT_FALSE(doc["certificates"][0]["derivation"].empty());
  ASSERT_EQ(doc["reports"].size(), 2u);
  EXPECT_EQ(doc["reports"][0]["pass"], true);
  EXPECT_EQ(doc["inputs"]["annihilator"], "t - z1^2");

  const auto e = invoke({"lift", "--real-annihilator", "x1^2 + y1^2", "--base", "0", "--value", "0", "--format",
                         "machine"});
  EXPECT_EQ(e.code, 2);
  const auto err = nlohmann::json::parse(e.out);
  EXPECT_EQ(err["exit"], 2);
  EXPECT_EQ(err["error"]["kind"], "degenerate");
}

TEST(Cli, ExplainShowsDerivation) {
  const auto a = invoke({"split", "--annihilator", "t - z1", "--explain"});
  EXPECT_NE(a.out.find("  | "), std::string::npos);
}

TEST(Cli, ByteIdenticalRuns) {
  const std::vector<std::string> args{"split", "--annihilator", "t^2 - z1^2 - 1", "--verify", "sqrt(1+z1^2)",
                                      "--format", "machine", "--seed", "7"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

}  // namespace
}  // namespace nashcert::cli
