#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = wreath::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, Length) {
  EXPECT_EQ(run({"length", "--group", "Z/2", "(1@1;0)"}).out, "3\n");
  EXPECT_EQ(run({"length", "--group", "Z/2", "(;5)"}).out, "5\n");
  EXPECT_EQ(run({"length", "--group", "Z/2", "(1@-1,1@1;0)"}).out, "6\n");
  EXPECT_EQ(run({"length", "--group", "Z", "(-3@2;2)"}).out, "5\n");
  EXPECT_EQ(run({"--format", "csv", "length", "--group", "Z/2", "(;1)"}).out, "element,length\n\"(;1)\",1\n");
}

TEST(Cli, TreeDistance) {
  EXPECT_EQ(run({"tree-dist", "--group", "Z/2", "--side", "plus", "(1@-1;0)"}).out, "2\n");
  EXPECT_EQ(run({"tree-dist", "--group", "Z/2", "--side", "minus", "(1@1;-1)"}).out, "3\n");
  const Outcome path = run({"tree-dist", "--group", "Z/2", "--side", "plus", "(1@-1;0)", "--path"});
  EXPECT_EQ(path.code, 0);
  EXPECT_NE(path.out.find("T+ [-1 |]"), std::string::npos) << path.out;
  const Outcome to = run({"tree-dist", "--group", "Z/2", "--side", "plus", "(1@-1;0)", "--to", "(1@-1;0)"});
  EXPECT_EQ(to.out, "0\n");
}

TEST(Cli, ParseErrorsExitWithTwoAndACaret) {
  const Outcome r = run({"length", "--group", "Z/2", "(2@0;1)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out, "");
  EXPECT_NE(r.err.find("\n  (2@0;1)\n   ^"), std::string::npos) << r.err;
  EXPECT_EQ(run({"length", "--group", "Q", "(;1)"}).code, 2);
  EXPECT_EQ(run({"length"}).code, 2);
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  EXPECT_EQ(run({"embed", "--group", "Z", "(;1)", "--h-mode", "dirac"}).code, 2);
  EXPECT_EQ(run({"embed", "--group", "Z/2", "(;1)", "--tree-mode", "guka:1/2"}).code, 2);
}

TEST(Cli, BudgetErrorsExitWithThree) {
  ::setenv("WREATH_ELEMENT_BUDGET", "50", 1);
  const Outcome r = run({"ball", "--group", "Z/2", "--radius", "8"});
  ::unsetenv("WREATH_ELEMENT_BUDGET");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(Cli, Ball) {
  EXPECT_EQ(run({"ball", "--group", "Z/2", "--radius", "3", "--format", "csv"}).out,
            "radius,count\n0,1\n1,4\n2,10\n3,22\n");
}

TEST(Cli, Embed) {
  const Outcome exact = run({"embed", "--group", "Z", "(2@0;1)"});
  EXPECT_EQ(exact.code, 0);
  EXPECT_EQ(exact.out,
            "arc(T+ [0 |] -> T+ [1 | 2@0])\t1\n"
            "arc(T+ [1 | 2@0] -> T+ [0 |])\t-1\n"
            "arc(T- [0 |] -> T- [1 |])\t1\n"
            "arc(T- [1 |] -> T- [0 |])\t-1\n"
            "lamp[0]:0\t2\n"
            "norm2=6\n"
            "norm=2.449489742783\n");
  const Outcome dirac = run({"embed", "--group", "Z/2", "(1@0;2)"});
  EXPECT_NE(dirac.out.find("norm2=5"), std::string::npos) << dirac.out;
  const Outcome guka = run({"embed", "--group", "Z/3", "(;1)", "--tree-mode", "guka:1/4"});
  EXPECT_NE(guka.out.find("edge{T+ [0 |], T+ [1 |]}\t1\n"), std::string::npos) << guka.out;
}

TEST(Cli, Properness) {
  const Outcome r = run({"properness", "--group", "Z/2", "--radius", "4", "--p", "2", "--cross-check"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("count=48\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("agree=true\n"), std::string::npos);
  EXPECT_NE(run({"properness", "--group", "Z/2", "--radius", "0"}).out.find("count=1\n"), std::string::npos);
}

TEST(Cli, CompressIsDeterministicAndWritesFiles) {
  const std::string samples = ::testing::TempDir() + "wreath_samples.csv";
  const std::string envelope = ::testing::TempDir() + "wreath_envelope.csv";
  const std::vector<std::string> args = {"compress", "--group", "Z/2", "--scale", "100", "--count", "300",
                                         "--seed", "3", "--samples", samples, "--envelope", envelope};
  const Outcome a = run(args);
  const Outcome b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("lipschitz_violations=0\n"), std::string::npos) << a.out;
  EXPECT_NE(a.out.find("separation_violations=0\n"), std::string::npos);
  const std::string s = slurp(samples);
  EXPECT_EQ(s.rfind("wordLength,embeddedDist\n", 0), 0u);
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 301);
  EXPECT_EQ(slurp(envelope).rfind("bucket,minDist\n", 0), 0u);
  std::remove(samples.c_str());
  std::remove(envelope.c_str());
}

TEST(Cli, VerifyQuickPasses) {
  const Outcome r = run({"verify", "--quick"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("failed=0"), std::string::npos);
}

TEST(Cli, PrintedElementsReparse) {
  const Outcome r = run({"ball", "--group", "Z/3", "--radius", "1"});
  EXPECT_EQ(r.code, 0);
  for (const char* lit : {"(1@0;0)", "(2@0;0)", "(;1)", "(;-1)"})
    EXPECT_EQ(run({"length", "--group", "Z/3", lit}).out, "1\n");
}
