#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include "json.hpp"
#include <sstream>

#include "mnconvex/cli.hpp"

using mnconvex::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "mnconvex");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Outcome& o) { return nlohmann::json::parse(o.out); }

}  // namespace

TEST(Cli, ConvexityFailureReportsWitness) {
  const Outcome o = invoke({"check-convexity", "--f", "sqrt(x)", "--M", "A", "--N", "A", "--interval", "1:4"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.out.find("witness: u=1 v=4 λ=0.5 lhs=1.581139 rhs=1.5"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("verdict: fail"), std::string::npos);
}

TEST(Cli, HermiteHadamardJson) {
  const Outcome o = invoke({"--json", "hh", "--f", "x^2", "--M", "A", "--N", "A", "--u", "1", "--v", "3"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = json_of(o);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["command"], "hh");
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["results"][0]["left"], 4.0);
  EXPECT_NEAR(j["results"][0]["middle"].get<double>(), 13.0 / 3.0, 1e-12);
  EXPECT_EQ(j["results"][0]["right"], 5.0);
}

TEST(Cli, CorollaryCrossCheck) {
  const Outcome o = invoke({"hh", "--f", "x", "--corollary", "ii", "--u", "1", "--v", "4"});
  EXPECT_EQ(o.code, 0) << o.err << o.out;
  EXPECT_NE(o.out.find("x-space"), std::string::npos);
  const Outcome mismatch = invoke({"hh", "--f", "x", "--corollary", "ii", "--M", "A", "--N", "A", "--u", "1", "--v", "4"});
  EXPECT_EQ(mismatch.code, 2);
}

TEST(Cli, AxiomsPassForPowerMean) {
  const Outcome o = invoke({"--seed", "7", "check-axioms", "--mean", "P:2"});
  EXPECT_EQ(o.code, 0) << o.out;
}

TEST(Cli, UsageErrors) {
  const Outcome parse = invoke({"hh", "--f", "x +", "--M", "A", "--N", "A", "--u", "1", "--v", "3"});
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.err.find("position 3"), std::string::npos) << parse.err;
  EXPECT_EQ(invoke({"hh", "--f", "x", "--M", "A", "--N", "A", "--u", "abc", "--v", "3"}).code, 2);
  EXPECT_EQ(invoke({"bounds", "--f", "x", "--u", "3", "--v", "1"}).code, 2);
  EXPECT_EQ(invoke({"check-axioms", "--mean", "Z"}).code, 2);
  EXPECT_EQ(invoke({"no-such-command"}).code, 2);
  EXPECT_EQ(invoke({"lipschitz", "--f", "x^2", "--interval", "0.4:3", "--a", "0.2", "--b", "2", "--epsilon", "0.5"}).code,
            2);
}

TEST(Cli, InconclusiveWhenFunctionLeavesDomain) {
  const Outcome o = invoke({"check-convexity", "--f", "x-2", "--M", "A", "--N", "A", "--interval", "1:3"});
  EXPECT_EQ(o.code, 3);
  EXPECT_NE(o.out.find("verdict: inconclusive"), std::string::npos);
}

TEST(Cli, Lipschitz) {
  const Outcome o =
      invoke({"--json", "lipschitz", "--f", "x^2", "--interval", "0.4:3", "--a", "1", "--b", "2", "--epsilon", "0.5"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = json_of(o);
  EXPECT_DOUBLE_EQ(j["results"][0]["K"].get<double>(), 12.0);
  EXPECT_EQ(j["results"][0]["empirical_holds"], true);
}

TEST(Cli, SymmetryWithBounds) {
  EXPECT_EQ(invoke({"symmetry", "--f", "(x-3)^2+1", "--M", "A", "--N", "A", "--u", "1", "--v", "5"}).code, 0);
  EXPECT_EQ(invoke({"symmetry", "--f", "x^2", "--M", "A", "--u", "1", "--v", "3"}).code, 1);
}

TEST(Cli, Combinators) {
  const Outcome o = invoke({"check-convexity", "--f", "exp(x)", "--g", "exp(2*x)", "--combine", "G", "--M", "A", "--N",
                            "G", "--interval", "1:2"});
  EXPECT_EQ(o.code, 0) << o.out << o.err;
  EXPECT_EQ(invoke({"check-convexity", "--f", "x", "--g", "1/x", "--sup", "--M", "G", "--N", "G", "--interval",
                    "0.5:2"})
                .code,
            0);
}

TEST(Cli, Classify) {
  const Outcome o = invoke({"--json", "classify", "--f", "exp(x)", "--interval", "1:2"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(json_of(o)["results"].size(), 16u);
}

TEST(CliProperty, JsonIsByteIdenticalAcrossRuns) {
  const std::vector<std::vector<std::string>> commands = {
      {"--json", "--seed", "11", "check-axioms", "--mean", "H", "--count", "200"},
      {"--json", "--seed", "3", "check-convexity", "--f", "sqrt(x)", "--M", "A", "--N", "A", "--interval", "1:4"},
      {"--json", "--seed", "5", "classify", "--f", "x", "--interval", "1:10", "--grid", "9"},
      {"--json", "hh", "--f", "exp(x)", "--corollary", "vi", "--u", "1", "--v", "3"},
      {"--json", "--seed", "2", "bounds", "--f", "x^2", "--u", "1", "--v", "3"},
  };
  for (const auto& cmd : commands) {
    const Outcome a = invoke(cmd);
    const Outcome b = invoke(cmd);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, SeedFromEnvironment) {
  const std::vector<std::string> cmd = {"--json", "check-axioms", "--mean", "G", "--count", "50"};
  ::setenv("MNCONVEX_SEED", "1234", 1);
  const Outcome env = invoke(cmd);
  ::unsetenv("MNCONVEX_SEED");
  EXPECT_EQ(json_of(env)["seed"], 1234);
  std::vector<std::string> flag = cmd;
  flag.insert(flag.begin() + 1, {"--seed", "1234"});
  EXPECT_EQ(invoke(flag).out, env.out);
}

TEST(Cli, ConfigFile) {
  const auto path = std::filesystem::temp_directory_path() / "mnconvex_cli_test.ini";
  {
    std::ofstream cfg(path);
    cfg << "json=true\nseed=99\n";
  }
  const Outcome fromfile = invoke({"--config", path.string(), "check-axioms", "--mean", "A", "--count", "30"});
  const Outcome direct = invoke({"--json", "--seed", "99", "check-axioms", "--mean", "A", "--count", "30"});
  std::filesystem::remove(path);
  EXPECT_EQ(fromfile.code, 0) << fromfile.err;
  EXPECT_EQ(fromfile.out, direct.out);
}

TEST(Cli, Version) {
  const Outcome o = invoke({"--version"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("1.0.0"), std::string::npos);
}

TEST(Cli, ComposeWarnsOnDecreasingOuter) {
  const Outcome o = invoke({"check-convexity", "--f", "x^2", "--g", "1/x", "--compose", "--M", "A", "--N", "A",
                            "--interval", "0.5:2"});
  EXPECT_NE(o.out.find("warning: outer function decreases"), std::string::npos) << o.out;
  const Outcome clean = invoke({"check-convexity", "--f", "x^2", "--g", "exp(x)", "--compose", "--M", "A", "--N", "A",
                                "--interval", "0.5:2"});
  EXPECT_EQ(clean.code, 0);
  EXPECT_EQ(clean.out.find("warning"), std::string::npos);
}
