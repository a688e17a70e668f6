// Copyright 2026 The sqlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "sqlab/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "sqlab/serialize.h"

namespace sqlab {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() /
                 ("sqlab_cli_test_" + std::to_string(::getpid()) + "_" + name);
  std::filesystem::remove(p);
  return p;
}

TEST(Cli, MarkovExample) {
  const CliRun r = cli({"bounds", "far-from-uniform", "mode=markov", "eps=0", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("command"), "bounds far-from-uniform");
  EXPECT_EQ(j.at("result").at("value"), 0.25);
  EXPECT_EQ(j.at("result").at("extras").at("radius"), 0.0);
}

TEST(Cli, TableAndCsv) {
  const CliRun t = cli({"census", "--n", "2"});
  ASSERT_EQ(t.code, kExitOk) << t.err;
  EXPECT_NE(t.out.find("60"), std::string::npos);
  EXPECT_NE(t.out.find("32"), std::string::npos);
  const CliRun c = cli({"census", "--format", "csv"});
  ASSERT_EQ(c.code, kExitOk);
  EXPECT_NE(c.out.find("3,1080,512,"), std::string::npos);
}

TEST(Cli, SimulateDefaultsToJson) {
  const CliRun r = cli({"simulate", "n=2", "d=0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("result").at("probs"), Json::parse("[1.0, 0.0, 0.0, 0.0]"));
  const CliRun b = cli({"simulate", "n=2", "d=1", "gate=bell"});
  const BornDistribution p = distribution_from_json(Json::parse(b.out).at("result"));
  EXPECT_NEAR(p[0], 0.5, 1e-12);
  EXPECT_NEAR(p[3], 0.5, 1e-12);
}

TEST(Cli, ConfigurationErrorsExitTwo) {
  EXPECT_EQ(cli({"bounds", "frac", "n=4", "foo=1"}).code, kExitConfig);
  EXPECT_EQ(cli({"bounds", "bogus"}).code, kExitConfig);
  EXPECT_EQ(cli({"bounds"}).code, kExitConfig);
  EXPECT_EQ(cli({"estimate", "--n", "abc"}).code, kExitConfig);
  EXPECT_EQ(cli({"estimate", "--seed", "-3"}).code, kExitConfig);
  EXPECT_EQ(cli({"census", "--format", "xml"}).code, kExitConfig);
  EXPECT_EQ(cli({"nosuch"}).code, kExitConfig);
  EXPECT_EQ(cli({"census", "stray"}).code, kExitConfig);
  // Outside the restricted-depth regime.
  const CliRun r = cli({"bounds", "frac", "n=20", "d=100", "tau=0.01", "regime=linear"});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("regime"), std::string::npos);
}

TEST(Cli, PassingChecksExitZero) {
  EXPECT_EQ(cli({"sq-demo"}).code, kExitOk);
  EXPECT_EQ(cli({"census"}).code, kExitOk);
  const CliRun v = cli({"verify-all", "only=9"});
  EXPECT_EQ(v.code, kExitOk) << v.out;
  EXPECT_NE(v.out.find("[PASS] AC9"), std::string::npos);
  EXPECT_NE(v.out.find("1/1 criteria passed"), std::string::npos);
  EXPECT_EQ(cli({"verify-all", "only=11"}).code, kExitConfig);
}

TEST(Cli, MalformedInputFileIsConfigError) {
  const auto bad = temp_file("bad.json");
  {
    std::ofstream f(bad);
    f << "{bad";
  }
  EXPECT_EQ(cli({"estimate", "ensemble=haar_state", "n=2", "trials=10", "observable=tv-fixed",
                 "reference-file=" + bad.string()})
                .code,
            kExitConfig);
  std::filesystem::remove(bad);
}

TEST(Cli, ConfigFilePrecedence) {
  const auto cfg = temp_file("cfg");
  {
    std::ofstream f(cfg);
    f << "# comment\nn = 3\ntrials = 5\nobservable = z\nensemble = haar_state\n";
  }
  RunConfig c = parse_command_line({"estimate", "--config", cfg.string(), "n=4", "--n", "5"});
  EXPECT_EQ(*c.n, 5);
  EXPECT_EQ(*c.trials, 5u);
  EXPECT_EQ(c.params.at("observable"), "z");
  c = parse_command_line({"estimate", "--config", cfg.string(), "n=4"});
  EXPECT_EQ(*c.n, 4);
  c = parse_command_line({"estimate", "--config", cfg.string()});
  EXPECT_EQ(*c.n, 3);
  {
    std::ofstream f(cfg);
    f << "no equals sign\n";
  }
  EXPECT_THROW(parse_command_line({"estimate", "--config", cfg.string()}), ConfigError);
  EXPECT_THROW(read_config_file(temp_file("missing").string()), ConfigError);
  std::filesystem::remove(cfg);
}

TEST(Cli, KeysNormalizeUnderscores) {
  const RunConfig c = parse_command_line({"estimate", "phi_seed=3"});
  EXPECT_EQ(c.params.at("phi-seed"), "3");
}

TEST(Cli, WorkersFromEnvironment) {
  ::setenv(kWorkersEnv, "3", 1);
  EXPECT_EQ(parse_command_line({"census"}).workers, 3);
  EXPECT_EQ(parse_command_line({"census", "--workers", "2"}).workers, 2);
  ::setenv(kWorkersEnv, "zero", 1);
  EXPECT_THROW(parse_command_line({"census"}), ConfigError);
  ::unsetenv(kWorkersEnv);
  EXPECT_EQ(parse_command_line({"census"}).workers, 1);
}

TEST(Cli, OutFileHoldsTypedJsonLines) {
  const auto out = temp_file("out.jsonl");
  ASSERT_EQ(cli({"estimate", "ensemble=haar_state", "n=3", "trials=100", "observable=z",
                 "seed=0x10", "--out", out.string()})
                .code,
            kExitOk);
  ASSERT_EQ(cli({"bounds", "levy", "dim=1024", "dev=0.1", "lipschitz=2", "--out",
                 out.string()})
                .code,
            kExitOk);
  std::ifstream f(out);
  std::string line;
  std::vector<Json> records;
  while (std::getline(f, line)) records.push_back(Json::parse(line));
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].at("seed"), "16");
  const EstimateResult e = estimate_from_json(records[0].at("result"));
  EXPECT_EQ(e.trials, 100u);
  EXPECT_NEAR(e.mean, 2.0 / 9.0, 0.05);
  const BoundResult b = bound_from_json(records[1].at("result"));
  EXPECT_EQ(b.value, 1.0);
  EXPECT_FALSE(b.informative);
  std::filesystem::remove(out);
}

TEST(Cli, SameSeedSameOutput) {
  const std::vector<std::string> args = {"estimate", "ensemble=brickwork", "n=4", "d=3",
                                         "trials=200", "seed=9", "--format", "json"};
  auto strip = [](std::string s) {
    Json j = Json::parse(s);
    j["result"].erase("elapsed_seconds");
    return j;
  };
  EXPECT_EQ(strip(cli(args).out), strip(cli(args).out));
}

TEST(Cli, Help) {
  const CliRun r = cli({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("Usage"), std::string::npos);
  const CliRun b = cli({"bounds", "--help"});
  EXPECT_EQ(b.code, kExitOk);
  EXPECT_NE(b.out.find("closed-form bound"), std::string::npos);
}

}  // namespace
}  // namespace sqlab
