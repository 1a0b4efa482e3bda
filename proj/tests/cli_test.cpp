// Copyright 2026 The Synthaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "synthaudit/data/csv.hpp"

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell, capturing stdout and stderr together.
Outcome Cli(const std::string& args) {
  const std::string cmd = std::string(SYNTHAUDIT_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  Outcome o;
  if (pipe == nullptr) return o;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    o.out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("synthaudit_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    const Outcome o = Cli("basecase 6b --out " + Path(""));
    ASSERT_EQ(o.code, 0) << o.out;
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }
  std::string Inputs() const {
    return "--schema " + Path("schema.json") + " --train " +
           Path("train.csv") + " --test " + Path("test.csv");
  }

  fs::path dir_;
};

std::size_t Lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

TEST_F(CliTest, GenerateMarginalsWritesRequestedRows) {
  const Outcome o = Cli("generate " + Inputs() + " --out " + Path("s.csv") +
                        " --pipeline marginals --rows 37 --seed 3");
  ASSERT_EQ(o.code, 0) << o.out;
  EXPECT_EQ(Lines(synthaudit::ReadFile(Path("s.csv"))), 38u);
  EXPECT_TRUE(fs::exists(Path("s.csv.model.json")));
}

TEST_F(CliTest, GenerateIsSeedDeterministic) {
  const std::string base =
      "generate " + Inputs() + " --pipeline dp --epsilon 1 --seed 5 --out ";
  ASSERT_EQ(Cli(base + Path("a.csv")).code, 0);
  ASSERT_EQ(Cli(base + Path("b.csv")).code, 0);
  EXPECT_EQ(synthaudit::ReadFile(Path("a.csv")),
            synthaudit::ReadFile(Path("b.csv")));
}

TEST_F(CliTest, GenerateDpPrintsAccountant) {
  const Outcome o = Cli("generate " + Inputs() + " --out " + Path("s.csv") +
                        " --pipeline dp --epsilon 0.7");
  ASSERT_EQ(o.code, 0) << o.out;
  EXPECT_NE(o.out.find("0.7"), std::string::npos) << o.out;
}

TEST_F(CliTest, GenerateRejectsNonPositiveEpsilon) {
  const Outcome o = Cli("generate " + Inputs() + " --out " + Path("s.csv") +
                        " --pipeline dp --epsilon 0");
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.out.find("epsilon must be positive"), std::string::npos)
      << o.out;
}

TEST_F(CliTest, MetricsExitCodes) {
  const std::string base = "metrics " + Inputs() + " --synth ";
  const Outcome pass = Cli(base + Path("synth.csv"));
  EXPECT_EQ(pass.code, 0) << pass.out;
  EXPECT_NE(pass.out.find("\"all_pass\": true"), std::string::npos);
  // Releasing the training set itself fails the IMS test.
  EXPECT_EQ(Cli(base + Path("train.csv")).code, 3);
  EXPECT_EQ(Cli("metrics " + Inputs()).code, 2);
}

TEST_F(CliTest, DataErrorsExitOne) {
  synthaudit::WriteFile(Path("broken.csv"), "x,y\n1,oops\n");
  const Outcome o = Cli("metrics " + Inputs() + " --synth " + Path("broken.csv"));
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.out.find("column 'y'"), std::string::npos) << o.out;
  EXPECT_EQ(Cli("metrics " + Inputs() + " --synth " + Path("absent.csv")).code,
            1);
}

TEST_F(CliTest, UnknownSubcommandIsUsageError) {
  EXPECT_EQ(Cli("frobnicate").code, 2);
  EXPECT_EQ(Cli("basecase 7z").code, 2);
}

TEST_F(CliTest, BasecasesReportExpectations) {
  const Outcome b = Cli("basecase 6b");
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("all_pass: true"), std::string::npos);
  EXPECT_NE(b.out.find("exact_test_matches: 10/10"), std::string::npos);
  EXPECT_NE(b.out.find("expectation: met"), std::string::npos);
  EXPECT_EQ(Cli("basecase 6c").code, 0);
  EXPECT_EQ(Cli("basecase 6a --epsilon 0.5").code, 0);
}

TEST_F(CliTest, AttacksPrintJson) {
  const std::string train_only =
      "--schema " + Path("schema.json") + " --train " + Path("train.csv");
  const Outcome d = Cli("attack differencing " + train_only +
                        " --pipeline overfit --trials 200 --target-row 0");
  ASSERT_EQ(d.code, 0) << d.out;
  EXPECT_NE(d.out.find("\"kind\": \"differencing\""), std::string::npos);
  const Outcome a =
      Cli("attack aia " + Inputs() + " --synth " + Path("synth.csv") +
          " --k 3");
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_NE(a.out.find("\"kind\": \"aia\""), std::string::npos);
  EXPECT_EQ(Cli("attack differencing " + train_only + " --trials 99").code, 2);
}

TEST_F(CliTest, AuditIsByteIdenticalAcrossRuns) {
  const std::string base = "audit " + Inputs() +
                           " --pipeline dp --epsilon 1 --trials 200 "
                           "--n-shadow 20 --seed 11 --out ";
  ASSERT_EQ(Cli(base + Path("r1.json")).code, 0);
  ASSERT_EQ(Cli(base + Path("r2.json")).code, 0);
  const std::string a = synthaudit::ReadFile(Path("r1.json"));
  EXPECT_EQ(a, synthaudit::ReadFile(Path("r2.json")));
  EXPECT_NE(a.find("\"summary\""), std::string::npos);
}

TEST_F(CliTest, AuditMarkdown) {
  const Outcome o = Cli("audit " + Inputs() +
                        " --pipeline copy-test --trials 100 --n-shadow 20 "
                        "--format markdown");
  ASSERT_EQ(o.code, 0) << o.out;
  EXPECT_NE(o.out.find("| overall |"), std::string::npos) << o.out;
}

}  // namespace
