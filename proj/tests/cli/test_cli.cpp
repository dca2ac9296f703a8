//------------------------------------------------------------------------------
//
//   Copyright 2026 The contracert Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run
{
  int         exit_code{-1};
  std::string out;
};

Run run_cli(std::string const &args)
{
  std::string const cmd = std::string("cd '") + CONTRACERT_CORPUS_DIR + "' && '" + CONTRACERT_CLI + "' " + args +
                          " 2>/dev/null";
  Run   r;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr)
  {
    return r;
  }
  std::array<char, 4096> buf{};
  std::size_t            n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
  {
    r.out.append(buf.data(), n);
  }
  int const status = pclose(pipe);
  r.exit_code      = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct Case
{
  int         expected;
  std::string args;
};

std::vector<Case> load_cases()
{
  std::ifstream     in(CONTRACERT_CASES_FILE);
  std::vector<Case> cases;
  std::string       line;
  while (std::getline(in, line))
  {
    if (line.empty() || line.front() == '#')
    {
      continue;
    }
    auto const bar = line.find('|');
    cases.push_back({std::stoi(line.substr(0, bar)), line.substr(bar + 1)});
  }
  return cases;
}

}  // namespace

TEST(CliCorpus, ExitCodes)
{
  auto const cases = load_cases();
  ASSERT_GE(cases.size(), 20U);
  for (auto const &c : cases)
  {
    EXPECT_EQ(run_cli("--no-timestamp" + c.args).exit_code, c.expected) << c.args;
  }
}

TEST(CliCorpus, SeededCommandsAreByteIdentical)
{
  std::vector<std::string> const commands{
      "--no-timestamp demo implication-lattice --seed 5",
      "--no-timestamp demo main-theorem --seed 5",
      "--no-timestamp demo two-cycle --seed 9",
      "--no-timestamp falsify --target admissibility --phi phi_shifted:1 --budget 3000 --seed 11",
      "--no-timestamp falsify --target admissibility --phi phi_saturating --budget 3000 --seed 11",
      "--no-timestamp classify --space space_plane_manhattan.json --map map_chain4.json",
      "--no-timestamp --format json iterate --map map_halving.json --cauchy 0.5",
  };
  for (auto const &cmd : commands)
  {
    auto const a = run_cli(cmd);
    auto const b = run_cli(cmd);
    ASSERT_FALSE(a.out.empty()) << cmd;
    EXPECT_EQ(a.out, b.out) << cmd;
    auto const threaded = run_cli("--threads 4 " + cmd);
    EXPECT_EQ(a.out, threaded.out) << cmd;
  }
}

TEST(CliCorpus, TimestampOnlyWithoutFlag)
{
  EXPECT_NE(run_cli("demo bounded-transform").out.find("\"timestamp\""), std::string::npos);
  EXPECT_EQ(run_cli("--no-timestamp demo bounded-transform").out.find("\"timestamp\""), std::string::npos);
}

TEST(CliCorpus, IterateCsv)
{
  auto const r = run_cli("iterate --map map_halving.json");
  ASSERT_EQ(r.exit_code, 0);
  std::istringstream in(r.out);
  std::string        line;
  std::getline(in, line);
  EXPECT_EQ(line, "step,point,step_dist");
  std::size_t rows = 0;
  while (std::getline(in, line))
  {
    ++rows;
  }
  EXPECT_EQ(rows, 22U);
  EXPECT_NE(r.out.find("\n21,0,0\n"), std::string::npos);
}

TEST(CliCorpus, ClassifyTextIsATable)
{
  auto const r = run_cli("--no-timestamp --format text classify --space space_line3.json --map map_toward0.json");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("result.r_star: 0.5"), std::string::npos);
  EXPECT_NE(r.out.find("condition"), std::string::npos);
  EXPECT_NE(r.out.find("eta_alpha"), std::string::npos);
}

TEST(CliCorpus, AdmissibilityNotFound)
{
  auto const r = run_cli("--no-timestamp falsify --target admissibility --phi phi_linear:0.5 --budget 200");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\"found\": false"), std::string::npos);
}
