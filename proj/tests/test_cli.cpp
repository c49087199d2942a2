// Copyright 2026 The qeb Authors
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

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "qeb/cli.hpp"
#include "support.hpp"

using namespace qeb;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

// Lines after the comment header.
std::vector<std::string> body(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& line : lines_of(text)) {
    if (line.empty() || line[0] != '#') out.push_back(line);
  }
  return out;
}

}  // namespace

TEST_CASE("grid parsing") {
  CHECK(cli::parse_grid("0:1:0.25") == std::vector<double>{0, 0.25, 0.5, 0.75, 1.0});
  CHECK(cli::parse_grid("0:0.5:0.05").size() == 11);
  CHECK_THROWS(cli::parse_grid("0:1"));
  CHECK_THROWS(cli::parse_grid("0:1:0"));
  CHECK_THROWS(cli::parse_grid("1:0:0.1"));
}

TEST_CASE("header lines") {
  const Result r = run_cli({"bound", "--kind", "css2m", "--m", "5", "--p", "0.1"});
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() >= 6);
  CHECK(lines[0] == "# qeb " + std::string(cli::kVersion));
  CHECK(lines[1] == "# command: bound");
  CHECK(lines[2].rfind("# flags: ", 0) == 0);
  CHECK(lines[2].find("--m=5") != std::string::npos);
  CHECK(lines[3] == "# seed: none");
  CHECK(lines[4] == "kind,m,p,bound");
}

TEST_CASE("bound values") {
  const auto zero = body(run_cli({"bound", "--kind", "css2m", "--m", "5", "--p", "0.5"}).out);
  REQUIRE(zero.size() == 2);
  CHECK(zero[1] == "css2m,5,0.5,0");
  const Result grid = run_cli({"bound", "--kind", "stab", "--m", "8", "--grid", "0:0.5:0.005"});
  CHECK(grid.code == 0);
  CHECK(body(grid.out).size() == 102);
  const Result wide = run_cli({"bound", "--kind", "stab", "--m", "8", "--grid", "0:1:0.01"});
  CHECK(wide.code != 0);
  CHECK(wide.out.empty());
}

TEST_CASE("threshold output") {
  const auto rows = body(run_cli({"threshold", "--kind", "css2m", "--m", "8", "--rate", "0.5"}).out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "m,kind,rate,threshold");
  CHECK(rows[1] == "8,css2m,0.500000000,0.215031266");
}

TEST_CASE("percolation table output") {
  const auto rows = body(run_cli({"perc-table", "--m-list", "5,20"}).out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "m,easy_lower,percolation_upper,capacity_2m");
  CHECK(rows[1].rfind("5,0.25,0.38", 0) == 0);
}

TEST_CASE("profiles are reproducible") {
  const std::vector<std::string> args{"profile", "--code", test::data_path("worked_example.stab"),
                                      "--mode", "mc", "--trials", "2000", "--seed", "7"};
  const Result a = run_cli(args);
  const Result b = run_cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(lines_of(a.out)[3] == "# seed: 7");
  const auto rows = body(a.out);
  CHECK(rows[0] == "p,phi,phi_stderr,delta,delta_stderr,rate_bound");
  CHECK(rows.size() == 12);

  const Result exact = run_cli({"profile", "--code", test::data_path("worked_example.stab"),
                                "--mode", "exact", "--grid", "0:0.5:0.25"});
  CHECK(exact.code == 0);
  CHECK(body(exact.out).size() == 4);
  // 40 positions are beyond exact enumeration.
  CHECK(run_cli({"profile", "--code", test::data_path("figure2.css"), "--mode", "exact",
                 "--view", "hx"}).code != 0);
}

TEST_CASE("percolation runs") {
  const std::vector<std::string> args{"percolate", "--code", test::data_path("figure2.css"),
                                      "--grid", "0:1:0.5", "--r", "2", "--trials", "500",
                                      "--seed", "3"};
  const Result a = run_cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == run_cli(args).out);
  const auto rows = body(a.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] ==
        "p,r,f_r,f_r_stderr,g_r,g_r_stderr,ep_fraction,ep_stderr,failure_rate,failure_stderr");
  CHECK(rows[1].rfind("0,2,0,0,0,0,0,0,0,0", 0) == 0);
}

TEST_CASE("verify suites") {
  const Result r = run_cli({"verify", "--suite", "series"});
  CHECK(r.code == 0);
  const auto rows = body(r.out);
  CHECK(rows[0] == "suite,check,checked,failures,value,status");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].find(",pass") != std::string::npos);
  const Result ex = run_cli({"verify", "--suite", "example"});
  CHECK(ex.code == 0);
  CHECK(ex.out.find("girth_x,0,0,4,info") != std::string::npos);
}

TEST_CASE("errors exit nonzero") {
  CHECK(run_cli({}).code != 0);
  CHECK(run_cli({"nope"}).code != 0);
  CHECK(run_cli({"bound", "--kind", "other", "--m", "5", "--p", "0.1"}).code != 0);
  CHECK(run_cli({"bound", "--kind", "css2m", "--m", "5", "--p", "1.5"}).code != 0);
  CHECK(run_cli({"profile", "--code", "/nonexistent/file"}).code != 0);
  const Result r = run_cli({"percolate", "--code", test::data_path("figure2.css"), "--p", "0.1"});
  CHECK(r.code != 0);
  CHECK(r.err.rfind("error: ", 0) == 0);
}
