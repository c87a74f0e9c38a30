// Copyright 2026 The atanbounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "commands.hpp"
#include "sweep.hpp"

using atanbounds::cli::run;

namespace {

constexpr double kPi = 3.141592653589793;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"atanbounds"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// "name = value" lines of the eval and maxerr output.
std::map<std::string, double> fields(const std::string& text) {
  std::map<std::string, double> m;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find("= ");
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq);
    key.erase(key.find_last_not_of(' ') + 1);
    m[key] = std::stod(line.substr(eq + 2));
  }
  return m;
}

std::vector<std::vector<double>> csv_rows(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("eval") {
  const auto r = invoke({"eval", "1"});
  REQUIRE(r.code == 0);
  const auto v = fields(r.out);
  CHECK(v.at("f") < kPi / 4);
  CHECK(v.at("h") > kPi / 4);
  CHECK(v.at("f") == atb_lower_bound(1));
  CHECK(v.at("h") == atb_upper_bound(1));
  CHECK(v.at("g") == kPi / 4);

  SUBCASE("zero") {
    for (const auto& [name, value] : fields(invoke({"eval", "0"}).out)) {
      CAPTURE(name);
      CHECK(value == 0);
    }
  }
  SUBCASE("point symmetry") {
    const auto plus = fields(invoke({"eval", "3"}).out);
    const auto minus = fields(invoke({"eval", "-3"}).out);
    for (const char* odd : {"x", "f", "g", "h", "delta_f", "delta_h", "midpoint"}) {
      CHECK(minus.at(odd) == -plus.at(odd));
    }
    for (const char* even : {"r_f", "r_h", "env_max", "env_min", "midpoint_error"}) {
      CHECK(minus.at(even) == plus.at(even));
    }
  }
  CHECK(invoke({"eval", "abc"}).code == 2);
  CHECK(invoke({"eval"}).code == 2);
}

TEST_CASE("sweep") {
  SUBCASE("two points") {
    const auto r = invoke({"sweep", "0", "10", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind(std::string(atanbounds::cli::kSweepHeader) + "\n", 0) == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0][0] == 0);
    CHECK(rows[1][0] == 10);
    CHECK(rows[1].size() == 8);
  }
  SUBCASE("plotted range stays under the lower ceiling") {
    const auto rows = csv_rows(invoke({"sweep", "0", "10", "1001"}).out);
    REQUIRE(rows.size() == 1001);
    double max_r_f = 0;
    for (const auto& row : rows) max_r_f = std::max(max_r_f, row[4]);
    CHECK(max_r_f < 0.0027);
    CHECK(max_r_f > 0.00266);
  }
  SUBCASE("log grid: arctan increases toward pi/2") {
    const auto rows = csv_rows(invoke({"sweep", "1", "1e6", "1e4", "--grid", "log"}).out);
    REQUIRE(rows.size() == 10000);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][2] > rows[i - 1][2]);
    CHECK(rows.back()[2] < kPi / 2);
    CHECK(rows.back()[2] > kPi / 2 - 1.1e-6);
  }
  SUBCASE("output is byte-identical across runs") {
    CHECK(invoke({"sweep", "-5", "7", "333", "--grid", "mixed"}).out ==
          invoke({"sweep", "-5", "7", "333", "--grid", "mixed"}).out);
  }
  SUBCASE("numbers round-trip") {
    for (const auto& row : csv_rows(invoke({"sweep", "0.1", "3", "50"}).out)) {
      CHECK(row[1] == atb_lower_bound(row[0]));
      CHECK(row[3] == atb_upper_bound(row[0]));
    }
  }
  SUBCASE("file and plot") {
    const auto dir = std::filesystem::temp_directory_path() / "atanbounds_cli_test";
    std::filesystem::create_directories(dir);
    const auto csv = dir / "curves.csv";
    const auto r = invoke({"sweep", "0", "10", "101", "--out", csv.c_str(), "--plot"});
    REQUIRE(r.code == 0);
    CHECK(slurp(csv) == invoke({"sweep", "0", "10", "101"}).out);
    const std::string svg = slurp(dir / "curves.svg");
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    std::filesystem::remove_all(dir);
  }
  SUBCASE("errors") {
    const auto unwritable = invoke({"sweep", "0", "10", "5", "--out", "/nonexistent-dir/a.csv"});
    CHECK(unwritable.code == 1);
    CHECK(unwritable.err.find("/nonexistent-dir/a.csv") != std::string::npos);
    CHECK(invoke({"sweep", "10", "0", "5"}).code == 2);
    CHECK(invoke({"sweep", "0", "10", "1"}).code == 2);
    CHECK(invoke({"sweep", "0", "10", "5", "--grid", "cubic"}).code == 2);
    CHECK(invoke({"sweep", "0", "10", "5", "--plot"}).code == 2);
  }
}

TEST_CASE("certify") {
  const auto wide = invoke({"certify", "-10", "10", "1e5"});
  CHECK(wide.code == 0);
  CHECK(wide.out.find("result: PASS") != std::string::npos);

  const auto small = invoke({"certify", "0", "10", "10"});
  CHECK(small.code == 0);
  CHECK(small.out.find("worst_lower_margin: ") != std::string::npos);
  CHECK(small.out.find("worst_upper_margin: ") != std::string::npos);

  const auto perturbed = invoke({"certify", "0", "10", "100", "--perturb", "lower:1:-1e-3"});
  CHECK(perturbed.code == 1);
  CHECK(perturbed.out.find("result: FAIL") != std::string::npos);
  CHECK(perturbed.out.find("witness: lower bound exceeds arctan at x = ") != std::string::npos);

  const auto upper = invoke({"certify", "1", "1e6", "1000", "--perturb", "upper:3:1e-2"});
  CHECK(upper.code == 1);
  CHECK(upper.out.find("witness: upper bound falls below arctan") != std::string::npos);

  SUBCASE("csv report") {
    const auto path = std::filesystem::temp_directory_path() / "atanbounds_certify.csv";
    REQUIRE(invoke({"certify", "0", "10", "10", "--out", path.c_str()}).code == 0);
    CHECK(slurp(path).rfind("lo,hi,grid,", 0) == 0);
    std::filesystem::remove(path);
  }
  CHECK(invoke({"certify", "0", "10", "10", "--oracle-digits", "80"}).code == 0);
  CHECK(invoke({"certify", "0", "10", "10", "--oracle-digits", "3"}).code == 2);
  CHECK(invoke({"certify", "0", "10", "10", "--perturb", "middle:1:0.1"}).code == 2);
  CHECK(invoke({"certify", "0", "10", "10", "--grid", "log"}).code == 2);
}

TEST_CASE("maxerr") {
  const auto lower = fields(invoke({"maxerr", "lower"}).out);
  CHECK(lower.at("r_star") < 0.0027);
  CHECK(lower.at("r_star") <= lower.at("env_max(x_star)"));
  const auto upper = fields(invoke({"maxerr", "upper"}).out);
  CHECK(upper.at("r_star") <= upper.at("env_max(x_star)"));
  CHECK(upper.at("r_star") == doctest::Approx(0.0023139224).epsilon(1e-8));
  CHECK(invoke({"maxerr", "middle"}).code == 2);
}

// Expected to fail: the true maximum of the upper bound's relative error is 0.0023139.
TEST_CASE("maxerr upper stays below 0.0023" * doctest::should_fail()) {
  CHECK(fields(invoke({"maxerr", "upper"}).out).at("r_star") < 0.0023);
}

TEST_CASE("series-check") {
  const auto r = invoke({"series-check"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 19);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(invoke({"series-check", "lower"}).code == 0);
  CHECK(invoke({"series-check", "custom"}).code == 2);
}

TEST_CASE("bench") {
  const auto first = invoke({"bench", "20000", "42"});
  REQUIRE(first.code == 0);
  std::istringstream lines(first.out);
  std::string line;
  std::vector<std::string> checksums;
  std::getline(lines, line);
  while (std::getline(lines, line)) checksums.push_back(line.substr(line.find_last_of(' ') + 1));
  CHECK(checksums.size() == 4);

  std::istringstream again(invoke({"bench", "20000", "42"}).out);
  std::getline(again, line);
  for (const auto& expected : checksums) {
    std::getline(again, line);
    CHECK(line.substr(line.find_last_of(' ') + 1) == expected);
  }
  CHECK(invoke({"bench", "1", "7"}).code == 0);
  CHECK(invoke({"bench", "0", "7"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  const auto help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("certify") != std::string::npos);
  CHECK(invoke({"certify", "--help"}).code == 0);
}

TEST_CASE("parse_perturbation") {
  using atanbounds::cli::parse_perturbation;
  const auto p = parse_perturbation("upper:2:1e-2");
  CHECK(p.side == ATB_UPPER);
  CHECK(p.component == 2);
  CHECK(p.epsilon == 1e-2);
  CHECK(parse_perturbation("lower:1:-1e-3").epsilon == -1e-3);
  for (const char* bad : {"", "lower", "lower:1", "lower:4:0.1", "lower:1:x", "lower:1:-1",
                          "lower:1:0.1x", "side:1:0.1", "lower:1:inf"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_perturbation(bad), std::invalid_argument);
  }
}
