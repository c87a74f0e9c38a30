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

#include "commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "sweep.hpp"

namespace atanbounds::cli {

namespace {

const std::map<std::string, atb_grid> kGridNames{
    {"log", ATB_GRID_LOG}, {"uniform", ATB_GRID_UNIFORM}, {"mixed", ATB_GRID_MIXED}};

const std::map<std::string, atb_side> kSideNames{{"lower", ATB_LOWER}, {"upper", ATB_UPPER}};

// Library failures surface as this and map to exit code 2 or 1.
struct LibraryError : std::runtime_error {
  atb_status status;
  LibraryError(atb_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

// Accepts counts written as 100000 or 1e5 and rewrites them as plain integers.
const CLI::Validator kCount(
    [](std::string& text) -> std::string {
      double value = 0;
      const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || end != text.data() + text.size() || !(value >= 1) ||
          value > 1e15 || value != std::floor(value)) {
        return "expected a positive integer, got " + text;
      }
      text = std::to_string(static_cast<std::uint64_t>(value));
      return {};
    },
    "COUNT");

void check(atb_status status) {
  if (status != ATB_OK) throw LibraryError(status, atb_last_error());
}

void print_field(std::ostream& out, const char* name, double value) {
  out << std::left << std::setw(15) << name << "= " << format_number(value) << '\n';
}

int cmd_eval(double x, std::ostream& out) {
  atb_sample s;
  atb_evaluate_sample(x, &s);
  const atb_certified mid = atb_midpoint_arctan(x);
  print_field(out, "x", s.x);
  print_field(out, "f", s.f);
  print_field(out, "g", s.g);
  print_field(out, "h", s.h);
  print_field(out, "delta_f", s.delta_f);
  print_field(out, "delta_h", s.delta_h);
  print_field(out, "r_f", s.r_f);
  print_field(out, "r_h", s.r_h);
  print_field(out, "env_max", s.env_max);
  print_field(out, "env_min", s.env_min);
  print_field(out, "midpoint", mid.value);
  print_field(out, "midpoint_error", mid.error);
  return kSuccess;
}

std::string svg_path_for(const std::string& csv_path) {
  const auto dot = csv_path.find_last_of('.');
  const auto slash = csv_path.find_last_of('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
    return csv_path.substr(0, dot) + ".svg";
  }
  return csv_path + ".svg";
}

int cmd_sweep(double lo, double hi, std::size_t n, atb_grid grid, const std::string& out_path,
              bool plot, std::ostream& out, std::ostream& err) {
  if (plot && out_path.empty()) {
    err << "sweep: --plot needs --out PATH\n";
    return kUsage;
  }
  const std::vector<SweepRow> rows = compute_sweep(lo, hi, n, grid);
  if (out_path.empty()) {
    write_sweep_csv(rows, out);
    return kSuccess;
  }
  {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "sweep: cannot open " << out_path << " for writing\n";
      return kFailure;
    }
    write_sweep_csv(rows, file);
    if (!file.flush()) {
      err << "sweep: error writing " << out_path << '\n';
      return kFailure;
    }
  }
  out << "wrote " << rows.size() << " rows to " << out_path << '\n';
  if (plot) {
    const std::string svg_path = svg_path_for(out_path);
    std::ofstream file(svg_path, std::ios::binary);
    if (!file) {
      err << "sweep: cannot open " << svg_path << " for writing\n";
      return kFailure;
    }
    write_sweep_svg(rows, grid == ATB_GRID_LOG, file);
    if (!file.flush()) {
      err << "sweep: error writing " << svg_path << '\n';
      return kFailure;
    }
    out << "wrote plot to " << svg_path << '\n';
  }
  return kSuccess;
}

int cmd_certify(double lo, double hi, std::size_t n, atb_grid grid,
                const std::optional<Perturbation>& perturbation, int oracle_digits,
                const std::string& out_path, std::ostream& out, std::ostream& err) {
  atb_certify_options options;
  atb_certify_options_init(&options);
  options.grid = grid;
  options.oracle_digits = oracle_digits;
  if (perturbation) {
    atb_coefficients& c = perturbation->side == ATB_LOWER ? options.lower : options.upper;
    double* component[] = {&c.c1, &c.c2, &c.c3};
    *component[perturbation->component - 1] *= 1 + perturbation->epsilon;
  }

  atb_report* raw = nullptr;
  check(atb_certify_range(lo, hi, n, &options, &raw));
  const std::unique_ptr<atb_report, decltype(&atb_report_free)> report(raw, &atb_report_free);

  atb_report_summary summary;
  check(atb_report_summary_get(report.get(), &summary));
  if (perturbation) {
    const atb_coefficients& c = perturbation->side == ATB_LOWER ? options.lower : options.upper;
    out << "perturbed " << (perturbation->side == ATB_LOWER ? "lower" : "upper") << " triple: ("
        << format_number(c.c1) << ", " << format_number(c.c2) << ", " << format_number(c.c3)
        << ")\n";
  }
  out << atb_report_render(report.get(), ATB_REPORT_TEXT);
  if (!summary.passed) {
    const bool lower_failed = summary.worst_lower_margin < -summary.tolerance;
    const bool upper_failed = summary.worst_upper_margin < -summary.tolerance;
    if (lower_failed) out << "witness: lower bound exceeds arctan at x = "
                          << format_number(summary.worst_lower_x) << '\n';
    if (upper_failed) out << "witness: upper bound falls below arctan at x = "
                          << format_number(summary.worst_upper_x) << '\n';
  }
  if (!out_path.empty() && atb_report_write(report.get(), ATB_REPORT_CSV, out_path.c_str()) != ATB_OK) {
    err << "certify: " << atb_last_error() << '\n';
    return kFailure;
  }
  return summary.passed ? kSuccess : kFailure;
}

int cmd_maxerr(atb_side side, std::size_t scan_points, int oracle_digits, std::ostream& out) {
  double x_star = 0;
  double r_star = 0;
  check(atb_find_max_relative_error(side, scan_points, oracle_digits, &x_star, &r_star));
  print_field(out, "x_star", x_star);
  print_field(out, "r_star", r_star);
  print_field(out, "env_max(x_star)", atb_envelope_max(x_star));
  return kSuccess;
}

int cmd_series_check(const std::string& which, int oracle_digits, std::ostream& out) {
  std::vector<std::pair<std::string, atb_bound_kind>> kinds;
  if (which == "lower" || which == "all") kinds.emplace_back("lower", ATB_SHARP_LOWER);
  if (which == "upper" || which == "all") kinds.emplace_back("upper", ATB_SHARP_UPPER);
  if (which == "reference" || which == "all") kinds.emplace_back("reference", ATB_REFERENCE);

  bool all_passed = true;
  out << std::left << std::setw(10) << "kind" << std::setw(6) << "coef" << std::setw(26)
      << "expected" << std::setw(26) << "measured" << std::setw(14) << "rel_gap"
      << "status\n";
  for (const auto& [name, kind] : kinds) {
    atb_series_report* raw = nullptr;
    check(atb_verify_series(kind, oracle_digits, &raw));
    const std::unique_ptr<atb_series_report, decltype(&atb_series_report_free)> report(
        raw, &atb_series_report_free);
    for (std::size_t i = 0; i < atb_series_report_size(report.get()); ++i) {
      atb_series_entry e;
      check(atb_series_report_entry(report.get(), i, &e));
      all_passed = all_passed && e.passed;
      std::ostringstream gap;
      gap << std::setprecision(3) << std::scientific << e.relative_gap;
      out << std::left << std::setw(10) << name << std::setw(6) << e.name << std::setw(26)
          << format_number(e.expected) << std::setw(26) << format_number(e.measured)
          << std::setw(14) << gap.str() << (e.passed ? "ok" : "FAIL") << '\n';
    }
  }
  return all_passed ? kSuccess : kFailure;
}

// Sign-random, magnitude log-uniform over [1e-6, 1e6]. The mapping from
// mt19937_64 output to double is spelled out so it does not depend on the
// standard library's distribution implementations.
std::vector<double> bench_inputs(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> xs(n);
  for (double& x : xs) {
    const std::uint64_t bits = rng();
    const double unit = static_cast<double>(bits >> 11) * 0x1.0p-53;
    const double magnitude = std::pow(10.0, -6.0 + 12.0 * unit);
    x = (bits & 1u) != 0 ? -magnitude : magnitude;
  }
  return xs;
}

int cmd_bench(std::size_t n, std::uint64_t seed, std::ostream& out) {
  const std::vector<double> xs = bench_inputs(n, seed);
  struct Row {
    const char* name;
    std::function<double(double)> fn;
  };
  const Row rows[] = {
      {"lower_bound", [](double x) { return atb_lower_bound(x); }},
      {"upper_bound", [](double x) { return atb_upper_bound(x); }},
      {"midpoint_arctan", [](double x) { return atb_midpoint_arctan(x).value; }},
      {"platform_arctan", [](double x) { return atb_reference_arctan(x); }},
  };
  out << std::left << std::setw(18) << "function" << std::setw(12) << "ns/call"
      << "checksum\n";
  for (const Row& row : rows) {
    double checksum = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const double x : xs) checksum += row.fn(x);
    const auto stop = std::chrono::steady_clock::now();
    const double ns = std::chrono::duration<double, std::nano>(stop - start).count() /
                      static_cast<double>(xs.size());
    std::ostringstream timing;
    timing << std::fixed << std::setprecision(2) << ns;
    out << std::left << std::setw(18) << row.name << std::setw(12) << timing.str()
        << format_number(checksum) << '\n';
  }
  return kSuccess;
}

}  // namespace

Perturbation parse_perturbation(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos) {
    throw std::invalid_argument("expected WHICH:COMPONENT:EPS, got '" + text + "'");
  }
  Perturbation p;
  const std::string which = text.substr(0, first);
  const auto side = kSideNames.find(which);
  if (side == kSideNames.end()) throw std::invalid_argument("WHICH must be lower or upper");
  p.side = side->second;
  const std::string component = text.substr(first + 1, second - first - 1);
  if (component != "1" && component != "2" && component != "3") {
    throw std::invalid_argument("COMPONENT must be 1, 2 or 3");
  }
  p.component = component[0] - '0';
  const std::string eps = text.substr(second + 1);
  std::size_t used = 0;
  try {
    p.epsilon = std::stod(eps, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != eps.size() || !std::isfinite(p.epsilon) || p.epsilon <= -1) {
    throw std::invalid_argument("EPS must be a finite number greater than -1");
  }
  return p;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sharp Shafer-type bounds for arctan: evaluation and certification"};
  app.require_subcommand(1);

  double x = 0;
  auto* eval = app.add_subcommand("eval", "Print bounds, errors and envelopes at one point");
  eval->add_option("x", x, "Argument")->required();

  double lo = 0;
  double hi = 0;
  std::size_t n = 0;
  std::string grid_name;
  std::string out_path;
  bool plot = false;
  std::string perturb;
  int oracle_digits = 50;

  auto* sweep = app.add_subcommand("sweep", "Write a CSV table of the bounds over a grid");
  sweep->add_option("lo", lo)->required();
  sweep->add_option("hi", hi)->required();
  sweep->add_option("n", n)->required()->transform(kCount);
  sweep->add_option("--grid", grid_name, "log, uniform or mixed (default uniform)")
      ->check(CLI::IsMember({"log", "uniform", "mixed"}));
  sweep->add_option("--out", out_path, "CSV path; stdout when absent");
  sweep->add_flag("--plot", plot, "Also write an SVG next to the CSV");

  auto* certify = app.add_subcommand("certify", "Check the double inequality over a range");
  certify->add_option("lo", lo)->required();
  certify->add_option("hi", hi)->required();
  certify->add_option("n", n)->required()->transform(kCount);
  certify->add_option("--grid", grid_name, "log, uniform or mixed (default log if lo > 0, else mixed)")
      ->check(CLI::IsMember({"log", "uniform", "mixed"}));
  certify->add_option("--perturb", perturb, "Scale one coefficient: WHICH:COMPONENT:EPS");
  certify->add_option("--oracle-digits", oracle_digits, "Oracle precision in decimal digits")
      ->check(CLI::Range(20, 10000));
  certify->add_option("--out", out_path, "Also write the report as CSV");

  std::string kind;
  std::size_t scan_points = 10000;
  auto* maxerr = app.add_subcommand("maxerr", "Locate the maximum relative error of a bound");
  maxerr->add_option("kind", kind, "lower or upper")
      ->required()
      ->check(CLI::IsMember({"lower", "upper"}));
  maxerr->add_option("--scan", scan_points, "Coarse scan points")->transform(kCount);
  maxerr->add_option("--oracle-digits", oracle_digits)->check(CLI::Range(20, 10000));

  std::string series_kind = "all";
  auto* series = app.add_subcommand("series-check", "Measure expansion coefficients numerically");
  series->add_option("kind", series_kind, "lower, upper, reference or all")
      ->check(CLI::IsMember({"lower", "upper", "reference", "all"}));
  series->add_option("--oracle-digits", oracle_digits)->check(CLI::Range(20, 10000));

  std::size_t bench_n = 0;
  std::uint64_t seed = 0;
  auto* bench = app.add_subcommand("bench", "Time the kernels on seeded random inputs");
  bench->add_option("n", bench_n)->required()->transform(kCount);
  bench->add_option("seed", seed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    if (!app.get_subcommands().empty()) {
      err << app.get_subcommands().front()->help();
    } else {
      err << app.help();
    }
    return kUsage;
  }

  try {
    const atb_grid grid = grid_name.empty() ? ATB_GRID_AUTO : kGridNames.at(grid_name);
    if (eval->parsed()) return cmd_eval(x, out);
    if (sweep->parsed()) {
      return cmd_sweep(lo, hi, n, grid == ATB_GRID_AUTO ? ATB_GRID_UNIFORM : grid, out_path, plot,
                       out, err);
    }
    if (certify->parsed()) {
      std::optional<Perturbation> perturbation;
      if (!perturb.empty()) perturbation = parse_perturbation(perturb);
      return cmd_certify(lo, hi, n, grid, perturbation, oracle_digits, out_path, out, err);
    }
    if (maxerr->parsed()) return cmd_maxerr(kSideNames.at(kind), scan_points, oracle_digits, out);
    if (series->parsed()) return cmd_series_check(series_kind, oracle_digits, out);
    if (bench->parsed()) return cmd_bench(bench_n, seed, out);
  } catch (const LibraryError& e) {
    err << "error: " << e.what() << '\n';
    return e.status == ATB_ERR_INVALID_ARGUMENT || e.status == ATB_ERR_DOMAIN ? kUsage : kFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace atanbounds::cli
