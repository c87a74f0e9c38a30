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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "atanbounds/atanbounds.h"

namespace {

constexpr double kPi = 3.141592653589793;

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::string(atb_version()) == "1.0.0");
  CHECK(std::string(atb_status_string(ATB_OK)) == "ok");
  CHECK(std::string(atb_status_string(static_cast<atb_status>(99))) == "unknown status");
}

TEST_CASE("scalar functions") {
  CHECK(atb_lower_bound(0) == 0);
  CHECK(atb_lower_bound(1) < kPi / 4);
  CHECK(atb_upper_bound(1) > kPi / 4);
  CHECK(atb_reference_arctan(1) == kPi / 4);
  CHECK(atb_delta_f(1) > 0);
  CHECK(atb_delta_h(1) > 0);
  CHECK(atb_relative_error(ATB_LOWER, 1) == doctest::Approx(0.0025340083).epsilon(1e-8));
  CHECK(std::isnan(atb_relative_error(static_cast<atb_side>(7), 1)));
  CHECK(atb_envelope_max(1) > atb_envelope_min(1));

  atb_sample s;
  atb_evaluate_sample(-2, &s);
  CHECK(s.x == -2);
  CHECK(s.f == atb_lower_bound(-2));
  CHECK(s.h == atb_upper_bound(-2));
  atb_evaluate_sample(1, nullptr);

  double lo = 0, hi = 0;
  atb_pi_squared_bounds(&lo, &hi);
  CHECK(lo == 29.0 / 3);
  CHECK(hi == 10.0);
  double yf = 0, yh = 0;
  atb_discriminant_values(&yf, &yh);
  CHECK(yf > 0);
  CHECK(yh > 0);
}

TEST_CASE("coefficients and derivatives") {
  atb_coefficients c;
  REQUIRE(atb_resolve_coefficients(ATB_SHARP_LOWER, &c) == ATB_OK);
  CHECK(c.c1 == doctest::Approx(4 / (kPi * kPi)));
  CHECK(atb_resolve_coefficients(ATB_CUSTOM, &c) == ATB_ERR_INVALID_ARGUMENT);
  CHECK(atb_resolve_coefficients(ATB_SHARP_LOWER, nullptr) == ATB_ERR_NULL_POINTER);

  REQUIRE(atb_resolve_coefficients(ATB_SHARP_LOWER, &c) == ATB_OK);
  double v = 0;
  REQUIRE(atb_eval_shafer(&c, 1, &v) == ATB_OK);
  CHECK(v == atb_lower_bound(1));
  REQUIRE(atb_first_derivative(&c, 0, &v) == ATB_OK);
  CHECK(v == doctest::Approx(1.0));
  REQUIRE(atb_second_derivative(&c, 0, &v) == ATB_OK);
  CHECK(v == 0);

  const atb_coefficients bad{1, -1, 1};
  CHECK(atb_eval_shafer(&bad, 1, &v) == ATB_ERR_DOMAIN);
  CHECK(std::string(atb_last_error()).find("positive") != std::string::npos);
  CHECK(atb_eval_shafer(nullptr, 1, &v) == ATB_ERR_NULL_POINTER);

  double roots[3];
  REQUIRE(atb_critical_points(ATB_UPPER, roots) == ATB_OK);
  CHECK(roots[1] == 0);
  CHECK(roots[2] == doctest::Approx(4.136812270029375));
  CHECK(std::fabs(atb_difference_slope(ATB_UPPER, roots[2])) < 1e-10);

  atb_series s;
  REQUIRE(atb_series_coefficients(ATB_REFERENCE, &s) == ATB_OK);
  CHECK(s.taylor[2] == 0.2);
  CHECK(s.asymptotic_orders[2] == 3);
  REQUIRE(atb_series_coefficients(ATB_SHARP_UPPER, &s) == ATB_OK);
  CHECK(s.taylor[1] == doctest::Approx(-1.0 / 3));
  CHECK(atb_series_coefficients(ATB_CUSTOM, &s) == ATB_ERR_UNSUPPORTED);
}

TEST_CASE("kernels") {
  const atb_certified m = atb_midpoint_arctan(1);
  CHECK(std::fabs(m.value - kPi / 4) <= m.error * kPi / 4);
  atb_certified a;
  REQUIRE(atb_atan2_approx(0, -1, &a) == ATB_OK);
  CHECK(a.value == kPi);
  CHECK(a.error == 0);
  CHECK(atb_atan2_approx(0, 0, &a) == ATB_ERR_DOMAIN);
  CHECK(atb_atan2_approx(1, 1, nullptr) == ATB_ERR_NULL_POINTER);
}

TEST_CASE("grid sizing") {
  std::size_t count = 0;
  REQUIRE(atb_make_grid(-1, 1, 11, ATB_GRID_UNIFORM, nullptr, 0, &count) == ATB_OK);
  CHECK(count == 11);
  std::vector<double> xs(count);
  REQUIRE(atb_make_grid(-1, 1, 11, ATB_GRID_UNIFORM, xs.data(), xs.size(), &count) == ATB_OK);
  CHECK(xs.front() == -1);
  CHECK(xs[5] == 0);
  CHECK(xs.back() == 1);
  CHECK(atb_make_grid(1, -1, 11, ATB_GRID_UNIFORM, nullptr, 0, &count) ==
        ATB_ERR_INVALID_ARGUMENT);
  CHECK(atb_make_grid(-1, 1, 11, static_cast<atb_grid>(9), nullptr, 0, &count) ==
        ATB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("certification report lifecycle") {
  atb_report* report = nullptr;
  REQUIRE(atb_certify_range(0, 10, 10, nullptr, &report) == ATB_OK);
  atb_report_summary summary;
  REQUIRE(atb_report_summary_get(report, &summary) == ATB_OK);
  CHECK(summary.passed);
  CHECK(summary.grid == ATB_GRID_MIXED);
  CHECK(summary.sample_count >= 10);

  const std::string text = atb_report_render(report, ATB_REPORT_TEXT);
  CHECK(text.find("result: PASS") != std::string::npos);
  CHECK(std::string(atb_report_render(report, ATB_REPORT_CSV)).rfind("lo,hi,", 0) == 0);

  const auto path = std::filesystem::temp_directory_path() / "atanbounds_capi_report.txt";
  REQUIRE(atb_report_write(report, ATB_REPORT_TEXT, path.c_str()) == ATB_OK);
  CHECK(slurp(path) == text);
  std::filesystem::remove(path);
  CHECK(atb_report_write(report, ATB_REPORT_TEXT, "/nonexistent-dir/report.txt") == ATB_ERR_IO);
  CHECK(std::string(atb_last_error()).find("/nonexistent-dir/report.txt") != std::string::npos);
  atb_report_free(report);
  atb_report_free(nullptr);

  atb_certify_options options;
  atb_certify_options_init(&options);
  options.lower.c1 *= 1 - 1e-3;
  REQUIRE(atb_certify_range(0, 10, 100, &options, &report) == ATB_OK);
  REQUIRE(atb_report_summary_get(report, &summary) == ATB_OK);
  CHECK_FALSE(summary.passed);
  atb_report_free(report);

  options.oracle_digits = 5;
  CHECK(atb_certify_range(0, 10, 100, &options, &report) == ATB_ERR_INVALID_ARGUMENT);
  CHECK(atb_certify_range(0, 10, 1, nullptr, &report) == ATB_ERR_INVALID_ARGUMENT);
  CHECK(atb_certify_range(0, 10, 10, nullptr, nullptr) == ATB_ERR_NULL_POINTER);
}

TEST_CASE("search, probes, series and shape") {
  double x_star = 0, r_star = 0;
  REQUIRE(atb_find_max_relative_error(ATB_LOWER, 0, 0, &x_star, &r_star) == ATB_OK);
  CHECK(r_star < 0.0027);
  CHECK(x_star == doctest::Approx(1.281474).epsilon(1e-6));

  atb_sharpness p;
  REQUIRE(atb_probe_sharpness(ATB_LOWER, 2, 1e-2, 1000, 0, &p) == ATB_OK);
  CHECK((p.has_scan_witness || p.has_asymptotic_witness));
  CHECK(atb_probe_sharpness(ATB_LOWER, 5, 1e-2, 1000, 0, &p) == ATB_ERR_INVALID_ARGUMENT);
  atb_coefficients c;
  REQUIRE(atb_resolve_coefficients(ATB_CLASSIC_SHAFER, &c) == ATB_OK);
  REQUIRE(atb_probe_coefficients(ATB_LOWER, &c, 1000, 0, &p) == ATB_OK);
  CHECK_FALSE(p.has_scan_witness);
  CHECK_FALSE(p.has_asymptotic_witness);

  atb_series_report* series = nullptr;
  REQUIRE(atb_verify_series(ATB_SHARP_LOWER, 0, &series) == ATB_OK);
  REQUIRE(atb_series_report_size(series) == 6);
  atb_series_entry e;
  REQUIRE(atb_series_report_entry(series, 0, &e) == ATB_OK);
  CHECK(std::string(e.name) == "a1");
  CHECK(e.passed);
  CHECK(atb_series_report_entry(series, 6, &e) == ATB_ERR_INVALID_ARGUMENT);
  atb_series_report_free(series);
  CHECK(atb_verify_series(ATB_CUSTOM, 0, &series) == ATB_ERR_UNSUPPORTED);

  atb_shape_report shape;
  REQUIRE(atb_verify_shape_properties(ATB_SHARP_UPPER, nullptr, 500, &shape) == ATB_OK);
  CHECK(shape.passed);
  CHECK(shape.critical_point_matches);
  CHECK(atb_verify_shape_properties(ATB_CUSTOM, nullptr, 500, &shape) == ATB_ERR_NULL_POINTER);
}
