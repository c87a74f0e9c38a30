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

#include "atanbounds/atanbounds.h"

#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <memory>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "atanbounds/approx_kernels.hpp"
#include "atanbounds/certification.hpp"
#include "atanbounds/core_bounds.hpp"
#include "atanbounds/report_io.hpp"

struct atb_report {
  atanbounds::CertificationReport report;
  mutable std::string text;
  mutable std::string csv;
};

struct atb_series_report {
  std::vector<atanbounds::SeriesCheckEntry> entries;
};

namespace {

using namespace atanbounds;

thread_local std::string last_error;

atb_status fail(atb_status status, const char* message) {
  last_error = message;
  return status;
}

// Maps the exception currently in flight onto a status code.
atb_status translate_exception() {
  try {
    throw;
  } catch (const std::domain_error& e) {
    return fail(ATB_ERR_DOMAIN, e.what());
  } catch (const std::out_of_range& e) {
    return fail(ATB_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ATB_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ATB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ATB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ATB_ERR_INTERNAL, "unknown error");
  }
}

template <class Fn>
atb_status guarded(Fn&& fn) {
  try {
    fn();
    return ATB_OK;
  } catch (...) {
    return translate_exception();
  }
}

ShaferCoefficients to_cpp(const atb_coefficients& c) { return {c.c1, c.c2, c.c3}; }

atb_coefficients to_c(const ShaferCoefficients& c) { return {c.c1(), c.c2(), c.c3()}; }

Side to_side(atb_side side) {
  switch (side) {
    case ATB_LOWER:
      return Side::Lower;
    case ATB_UPPER:
      return Side::Upper;
  }
  throw std::invalid_argument("unknown side");
}

std::optional<Grid> to_grid(atb_grid grid) {
  switch (grid) {
    case ATB_GRID_AUTO:
      return std::nullopt;
    case ATB_GRID_LOG:
      return Grid::LogUniform;
    case ATB_GRID_UNIFORM:
      return Grid::Uniform;
    case ATB_GRID_MIXED:
      return Grid::Mixed;
  }
  throw std::invalid_argument("unknown grid");
}

atb_grid to_c(Grid grid) {
  switch (grid) {
    case Grid::LogUniform:
      return ATB_GRID_LOG;
    case Grid::Uniform:
      return ATB_GRID_UNIFORM;
    case Grid::Mixed:
      return ATB_GRID_MIXED;
  }
  return ATB_GRID_AUTO;
}

BoundKind to_kind(atb_bound_kind kind) {
  switch (kind) {
    case ATB_SHARP_LOWER:
      return BoundKind::SharpLower;
    case ATB_SHARP_UPPER:
      return BoundKind::SharpUpper;
    case ATB_CLASSIC_SHAFER:
      return BoundKind::ClassicShafer;
    case ATB_CUSTOM:
      return BoundKind::Custom;
    case ATB_REFERENCE:
      break;
  }
  throw std::invalid_argument("kind has no coefficient triple");
}

void fill(const SharpnessProbe& probe, atb_sharpness* out) {
  *out = atb_sharpness{};
  out->coefficients = to_c(probe.coefficients);
  out->has_scan_witness = probe.scan_witness.has_value();
  out->scan_witness = probe.scan_witness.value_or(0.0);
  out->scan_violation = probe.scan_violation;
  if (const auto& w = probe.asymptotic_witness) {
    out->has_asymptotic_witness = 1;
    out->asymptotic_at_infinity = w->at == LimitPoint::Infinity;
    out->asymptotic_order = w->order;
    out->bound_coefficient = w->bound_coefficient;
    out->arctan_coefficient = w->arctan_coefficient;
  }
}

ProbeOptions probe_options(size_t scan_points, int oracle_digits) {
  ProbeOptions options;
  if (scan_points != 0) options.scan_points = scan_points;
  if (oracle_digits != 0) options.oracle_digits = oracle_digits;
  return options;
}

#define ATB_REQUIRE(ptr)                                                 \
  do {                                                                   \
    if ((ptr) == nullptr) return fail(ATB_ERR_NULL_POINTER, #ptr " is null"); \
  } while (0)

}  // namespace

extern "C" {

const char* atb_version(void) { return "1.0.0"; }

const char* atb_status_string(atb_status status) {
  switch (status) {
    case ATB_OK:
      return "ok";
    case ATB_ERR_DOMAIN:
      return "domain error";
    case ATB_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case ATB_ERR_UNSUPPORTED:
      return "unsupported";
    case ATB_ERR_IO:
      return "i/o error";
    case ATB_ERR_NULL_POINTER:
      return "null pointer";
    case ATB_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* atb_last_error(void) { return last_error.c_str(); }

atb_status atb_resolve_coefficients(atb_bound_kind kind, atb_coefficients* out) {
  ATB_REQUIRE(out);
  if (kind == ATB_CUSTOM || kind == ATB_REFERENCE) {
    return fail(ATB_ERR_INVALID_ARGUMENT, "kind has no fixed coefficient triple");
  }
  return guarded([&] { *out = to_c(coefficients_for(to_kind(kind))); });
}

atb_status atb_eval_shafer(const atb_coefficients* c, double x, double* out) {
  ATB_REQUIRE(c);
  ATB_REQUIRE(out);
  return guarded([&] { *out = eval_shafer(to_cpp(*c), x); });
}

atb_status atb_first_derivative(const atb_coefficients* c, double x, double* out) {
  ATB_REQUIRE(c);
  ATB_REQUIRE(out);
  return guarded([&] { *out = first_derivative(to_cpp(*c), x); });
}

atb_status atb_second_derivative(const atb_coefficients* c, double x, double* out) {
  ATB_REQUIRE(c);
  ATB_REQUIRE(out);
  return guarded([&] { *out = second_derivative(to_cpp(*c), x); });
}

double atb_lower_bound(double x) { return lower_bound(x); }
double atb_upper_bound(double x) { return upper_bound(x); }
double atb_reference_arctan(double x) { return reference_arctan(x); }
double atb_delta_f(double x) { return delta_f(x); }
double atb_delta_h(double x) { return delta_h(x); }

double atb_difference_slope(atb_side side, double x) {
  if (side != ATB_LOWER && side != ATB_UPPER) return std::numeric_limits<double>::quiet_NaN();
  return difference_slope(side == ATB_LOWER ? Side::Lower : Side::Upper, x);
}

double atb_relative_error(atb_side side, double x) {
  if (side != ATB_LOWER && side != ATB_UPPER) return std::numeric_limits<double>::quiet_NaN();
  return relative_error(side == ATB_LOWER ? Side::Lower : Side::Upper, x);
}

double atb_envelope_max(double x) { return envelope_max(x); }
double atb_envelope_min(double x) { return envelope_min(x); }

void atb_evaluate_sample(double x, atb_sample* out) {
  if (out == nullptr) return;
  const EvaluationSample s = evaluate_sample(x);
  *out = {s.x, s.f_val, s.g_val, s.h_val, s.delta_f, s.delta_h, s.r_f, s.r_h, s.env_max, s.env_min};
}

atb_status atb_critical_points(atb_side side, double out[3]) {
  ATB_REQUIRE(out);
  return guarded([&] {
    const auto points = critical_points_delta(to_side(side));
    for (int i = 0; i < 3; ++i) out[i] = points[i];
  });
}

atb_status atb_series_coefficients(atb_bound_kind kind, atb_series* out) {
  ATB_REQUIRE(out);
  if (kind == ATB_CLASSIC_SHAFER || kind == ATB_CUSTOM) {
    return fail(ATB_ERR_UNSUPPORTED, "no series expansion is tabulated for this bound kind");
  }
  return guarded([&] {
    const SeriesCoefficients s =
        kind == ATB_REFERENCE ? reference_series_coefficients() : series_coefficients(to_kind(kind));
    for (int i = 0; i < 3; ++i) {
      out->taylor[i] = s.taylor[i];
      out->asymptotic[i] = s.asymptotic[i];
      out->asymptotic_orders[i] = s.asymptotic_orders[i];
    }
  });
}

void atb_pi_squared_bounds(double* lo, double* hi) {
  const auto [a, b] = pi_squared_bounds();
  if (lo != nullptr) *lo = a;
  if (hi != nullptr) *hi = b;
}

void atb_discriminant_values(double* y_lower, double* y_upper) {
  const auto [a, b] = discriminant_values();
  if (y_lower != nullptr) *y_lower = a;
  if (y_upper != nullptr) *y_upper = b;
}

atb_certified atb_midpoint_arctan(double x) {
  const CertifiedValue v = midpoint_arctan(x);
  return {v.value, v.error, v.absolute ? 1 : 0};
}

atb_status atb_atan2_approx(double y, double x, atb_certified* out) {
  ATB_REQUIRE(out);
  return guarded([&] {
    const CertifiedValue v = atan2_approx(y, x);
    *out = {v.value, v.error, v.absolute ? 1 : 0};
  });
}

atb_status atb_make_grid(double lo, double hi, size_t n, atb_grid grid, double* out,
                         size_t capacity, size_t* count) {
  ATB_REQUIRE(count);
  if (capacity > 0 && out == nullptr) return fail(ATB_ERR_NULL_POINTER, "out is null");
  return guarded([&] {
    const std::optional<Grid> g = to_grid(grid);
    const std::vector<double> xs = make_grid(lo, hi, n, g.value_or(default_grid(lo, hi)));
    *count = xs.size();
    for (size_t i = 0; i < xs.size() && i < capacity; ++i) out[i] = xs[i];
  });
}

void atb_certify_options_init(atb_certify_options* options) {
  if (options == nullptr) return;
  options->grid = ATB_GRID_AUTO;
  options->lower = to_c(ShaferCoefficients::sharp_lower());
  options->upper = to_c(ShaferCoefficients::sharp_upper());
  options->oracle_digits = ArctanOracle::default_digits;
}

atb_status atb_certify_range(double lo, double hi, size_t n, const atb_certify_options* options,
                             atb_report** out) {
  ATB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    CertifyOptions opts;
    if (options != nullptr) {
      opts.grid = to_grid(options->grid);
      opts.lower = to_cpp(options->lower);
      opts.upper = to_cpp(options->upper);
      opts.oracle_digits = options->oracle_digits;
    }
    auto report = std::make_unique<atb_report>();
    report->report = certify_range(lo, hi, n, opts);
    *out = report.release();
  });
}

void atb_report_free(atb_report* report) { delete report; }

atb_status atb_report_summary_get(const atb_report* report, atb_report_summary* out) {
  ATB_REQUIRE(report);
  ATB_REQUIRE(out);
  const CertificationReport& r = report->report;
  *out = {r.lo,
          r.hi,
          r.sample_count,
          to_c(r.grid),
          r.passed ? 1 : 0,
          r.tolerance,
          r.worst_lower_margin,
          r.worst_lower_x,
          r.worst_upper_margin,
          r.worst_upper_x,
          r.max_r_f,
          r.argmax_r_f,
          r.max_r_h,
          r.argmax_r_h,
          r.envelope_violations};
  return ATB_OK;
}

const char* atb_report_render(const atb_report* report, atb_report_format format) {
  if (report == nullptr) return "";
  if (format == ATB_REPORT_CSV) {
    if (report->csv.empty()) report->csv = format_report_csv(report->report);
    return report->csv.c_str();
  }
  if (report->text.empty()) report->text = format_report_text(report->report);
  return report->text.c_str();
}

atb_status atb_report_write(const atb_report* report, atb_report_format format, const char* path) {
  ATB_REQUIRE(report);
  ATB_REQUIRE(path);
  std::ofstream file(path, std::ios::binary);
  if (!file) return fail(ATB_ERR_IO, (std::string("cannot open ") + path).c_str());
  file << atb_report_render(report, format);
  file.close();
  if (!file) return fail(ATB_ERR_IO, (std::string("cannot write ") + path).c_str());
  return ATB_OK;
}

atb_status atb_find_max_relative_error(atb_side side, size_t scan_points, int oracle_digits,
                                       double* x_star, double* r_star) {
  ATB_REQUIRE(x_star);
  ATB_REQUIRE(r_star);
  return guarded([&] {
    MaxSearchOptions options;
    if (scan_points != 0) options.scan_points = scan_points;
    if (oracle_digits != 0) options.oracle_digits = oracle_digits;
    const MaxRelativeError result = find_max_relative_error(to_side(side), options);
    *x_star = result.x_star;
    *r_star = result.r_star;
  });
}

atb_status atb_probe_sharpness(atb_side side, int component, double epsilon, size_t scan_points,
                               int oracle_digits, atb_sharpness* out) {
  ATB_REQUIRE(out);
  return guarded([&] {
    fill(probe_sharpness(to_side(side), component, epsilon, probe_options(scan_points, oracle_digits)),
         out);
  });
}

atb_status atb_probe_coefficients(atb_side side, const atb_coefficients* c, size_t scan_points,
                                  int oracle_digits, atb_sharpness* out) {
  ATB_REQUIRE(c);
  ATB_REQUIRE(out);
  return guarded([&] {
    fill(probe_coefficients(to_side(side), to_cpp(*c), probe_options(scan_points, oracle_digits)),
         out);
  });
}

atb_status atb_verify_series(atb_bound_kind kind, int oracle_digits, atb_series_report** out) {
  ATB_REQUIRE(out);
  *out = nullptr;
  SeriesSubject subject;
  switch (kind) {
    case ATB_SHARP_LOWER:
      subject = SeriesSubject::SharpLower;
      break;
    case ATB_SHARP_UPPER:
      subject = SeriesSubject::SharpUpper;
      break;
    case ATB_REFERENCE:
      subject = SeriesSubject::Reference;
      break;
    default:
      return fail(ATB_ERR_UNSUPPORTED, "series checks exist for the sharp bounds and arctan only");
  }
  return guarded([&] {
    auto report = std::make_unique<atb_series_report>();
    report->entries =
        verify_series(subject, oracle_digits != 0 ? oracle_digits : ArctanOracle::default_digits);
    *out = report.release();
  });
}

size_t atb_series_report_size(const atb_series_report* report) {
  return report == nullptr ? 0 : report->entries.size();
}

atb_status atb_series_report_entry(const atb_series_report* report, size_t index,
                                   atb_series_entry* out) {
  ATB_REQUIRE(report);
  ATB_REQUIRE(out);
  if (index >= report->entries.size()) {
    return fail(ATB_ERR_INVALID_ARGUMENT, "series entry index out of range");
  }
  const SeriesCheckEntry& e = report->entries[index];
  *out = {e.name.c_str(), e.asymptotic ? 1 : 0, e.order,         e.expected,
          e.measured,     e.relative_gap,       e.passed ? 1 : 0};
  return ATB_OK;
}

void atb_series_report_free(atb_series_report* report) { delete report; }

atb_status atb_verify_shape_properties(atb_bound_kind kind, const atb_coefficients* custom,
                                       size_t n, atb_shape_report* out) {
  ATB_REQUIRE(out);
  if (kind == ATB_CUSTOM && custom == nullptr) {
    return fail(ATB_ERR_NULL_POINTER, "custom coefficients are required for ATB_CUSTOM");
  }
  return guarded([&] {
    std::optional<ShaferCoefficients> triple;
    if (kind == ATB_CUSTOM) triple = to_cpp(*custom);
    const ShapeReport r = verify_shape_properties(to_kind(kind), n, triple);
    *out = {r.points_per_sign,
            r.derivative_positive ? 1 : 0,
            r.concavity_sign ? 1 : 0,
            r.difference_checked ? 1 : 0,
            r.slope_sign_changes,
            r.located_critical_point,
            r.closed_form_critical_point,
            r.critical_point_matches ? 1 : 0,
            r.passed ? 1 : 0};
  });
}

}  // extern "C"
