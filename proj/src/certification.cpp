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

#include "atanbounds/certification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "atanbounds/constants.hpp"

namespace atanbounds {

namespace {

namespace k = constants;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMinNormal = std::numeric_limits<double>::min();
constexpr double kMixedDecades = 1e-12;

// n points from a to b (same sign, |a| < |b| not required) equally spaced in
// log|x|, endpoints exact.
void append_log_points(double a, double b, std::size_t n, std::vector<double>& out) {
  if (n == 1) {
    out.push_back(b);
    return;
  }
  const double log_a = std::log(std::fabs(a));
  const double span = std::log(std::fabs(b)) - log_a;
  const double sign = a < 0 ? -1.0 : 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      out.push_back(a);
    } else if (i + 1 == n) {
      out.push_back(b);
    } else {
      const double s = static_cast<double>(i) / static_cast<double>(n - 1);
      out.push_back(sign * std::exp(log_a + s * span));
    }
  }
}

void sort_unique(std::vector<double>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  // -0.0 and 0.0 compare equal; keep a single +0.
  for (double& x : xs) {
    if (x == 0) x = 0.0;
  }
}

// (r_f, r_h) at x with g from the oracle. r is even, so both come out >= 0
// for a valid pair of bounds on either side of the origin.
std::array<double, 2> oracle_relative_errors(const ArctanOracle& oracle, double x, double f,
                                             double h) {
  if (x == 0) return {0.0, 0.0};
  const std::array<double, 2> approx{f, h};
  std::array<double, 2> dev{};
  oracle.relative_deviations(x, approx, dev);
  return x > 0 ? std::array<double, 2>{-dev[0], dev[1]} : std::array<double, 2>{dev[0], -dev[1]};
}

double oracle_relative_error(const ArctanOracle& oracle, Side side, double x) {
  const double value = side == Side::Lower ? lower_bound(x) : upper_bound(x);
  const double dev = oracle.relative_deviation(x, value);
  return side == Side::Lower ? -dev : dev;
}

struct ScanPoint {
  double x;
  double r;
};

ScanPoint golden_section_max(const ArctanOracle& oracle, Side side, double a, double b,
                             double width) {
  constexpr double inv_phi = 0.6180339887498949;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double rc = oracle_relative_error(oracle, side, c);
  double rd = oracle_relative_error(oracle, side, d);
  while (b - a > width) {
    if (rc >= rd) {
      b = d;
      d = c;
      rd = rc;
      c = b - inv_phi * (b - a);
      rc = oracle_relative_error(oracle, side, c);
    } else {
      a = c;
      c = d;
      rc = rd;
      d = a + inv_phi * (b - a);
      rd = oracle_relative_error(oracle, side, d);
    }
    if (c >= d) break;  // bracket exhausted at double resolution
  }
  return rc >= rd ? ScanPoint{c, rc} : ScanPoint{d, rd};
}

// Relative tolerance under which two expansion coefficients count as equal.
constexpr double kCoefficientTolerance = 1e-12;

std::optional<AsymptoticWitness> compare_expansions(Side side, LimitPoint at,
                                                    const std::array<double, 3>& bound,
                                                    const std::array<double, 3>& arctan,
                                                    const std::array<int, 3>& orders) {
  for (std::size_t i = 0; i < 3; ++i) {
    const double diff = bound[i] - arctan[i];
    const double scale = std::max(std::fabs(bound[i]), std::fabs(arctan[i]));
    if (std::fabs(diff) <= kCoefficientTolerance * scale) continue;
    const bool wrong_side = side == Side::Lower ? diff > 0 : diff < 0;
    if (!wrong_side) return std::nullopt;
    return AsymptoticWitness{at, orders[i], bound[i], arctan[i]};
  }
  return std::nullopt;
}

// Error expansion c + k1 h^p1 + k2 h^p2 + ..., samples at h, h/2, h/4.
double richardson(const std::array<double, 3>& a, int p1, int p2) {
  const double w1 = std::ldexp(1.0, p1);
  const double w2 = std::ldexp(1.0, p2);
  const double r0 = (w1 * a[1] - a[0]) / (w1 - 1);
  const double r1 = (w1 * a[2] - a[1]) / (w1 - 1);
  return (w2 * r1 - r0) / (w2 - 1);
}

}  // namespace

Grid default_grid(double lo, double /*hi*/) noexcept {
  return lo > 0 ? Grid::LogUniform : Grid::Mixed;
}

std::vector<double> make_grid(double lo, double hi, std::size_t n, Grid grid) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw std::invalid_argument("grid range must be finite with lo < hi");
  }
  if (n < 2) throw std::invalid_argument("grid needs at least two points");

  const bool one_signed = lo > 0 || hi < 0;
  std::vector<double> xs;
  xs.reserve(n + 2);
  switch (grid) {
    case Grid::Uniform:
      for (std::size_t i = 0; i < n; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(n - 1);
        xs.push_back(i + 1 == n ? hi : lo * (1 - s) + hi * s);
      }
      if (lo < 0 && hi > 0) xs.push_back(0.0);
      break;
    case Grid::LogUniform:
      if (!one_signed) {
        throw std::invalid_argument("log-uniform grid needs a range that excludes 0");
      }
      append_log_points(lo, hi, n, xs);
      break;
    case Grid::Mixed: {
      if (one_signed) {
        append_log_points(lo, hi, n, xs);
        break;
      }
      xs.push_back(0.0);
      const std::size_t rest = n - 1;
      if (lo < 0 && hi > 0) {
        const std::size_t neg = std::max<std::size_t>(1, rest / 2);
        const std::size_t pos = std::max<std::size_t>(1, rest - rest / 2);
        append_log_points(lo, std::min(-kMinNormal, lo * kMixedDecades), neg, xs);
        append_log_points(std::max(kMinNormal, hi * kMixedDecades), hi, pos, xs);
      } else if (hi > 0) {
        append_log_points(std::max(kMinNormal, hi * kMixedDecades), hi, rest, xs);
      } else {
        append_log_points(lo, std::min(-kMinNormal, lo * kMixedDecades), rest, xs);
      }
      break;
    }
  }
  sort_unique(xs);
  return xs;
}

CertificationReport certify_range(double lo, double hi, std::size_t n,
                                  const CertifyOptions& options) {
  const Grid grid = options.grid.value_or(default_grid(lo, hi));
  const std::vector<double> xs = make_grid(lo, hi, n, grid);
  const ArctanOracle oracle(options.oracle_digits);
  const double tol = k::certification_margin;
  const bool sharp = options.lower == ShaferCoefficients::sharp_lower() &&
                     options.upper == ShaferCoefficients::sharp_upper();

  CertificationReport report;
  report.lo = lo;
  report.hi = hi;
  report.grid = grid;
  report.sample_count = xs.size();
  report.tolerance = tol;
  report.closed_form_envelopes = sharp;
  report.worst_lower_margin = kInf;
  report.worst_upper_margin = kInf;
  report.max_r_f = -kInf;
  report.max_r_h = -kInf;

  // Iteration is in ascending x and every update is strict, so ties resolve
  // toward the smaller x.
  for (const double x : xs) {
    const double f = eval_shafer(options.lower, x);
    const double h = eval_shafer(options.upper, x);
    const auto [r_f, r_h] = oracle_relative_errors(oracle, x, f, h);

    if (r_f < report.worst_lower_margin) {
      report.worst_lower_margin = r_f;
      report.worst_lower_x = x;
    }
    if (r_h < report.worst_upper_margin) {
      report.worst_upper_margin = r_h;
      report.worst_upper_x = x;
    }
    if (r_f > report.max_r_f) {
      report.max_r_f = r_f;
      report.argmax_r_f = x;
    }
    if (r_h > report.max_r_h) {
      report.max_r_h = r_h;
      report.argmax_r_h = x;
    }

    if (x == 0) continue;
    double env_max;
    double env_min;
    if (sharp) {
      env_max = envelope_max(x);
      env_min = envelope_min(x);
    } else {
      env_max = (h - f) / f;
      env_min = (h - f) / (h + f);
    }
    const double low = std::min(r_f, r_h);
    const double high = std::max(r_f, r_h);
    if (low > env_min + tol || env_min > high + tol || high > env_max + tol) {
      ++report.envelope_violations;
    }
  }

  report.passed = report.worst_lower_margin >= -tol && report.worst_upper_margin >= -tol &&
                  report.envelope_violations == 0;
  return report;
}

MaxRelativeError find_max_relative_error(Side side, const MaxSearchOptions& options) {
  if (options.scan_points < 3) throw std::invalid_argument("scan needs at least three points");
  if (!(options.scan_lo > 0) || !(options.scan_lo < options.scan_hi)) {
    throw std::invalid_argument("scan range must satisfy 0 < lo < hi");
  }
  const ArctanOracle oracle(options.oracle_digits);
  const std::vector<double> xs =
      make_grid(options.scan_lo, options.scan_hi, options.scan_points, Grid::LogUniform);
  std::vector<double> rs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) rs[i] = oracle_relative_error(oracle, side, xs[i]);

  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const bool left_ok = i == 0 || rs[i] >= rs[i - 1];
    const bool right_ok = i + 1 == xs.size() || rs[i] >= rs[i + 1];
    if (left_ok && right_ok) peaks.push_back(i);
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [&](std::size_t a, std::size_t b) { return rs[a] > rs[b]; });
  if (peaks.size() > options.refine_candidates) peaks.resize(options.refine_candidates);

  MaxRelativeError best{xs[peaks.front()], rs[peaks.front()]};
  for (const std::size_t i : peaks) {
    const double a = xs[i == 0 ? 0 : i - 1];
    const double b = xs[std::min(i + 1, xs.size() - 1)];
    const ScanPoint refined = golden_section_max(oracle, side, a, b, options.width);
    if (refined.r > best.r_star || (refined.r == best.r_star && refined.x < best.x_star)) {
      best = {refined.x, refined.r};
    }
  }
  return best;
}

SharpnessProbe probe_coefficients(Side side, const ShaferCoefficients& coefficients,
                                  const ProbeOptions& options) {
  SharpnessProbe probe;
  probe.coefficients = coefficients;

  const ArctanOracle oracle(options.oracle_digits);
  const double tol = k::certification_margin;
  const std::vector<double> xs =
      make_grid(options.scan_lo, options.scan_hi, options.scan_points, Grid::LogUniform);
  double worst = tol;
  for (const double x : xs) {
    const double dev = oracle.relative_deviation(x, eval_shafer(coefficients, x));
    const double overshoot = side == Side::Lower ? dev : -dev;
    if (overshoot > worst) {
      worst = overshoot;
      probe.scan_witness = x;
      probe.scan_violation = overshoot;
    }
  }

  const SeriesCoefficients bound = generic_series_coefficients(coefficients);
  const SeriesCoefficients arctan = reference_series_coefficients();
  probe.asymptotic_witness =
      compare_expansions(side, LimitPoint::Zero, bound.taylor, arctan.taylor, {1, 3, 5});
  if (!probe.asymptotic_witness) {
    // arctan has no x^-2 term.
    const std::array<double, 3> arctan_at_infinity{arctan.asymptotic[0], arctan.asymptotic[1], 0.0};
    probe.asymptotic_witness = compare_expansions(side, LimitPoint::Infinity, bound.asymptotic,
                                                  arctan_at_infinity, {0, 1, 2});
  }
  return probe;
}

SharpnessProbe probe_sharpness(Side side, int component, double epsilon,
                               const ProbeOptions& options) {
  if (!std::isfinite(epsilon) || epsilon < 0) {
    throw std::invalid_argument("sharpness epsilon must be finite and non-negative");
  }
  if (component < 1 || component > 3) {
    throw std::out_of_range("coefficient index must be 1, 2 or 3");
  }
  const ShaferCoefficients base = side == Side::Lower ? ShaferCoefficients::sharp_lower()
                                                      : ShaferCoefficients::sharp_upper();
  if (epsilon == 0) return probe_coefficients(side, base, options);
  const double factor = side == Side::Lower ? 1 - epsilon : 1 + epsilon;
  return probe_coefficients(side, base.scaled(component, factor), options);
}

std::vector<SeriesCheckEntry> verify_series(SeriesSubject subject, int oracle_digits) {
  const ArctanOracle oracle(oracle_digits);
  SeriesCoefficients expected;
  double (*bound)(double) = nullptr;
  switch (subject) {
    case SeriesSubject::SharpLower:
      expected = series_coefficients(BoundKind::SharpLower);
      bound = &lower_bound;
      break;
    case SeriesSubject::SharpUpper:
      expected = series_coefficients(BoundKind::SharpUpper);
      bound = &upper_bound;
      break;
    case SeriesSubject::Reference:
      expected = reference_series_coefficients();
      break;
  }

  // (value(x) - sum coeffs x^powers) / x^divide, exact apart from value(x).
  auto residual = [&](double x, std::span<const double> coeffs, std::span<const int> powers,
                      int divide) {
    if (bound == nullptr) return oracle.series_residual(x, coeffs, powers, divide);
    return oracle.series_residual_of(bound(x), x, coeffs, powers, divide);
  };

  std::vector<SeriesCheckEntry> entries;
  auto record = [&](std::string name, bool asymptotic, int order, double want, double got) {
    SeriesCheckEntry e;
    e.name = std::move(name);
    e.asymptotic = asymptotic;
    e.order = order;
    e.expected = want;
    e.measured = got;
    e.relative_gap = std::fabs(got - want) / std::fabs(want);
    e.passed = e.relative_gap <= series_tolerance;
    entries.push_back(std::move(e));
  };

  const std::array<double, 3> near{1e-2, 5e-3, 2.5e-3};
  const auto& a = expected.taylor;
  for (std::size_t term = 0; term < 3; ++term) {
    const int order = static_cast<int>(2 * term + 1);
    const std::span<const double> coeffs(a.data(), term);
    static constexpr std::array<int, 2> kTaylorPowers{1, 3};
    const std::span<const int> powers(kTaylorPowers.data(), term);
    std::array<double, 3> samples{};
    for (std::size_t i = 0; i < 3; ++i) samples[i] = residual(near[i], coeffs, powers, order);
    record("a" + std::to_string(order), false, order, a[term], richardson(samples, 2, 4));
  }

  // Asymptotic samples are spaced by 2 in y = 1/x; odd and even powers of y
  // both occur for the bounds.
  const std::array<double, 3> far{1e3, 2e3, 4e3};
  const auto& b = expected.asymptotic;
  const auto& orders = expected.asymptotic_orders;
  for (std::size_t term = 0; term < 3; ++term) {
    std::array<int, 2> powers_storage{-orders[0], -orders[1]};
    const std::span<const double> coeffs(b.data(), term);
    const std::span<const int> powers(powers_storage.data(), term);
    std::array<double, 3> samples{};
    for (std::size_t i = 0; i < 3; ++i) samples[i] = residual(far[i], coeffs, powers, -orders[term]);
    record("b" + std::to_string(orders[term]), true, orders[term], b[term],
           richardson(samples, 1, 2));
  }
  return entries;
}

double bisect_critical_point(Side side, double lo, double hi, double tol) {
  double s_lo = difference_slope(side, lo);
  const double s_hi = difference_slope(side, hi);
  if (!(s_lo * s_hi < 0)) throw std::invalid_argument("slope does not change sign on bracket");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double s_mid = difference_slope(side, mid);
    if ((s_mid < 0) == (s_lo < 0)) {
      lo = mid;
      s_lo = s_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

ShapeReport verify_shape_properties(BoundKind kind, std::size_t n,
                                    const std::optional<ShaferCoefficients>& custom) {
  if (n < 2) throw std::invalid_argument("shape check needs at least two points per sign");
  if (kind == BoundKind::Custom && !custom) {
    throw std::invalid_argument("custom shape check needs coefficients");
  }
  const ShaferCoefficients c = kind == BoundKind::Custom ? *custom : coefficients_for(kind);
  const std::vector<double> xs = make_grid(1e-6, 1e6, n, Grid::LogUniform);

  ShapeReport report;
  report.points_per_sign = xs.size();
  for (const double magnitude : xs) {
    for (const double x : {-magnitude, magnitude}) {
      if (report.derivative_positive && !(first_derivative(c, x) > 0)) {
        report.derivative_positive = false;
        report.first_nonpositive_x = x;
      }
      const double curvature = second_derivative(c, x);
      const bool sign_ok = x > 0 ? curvature < 0 : curvature > 0;
      if (report.concavity_sign && !sign_ok) {
        report.concavity_sign = false;
        report.first_bad_concavity_x = x;
      }
    }
  }

  if (kind == BoundKind::SharpLower || kind == BoundKind::SharpUpper) {
    const Side side = kind == BoundKind::SharpLower ? Side::Lower : Side::Upper;
    report.difference_checked = true;
    report.closed_form_critical_point = critical_points_delta(side)[2];
    // Samples whose slope is within rounding noise of zero carry no sign.
    int last_sign = 0;
    double last_x = 0;
    double bracket_lo = 0;
    double bracket_hi = 0;
    for (const double x : xs) {
      const double slope = difference_slope(side, x);
      const double noise = 16 * k::unit_roundoff *
                           std::max(1 / (1 + x * x), first_derivative(c, x));
      if (std::fabs(slope) <= noise) continue;
      const int sign = slope > 0 ? 1 : -1;
      if (last_sign != 0 && sign != last_sign) {
        ++report.slope_sign_changes;
        bracket_lo = last_x;
        bracket_hi = x;
      }
      last_sign = sign;
      last_x = x;
    }
    if (report.slope_sign_changes == 1) {
      report.located_critical_point = bisect_critical_point(side, bracket_lo, bracket_hi);
      report.critical_point_matches =
          std::fabs(report.located_critical_point - report.closed_form_critical_point) < 1e-6;
    }
  }

  report.passed = report.derivative_positive && report.concavity_sign &&
                  (!report.difference_checked ||
                   (report.slope_sign_changes == 1 && report.critical_point_matches));
  return report;
}

}  // namespace atanbounds
