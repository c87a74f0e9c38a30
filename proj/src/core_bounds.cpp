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

#include "atanbounds/core_bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "atanbounds/constants.hpp"

namespace atanbounds {

namespace {

namespace k = constants;

constexpr double kMinNormal = std::numeric_limits<double>::min();

bool valid_component(double c) { return std::isfinite(c) && c > 0; }

double eval_magnitude(const ShaferCoefficients& c, double t) {
  if (std::isinf(t)) return c.limit();
  if (t > 1) {
    // With L = 1/sqrt(c3) and b = c2/(c3 t^2) the value is L / (1 + e) with
    // e = c1 L/t + (sqrt(1 + b) - 1). Written as L - L e/(1 + e), with L split
    // into head and tail, it rounds once against the exact limit and settles
    // on L; nothing here can overflow.
    const double b = c.c2() / c.c3() / t / t;
    const double e = c.c1() * c.limit() / t + b / (std::sqrt(1 + b) + 1);
    return c.limit() + (c.limit_tail() - c.limit() * (e / (1 + e)));
  }
  // c1 + sqrt(c2 + c3 t^2) == base + c3 t^2 / (sqrt(c2 + c3 t^2) + sqrt(c2)),
  // which has no cancellation as t -> 0.
  const double c3t2 = c.c3() * t * t;
  const double root = std::sqrt(c.c2() + c3t2);
  return t / (c.base() + c3t2 / (root + c.sqrt_c2()));
}

}  // namespace

ShaferCoefficients::ShaferCoefficients(double c1, double c2, double c3)
    : c1_(c1),
      c2_(c2),
      c3_(c3),
      sqrt_c2_(std::sqrt(c2)),
      base_(c1 + std::sqrt(c2)),
      limit_(1 / std::sqrt(c3)),
      limit_tail_(0) {
  if (!valid_component(c1) || !valid_component(c2) || !valid_component(c3)) {
    throw std::domain_error("Shafer coefficients must be finite and strictly positive");
  }
  // A triple equal to a named one takes over its exact derived constants.
  for (const auto& named : {sharp_lower(), sharp_upper(), classic_shafer()}) {
    if (*this == named) {
      sqrt_c2_ = named.sqrt_c2_;
      base_ = named.base_;
      limit_ = named.limit_;
      limit_tail_ = named.limit_tail_;
    }
  }
}

ShaferCoefficients ShaferCoefficients::sharp_lower() noexcept {
  return {Exact{}, k::lower_c1, k::lower_c2, k::lower_c3, k::lower_sqrt_c2, 1.0, k::half_pi, k::half_pi_tail};
}

ShaferCoefficients ShaferCoefficients::sharp_upper() noexcept {
  return {Exact{}, k::upper_c1, k::upper_c2, k::upper_c3, k::upper_sqrt_c2, 1.0, k::half_pi, k::half_pi_tail};
}

ShaferCoefficients ShaferCoefficients::classic_shafer() noexcept {
  // 3x / (1 + 2 sqrt(1 + x^2)) divided through by 3.
  return {Exact{}, 1.0 / 3, 4.0 / 9, 4.0 / 9, 2.0 / 3, 1.0, 1.5, 0.0};
}

ShaferCoefficients ShaferCoefficients::scaled(int index, double factor) const {
  switch (index) {
    case 1:
      return {c1_ * factor, c2_, c3_};
    case 2:
      return {c1_, c2_ * factor, c3_};
    case 3:
      return {c1_, c2_, c3_ * factor};
    default:
      throw std::out_of_range("coefficient index must be 1, 2 or 3, got " + std::to_string(index));
  }
}

ShaferCoefficients coefficients_for(BoundKind kind) {
  switch (kind) {
    case BoundKind::SharpLower:
      return ShaferCoefficients::sharp_lower();
    case BoundKind::SharpUpper:
      return ShaferCoefficients::sharp_upper();
    case BoundKind::ClassicShafer:
      return ShaferCoefficients::classic_shafer();
    case BoundKind::Custom:
      break;
  }
  throw std::invalid_argument("custom bounds carry their own coefficients");
}

SeriesCoefficients series_coefficients(BoundKind kind) {
  const double p2 = k::pi_squared;
  const double p4 = p2 * p2;
  SeriesCoefficients s;
  switch (kind) {
    case BoundKind::SharpLower: {
      const double d = p2 - 4;
      s.taylor = {1.0, -2 / d, 2 * (3 * p2 - 8) / (d * d * d)};
      s.asymptotic = {k::half_pi, -1.0, -(p4 - 8 * p2 - 16) / (16 * k::pi)};
      return s;
    }
    case BoundKind::SharpUpper:
      s.taylor = {1.0, -1.0 / 3, (p2 + 12) / 108};
      s.asymptotic = {k::half_pi, -(p2 - 6) / 4, (p4 - 12 * p2 + 18) / (8 * k::pi)};
      return s;
    case BoundKind::ClassicShafer:
    case BoundKind::Custom:
      break;
  }
  throw std::invalid_argument("no series expansion is tabulated for this bound kind");
}

SeriesCoefficients reference_series_coefficients() noexcept {
  SeriesCoefficients s;
  s.taylor = {1.0, -1.0 / 3, 1.0 / 5};
  s.asymptotic = {k::half_pi, -1.0, 1.0 / 3};
  s.asymptotic_orders = {0, 1, 3};
  return s;
}

SeriesCoefficients generic_series_coefficients(const ShaferCoefficients& c) noexcept {
  // Near 0: x/S * 1/(1 + p x^2 + q x^4) with S = c1 + sqrt(c2), k = c3/c2.
  const double s = c.sqrt_c2();
  const double base = c.base();
  const double ratio = c.c3() / c.c2();
  const double p = s * ratio / (2 * base);
  const double q = -s * ratio * ratio / (8 * base);
  // Near infinity: 1/sqrt(c3) * 1/(1 + c1/(sqrt(c3) x) + c2/(2 c3 x^2)).
  const double root_c3 = std::sqrt(c.c3());
  SeriesCoefficients out;
  out.taylor = {1 / base, -p / base, (p * p - q) / base};
  out.asymptotic = {1 / root_c3, -c.c1() / c.c3(),
                    (c.c1() * c.c1() - c.c2() / 2) / (c.c3() * root_c3)};
  return out;
}

double eval_shafer(const ShaferCoefficients& c, double x) noexcept {
  if (std::isnan(x)) return x;
  return std::copysign(eval_magnitude(c, std::fabs(x)), x);
}

double lower_bound(double x) noexcept {
  if (std::isinf(x)) return std::copysign(k::half_pi, x);
  return eval_shafer(ShaferCoefficients::sharp_lower(), x);
}

double upper_bound(double x) noexcept {
  if (std::isinf(x)) return std::copysign(k::half_pi, x);
  return eval_shafer(ShaferCoefficients::sharp_upper(), x);
}

double reference_arctan(double x) noexcept {
  if (std::isinf(x)) return std::copysign(k::half_pi, x);
  return std::atan(x);
}

double first_derivative(const ShaferCoefficients& c, double x) noexcept {
  if (std::isnan(x)) return x;
  const double t = std::fabs(x);
  if (t <= 1) {
    const double root = std::sqrt(c.c2() + c.c3() * t * t);
    const double sum = c.c1() + root;
    return (c.c2() + c.c1() * root) / (root * sum * sum);
  }
  const double sigma = std::sqrt(c.c2() / (t * t) + c.c3());
  const double sum = c.c1() / t + sigma;
  return (c.c2() / t + c.c1() * sigma) / (sigma * sum * sum) / t / t;
}

double second_derivative(const ShaferCoefficients& c, double x) noexcept {
  if (std::isnan(x)) return x;
  const double t = std::fabs(x);
  const double c1 = c.c1();
  const double c2 = c.c2();
  const double c3 = c.c3();
  double magnitude;
  if (t <= 1) {
    const double inner = c2 + c3 * t * t;
    const double root = std::sqrt(inner);
    const double sum = c1 + root;
    const double num = 3 * c1 * c2 + 2 * c1 * c3 * t * t + 3 * c2 * root;
    magnitude = c3 * t * num / (inner * root * sum * sum * sum);
  } else {
    const double sigma = std::sqrt(c2 / (t * t) + c3);
    const double sum = c1 / t + sigma;
    const double num = 3 * c1 * c2 / (t * t) + 2 * c1 * c3 + 3 * c2 * sigma / t;
    magnitude = c3 * num / (sigma * sigma * sigma * sum * sum * sum) / t / t / t;
  }
  return -std::copysign(magnitude, x);
}

double delta_f(double x) noexcept { return reference_arctan(x) - lower_bound(x); }

double delta_h(double x) noexcept { return upper_bound(x) - reference_arctan(x); }

double difference_slope(Side side, double x) noexcept {
  const double atan_slope = 1 / (1 + x * x);
  if (side == Side::Lower) {
    return atan_slope - first_derivative(ShaferCoefficients::sharp_lower(), x);
  }
  return first_derivative(ShaferCoefficients::sharp_upper(), x) - atan_slope;
}

std::array<double, 3> critical_points_delta(Side side) noexcept {
  const double p2 = k::pi_squared;
  double root;
  if (side == Side::Lower) {
    // -2 pi^4 + 36 pi^2 - 160 and pi^4 - 8 pi^2 - 16 in factored form.
    const double d = p2 - 4;
    root = d * std::sqrt(2 * (p2 - 8) * k::ten_minus_pi_squared) / (d * d - 32);
  } else {
    // -5 pi^4 + 108 pi^2 - 576 == (5 pi^2 - 48)(12 - pi^2).
    root = std::sqrt((5 * p2 - 48) * (12 - p2)) / (k::pi * k::ten_minus_pi_squared);
  }
  return {-root, 0.0, root};
}

double relative_error(Side side, double x) noexcept {
  if (std::isnan(x)) return x;
  if (std::fabs(x) < kMinNormal) return 0;
  const double g = reference_arctan(x);
  if (side == Side::Lower) return (g - lower_bound(x)) / g;
  return (upper_bound(x) - g) / g;
}

namespace {

struct EnvelopeTerms {
  double max;
  double min;
};

// Both envelopes share the numerator 10 - pi^2 - 2A + B with A = sqrt(9 + pi^2 x^2)
// and B = sqrt((pi^2 - 4)^2 + 4 pi^2 x^2). Rationalising B - 2A gives
//   (10 - pi^2) pi^2 x^2 (4/(B + pi^2 - 4) + 2/(A + 3)) / (B + 2A),
// a sum of positive terms. For |x| > 1 everything is divided through by |x|.
EnvelopeTerms envelopes(double x) {
  const double t = std::fabs(x);
  if (std::isnan(t)) return {x, x};
  if (t < kMinNormal) return {0, 0};
  const double p2 = k::pi_squared;
  const double d = p2 - 4;
  if (t <= 1) {
    const double t2 = t * t;
    const double a = std::sqrt(9 + p2 * t2);
    const double b = std::sqrt(d * d + 4 * p2 * t2);
    const double num =
        k::ten_minus_pi_squared * p2 * t2 * (4 / (b + d) + 2 / (a + 3)) / (b + 2 * a);
    return {num / (p2 - 6 + 2 * a), num / (p2 - 2 + 2 * a + b)};
  }
  const double inv = 1 / t;
  const double a = std::sqrt(9 * inv * inv + p2);
  const double b = std::sqrt(d * d * inv * inv + 4 * p2);
  const double num =
      k::ten_minus_pi_squared * p2 * (4 / (b + d * inv) + 2 / (a + 3 * inv)) / (b + 2 * a);
  return {num / ((p2 - 6) * inv + 2 * a) * inv, num / ((p2 - 2) * inv + 2 * a + b) * inv};
}

}  // namespace

double envelope_max(double x) noexcept { return envelopes(x).max; }

double envelope_min(double x) noexcept { return envelopes(x).min; }

std::pair<double, double> pi_squared_bounds() noexcept { return {29.0 / 3.0, 10.0}; }

double discriminant_lower(double nu) noexcept {
  const double nu2 = nu * nu;
  return 2 * (nu2 - 8) * (10 - nu2);
}

double discriminant_upper(double nu) noexcept {
  const double nu2 = nu * nu;
  return (5 * nu2 - 48) * (12 - nu2);
}

std::pair<double, double> discriminant_values() noexcept {
  // pi^2 enters through its own correctly rounded constant, not pi * pi.
  const double p2 = k::pi_squared;
  return {2 * (p2 - 8) * k::ten_minus_pi_squared, (5 * p2 - 48) * (12 - p2)};
}

EvaluationSample evaluate_sample(double x) noexcept {
  EvaluationSample s;
  s.x = x;
  s.f_val = lower_bound(x);
  s.g_val = reference_arctan(x);
  s.h_val = upper_bound(x);
  s.delta_f = s.g_val - s.f_val;
  s.delta_h = s.h_val - s.g_val;
  s.r_f = relative_error(Side::Lower, x);
  s.r_h = relative_error(Side::Upper, x);
  const EnvelopeTerms env = envelopes(x);
  s.env_max = env.max;
  s.env_min = env.min;
  return s;
}

}  // namespace atanbounds
