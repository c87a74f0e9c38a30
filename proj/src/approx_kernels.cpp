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

#include "atanbounds/approx_kernels.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "atanbounds/constants.hpp"
#include "atanbounds/core_bounds.hpp"

namespace atanbounds {

namespace {

namespace k = constants;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kDenormMin = std::numeric_limits<double>::denorm_min();
constexpr double kThreeQuarterPi = 2.356194490192344928846982;
constexpr double kQuarterPi = 0.7853981633974483096156608;
constexpr double kTinyAngle = 1e-300;

// Exact conventional results for axis and infinite arguments.
std::optional<double> special_angle(double y, double x) {
  if (std::isinf(y) && std::isinf(x)) {
    return std::copysign(x > 0 ? kQuarterPi : kThreeQuarterPi, y);
  }
  if (std::isinf(y)) return std::copysign(k::half_pi, y);
  if (std::isinf(x) || y == 0) return std::copysign(x > 0 ? 0.0 : k::pi, y);
  if (x == 0) return std::copysign(k::half_pi, y);
  return std::nullopt;
}

}  // namespace

CertifiedValue midpoint_arctan(double x) noexcept {
  if (std::isnan(x)) return {x, x, false};
  if (std::isinf(x)) return {std::copysign(k::half_pi, x), 0, false};
  if (x == 0) return {x, 0, false};
  const double mid = 0.5 * (lower_bound(x) + upper_bound(x));
  return {mid, 0.5 * envelope_max(x) + k::certification_margin, false};
}

double atan2_reduced_argument(double y, double x) noexcept {
  if (std::isnan(y) || std::isnan(x)) return kNan;
  const double ay = std::fabs(y);
  const double ax = std::fabs(x);
  if (std::isinf(ay) && std::isinf(ax)) return 1;
  if (ay == 0 || std::isinf(ax)) return 0;
  if (ax == 0 || std::isinf(ay)) return 0;
  return ay <= ax ? ay / ax : ax / ay;
}

CertifiedValue atan2_approx(double y, double x) {
  if (std::isnan(y) || std::isnan(x)) return {kNan, kNan, false};
  if (y == 0 && x == 0) throw std::domain_error("atan2_approx: both arguments are zero");
  if (const auto angle = special_angle(y, x)) return {*angle, 0, false};

  const double ay = std::fabs(y);
  const double ax = std::fabs(x);
  const bool steep = ay > ax;
  const double t = steep ? ax / ay : ay / ax;
  const CertifiedValue reduced = midpoint_arctan(t);

  // Absolute error of the kernel angle: its own certificate, the rounding of
  // t (arctan is 1-Lipschitz below t/(1+t^2) <= arctan t), and underflow of t.
  const double kernel_error =
      (reduced.error + 2 * k::unit_roundoff) * reduced.value * 1.01 + kDenormMin;

  double angle = reduced.value;
  if (steep) {
    angle = x > 0 ? k::half_pi - angle : k::half_pi + angle;
  } else if (x < 0) {
    angle = k::pi - angle;
  }
  // Reassembly: one rounding plus the rounding of the pi/2 or pi constant.
  const double total = kernel_error + 2 * k::unit_roundoff * angle;
  angle = std::copysign(angle, y);

  const double magnitude = std::fabs(angle);
  if (magnitude < kTinyAngle || magnitude <= 2 * total) return {angle, total, true};
  return {angle, total / (magnitude - total) * (1 + 4 * k::unit_roundoff), false};
}

}  // namespace atanbounds
