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

#ifndef ATANBOUNDS_APPROX_KERNELS_HPP
#define ATANBOUNDS_APPROX_KERNELS_HPP

namespace atanbounds {

/// A value with a guaranteed error bound. `error` is relative to the exact
/// result unless `absolute` is set, which happens only for angles so close
/// to zero that a relative figure is meaningless.
struct CertifiedValue {
  double value = 0;
  double error = 0;
  bool absolute = false;
};

/// Midpoint of the sharp lower and upper bounds.
///
/// The exact arctan lies in [f, h], so the midpoint is off by at most
/// (h - f)/2, i.e. by (h - f)/(2 f) relative. That quantity is half of
/// envelope_max, which is evaluated in closed form; four units of roundoff
/// are added for the rounding of f, h and their mean. The certificate is
/// even in x. +-inf gives (+-pi/2, 0); NaN gives (NaN, NaN).
CertifiedValue midpoint_arctan(double x) noexcept;

/// Quadrant-reduced atan2 built on midpoint_arctan.
///
/// The kernel only ever sees a ratio in [0, 1]; larger ratios go through
/// pi/2 - arctan(1/t) and the left half-plane through pi - angle. Axis and
/// infinite inputs return the exact conventional angle with error 0.
/// Throws std::domain_error when both arguments are zero.
CertifiedValue atan2_approx(double y, double x);

/// The ratio the kernel is evaluated at for (y, x), always in [0, 1].
/// Exposed so the reduction invariant can be tested.
double atan2_reduced_argument(double y, double x) noexcept;

}  // namespace atanbounds

#endif  // ATANBOUNDS_APPROX_KERNELS_HPP
