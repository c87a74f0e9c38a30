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

#ifndef ATANBOUNDS_ORACLE_HPP
#define ATANBOUNDS_ORACLE_HPP

#include <span>

namespace atanbounds {

/// Arbitrary-precision arctan used as ground truth by the certification
/// routines. Nothing here goes through the platform libm.
///
/// All differences against the true value are formed at oracle precision and
/// rounded once, so a margin of a few units of roundoff is resolvable.
class ArctanOracle {
 public:
  static constexpr int default_digits = 50;

  /// Throws std::invalid_argument unless 20 <= digits <= 10000.
  explicit ArctanOracle(int decimal_digits = default_digits);

  int digits() const noexcept { return digits_; }
  long bits() const noexcept { return bits_; }

  /// Correctly rounded arctan(x).
  double atan(double x) const;

  /// Correctly rounded atan2(y, x).
  double atan2(double y, double x) const;

  /// (approx - arctan(x)) / |arctan(x)|, or approx itself when x == 0.
  double relative_deviation(double x, double approx) const;

  /// Same for several approximants of one x; arctan is computed once.
  void relative_deviations(double x, std::span<const double> approx, std::span<double> out) const;

  /// |approx - atan2(y, x)|.
  double absolute_deviation_atan2(double y, double x, double approx) const;

  /// (arctan(x) - sum_i coeffs[i] * x^powers[i]) / x^divide_power, formed at
  /// oracle precision and rounded once. Used to measure series coefficients.
  double series_residual(double x, std::span<const double> coeffs, std::span<const int> powers,
                         int divide_power) const;

  /// Same residual with arctan(x) replaced by an exact double `value`.
  double series_residual_of(double value, double x, std::span<const double> coeffs,
                            std::span<const int> powers, int divide_power) const;

 private:
  int digits_;
  long bits_;
};

}  // namespace atanbounds

#endif  // ATANBOUNDS_ORACLE_HPP
