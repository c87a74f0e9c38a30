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

#ifndef ATANBOUNDS_CORE_BOUNDS_HPP
#define ATANBOUNDS_CORE_BOUNDS_HPP

#include <array>
#include <utility>

namespace atanbounds {

/// Positive triple (c1, c2, c3) of the bound family x / (c1 + sqrt(c2 + c3 x^2)).
///
/// Besides the triple itself the object caches sqrt(c2), c1 + sqrt(c2) and
/// the limit 1/sqrt(c3), which the evaluator uses to stay free of
/// cancellation near the origin and to land on the limit as x -> inf.
/// For the two sharp triples these are taken from exact constants (the sum
/// is exactly 1, the limit is pi/2) rather than recomputed from rounded
/// components.
class ShaferCoefficients {
 public:
  /// Throws std::domain_error unless all components are finite and > 0.
  ShaferCoefficients(double c1, double c2, double c3);

  static ShaferCoefficients sharp_lower() noexcept;
  static ShaferCoefficients sharp_upper() noexcept;
  static ShaferCoefficients classic_shafer() noexcept;

  double c1() const noexcept { return c1_; }
  double c2() const noexcept { return c2_; }
  double c3() const noexcept { return c3_; }
  double sqrt_c2() const noexcept { return sqrt_c2_; }
  /// c1 + sqrt(c2), the denominator at x = 0.
  double base() const noexcept { return base_; }
  /// 1/sqrt(c3), the value at +inf.
  double limit() const noexcept { return limit_; }
  /// 1/sqrt(c3) - limit() where known exactly (pi/2 - fl(pi/2) for the sharp
  /// triples), else 0.
  double limit_tail() const noexcept { return limit_tail_; }

  /// Copy with component `index` (1, 2 or 3) multiplied by `factor`.
  /// Throws std::out_of_range on a bad index and std::domain_error if the
  /// result is not a valid triple.
  ShaferCoefficients scaled(int index, double factor) const;

  friend bool operator==(const ShaferCoefficients& a, const ShaferCoefficients& b) noexcept {
    return a.c1_ == b.c1_ && a.c2_ == b.c2_ && a.c3_ == b.c3_;
  }

 private:
  struct Exact {};
  ShaferCoefficients(Exact, double c1, double c2, double c3, double sqrt_c2, double base,
                     double limit, double limit_tail) noexcept
      : c1_(c1),
        c2_(c2),
        c3_(c3),
        sqrt_c2_(sqrt_c2),
        base_(base),
        limit_(limit),
        limit_tail_(limit_tail) {}

  double c1_;
  double c2_;
  double c3_;
  double sqrt_c2_;
  double base_;
  double limit_;
  double limit_tail_;
};

enum class BoundKind { SharpLower, SharpUpper, ClassicShafer, Custom };

/// Which side of the double inequality: f below arctan, h above it.
enum class Side { Lower, Upper };

/// Triple for a named kind. Custom has no fixed triple and throws
/// std::invalid_argument.
ShaferCoefficients coefficients_for(BoundKind kind);

/// First three Taylor coefficients (of x, x^3, x^5) and the first three
/// asymptotic coefficients (of x^-k for k in asymptotic_orders).
struct SeriesCoefficients {
  std::array<double, 3> taylor{};
  std::array<double, 3> asymptotic{};
  std::array<int, 3> asymptotic_orders{0, 1, 2};
};

/// Closed-form coefficients for SharpLower or SharpUpper. The other kinds
/// have no closed form here and throw std::invalid_argument.
SeriesCoefficients series_coefficients(BoundKind kind);

/// Coefficients of arctan itself: (1, -1/3, 1/5) and (pi/2, -1, 1/3) with
/// asymptotic orders (0, 1, 3).
SeriesCoefficients reference_series_coefficients() noexcept;

/// Expansion coefficients of an arbitrary triple, derived symbolically from
/// the family's form. Asymptotic orders are always (0, 1, 2).
SeriesCoefficients generic_series_coefficients(const ShaferCoefficients& c) noexcept;

/// x / (c1 + sqrt(c2 + c3 x^2)). Exactly odd; +-inf maps to +-1/sqrt(c3).
double eval_shafer(const ShaferCoefficients& c, double x) noexcept;

double lower_bound(double x) noexcept;
double upper_bound(double x) noexcept;

/// Platform arctan; +-inf saturates to +-pi/2.
double reference_arctan(double x) noexcept;

double first_derivative(const ShaferCoefficients& c, double x) noexcept;
double second_derivative(const ShaferCoefficients& c, double x) noexcept;

/// arctan(x) - lower_bound(x).
double delta_f(double x) noexcept;
/// upper_bound(x) - arctan(x).
double delta_h(double x) noexcept;

/// Derivative of delta_f (Side::Lower) or delta_h (Side::Upper).
double difference_slope(Side side, double x) noexcept;

/// Roots {-x*, 0, x*} of difference_slope, from their closed forms.
std::array<double, 3> critical_points_delta(Side side) noexcept;

/// r_f = (g - f)/g or r_h = (h - g)/g; 0 at the removable singularity.
double relative_error(Side side, double x) noexcept;

/// (h - f)/f and (h - f)/(h + f), evaluated without arctan.
double envelope_max(double x) noexcept;
double envelope_min(double x) noexcept;

/// (29/3, 10).
std::pair<double, double> pi_squared_bounds() noexcept;

double discriminant_lower(double nu) noexcept;
double discriminant_upper(double nu) noexcept;
/// (y_f(pi), y_h(pi)).
std::pair<double, double> discriminant_values() noexcept;

struct EvaluationSample {
  double x = 0;
  double f_val = 0;
  double g_val = 0;
  double h_val = 0;
  double delta_f = 0;
  double delta_h = 0;
  double r_f = 0;
  double r_h = 0;
  double env_max = 0;
  double env_min = 0;
};

/// All per-point quantities with g from the platform arctan.
EvaluationSample evaluate_sample(double x) noexcept;

}  // namespace atanbounds

#endif  // ATANBOUNDS_CORE_BOUNDS_HPP
