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

#ifndef ATANBOUNDS_CERTIFICATION_HPP
#define ATANBOUNDS_CERTIFICATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "atanbounds/core_bounds.hpp"
#include "atanbounds/oracle.hpp"

namespace atanbounds {

enum class Grid { LogUniform, Uniform, Mixed };

/// LogUniform when lo > 0, Mixed otherwise.
Grid default_grid(double lo, double hi) noexcept;

/// Sample points of [lo, hi], ascending, without duplicates.
///
/// Both endpoints are always present, and so is 0 whenever lo <= 0 <= hi;
/// the result can therefore hold a point or two more than n.
///  - Uniform: n equally spaced points.
///  - LogUniform: n points equally spaced in log|x|; needs 0 outside (lo, hi).
///  - Mixed: 0 plus log-uniform points on each signed side, each side
///    spanning twelve decades below its endpoint. The n - 1 non-zero points
///    are split evenly between the sides present.
/// Throws std::invalid_argument unless lo < hi, both finite, and n >= 2.
std::vector<double> make_grid(double lo, double hi, std::size_t n, Grid grid);

struct CertifyOptions {
  std::optional<Grid> grid;  // default_grid(lo, hi) when empty
  ShaferCoefficients lower = ShaferCoefficients::sharp_lower();
  ShaferCoefficients upper = ShaferCoefficients::sharp_upper();
  int oracle_digits = ArctanOracle::default_digits;
};

/// Result of checking both inequalities and the relative-error envelopes
/// over a grid. Margins are relative to the oracle value, so
/// worst_lower_margin = min r_f and worst_upper_margin = min r_h.
struct CertificationReport {
  double lo = 0;
  double hi = 0;
  std::size_t sample_count = 0;
  Grid grid = Grid::Uniform;
  bool passed = false;
  double tolerance = 0;
  double worst_lower_margin = 0;
  double worst_lower_x = 0;
  double worst_upper_margin = 0;
  double worst_upper_x = 0;
  double max_r_f = 0;
  double argmax_r_f = 0;
  double max_r_h = 0;
  double argmax_r_h = 0;
  std::size_t envelope_violations = 0;
  /// Whether the closed-form envelopes were checked; with non-sharp triples
  /// the envelope ratios (h - f)/f and (h - f)/(h + f) are formed directly.
  bool closed_form_envelopes = true;

  friend bool operator==(const CertificationReport&, const CertificationReport&) = default;
};

CertificationReport certify_range(double lo, double hi, std::size_t n,
                                  const CertifyOptions& options = {});

struct MaxSearchOptions {
  std::size_t scan_points = 10000;
  double scan_lo = 1e-3;
  double scan_hi = 1e3;
  double width = 1e-10;
  std::size_t refine_candidates = 3;
  int oracle_digits = ArctanOracle::default_digits;
};

struct MaxRelativeError {
  double x_star = 0;
  double r_star = 0;
};

/// Global maximum of r_f or r_h on x > 0: log scan, then golden-section
/// refinement around the best local maxima of the scan. No unimodality is
/// assumed.
MaxRelativeError find_max_relative_error(Side side, const MaxSearchOptions& options = {});

enum class LimitPoint { Zero, Infinity };

/// The first expansion coefficient in which the perturbed bound and arctan
/// differ, when that difference puts the bound on the wrong side.
struct AsymptoticWitness {
  LimitPoint at = LimitPoint::Zero;
  int order = 0;  // power of x (at zero) or of 1/x (at infinity)
  double bound_coefficient = 0;
  double arctan_coefficient = 0;
};

struct SharpnessProbe {
  ShaferCoefficients coefficients = ShaferCoefficients::sharp_lower();
  std::optional<double> scan_witness;
  double scan_violation = 0;  // relative overshoot at the witness
  std::optional<AsymptoticWitness> asymptotic_witness;

  bool found() const noexcept { return scan_witness || asymptotic_witness; }
};

struct ProbeOptions {
  std::size_t scan_points = 100000;
  double scan_lo = 1e-6;
  double scan_hi = 1e6;
  int oracle_digits = ArctanOracle::default_digits;
};

/// Shrinks (Side::Lower) or grows (Side::Upper) component 1, 2 or 3 of the
/// sharp triple by the factor 1 -+ epsilon and looks for a point where the
/// perturbed bound crosses arctan. epsilon == 0 probes the sharp triple
/// itself. Throws std::out_of_range on a bad component and
/// std::invalid_argument on negative or non-finite epsilon.
SharpnessProbe probe_sharpness(Side side, int component, double epsilon,
                               const ProbeOptions& options = {});

/// Same search for an arbitrary triple used on the given side.
SharpnessProbe probe_coefficients(Side side, const ShaferCoefficients& coefficients,
                                  const ProbeOptions& options = {});

enum class SeriesSubject { SharpLower, SharpUpper, Reference };

struct SeriesCheckEntry {
  std::string name;  // "a1", "a3", "a5", "b0", "b1", "b2"/"b3"
  bool asymptotic = false;
  int order = 0;
  double expected = 0;
  double measured = 0;
  double relative_gap = 0;
  bool passed = false;
};

inline constexpr double series_tolerance = 1e-4;

/// Measures the six expansion coefficients numerically by Richardson
/// extrapolation and compares them with the closed forms.
std::vector<SeriesCheckEntry> verify_series(SeriesSubject subject,
                                            int oracle_digits = ArctanOracle::default_digits);

struct ShapeReport {
  std::size_t points_per_sign = 0;
  bool derivative_positive = true;
  double first_nonpositive_x = 0;
  bool concavity_sign = true;
  double first_bad_concavity_x = 0;
  /// Only for the sharp kinds, whose difference to arctan has a closed-form
  /// critical point.
  bool difference_checked = false;
  int slope_sign_changes = 0;
  double located_critical_point = 0;
  double closed_form_critical_point = 0;
  bool critical_point_matches = false;
  bool passed = false;
};

/// Samples n log-spaced points per sign in [1e-6, 1e6]. `custom` supplies
/// the triple for BoundKind::Custom and is ignored otherwise.
ShapeReport verify_shape_properties(BoundKind kind, std::size_t n,
                                    const std::optional<ShaferCoefficients>& custom = {});

/// Root of difference_slope(side, .) on x > 0 by bisection; used by the
/// shape check and exposed for tests.
double bisect_critical_point(Side side, double lo = 0.5, double hi = 10, double tol = 1e-12);

}  // namespace atanbounds

#endif  // ATANBOUNDS_CERTIFICATION_HPP
