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

#ifndef ATANBOUNDS_TOOLS_SWEEP_HPP
#define ATANBOUNDS_TOOLS_SWEEP_HPP

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "atanbounds/atanbounds.h"

namespace atanbounds::cli {

/// One CSV row; columns are written in declaration order.
struct SweepRow {
  double x = 0;
  double f = 0;
  double g = 0;
  double h = 0;
  double r_f = 0;
  double r_h = 0;
  double env_max = 0;
  double env_min = 0;
};

inline constexpr const char* kSweepHeader = "x,f,g,h,r_f,r_h,env_max,env_min";

/// Shortest round-trip decimal form, independent of locale.
std::string format_number(double value);

/// Throws std::invalid_argument carrying the library message for a bad range or count.
std::vector<SweepRow> compute_sweep(double lo, double hi, std::size_t n, atb_grid grid);

void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out);

/// Self-contained SVG with two stacked panels: the bounds around arctan on
/// top and the relative errors with their envelopes below. A log x axis is
/// used when `log_x` is set and all abscissae are positive.
void write_sweep_svg(std::span<const SweepRow> rows, bool log_x, std::ostream& out);

}  // namespace atanbounds::cli

#endif  // ATANBOUNDS_TOOLS_SWEEP_HPP
