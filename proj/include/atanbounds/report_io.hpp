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

#ifndef ATANBOUNDS_REPORT_IO_HPP
#define ATANBOUNDS_REPORT_IO_HPP

#include <string>
#include <string_view>

#include "atanbounds/certification.hpp"

namespace atanbounds {

std::string_view grid_name(Grid grid) noexcept;

/// Shortest decimal form that parses back to the same double.
std::string format_real(double value);

/// Multi-line "key: value" rendering of a report. Layout is stable and
/// documented in the README.
std::string format_report_text(const CertificationReport& report);

/// Header line plus a single data row.
std::string format_report_csv(const CertificationReport& report);

}  // namespace atanbounds

#endif  // ATANBOUNDS_REPORT_IO_HPP
