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

#include "atanbounds/report_io.hpp"

#include <charconv>
#include <system_error>

namespace atanbounds {

std::string_view grid_name(Grid grid) noexcept {
  switch (grid) {
    case Grid::LogUniform:
      return "log";
    case Grid::Uniform:
      return "uniform";
    case Grid::Mixed:
      return "mixed";
  }
  return "unknown";
}

std::string format_real(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

std::string format_report_text(const CertificationReport& r) {
  std::string out;
  auto line = [&out](std::string_view key, const std::string& value) {
    out.append(key).append(": ").append(value).push_back('\n');
  };
  auto at = [](double value, double x) { return format_real(value) + " at x = " + format_real(x); };
  line("range", "[" + format_real(r.lo) + ", " + format_real(r.hi) + "]");
  line("grid", std::string(grid_name(r.grid)));
  line("samples", std::to_string(r.sample_count));
  line("tolerance", format_real(r.tolerance));
  line("worst_lower_margin", at(r.worst_lower_margin, r.worst_lower_x));
  line("worst_upper_margin", at(r.worst_upper_margin, r.worst_upper_x));
  line("max_r_f", at(r.max_r_f, r.argmax_r_f));
  line("max_r_h", at(r.max_r_h, r.argmax_r_h));
  line("envelopes", r.closed_form_envelopes ? "closed-form" : "ratio");
  line("envelope_violations", std::to_string(r.envelope_violations));
  line("result", r.passed ? "PASS" : "FAIL");
  return out;
}

std::string format_report_csv(const CertificationReport& r) {
  std::string out =
      "lo,hi,grid,samples,passed,tolerance,worst_lower_margin,worst_lower_x,"
      "worst_upper_margin,worst_upper_x,max_r_f,argmax_r_f,max_r_h,argmax_r_h,"
      "envelope_violations\n";
  const std::string fields[] = {format_real(r.lo),
                                format_real(r.hi),
                                std::string(grid_name(r.grid)),
                                std::to_string(r.sample_count),
                                r.passed ? "1" : "0",
                                format_real(r.tolerance),
                                format_real(r.worst_lower_margin),
                                format_real(r.worst_lower_x),
                                format_real(r.worst_upper_margin),
                                format_real(r.worst_upper_x),
                                format_real(r.max_r_f),
                                format_real(r.argmax_r_f),
                                format_real(r.max_r_h),
                                format_real(r.argmax_r_h),
                                std::to_string(r.envelope_violations)};
  for (std::size_t i = 0; i < std::size(fields); ++i) {
    if (i != 0) out.push_back(',');
    out += fields[i];
  }
  out.push_back('\n');
  return out;
}

}  // namespace atanbounds
