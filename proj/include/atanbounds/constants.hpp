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

#ifndef ATANBOUNDS_CONSTANTS_HPP
#define ATANBOUNDS_CONSTANTS_HPP

#include <limits>

// Every constant below is the 25-digit decimal expansion of its exact value,
// so each one carries exactly one rounding (the compiler's decimal-to-binary
// conversion). The derived sums c1 + sqrt(c2) of both sharp triples are
// exactly 1 and are not stored separately. Certification margins assume at
// most 0.5 ulp of error per constant.

namespace atanbounds::constants {

inline constexpr double pi = 3.141592653589793238462643;
inline constexpr double half_pi = 1.570796326794896619231322;
/// pi/2 - half_pi, for double-double use.
inline constexpr double half_pi_tail = 6.123233995736766e-17;
inline constexpr double pi_squared = 9.869604401089358618834491;
inline constexpr double ten_minus_pi_squared = 0.130395598910641381165509;

// 4/pi^2, (1 - 4/pi^2)^2, 4/pi^2 and sqrt of the middle one.
inline constexpr double lower_c1 = 0.4052847345693510857755179;
inline constexpr double lower_c2 = 0.3536862469362471914754088;
inline constexpr double lower_c3 = 0.4052847345693510857755179;
inline constexpr double lower_sqrt_c2 = 0.5947152654306489142244821;

// 1 - 6/pi^2, (6/pi^2)^2, 4/pi^2 and sqrt of the middle one.
inline constexpr double upper_c1 = 0.3920728981459733713367232;
inline constexpr double upper_c2 = 0.3695753611686360668095002;
inline constexpr double upper_c3 = 0.4052847345693510857755179;
inline constexpr double upper_sqrt_c2 = 0.6079271018540266286632768;

/// Unit roundoff of double, 2^-53.
inline constexpr double unit_roundoff = std::numeric_limits<double>::epsilon() / 2;

/// Allowance under which a computed value may cross its exact bound.
inline constexpr double certification_margin = 4 * unit_roundoff;

}  // namespace atanbounds::constants

#endif  // ATANBOUNDS_CONSTANTS_HPP
