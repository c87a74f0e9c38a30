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

// Test-side ground truth in 50-digit binary floating point. Deliberately a
// different library from the one the certification code uses, so the two
// oracles check each other.

#ifndef ATANBOUNDS_TESTS_REFERENCE_HPP
#define ATANBOUNDS_TESTS_REFERENCE_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace ref {

using Real = boost::multiprecision::cpp_bin_float_50;

inline Real pi() { return boost::math::constants::pi<Real>(); }
inline Real pi2() { return pi() * pi(); }

struct Triple {
  Real c1, c2, c3;
};

inline Triple lower() {
  const Real a = 4 / pi2();
  return {a, (1 - a) * (1 - a), a};
}

inline Triple upper() {
  const Real b = 6 / pi2();
  return {1 - b, b * b, 4 / pi2()};
}

inline Real shafer(const Triple& t, const Real& x) {
  return x / (t.c1 + sqrt(t.c2 + t.c3 * x * x));
}

// (c1 + c2/s) / D^2 with s = sqrt(c2 + c3 x^2), D = c1 + s.
inline Real shafer_d1(const Triple& t, const Real& x) {
  const Real s = sqrt(t.c2 + t.c3 * x * x);
  const Real d = t.c1 + s;
  return (t.c1 + t.c2 / s) / (d * d);
}

inline Real shafer_d2(const Triple& t, const Real& x) {
  const Real s = sqrt(t.c2 + t.c3 * x * x);
  const Real d = t.c1 + s;
  const Real ds = t.c3 * x / s;
  return -t.c2 * ds / (s * s * d * d) - 2 * (t.c1 + t.c2 / s) * ds / (d * d * d);
}

inline Real f(const Real& x) { return shafer(lower(), x); }
inline Real h(const Real& x) { return shafer(upper(), x); }
inline Real g(const Real& x) { return atan(x); }

inline Real r_f(const Real& x) { return (g(x) - f(x)) / g(x); }
inline Real r_h(const Real& x) { return (h(x) - g(x)) / g(x); }

inline double to_double(const Real& v) { return v.convert_to<double>(); }

}  // namespace ref

#endif  // ATANBOUNDS_TESTS_REFERENCE_HPP
