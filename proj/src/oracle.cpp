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

#include "atanbounds/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "hp_real.hpp"

namespace atanbounds {

namespace {

// Members named atan/atan2 hide the hp::Real friends inside ArctanOracle.
hp::Real hp_atan(const hp::Real& a) { return atan(a); }
hp::Real hp_atan2(const hp::Real& y, const hp::Real& x) { return atan2(y, x); }

hp::Real power(const hp::Real& x, int p) {
  hp::Real result(1.0, x.precision());
  const hp::Real base = p < 0 ? 1.0 / x : x;
  for (int i = 0; i < std::abs(p); ++i) result = result * base;
  return result;
}

double residual(const hp::Real& value, double x, std::span<const double> coeffs,
                std::span<const int> powers, int divide_power) {
  if (coeffs.size() != powers.size()) {
    throw std::invalid_argument("series residual: coefficient and power counts differ");
  }
  const hp::Real hx(x, value.precision());
  hp::Real acc = value;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    acc = acc - power(hx, powers[i]) * coeffs[i];
  }
  return (acc / power(hx, divide_power)).to_double();
}

}  // namespace

ArctanOracle::ArctanOracle(int decimal_digits) : digits_(decimal_digits) {
  if (decimal_digits < 20 || decimal_digits > 10000) {
    throw std::invalid_argument("oracle digits must lie in [20, 10000]");
  }
  // log2(10) bits per digit plus guard bits for the single final rounding.
  bits_ = static_cast<long>(std::ceil(decimal_digits * 3.3219280948873623)) + 16;
}

double ArctanOracle::atan(double x) const { return hp_atan(hp::Real(x, bits_)).to_double(); }

double ArctanOracle::atan2(double y, double x) const {
  return hp_atan2(hp::Real(y, bits_), hp::Real(x, bits_)).to_double();
}

double ArctanOracle::relative_deviation(double x, double approx) const {
  double out = 0;
  relative_deviations(x, std::span<const double>(&approx, 1), std::span<double>(&out, 1));
  return out;
}

void ArctanOracle::relative_deviations(double x, std::span<const double> approx,
                                       std::span<double> out) const {
  if (out.size() < approx.size()) {
    throw std::invalid_argument("relative_deviations: output span too small");
  }
  if (std::isnan(x)) {
    for (std::size_t i = 0; i < approx.size(); ++i) out[i] = x;
    return;
  }
  if (x == 0) {
    for (std::size_t i = 0; i < approx.size(); ++i) out[i] = approx[i];
    return;
  }
  const hp::Real truth = hp_atan(hp::Real(x, bits_));
  const hp::Real magnitude = abs(truth);
  for (std::size_t i = 0; i < approx.size(); ++i) {
    out[i] = ((hp::Real(approx[i], bits_) - truth) / magnitude).to_double();
  }
}

double ArctanOracle::absolute_deviation_atan2(double y, double x, double approx) const {
  const hp::Real truth = hp_atan2(hp::Real(y, bits_), hp::Real(x, bits_));
  return abs(hp::Real(approx, bits_) - truth).to_double();
}

double ArctanOracle::series_residual(double x, std::span<const double> coeffs,
                                     std::span<const int> powers, int divide_power) const {
  return residual(hp_atan(hp::Real(x, bits_)), x, coeffs, powers, divide_power);
}

double ArctanOracle::series_residual_of(double value, double x, std::span<const double> coeffs,
                                        std::span<const int> powers, int divide_power) const {
  return residual(hp::Real(value, bits_), x, coeffs, powers, divide_power);
}

}  // namespace atanbounds
