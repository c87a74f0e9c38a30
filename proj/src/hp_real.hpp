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

// Minimal value type over mpfr_t. Precision is carried per object; results of
// binary operations take the precision of the left operand, so there is no
// process-wide default precision to mutate.

#ifndef ATANBOUNDS_SRC_HP_REAL_HPP
#define ATANBOUNDS_SRC_HP_REAL_HPP

#include <mpfr.h>

#include <utility>

namespace atanbounds::hp {

class Real {
 public:
  Real(double value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, value, MPFR_RNDN);
  }
  Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  Real(Real&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
  }
  Real& operator=(Real other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }

  static Real pi(mpfr_prec_t bits) {
    Real r = blank(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  friend Real atan(const Real& a) { return unary(a, mpfr_atan); }
  friend Real sqrt(const Real& a) { return unary(a, mpfr_sqrt); }
  friend Real abs(const Real& a) { return unary(a, mpfr_abs); }

  friend Real atan2(const Real& y, const Real& x) {
    Real r = blank(y.precision());
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
  }

  friend Real operator-(const Real& a) { return unary(a, mpfr_neg); }
  friend Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }

  friend Real operator+(const Real& a, double b) { return a + Real(b, a.precision()); }
  friend Real operator-(const Real& a, double b) { return a - Real(b, a.precision()); }
  friend Real operator*(const Real& a, double b) { return a * Real(b, a.precision()); }
  friend Real operator/(const Real& a, double b) { return a / Real(b, a.precision()); }
  friend Real operator-(double a, const Real& b) { return Real(a, b.precision()) - b; }
  friend Real operator/(double a, const Real& b) { return Real(a, b.precision()) / b; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

 private:
  struct Blank {};
  Real(Blank, mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  static Real blank(mpfr_prec_t bits) { return Real(Blank{}, bits); }

  template <class Op>
  static Real unary(const Real& a, Op op) {
    Real r = blank(a.precision());
    op(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  template <class Op>
  static Real binary(const Real& a, const Real& b, Op op) {
    Real r = blank(a.precision());
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

}  // namespace atanbounds::hp

#endif  // ATANBOUNDS_SRC_HP_REAL_HPP
