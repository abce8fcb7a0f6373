// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <mpfr.h>

namespace sintail {

using prec_t = mpfr_prec_t;

/// Owning RAII handle around an mpfr_t. Value semantics: copies carry the
/// precision of the source.
class Real {
 public:
  explicit Real(prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }

  Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }

  Real(Real&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }

  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }

  Real& operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }

  ~Real() { mpfr_clear(v_); }

  static Real from_int(std::int64_t v, prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_set_sj(r.v_, v, rnd);
    return r;
  }

  static Real from_double(double v, prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_set_d(r.v_, v, rnd);
    return r;
  }

  /// Parses a decimal string; throws Error(invalid_argument) on malformed input.
  static Real from_string(const std::string& s, prec_t prec, mpfr_rnd_t rnd);

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  prec_t precision() const noexcept { return mpfr_get_prec(v_); }

  /// Copy rounded to a new precision in the given direction.
  Real rounded(prec_t prec, mpfr_rnd_t rnd) const {
    Real r(prec);
    mpfr_set(r.v_, v_, rnd);
    return r;
  }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }

  /// Decimal rendering rounded in the given direction (so the string is itself
  /// a bound on the value), with enough digits that parsing it back rounding
  /// in the opposite direction restores the exact binary value.
  std::string to_string(mpfr_rnd_t rnd) const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }

  /// Bitwise identity: same precision and same value.
  bool identical(const Real& other) const {
    return precision() == other.precision() && mpfr_equal_p(v_, other.v_);
  }

 private:
  mpfr_t v_;
};

}  // namespace sintail
