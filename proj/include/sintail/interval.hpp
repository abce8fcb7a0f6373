// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#pragma once

#include <cstdint>
#include <string>

#include "sintail/real.hpp"

namespace sintail {

/// Closed interval [lo, hi] with MPFR endpoints of a common precision.
///
/// All operations below round the lower endpoint toward -inf and the upper
/// endpoint toward +inf, so the result contains the exact image of the
/// operands. Binary operations work at the larger operand precision. MPFR
/// functions are correctly rounded in the requested direction, so endpoint
/// evaluation of monotone functions needs no extra widening.
class Interval {
 public:
  explicit Interval(prec_t prec = 64);
  /// Throws Error(invalid_argument) unless lo <= hi.
  Interval(Real lo, Real hi);

  /// Tightest interval around an integer (a point when it fits in `prec`).
  static Interval from_int(std::int64_t v, prec_t prec);
  /// Tightest interval around a double value (exact once prec >= 53).
  static Interval from_double(double v, prec_t prec);
  /// Tightest interval around the rational num/den, den != 0.
  static Interval from_ratio(std::int64_t num, std::int64_t den, prec_t prec);
  /// Parses decimal endpoints, rounding outward at `prec`.
  static Interval from_strings(const std::string& lo, const std::string& hi, prec_t prec);

  const Real& lo() const noexcept { return lo_; }
  const Real& hi() const noexcept { return hi_; }
  prec_t precision() const noexcept { return lo_.precision(); }

  /// Outward rounding to another precision (a superset of *this).
  Interval rounded(prec_t prec) const;

  bool contains(const Real& x) const { return lo_ <= x && x <= hi_; }
  bool contains(double x) const;
  bool contains(const Interval& inner) const { return lo_ <= inner.lo_ && inner.hi_ <= hi_; }
  bool subset_of(const Interval& outer) const { return outer.contains(*this); }
  bool intersects(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }
  bool contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }
  bool is_point() const { return lo_ == hi_; }

  /// hi - lo rounded up.
  Real width() const;
  /// Nearest-rounded midpoint.
  Real mid() const;
  double mid_double() const { return mid().to_double(); }

  /// Same endpoints, same precision.
  bool identical(const Interval& other) const {
    return lo_.identical(other.lo_) && hi_.identical(other.hi_);
  }

 private:
  Real lo_;
  Real hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Throws Error(domain_error) when b contains zero.
Interval operator/(const Interval& a, const Interval& b);

Interval add_int(const Interval& a, std::int64_t v);
Interval mul_int(const Interval& a, std::int64_t v);
/// Throws Error(domain_error) when v == 0.
Interval div_int(const Interval& a, std::int64_t v);
/// Exact scaling by 2^k.
Interval ldexp(const Interval& a, long k);

Interval abs(const Interval& a);
Interval hull(const Interval& a, const Interval& b);
/// Intersection with [lo, hi]; throws Error(domain_error) if disjoint.
Interval clamp(const Interval& a, double lo, double hi);

/// a^k by correctly rounded endpoint powering; no logarithms involved, so the
/// base may touch zero. Results for a subset of [0, 1] stay inside [0, 1].
Interval pow(const Interval& a, std::uint64_t k);
Interval exp(const Interval& a);
/// Throws Error(domain_error) unless a.lo > 0.
Interval log(const Interval& a);
/// Throws Error(domain_error) when a.lo < 0.
Interval sqrt(const Interval& a);
/// Fourth root; throws Error(domain_error) when a.lo < 0.
Interval root4(const Interval& a);
/// Cosine with interior extrema detected against an enclosure of pi.
Interval cos(const Interval& a);

}  // namespace sintail
