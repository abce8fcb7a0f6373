// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#include "sintail/interval.hpp"

#include <gmp.h>

#include <algorithm>

#include "sintail/error.hpp"

namespace sintail {
namespace {

prec_t join(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

const Real& min_of(const Real& a, const Real& b) { return b < a ? b : a; }
const Real& max_of(const Real& a, const Real& b) { return a < b ? b : a; }

template <typename Fn>
Interval monotone_up(const Interval& a, Fn fn) {
  Real lo(a.precision());
  Real hi(a.precision());
  fn(lo.get(), a.lo().get(), MPFR_RNDD);
  fn(hi.get(), a.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace

Interval::Interval(prec_t prec) : lo_(prec), hi_(prec) {}

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (mpfr_nan_p(lo_.get()) || mpfr_nan_p(hi_.get()) || hi_ < lo_) {
    throw Error(Errc::invalid_argument, "interval endpoints out of order");
  }
  if (lo_.precision() != hi_.precision()) {
    const prec_t p = std::max(lo_.precision(), hi_.precision());
    lo_ = lo_.rounded(p, MPFR_RNDD);
    hi_ = hi_.rounded(p, MPFR_RNDU);
  }
}

Interval Interval::from_int(std::int64_t v, prec_t prec) {
  return Interval(Real::from_int(v, prec, MPFR_RNDD), Real::from_int(v, prec, MPFR_RNDU));
}

Interval Interval::from_double(double v, prec_t prec) {
  return Interval(Real::from_double(v, prec, MPFR_RNDD), Real::from_double(v, prec, MPFR_RNDU));
}

Interval Interval::from_ratio(std::int64_t num, std::int64_t den, prec_t prec) {
  if (den == 0) throw Error(Errc::domain_error, "zero denominator");
  mpq_t q;
  mpq_init(q);
  mpz_set_si(mpq_numref(q), num);
  mpz_set_si(mpq_denref(q), den);
  mpq_canonicalize(q);
  Real lo(prec);
  Real hi(prec);
  mpfr_set_q(lo.get(), q, MPFR_RNDD);
  mpfr_set_q(hi.get(), q, MPFR_RNDU);
  mpq_clear(q);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::from_strings(const std::string& lo, const std::string& hi, prec_t prec) {
  return Interval(Real::from_string(lo, prec, MPFR_RNDD), Real::from_string(hi, prec, MPFR_RNDU));
}

Interval Interval::rounded(prec_t prec) const {
  return Interval(lo_.rounded(prec, MPFR_RNDD), hi_.rounded(prec, MPFR_RNDU));
}

bool Interval::contains(double x) const {
  return mpfr_cmp_d(lo_.get(), x) <= 0 && mpfr_cmp_d(hi_.get(), x) >= 0;
}

Real Interval::width() const {
  Real w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

Real Interval::mid() const {
  Real m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

Interval operator+(const Interval& a, const Interval& b) {
  const prec_t p = join(a, b);
  Real lo(p);
  Real hi(p);
  mpfr_add(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a, const Interval& b) {
  const prec_t p = join(a, b);
  Real lo(p);
  Real hi(p);
  mpfr_sub(lo.get(), a.lo().get(), b.hi().get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi().get(), b.lo().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a) {
  Real lo(a.precision());
  Real hi(a.precision());
  mpfr_neg(lo.get(), a.hi().get(), MPFR_RNDD);
  mpfr_neg(hi.get(), a.lo().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator*(const Interval& a, const Interval& b) {
  const prec_t p = join(a, b);
  const mpfr_srcptr xs[2] = {a.lo().get(), a.hi().get()};
  const mpfr_srcptr ys[2] = {b.lo().get(), b.hi().get()};
  Real lo(p);
  Real hi(p);
  Real t(p);
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || t < lo) mpfr_set(lo.get(), t.get(), MPFR_RNDN);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || t > hi) mpfr_set(hi.get(), t.get(), MPFR_RNDN);
      first = false;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw Error(Errc::domain_error, "division by an interval containing zero");
  const prec_t p = join(a, b);
  const mpfr_srcptr xs[2] = {a.lo().get(), a.hi().get()};
  const mpfr_srcptr ys[2] = {b.lo().get(), b.hi().get()};
  Real lo(p);
  Real hi(p);
  Real t(p);
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_div(t.get(), x, y, MPFR_RNDD);
      if (first || t < lo) mpfr_set(lo.get(), t.get(), MPFR_RNDN);
      mpfr_div(t.get(), x, y, MPFR_RNDU);
      if (first || t > hi) mpfr_set(hi.get(), t.get(), MPFR_RNDN);
      first = false;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval add_int(const Interval& a, std::int64_t v) {
  return a + Interval::from_int(v, std::max<prec_t>(a.precision(), 64));
}

Interval mul_int(const Interval& a, std::int64_t v) {
  return a * Interval::from_int(v, std::max<prec_t>(a.precision(), 64));
}

Interval div_int(const Interval& a, std::int64_t v) {
  if (v == 0) throw Error(Errc::domain_error, "division by zero");
  Real lo(a.precision());
  Real hi(a.precision());
  const mpfr_rnd_t down = MPFR_RNDD;
  const mpfr_rnd_t up = MPFR_RNDU;
  if (v > 0) {
    mpfr_div_si(lo.get(), a.lo().get(), static_cast<long>(v), down);
    mpfr_div_si(hi.get(), a.hi().get(), static_cast<long>(v), up);
  } else {
    mpfr_div_si(lo.get(), a.hi().get(), static_cast<long>(v), down);
    mpfr_div_si(hi.get(), a.lo().get(), static_cast<long>(v), up);
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval ldexp(const Interval& a, long k) {
  Real lo(a.precision());
  Real hi(a.precision());
  mpfr_mul_2si(lo.get(), a.lo().get(), k, MPFR_RNDD);
  mpfr_mul_2si(hi.get(), a.hi().get(), k, MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval abs(const Interval& a) {
  if (mpfr_sgn(a.lo().get()) >= 0) return a;
  if (mpfr_sgn(a.hi().get()) <= 0) return -a;
  Real hi(a.precision());
  mpfr_neg(hi.get(), a.lo().get(), MPFR_RNDU);
  if (hi < a.hi()) hi = a.hi();
  return Interval(Real(a.precision()), std::move(hi));
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(min_of(a.lo(), b.lo()), max_of(a.hi(), b.hi()));
}

Interval clamp(const Interval& a, double lo, double hi) {
  if (mpfr_cmp_d(a.hi().get(), lo) < 0 || mpfr_cmp_d(a.lo().get(), hi) > 0) {
    throw Error(Errc::domain_error, "interval disjoint from clamp range");
  }
  Real l = a.lo();
  Real h = a.hi();
  if (mpfr_cmp_d(l.get(), lo) < 0) mpfr_set_d(l.get(), lo, MPFR_RNDD);
  if (mpfr_cmp_d(h.get(), hi) > 0) mpfr_set_d(h.get(), hi, MPFR_RNDU);
  return Interval(std::move(l), std::move(h));
}

Interval pow(const Interval& a, std::uint64_t k) {
  const prec_t p = a.precision();
  if (k == 0) return Interval::from_int(1, p);
  Interval base = a;
  if (k % 2 == 0) base = abs(a);  // even powers are monotone in |x|
  Real lo(p);
  Real hi(p);
  mpfr_pow_ui(lo.get(), base.lo().get(), k, MPFR_RNDD);
  mpfr_pow_ui(hi.get(), base.hi().get(), k, MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval exp(const Interval& a) { return monotone_up(a, mpfr_exp); }

Interval log(const Interval& a) {
  if (mpfr_sgn(a.lo().get()) <= 0) throw Error(Errc::domain_error, "log of an interval touching (-inf, 0]");
  return monotone_up(a, mpfr_log);
}

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.lo().get()) < 0) throw Error(Errc::domain_error, "sqrt of an interval with negative part");
  return monotone_up(a, mpfr_sqrt);
}

Interval root4(const Interval& a) {
  if (mpfr_sgn(a.lo().get()) < 0) throw Error(Errc::domain_error, "fourth root of an interval with negative part");
  return monotone_up(a, [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t rnd) { return mpfr_rootn_ui(r, x, 4, rnd); });
}

Interval cos(const Interval& a) {
  const prec_t p = a.precision();
  const auto full = [p] { return Interval(Real::from_int(-1, p, MPFR_RNDD), Real::from_int(1, p, MPFR_RNDU)); };
  if (mpfr_cmp_ui(a.width().get(), 7) >= 0) return full();

  // Every k with k*pi possibly inside [lo, hi] lies in [ceil(lo/pi), floor(hi/pi)].
  Real pi_lo(p + 8);
  Real pi_hi(p + 8);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  const Interval pi(std::move(pi_lo), std::move(pi_hi));
  const Interval lo_over = Interval(a.lo(), a.lo()) / pi;
  const Interval hi_over = Interval(a.hi(), a.hi()) / pi;
  mpz_t kmin;
  mpz_t kmax;
  mpz_inits(kmin, kmax, nullptr);
  mpfr_get_z(kmin, lo_over.lo().get(), MPFR_RNDU);
  mpfr_get_z(kmax, hi_over.hi().get(), MPFR_RNDD);
  bool has_even = false;
  bool has_odd = false;
  const int span = mpz_cmp(kmax, kmin);
  if (span > 0) {
    has_even = has_odd = true;
  } else if (span == 0) {
    (mpz_even_p(kmin) ? has_even : has_odd) = true;
  }
  mpz_clears(kmin, kmax, nullptr);
  if (has_even && has_odd) return full();

  Real t(p);
  Real lo(p);
  Real hi(p);
  mpfr_cos(lo.get(), a.lo().get(), MPFR_RNDD);
  mpfr_cos(t.get(), a.hi().get(), MPFR_RNDD);
  if (t < lo) lo = t;
  mpfr_cos(hi.get(), a.lo().get(), MPFR_RNDU);
  mpfr_cos(t.get(), a.hi().get(), MPFR_RNDU);
  if (t > hi) hi = t;
  if (has_even) mpfr_set_ui(hi.get(), 1, MPFR_RNDN);
  if (has_odd) mpfr_set_si(lo.get(), -1, MPFR_RNDN);
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace sintail
