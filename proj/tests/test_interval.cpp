// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#include <doctest.h>

#include <random>

#include "support.hpp"
#include "sintail/error.hpp"
#include "sintail/interval.hpp"
#include "sintail/report.hpp"

using namespace sintail;

using support::code_of;
using support::encloses;
using support::to_boost;

TEST_CASE("exact squares and identities") {
  const Interval half = Interval::from_ratio(1, 2, 96);
  const Interval sq = pow(half, 2);
  CHECK(sq.contains(0.25));
  CHECK(sq.is_point());

  CHECK(exp(Interval::from_int(0, 96)).contains(1.0));

  // 2/3 + 1/3 * 1 evaluated as (2 + s) / 3, the form the series uses, is exact.
  const Interval sin_one = Interval::from_int(1, 96);
  const Interval p10 = pow(div_int(add_int(sin_one, 2), 3), 10);
  CHECK(p10.contains(1.0));
  Real four_ulps(96);
  mpfr_set_ui_2exp(four_ulps.get(), 4, -96, MPFR_RNDN);
  CHECK(p10.width() <= four_ulps);

  // Summing the separately rounded thirds widens by one ulp per side, which
  // the tenth power multiplies by ten.
  const Interval naive = pow(Interval::from_ratio(2, 3, 96) + Interval::from_ratio(1, 3, 96) * sin_one, 10);
  CHECK(naive.contains(1.0));
  Real ulps(96);
  mpfr_set_ui_2exp(ulps.get(), 32, -95, MPFR_RNDN);
  CHECK(naive.width() <= ulps);
}

TEST_CASE("domain violations raise distinct errors") {
  const Interval straddle(Real::from_int(-1, 64, MPFR_RNDN), Real::from_int(1, 64, MPFR_RNDN));
  CHECK(code_of([&] { (void)(Interval::from_int(1, 64) / straddle); }) == Errc::domain_error);
  CHECK(code_of([&] { (void)log(straddle); }) == Errc::domain_error);
  CHECK(code_of([&] { (void)log(Interval::from_int(0, 64)); }) == Errc::domain_error);
  CHECK(code_of([&] { (void)sqrt(straddle); }) == Errc::domain_error);
  CHECK(code_of([&] { (void)root4(straddle); }) == Errc::domain_error);
  CHECK(code_of([&] { (void)Interval(Real::from_int(2, 64, MPFR_RNDN), Real::from_int(1, 64, MPFR_RNDN)); }) ==
        Errc::invalid_argument);
}

TEST_CASE("powers of a base inside [0, 1] stay inside [0, 1]") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(0, 1000);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t a = num(rng);
    const std::int64_t b = std::max(a, num(rng));
    const Interval x = hull(Interval::from_ratio(a, 1000, 80), Interval::from_ratio(b, 1000, 80));
    const Interval y = pow(x, static_cast<std::uint64_t>(1 + rng() % 5000));
    CHECK(mpfr_sgn(y.lo().get()) >= 0);
    CHECK(mpfr_cmp_ui(y.hi().get(), 1) <= 0);
  }
}

TEST_CASE("operations enclose the image computed independently") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  namespace mp = oracle::mp;
  for (int i = 0; i < 300; ++i) {
    const double a = u(rng);
    const double b = u(rng);
    const Interval x = Interval::from_double(a, 80);
    const Interval y = Interval::from_double(b, 80);
    const oracle::float256 A(a), B(b);
    CHECK(encloses(x + y, A + B));
    CHECK(encloses(x - y, A - B));
    CHECK(encloses(x * y, A * B));
    if (std::abs(b) > 1e-3) CHECK(encloses(x / y, A / B));
    CHECK(encloses(exp(x), mp::exp(A)));
    CHECK(encloses(cos(x), mp::cos(A)));
    CHECK(encloses(pow(x, 7), mp::pow(A, 7)));
    CHECK(encloses(pow(x, 8), mp::pow(A, 8)));
    const double positive = std::abs(a) + 1e-3;
    const Interval xp = Interval::from_double(positive, 80);
    const oracle::float256 Pexact(positive);
    CHECK(encloses(log(xp), mp::log(Pexact)));
    CHECK(encloses(sqrt(xp), mp::sqrt(Pexact)));
    CHECK(encloses(root4(xp), mp::pow(Pexact, oracle::float256(0.25))));
  }
}

TEST_CASE("cosine over intervals that contain extrema") {
  const Interval around_zero(Real::from_double(-0.5, 64, MPFR_RNDN), Real::from_double(0.25, 64, MPFR_RNDN));
  const Interval c = cos(around_zero);
  CHECK(mpfr_cmp_ui(c.hi().get(), 1) == 0);
  CHECK(c.contains(std::cos(0.5)));

  const Interval around_pi(Real::from_double(3.0, 64, MPFR_RNDN), Real::from_double(3.3, 64, MPFR_RNDN));
  CHECK(mpfr_cmp_si(cos(around_pi).lo().get(), -1) == 0);

  const Interval wide(Real::from_int(0, 64, MPFR_RNDN), Real::from_int(8, 64, MPFR_RNDN));
  const Interval full = cos(wide);
  CHECK(mpfr_cmp_si(full.lo().get(), -1) == 0);
  CHECK(mpfr_cmp_si(full.hi().get(), 1) == 0);
}

TEST_CASE("higher precision nests inside lower precision") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 100000);
    const auto build = [n](prec_t p) {
      const Interval x = Interval::from_int(n, p);
      return exp(-sqrt(x)) + log(x) * root4(x) / Interval::from_int(3, p);
    };
    CHECK(build(192).subset_of(build(96)));
  }
}

TEST_CASE("decimal rendering round-trips bit-exactly") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const prec_t p = 32 + static_cast<prec_t>(rng() % 300);
    const Interval x = exp(Interval::from_double(std::ldexp(static_cast<double>(rng() % 100000), -10) - 40.0, p));
    const Interval back = json(x).get<Interval>();
    CHECK(back.identical(x));
  }
}
