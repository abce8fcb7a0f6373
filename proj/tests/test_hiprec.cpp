// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <thread>

#include "support.hpp"
#include "sintail/hiprec.hpp"

using namespace sintail;
using support::code_of;
using support::encloses;
using support::to_boost;

namespace {

// pi lies inside the enclosure when Machin's interval does.
bool contains_machin_pi(const Interval& x) {
  const auto machin = oracle::machin_pi(static_cast<unsigned>(x.precision()) + 96);
  // Compare in integers: endpoint * 2^bits against scaled -+ error.
  const auto as_scaled = [&](const Real& r) {
    mpz_t m;
    mpz_init(m);
    const long e = mpfr_get_z_2exp(m, r.get());
    char* digits = mpz_get_str(nullptr, 10, m);
    oracle::big v(digits);
    std::free(digits);
    mpz_clear(m);
    const long shift = e + static_cast<long>(machin.bits);
    REQUIRE(shift >= 0);
    return oracle::big(v << shift);
  };
  return as_scaled(x.lo()) <= machin.scaled - machin.error && machin.scaled + machin.error <= as_scaled(x.hi());
}

Real pow2(long e) {
  Real r(64);
  mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
  return r;
}

}  // namespace

TEST_CASE("precision floor") {
  CHECK(PrecisionBits(32).bits() == 32);
  CHECK(code_of([] { (void)PrecisionBits(31); }) == Errc::invalid_argument);
  CHECK(PrecisionBits{}.bits() == 96);
}

TEST_CASE("pi enclosure against Machin's formula") {
  const Interval& pi64 = pi_enclosure(PrecisionBits(64));
  CHECK(contains_machin_pi(pi64));
  CHECK(pi64.width() <= pow2(-60));
  for (int bits : {32, 53, 96, 113, 128, 256, 1000, 4096}) {
    const Interval& pi = pi_enclosure(PrecisionBits(bits));
    CHECK(contains_machin_pi(pi));
    CHECK(pi.width() <= pow2(2 - bits + 2));  // at most 4 ulp; in practice 1
  }
  CHECK(pi_enclosure(PrecisionBits(128)).subset_of(pi64));
}

TEST_CASE("pi at 53 bits agrees with the 15-digit decimal") {
  const Interval& pi53 = pi_enclosure(PrecisionBits(53));
  char lo[32];
  char hi[32];
  mpfr_snprintf(lo, sizeof lo, "%.14Rf", pi53.lo().get());
  mpfr_snprintf(hi, sizeof hi, "%.14Rf", pi53.hi().get());
  CHECK(std::string(lo) == "3.14159265358979");
  CHECK(std::string(hi) == "3.14159265358979");
  // The decimal itself is 3.2e-15 below pi, farther than the 53-bit ulp.
  CHECK_FALSE(pi53.contains(Real::from_string("3.14159265358979", 200, MPFR_RNDN)));
}

TEST_CASE("pi cache is shared and thread safe") {
  PiCache cache;
  std::vector<std::jthread> pool;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&, t] {
      bool all = true;
      for (int bits = 40; bits < 400; bits += 7) all = all && cache.get(bits).identical(pi_enclosure(bits));
      ok[t] = all;
      mpfr_free_cache2(MPFR_FREE_LOCAL_CACHE);
    });
  }
  pool.clear();
  CHECK(std::count(ok.begin(), ok.end(), 1) == 8);
  CHECK(cache.size() == (400 - 40 + 6) / 7);
  CHECK(&cache.get(96) == &cache.get(96));
  CHECK(code_of([&] { cache.insert(Interval::from_int(3, 64)); }) == Errc::invalid_argument);
}

TEST_CASE("reduce: small indices") {
  const ReducedAngle one = reduce(1, PrecisionBits{});
  CHECK(one.a == 0);
  CHECK(std::abs(one.theta.mid_double() - (1.0 - M_PI / 2)) < 1e-15);
  CHECK(std::abs(one.theta.mid_double() + 0.570796) < 1e-6);

  const ReducedAngle eight = reduce(8, PrecisionBits{});
  CHECK(eight.a == 1);
  CHECK(std::abs(eight.theta.mid_double() - (8.0 - 2.5 * M_PI)) < 1e-14);
  CHECK(std::abs(eight.theta.mid_double() - 0.146018) < 1e-6);

  CHECK(code_of([] { (void)reduce(0, PrecisionBits{}); }) == Errc::invalid_argument);
  CHECK(code_of([] { (void)reduce(-3, PrecisionBits{}); }) == Errc::invalid_argument);
}

TEST_CASE("reduce: reconstruction, range and width across magnitudes") {
  auto ns = support::random_indices(300, std::numeric_limits<Index>::max(), 5);
  for (Index n : support::random_indices(300, 1'000'000, 6)) ns.push_back(n);
  ns.push_back(std::numeric_limits<Index>::max());
  ns.push_back(1);
  for (int bits : {32, 96, 200}) {
    const PrecisionBits p(bits);
    for (Index n : ns) {
      const ReducedAngle r = reduce(n, p);
      const Interval& pi = pi_enclosure(r.theta.precision());
      const Interval back = r.theta + ldexp(mul_int(pi, 4 * r.a + 1), -1);
      CHECK(back.contains(Interval::from_int(n, 64)));
      // |theta| <= pi + 2^(-p+2)
      const Interval limit = pi + Interval(pow2(2 - bits), pow2(2 - bits));
      CHECK(abs(r.theta).hi() <= limit.hi());
      CHECK(r.theta.width() <= pow2(2 - bits));
      // Independent reduction with a 256-bit Boost pi.
      std::int64_t a = 0;
      const oracle::float256 th = oracle::theta256(n, &a);
      if (a == r.a && bits <= 128) {  // the oracle carries about 190 good bits
        CHECK(encloses(r.theta.rounded(std::min<prec_t>(r.theta.precision(), 250)), th));
      }
    }
  }
}

TEST_CASE("sin enclosure: values, clamp and width") {
  const Interval s1 = sin_enclosure(1, PrecisionBits{});
  CHECK(std::abs(s1.mid_double() - std::sin(1.0)) < 1e-15);
  CHECK(std::abs(s1.mid_double() - 0.8414709848) < 1e-10);
  const Interval s8 = sin_enclosure(8, PrecisionBits{});
  CHECK(std::abs(s8.mid_double() - std::sin(8.0)) < 1e-15);
  CHECK(std::abs(s8.mid_double() - 0.9893582466) < 1e-10);

  for (Index n : support::random_indices(500, std::numeric_limits<Index>::max(), 9)) {
    for (int bits : {32, 64, 96}) {
      const Interval s = sin_enclosure(n, PrecisionBits(bits));
      CHECK(mpfr_cmp_si(s.lo().get(), -1) >= 0);
      CHECK(mpfr_cmp_si(s.hi().get(), 1) <= 0);
      CHECK(s.width() <= pow2(4 - bits));
    }
  }
  CHECK(code_of([] { (void)sin_enclosure(0, PrecisionBits{}); }) == Errc::invalid_argument);
}

TEST_CASE("sin enclosure contains the independently reduced double sine") {
  for (Index n : support::random_indices(1000, 1'000'000, 13)) {
    const Interval s = sin_enclosure(n, PrecisionBits(96));
    const double v = oracle::sin_double_reduced(n);
    // The double cosine is good to about one ulp; allow four.
    const double slack = 4 * std::numeric_limits<double>::epsilon();
    CHECK(s.intersects(Interval(Real::from_double(v - slack, 64, MPFR_RNDD), Real::from_double(v + slack, 64, MPFR_RNDU))));
    CHECK(encloses(s, oracle::sin256(n)));
  }
}

TEST_CASE("sin enclosure holds for huge arguments") {
  for (Index n : support::random_indices(200, std::numeric_limits<Index>::max(), 21)) {
    const Interval s = sin_enclosure(n, PrecisionBits(128));
    CHECK(encloses(s, oracle::sin256(n)));
  }
}

TEST_CASE("nesting in precision and determinism") {
  for (Index n : support::random_indices(300, 1'000'000, 17)) {
    const PrecisionBits p(80);
    CHECK(sin_enclosure(n, p.doubled()).subset_of(sin_enclosure(n, p)));
    CHECK(reduce(n, p.doubled()).theta.subset_of(reduce(n, p).theta));
    CHECK(sin_enclosure(n, p).identical(sin_enclosure(n, p)));
    CHECK(reduce(n, p).theta.identical(reduce(n, p).theta));
  }
}

TEST_CASE("pi cache file") {
  const auto dir = support::scratch_dir("pi");
  const auto path = dir / "pi-96.bin";
  CHECK_FALSE(read_pi_file(path, PrecisionBits(96)).has_value());

  write_pi_file(path, PrecisionBits(96));
  std::ifstream in(path, std::ios::binary);
  std::vector<unsigned char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  REQUIRE(raw.size() == 11 + 1 + 8 + 12);
  CHECK(std::string(raw.begin(), raw.begin() + 10) == "SINTAIL-PI");
  CHECK(raw[10] == 0);
  CHECK(raw[11] == 1);
  CHECK(raw[12] == 96);
  for (int i = 13; i < 20; ++i) CHECK(raw[i] == 0);

  const auto loaded = read_pi_file(path, PrecisionBits(96));
  REQUIRE(loaded.has_value());
  CHECK(loaded->identical(pi_enclosure(PrecisionBits(96))));
  CHECK_FALSE(read_pi_file(path, PrecisionBits(128)).has_value());

  CHECK(preload_pi(path, PrecisionBits(96)));

  // Flip a mantissa byte: the stored value no longer looks like pi.
  {
    std::fstream f(path, std::ios::binary | std::ios::in | std::ios::out);
    f.seekp(31);
    f.put(static_cast<char>(0x20));
  }
  CHECK(code_of([&] { (void)read_pi_file(path, PrecisionBits(96)); }) == Errc::cache_format);
  CHECK_FALSE(preload_pi(path, PrecisionBits(96)));  // rewritten
  CHECK(read_pi_file(path, PrecisionBits(96))->identical(pi_enclosure(PrecisionBits(96))));

  {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << "NOT-PI";
  }
  CHECK(code_of([&] { (void)read_pi_file(path, PrecisionBits(96)); }) == Errc::cache_format);
  std::filesystem::remove_all(dir);
}
