// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#define MPFR_WANT_FLOAT128 1

#include <quadmath.h>

#include <cmath>
#include <mutex>

#include "sintail/series.hpp"
#include "sintail/error.hpp"
#include "sintail/parallel.hpp"

namespace sintail {

const char* to_string(Engine e) noexcept { return e == Engine::fast ? "fast" : "certified"; }

namespace {

void require_positive(Index n) {
  if (n < 1) throw Error(Errc::invalid_argument, "index must be a positive integer, got " + std::to_string(n));
}

PrecisionBits guarded(Index n, PrecisionBits p) {
  return PrecisionBits(p.bits() + bit_length(static_cast<std::uint64_t>(n)) + 16);
}

}  // namespace

Interval base_enclosure(Index n, PrecisionBits p) {
  const Interval s = sin_enclosure(n, p);
  return clamp(div_int(add_int(s, 2), 3), 0.0, 1.0);
}

Interval log_power_enclosure(Index n, PrecisionBits p) {
  require_positive(n);
  const PrecisionBits q = guarded(n, p);
  return mul_int(log(base_enclosure(n, q)), n).rounded(p.bits());
}

Interval power_enclosure(Index n, PrecisionBits p) {
  require_positive(n);
  const PrecisionBits q = guarded(n, p);
  const Interval s = base_enclosure(n, q);
  // exp(n ln s) keeps the relative width O(n 2^-q); powering is the fallback
  // for a base that reaches zero.
  Interval power = mpfr_sgn(s.lo().get()) > 0 ? exp(mul_int(log(s), n)) : pow(s, static_cast<std::uint64_t>(n));
  return clamp(power.rounded(p.bits()), 0.0, 1.0);
}

TermValue term_certified(Index n, PrecisionBits p) {
  require_positive(n);
  const PrecisionBits q = guarded(n, p);
  const Interval s = base_enclosure(n, q);
  Interval power = mpfr_sgn(s.lo().get()) > 0 ? exp(mul_int(log(s), n)) : pow(s, static_cast<std::uint64_t>(n));
  return TermValue{n, div_int(clamp(power, 0.0, 1.0), n).rounded(p.bits()), 0.0};
}

namespace {

/// pi/2 = hi + mid + lo with hi and mid holding 50 bits each, so that m * hi
/// and m * mid are exact for |m| < 2^63.
struct HalfPiSplit {
  __float128 hi;
  __float128 mid;
  __float128 lo;
};

const HalfPiSplit& half_pi_split() {
  static const HalfPiSplit split = [] {
    mpfr_t half_pi, part, rest;
    mpfr_inits2(256, half_pi, rest, static_cast<mpfr_ptr>(nullptr));
    mpfr_init2(part, 50);
    mpfr_const_pi(half_pi, MPFR_RNDN);
    mpfr_div_2ui(half_pi, half_pi, 1, MPFR_RNDN);
    HalfPiSplit s{};
    mpfr_set(part, half_pi, MPFR_RNDN);
    s.hi = mpfr_get_float128(part, MPFR_RNDN);
    mpfr_sub(rest, half_pi, part, MPFR_RNDN);
    mpfr_set(part, rest, MPFR_RNDN);
    s.mid = mpfr_get_float128(part, MPFR_RNDN);
    mpfr_sub(rest, rest, part, MPFR_RNDN);
    s.lo = mpfr_get_float128(rest, MPFR_RNDN);
    mpfr_clears(half_pi, part, rest, static_cast<mpfr_ptr>(nullptr));
    return s;
  }();
  return split;
}

__float128 fast_term(Index n) {
  const HalfPiSplit& hp = half_pi_split();
  const auto x = static_cast<__float128>(n);
  const __float128 a = roundq((x - hp.hi) / (4 * hp.hi));
  const __float128 m = 4 * a + 1;
  const __float128 theta = ((x - m * hp.hi) - m * hp.mid) - m * hp.lo;
  // 2/3 + sin(n)/3 = 1 - (2/3) sin^2(theta / 2)
  const __float128 half = sinq(theta / 2);
  const __float128 log_base = log1pq(-(half * half * 2) / 3);
  return expq(x * log_base) / x;
}

double fast_error_bound(__float128 term, Index n) {
  constexpr double u90 = 0x1p-90;
  return static_cast<double>(term) * static_cast<double>(n) * u90 + u90;
}

Interval from_float128(__float128 v) {
  Real r(kFastBits);
  mpfr_set_float128(r.get(), v, MPFR_RNDN);
  return Interval(r, r);
}

struct FastChunk {
  __float128 sum = 0;
  __float128 comp = 0;
  __float128 abs_sum = 0;
  double bound = 0;
};

// Neumaier step: s + c tracks the running total exactly up to one rounding.
void neumaier_add(__float128& s, __float128& c, __float128 x) {
  const __float128 t = s + x;
  if (fabsq(s) >= fabsq(x)) {
    c += (s - t) + x;
  } else {
    c += (x - t) + s;
  }
  s = t;
}

}  // namespace

TermValue term_fast(Index n) {
  require_positive(n);
  const __float128 v = fast_term(n);
  return TermValue{n, from_float128(v), fast_error_bound(v, n)};
}

double term_fast_double(Index n) {
  require_positive(n);
  return static_cast<double>(fast_term(n));
}

PartialSum partial_sum(Index N, const SumOptions& opts) {
  require_positive(N);
  const auto chunks = static_cast<std::size_t>((N + kChunkTerms - 1) / kChunkTerms);
  const auto chunk_range = [N](std::size_t c) {
    const Index lo = static_cast<Index>(c) * kChunkTerms + 1;
    return std::pair{lo, std::min(N, lo + kChunkTerms - 1)};
  };

  std::mutex progress_mu;
  Index done = 0;
  Index next_report = opts.progress_every;
  const auto report = [&](Index terms) {
    if (!opts.progress || opts.progress_every < 1) return;
    std::lock_guard lock(progress_mu);
    done += terms;
    while (done >= next_report && next_report <= N) {
      opts.progress(next_report, N);
      next_report += opts.progress_every;
    }
  };

  if (opts.engine == Engine::fast) {
    auto parts = map_indexed(chunks, opts.workers, [&](std::size_t c) {
      const auto [lo, hi] = chunk_range(c);
      FastChunk out;
      for (Index n = lo; n <= hi; ++n) {
        const __float128 t = fast_term(n);
        neumaier_add(out.sum, out.comp, t);
        out.abs_sum += t;
        out.bound += fast_error_bound(t, n);
      }
      report(hi - lo + 1);
      return out;
    });
    const FastChunk total = tree_reduce(std::move(parts), [](const FastChunk& x, const FastChunk& y) {
      FastChunk r;
      r.sum = x.sum;
      r.comp = x.comp + y.comp;
      neumaier_add(r.sum, r.comp, y.sum);
      r.abs_sum = x.abs_sum + y.abs_sum;
      r.bound = x.bound + y.bound;
      return r;
    });
    const __float128 value = total.sum + total.comp;
    // Compensated summation error with generous constants on top of the
    // per-term propagation bounds.
    const double rounding = (4.0 + static_cast<double>(N) * 0x1p-100) * 0x1p-112 * static_cast<double>(total.abs_sum);
    return PartialSum{N, from_float128(value), Engine::fast, total.bound + rounding, N, PrecisionBits(kFastBits)};
  }

  const prec_t acc_bits = opts.precision.bits() + 32;
  auto parts = map_indexed(chunks, opts.workers, [&](std::size_t c) {
    const auto [lo, hi] = chunk_range(c);
    Interval acc = Interval::from_int(0, acc_bits);
    for (Index n = lo; n <= hi; ++n) acc = acc + term_certified(n, opts.precision).value;
    report(hi - lo + 1);
    return acc;
  });
  Interval total = tree_reduce(std::move(parts), [](const Interval& x, const Interval& y) { return x + y; });
  return PartialSum{N, total.rounded(opts.precision.bits()), Engine::certified, 0.0, N, opts.precision};
}

}  // namespace sintail
