// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#include "sintail/bounds.hpp"

#include <gmp.h>

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "sintail/error.hpp"
#include "sintail/parallel.hpp"

namespace sintail {
namespace {

constexpr prec_t kTailBits = 128;

double up(const Real& x) { return x.to_double(MPFR_RNDU); }
double down(const Real& x) { return x.to_double(MPFR_RNDD); }

Real sub_down(const Real& a, const Real& b) {
  Real r(std::max(a.precision(), b.precision()));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDD);
  return r;
}

struct SweepPart {
  std::vector<Failure> failures;
  std::optional<double> min_slack;
  Index min_at = 0;
  Index checked = 0;
  Index skipped = 0;
  int bits = 0;

  void note_slack(double slack, Index at) {
    if (!min_slack || slack < *min_slack) {
      min_slack = slack;
      min_at = at;
    }
  }
};

VerificationReport merge(std::string check, Index lo, Index hi, const std::vector<SweepPart>& parts, int base_bits) {
  VerificationReport rep;
  rep.check = std::move(check);
  rep.range_lo = lo;
  rep.range_hi = hi;
  rep.precision_bits = base_bits;
  for (const SweepPart& part : parts) {
    rep.failures.insert(rep.failures.end(), part.failures.begin(), part.failures.end());
    if (part.min_slack && (!rep.min_slack || *part.min_slack < *rep.min_slack)) {
      rep.min_slack = part.min_slack;
      rep.min_slack_at = part.min_at;
    }
    rep.checked += part.checked;
    rep.skipped += part.skipped;
    rep.precision_bits = std::max(rep.precision_bits, part.bits);
  }
  rep.passed = rep.failures.empty();
  return rep;
}

constexpr Index kSweepBlock = 1 << 12;

}  // namespace

Interval tame_bound(Index n, PrecisionBits p) {
  if (n < 1) throw Error(Errc::invalid_argument, "index must be a positive integer, got " + std::to_string(n));
  return exp(-sqrt(Interval::from_int(n, p.bits())));
}

VerificationReport verify_lemma_tame(Index n_lo, Index n_hi, const VerifyOptions& opts) {
  if (n_lo < 1 || n_hi < n_lo) throw Error(Errc::invalid_argument, "lemma sweep needs 1 <= n_lo <= n_hi");
  const ClassifyOptions copts{opts.precision, opts.ceiling_bits};
  const auto blocks = static_cast<std::size_t>((n_hi - n_lo) / kSweepBlock + 1);
  auto parts = map_indexed(blocks, opts.workers, [&](std::size_t b) {
    SweepPart part;
    const Index lo = n_lo + static_cast<Index>(b) * kSweepBlock;
    const Index hi = std::min(n_hi, lo + kSweepBlock - 1);
    for (Index n = lo; n <= hi; ++n) {
      if (classify(n, copts).verdict == Verdict::wild) {
        ++part.skipped;
        continue;
      }
      ++part.checked;
      bool settled = false;
      for (PrecisionBits p = opts.precision; p.bits() <= opts.ceiling_bits && !settled; p = p.doubled()) {
        const Interval log_power = log_power_enclosure(n, p);
        const Interval log_bound = -sqrt(Interval::from_int(n, p.bits()));
        if (log_power.hi() <= log_bound.lo()) {
          part.note_slack(down(sub_down(log_bound.lo(), log_power.hi())), n);
          part.bits = std::max(part.bits, p.bits());
          settled = true;
        } else if (log_power.lo() > log_bound.hi()) {
          part.failures.push_back({n, "power exceeds e^(-sqrt n)"});
          part.bits = std::max(part.bits, p.bits());
          settled = true;
        }
      }
      if (!settled) {
        throw Error(Errc::undecidable_at_precision,
                    "lemma comparison unresolved for n = " + std::to_string(n), n);
      }
    }
    return part;
  });
  return merge("lemma-tame", n_lo, n_hi, parts, opts.precision.bits());
}

VerificationReport verify_wild_growth(const WildTable& table, const VerifyOptions& opts) {
  if (table.values.empty()) throw Error(Errc::invalid_argument, "wild table is empty");
  const prec_t bits = opts.precision.bits();
  const Interval exponent = Interval::from_ratio(77, 76, bits);
  const auto count = static_cast<Index>(table.size());
  const auto blocks = static_cast<std::size_t>((count - 1) / kSweepBlock + 1);
  auto parts = map_indexed(blocks, opts.workers, [&](std::size_t b) {
    SweepPart part;
    part.bits = static_cast<int>(bits);
    const Index lo = 1 + static_cast<Index>(b) * kSweepBlock;
    const Index hi = std::min(count, lo + kSweepBlock - 1);
    for (Index k = lo; k <= hi; ++k) {
      const Index w = table.w(static_cast<std::size_t>(k));
      // k^(77/76) / 2 as exp((77/76) ln k) / 2
      const Interval bound = ldexp(exp(exponent * log(Interval::from_int(k, bits))), -1);
      const Real wr = Real::from_int(w, std::max<prec_t>(bits, 64), MPFR_RNDN);
      ++part.checked;
      if (wr >= bound.hi()) {
        part.note_slack(down(sub_down(wr, bound.hi())), k);
      } else {
        part.failures.push_back({k, "W_k = " + std::to_string(w) + " below k^(77/76)/2"});
      }
    }
    return part;
  });
  return merge("wild-growth", 1, count, parts, opts.precision.bits());
}

MahlerResult mahler_check(const RationalApprox& r, double exponent, PrecisionBits p, int ceiling_bits) {
  if (r.q == std::numeric_limits<std::int64_t>::min() || std::llabs(r.q) <= 1) {
    throw Error(Errc::hypothesis_violation,
                "rational approximation needs |q| > 1, got " + std::to_string(r.p) + "/" + std::to_string(r.q));
  }
  MahlerResult res{r, exponent, false, Interval(p.bits()), Interval(p.bits()), p};
  for (PrecisionBits bits = p; bits.bits() <= ceiling_bits; bits = bits.doubled()) {
    const prec_t b = bits.bits();
    res.gap = abs(pi_enclosure(bits) - Interval::from_ratio(r.p, r.q, b));
    res.bound = exp(-(Interval::from_double(exponent, b) * log(abs(Interval::from_int(r.q, b)))));
    res.precision_used = bits;
    if (res.gap.lo() > res.bound.hi()) {
      res.passed = true;
      return res;
    }
    if (res.gap.hi() <= res.bound.lo()) return res;
  }
  return res;
}

std::vector<RationalApprox> pi_convergents(std::size_t count) {
  std::vector<RationalApprox> out;
  if (count == 0) return out;
  constexpr prec_t bits = 1024;
  Interval x = pi_enclosure(bits);
  __int128 p_prev = 0, q_prev = 1;  // p_{-2}, q_{-2}
  __int128 p_cur = 1, q_cur = 0;    // p_{-1}, q_{-1}
  mpz_t a_lo, a_hi;
  mpz_inits(a_lo, a_hi, nullptr);
  constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
  while (out.size() < count) {
    mpfr_get_z(a_lo, x.lo().get(), MPFR_RNDD);
    mpfr_get_z(a_hi, x.hi().get(), MPFR_RNDD);
    if (mpz_cmp(a_lo, a_hi) != 0 || !mpz_fits_slong_p(a_lo)) {
      mpz_clears(a_lo, a_hi, nullptr);
      throw Error(Errc::invalid_argument, "continued fraction of pi exhausted the working precision");
    }
    const long a = mpz_get_si(a_lo);
    const __int128 p_next = a * p_cur + p_prev;
    const __int128 q_next = a * q_cur + q_prev;
    if (p_next > kMax || q_next > kMax) {
      mpz_clears(a_lo, a_hi, nullptr);
      throw Error(Errc::invalid_argument,
                  "only " + std::to_string(out.size()) + " convergents of pi fit in 64-bit integers");
    }
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    if (q_cur > 1) out.push_back({static_cast<std::int64_t>(p_cur), static_cast<std::int64_t>(q_cur)});
    x = Interval::from_int(1, bits) / add_int(x, -a);
  }
  mpz_clears(a_lo, a_hi, nullptr);
  return out;
}

MahlerReport verify_mahler(std::size_t count, double exponent, const VerifyOptions& opts) {
  MahlerReport rep;
  rep.summary.check = "mahler";
  rep.summary.range_lo = 1;
  rep.summary.range_hi = static_cast<Index>(count);
  rep.summary.precision_bits = opts.precision.bits();
  const auto convergents = pi_convergents(count);
  for (std::size_t i = 0; i < convergents.size(); ++i) {
    MahlerResult res = mahler_check(convergents[i], exponent, opts.precision, opts.ceiling_bits);
    const auto at = static_cast<Index>(i + 1);
    ++rep.summary.checked;
    rep.summary.precision_bits = std::max(rep.summary.precision_bits, res.precision_used.bits());
    if (res.passed) {
      const double slack = down(sub_down(res.gap.lo(), res.bound.hi()));
      if (!rep.summary.min_slack || slack < *rep.summary.min_slack) {
        rep.summary.min_slack = slack;
        rep.summary.min_slack_at = at;
      }
    } else {
      rep.summary.failures.push_back(
          {at, "inconclusive for " + std::to_string(res.r.p) + "/" + std::to_string(res.r.q)});
    }
    rep.cases.push_back(std::move(res));
  }
  rep.summary.passed = rep.summary.failures.empty();
  return rep;
}

double tame_tail_bound(Index N) {
  if (N < 0) throw Error(Errc::invalid_argument, "tail cutoff must be >= 0");
  const Interval root = sqrt(Interval::from_int(N, kTailBits));
  const Interval f = ldexp(add_int(root, 1) * exp(-root), 1);
  return up(f.hi());
}

double wild_tail_bound(Index N) {
  if (N < 1) throw Error(Errc::invalid_argument, "wild tail cutoff must be >= 1");
  // The split point may be any positive real, so an approximate t is fine as
  // long as the bound is then evaluated rigorously at that exact t.
  Real t(kTailBits);
  mpfr_set_sj(t.get(), 2 * N, MPFR_RNDN);
  mpfr_log(t.get(), t.get(), MPFR_RNDN);
  mpfr_mul_ui(t.get(), t.get(), 76, MPFR_RNDN);
  mpfr_div_ui(t.get(), t.get(), 77, MPFR_RNDN);
  mpfr_exp(t.get(), t.get(), MPFR_RNDN);
  const Interval split(t, t);
  const Interval log_split = log(split);
  const Interval head = div_int(split, N);
  const Interval first = ldexp(exp(-(Interval::from_ratio(77, 76, kTailBits) * log_split)), 1);
  const Interval rest = mul_int(exp(-div_int(log_split, 76)), 152);
  return up((head + first + rest).hi());
}

TailBound tail_bound(Index N) {
  TailBound tb{N, tame_tail_bound(N), wild_tail_bound(N), 0.0};
  Real total = Real::from_double(tb.tame_tail, 53, MPFR_RNDN);
  mpfr_add_d(total.get(), total.get(), tb.wild_tail, MPFR_RNDU);
  tb.total_tail = up(total);
  return tb;
}

CertifiedEnclosure certified_enclosure(Index N0, const VerifyOptions& opts) {
  if (N0 < 1) throw Error(Errc::invalid_argument, "certified prefix must have at least one term");
  SumOptions sopts;
  sopts.engine = Engine::certified;
  sopts.precision = opts.precision;
  sopts.workers = opts.workers;
  PartialSum ps = partial_sum(N0, sopts);
  TailBound tb = tail_bound(N0);
  Real hi(ps.value.precision());
  mpfr_add_d(hi.get(), ps.value.hi().get(), tb.total_tail, MPFR_RNDU);
  Interval enc(ps.value.lo(), std::move(hi));
  const double width = up(enc.width());
  return CertifiedEnclosure{std::move(ps), tb, std::move(enc), width};
}

double total_upper_bound(Index N0, const VerifyOptions& opts) {
  return up(certified_enclosure(N0, opts).enclosure.hi());
}

}  // namespace sintail
