// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sintail/classify.hpp"
#include "sintail/series.hpp"

namespace sintail {

/// A rational p/q.
struct RationalApprox {
  std::int64_t p = 0;
  std::int64_t q = 1;
  friend bool operator==(const RationalApprox&, const RationalApprox&) = default;
};

/// Upper bounds (rounded up) on the tail of the series past after_n.
struct TailBound {
  Index after_n = 0;
  double tame_tail = 0.0;
  double wild_tail = 0.0;
  double total_tail = 0.0;
  friend bool operator==(const TailBound&, const TailBound&) = default;
};

struct Failure {
  Index at = 0;
  std::string reason;
  friend bool operator==(const Failure&, const Failure&) = default;
};

/// Outcome of a verification sweep. min_slack is the smallest certified gap
/// between the two sides of the checked inequality (absent when nothing was
/// checked); its unit is documented per check.
struct VerificationReport {
  std::string check;
  Index range_lo = 0;
  Index range_hi = 0;
  bool passed = true;
  std::vector<Failure> failures;
  std::optional<double> min_slack;
  std::optional<Index> min_slack_at;
  int precision_bits = 0;
  Index checked = 0;
  Index skipped = 0;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerifyOptions {
  PrecisionBits precision;
  int ceiling_bits = 16384;
  unsigned workers = 1;
};

/// Enclosure of e^(-sqrt(n)).
Interval tame_bound(Index n, PrecisionBits p);

/// For each tame n in [n_lo, n_hi] certifies (2/3 + sin(n)/3)^n <= e^(-sqrt n).
/// The comparison runs on logarithms, n ln(base) <= -sqrt(n), and slack is
/// the gap in that log domain. Wild n are counted as skipped. Throws
/// Error(undecidable_at_precision) if a near miss survives the ceiling.
VerificationReport verify_lemma_tame(Index n_lo, Index n_hi, const VerifyOptions& opts = {});

/// Certifies W_k >= (k^(77/76) / 2).hi for every entry; slack = W_k - bound.
/// Throws Error(invalid_argument) on an empty table.
VerificationReport verify_wild_growth(const WildTable& table, const VerifyOptions& opts = {});

struct MahlerResult {
  RationalApprox r;
  double exponent = 20.0;
  bool passed = false;
  Interval gap;
  Interval bound;
  PrecisionBits precision_used;
};

inline constexpr double kMahlerExponent = 20.0;

/// Certifies |pi - p/q| > 1/|q|^exponent, raising precision until conclusive
/// or the ceiling is hit (then passed = false: inconclusive, not a
/// counterexample). Throws Error(hypothesis_violation) when |q| <= 1.
MahlerResult mahler_check(const RationalApprox& r, double exponent = kMahlerExponent,
                          PrecisionBits p = PrecisionBits{}, int ceiling_bits = 16384);

/// The first `count` continued-fraction convergents of pi with q > 1
/// (22/7, 333/106, 355/113, ...). Throws Error(invalid_argument) when a
/// convergent would overflow 64-bit integers.
std::vector<RationalApprox> pi_convergents(std::size_t count);

struct MahlerReport {
  VerificationReport summary;
  std::vector<MahlerResult> cases;
};

/// mahler_check over pi_convergents(count); slack is gap.lo - bound.hi.
MahlerReport verify_mahler(std::size_t count, double exponent = kMahlerExponent, const VerifyOptions& opts = {});

/// Upward-rounded 2 (sqrt(N) + 1) e^(-sqrt N) >= sum_{n > N} e^(-sqrt n),
/// by comparison with the integral of the decreasing e^(-sqrt t). N >= 0.
double tame_tail_bound(Index N);

/// Upward-rounded bound on sum of 1/n over wild n > N. Each such W_k obeys
/// 1/W_k <= min(1/N, 2 k^(-77/76)); splitting the k-sum at t = (2N)^(76/77)
/// gives t/N + 2 t^(-77/76) + 152 t^(-1/76). N >= 1.
double wild_tail_bound(Index N);

TailBound tail_bound(Index N);

struct CertifiedEnclosure {
  PartialSum partial;
  TailBound tail;
  /// [partial.lo, partial.hi + tail.total_tail]
  Interval enclosure;
  /// Upward-rounded enclosure width.
  double width = 0.0;
};

/// Encloses the full infinite sum using N0 certified terms plus tail bounds.
CertifiedEnclosure certified_enclosure(Index N0, const VerifyOptions& opts = {});

/// partial_sum(N0).hi + tame_tail_bound(N0) + wild_tail_bound(N0), rounded up.
double total_upper_bound(Index N0, const VerifyOptions& opts = {});

}  // namespace sintail
