// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#pragma once

#include <functional>

#include "sintail/hiprec.hpp"

namespace sintail {

enum class Engine { certified, fast };

const char* to_string(Engine e) noexcept;

/// Term (2/3 + sin(n)/3)^n / n. For the fast engine `value` is a point and
/// `error_bound` the attached propagation bound; certified terms carry 0.
struct TermValue {
  Index n = 0;
  Interval value;
  double error_bound = 0.0;
};

struct PartialSum {
  Index upto_n = 0;
  Interval value;
  Engine engine = Engine::certified;
  double error_estimate = 0.0;
  Index terms_evaluated = 0;
  PrecisionBits precision;
};

/// Terms per summation chunk; the reduction tree is built over chunks, so the
/// result is independent of the worker count.
inline constexpr Index kChunkTerms = Index{1} << 16;

/// Mantissa bits of the fast engine's working type (binary128).
inline constexpr int kFastBits = 113;

/// Enclosure of the base 2/3 + sin(n)/3, a subset of [1/3, 1].
Interval base_enclosure(Index n, PrecisionBits p);
/// Enclosure of n * ln(2/3 + sin(n)/3), the logarithm of the nth power.
Interval log_power_enclosure(Index n, PrecisionBits p);
/// Enclosure of (2/3 + sin(n)/3)^n.
Interval power_enclosure(Index n, PrecisionBits p);

/// Certified enclosure of the nth term. Internally works with
/// bit_length(n) + 16 guard bits and rounds outward to p at the end.
/// Throws Error(invalid_argument) if n < 1.
TermValue term_certified(Index n, PrecisionBits p);

/// Binary128 evaluation with range reduction through a 256-bit pi split into
/// three pieces. error_bound = term * n * 2^-90 + 2^-90.
TermValue term_fast(Index n);
/// Raw fast-engine term as a double, for callers that only need magnitude.
double term_fast_double(Index n);

struct SumOptions {
  Engine engine = Engine::fast;
  PrecisionBits precision;
  unsigned workers = 1;
  /// Called with the number of completed terms each time another
  /// `progress_every` terms are done. Calls are serialized and ordered.
  std::function<void(Index done, Index total)> progress;
  Index progress_every = 1'000'000;
};

/// Sum of terms 1..N. Certified: directed-rounding interval sum. Fast:
/// Neumaier-compensated binary128 sum with a fixed chunk tree.
PartialSum partial_sum(Index N, const SumOptions& opts = {});

}  // namespace sintail
