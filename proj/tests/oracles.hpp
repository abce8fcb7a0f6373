// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

// Reference computations used by the tests. Nothing here calls into the
// library or MPFR: pi comes from Machin's formula on Boost integers or from
// Boost's own constants, so agreement with the library is a two-route check.

#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

namespace mp = boost::multiprecision;
using big = mp::cpp_int;
using float256 = mp::number<mp::cpp_bin_float<256, mp::digit_base_2>>;
using float50 = mp::cpp_bin_float_50;

/// |pi * 2^bits - scaled| <= error.
struct MachinPi {
  big scaled;
  big error;
  unsigned bits;
};

/// arctan(1/x) * 2^bits with truncated divisions, one unit of error per term.
inline void arctan_inverse(unsigned x, unsigned bits, big& sum, big& terms) {
  const big one = big(1) << bits;
  const big x2 = big(x) * x;
  big power = one / x;  // 2^bits / x^(2k+1)
  sum = 0;
  terms = 0;
  for (unsigned k = 0; power != 0; ++k) {
    const big t = power / (2 * k + 1);
    sum += (k % 2 == 0) ? t : big(-t);
    power /= x2;
    ++terms;
  }
}

/// pi = 16 arctan(1/5) - 4 arctan(1/239).
inline MachinPi machin_pi(unsigned bits) {
  big a, ta, b, tb;
  arctan_inverse(5, bits, a, ta);
  arctan_inverse(239, bits, b, tb);
  // Each term and each quotient truncation contributes < 1 unit; add the same
  // again for the tail cut off when the power reached zero.
  return MachinPi{16 * a - 4 * b, 16 * (2 * ta + 2) + 4 * (2 * tb + 2), bits};
}

inline float256 pi256() { return boost::math::constants::pi<float256>(); }

/// Nearest center index a and theta = n - pi/2 - 2 pi a, in 256-bit floats.
inline float256 theta256(std::int64_t n, std::int64_t* a_out = nullptr) {
  const float256 pi = pi256();
  const float256 x = (float256(n) - pi / 2) / (2 * pi);
  const auto a = static_cast<std::int64_t>(mp::round(x));
  if (a_out != nullptr) *a_out = a;
  return float256(n) - pi / 2 - 2 * pi * float256(a);
}

/// sin n from an exact reduction with a 256-bit pi followed by the double
/// library cosine. Accurate to a few double ulps for any n <= 2^63.
inline double sin_double_reduced(std::int64_t n) {
  return std::cos(static_cast<double>(theta256(n)));
}

/// cos(theta) where theta is reduced as above, evaluated entirely in 256 bits.
inline float256 sin256(std::int64_t n) { return mp::cos(theta256(n)); }

/// Double-precision scan over a* - 1, a*, a* + 1; only valid for small n.
struct DoubleVerdict {
  bool wild;
  double distance;
  double threshold;
};

inline DoubleVerdict classify_double(std::int64_t n) {
  const double pi = std::numbers::pi;
  const auto a_star = static_cast<std::int64_t>(std::llround((n - pi / 2) / (2 * pi)));
  double best = 1e300;
  for (std::int64_t a = a_star - 1; a <= a_star + 1; ++a) {
    best = std::min(best, std::abs(static_cast<double>(n) - pi / 2 - 2 * pi * static_cast<double>(a)));
  }
  const double t = 4.0 / std::pow(static_cast<double>(n), 0.25);
  return DoubleVerdict{best < t, best, t};
}

/// Three-center classification in 50-digit arithmetic. wild iff, for some
/// neighbouring center, |theta|^4 * n < 256 (equivalent to |theta| < 4/n^(1/4)
/// but free of roots). `margin` is | |theta|^4 n - 256 | minimized over the
/// deciding comparisons, so callers can check the oracle's own reliability.
struct ThreeCenterVerdict {
  bool wild;
  float50 margin;
};

inline ThreeCenterVerdict classify_three_center(std::int64_t n) {
  const float50 pi = boost::math::constants::pi<float50>();
  const auto a_star = static_cast<std::int64_t>(mp::round((float50(n) - pi / 2) / (2 * pi)));
  bool wild = false;
  float50 margin = 1e300;
  for (std::int64_t a = a_star - 1; a <= a_star + 1; ++a) {
    const float50 d = float50(n) - pi / 2 - 2 * pi * float50(a);
    const float50 d2 = d * d;
    const float50 gap = d2 * d2 * float50(n) - 256;
    if (gap < 0) wild = true;
    const float50 abs_gap = mp::abs(gap);
    if (abs_gap < margin) margin = abs_gap;
  }
  return ThreeCenterVerdict{wild, margin};
}

/// Wild numbers in [1, limit] by classifying every integer with the
/// three-center oracle.
inline std::vector<std::int64_t> wild_scan(std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; n <= limit; ++n) {
    if (classify_three_center(n).wild) out.push_back(n);
  }
  return out;
}

/// sum_{n = from}^{to} e^(-sqrt n), long double.
inline long double exp_sqrt_sum(std::int64_t from, std::int64_t to) {
  // Small terms first so the large ones are not swamped by rounding.
  long double s = 0;
  for (std::int64_t n = to; n >= from; --n) s += std::exp(-std::sqrt(static_cast<long double>(n)));
  return s;
}

/// Double-precision term, fine for spot values at small n.
inline double term_double(std::int64_t n) {
  return std::pow((2.0 + std::sin(static_cast<double>(n))) / 3.0, static_cast<double>(n)) / static_cast<double>(n);
}

}  // namespace oracle
