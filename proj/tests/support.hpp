// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#pragma once

#include <doctest.h>
#include <gmp.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>

#include "oracles.hpp"
#include "sintail/error.hpp"
#include "sintail/interval.hpp"

namespace support {

/// Exact value of an MPFR number as a 256-bit Boost float (exact for
/// precisions up to 256 bits).
inline oracle::float256 to_boost(const sintail::Real& x) {
  mpz_t m;
  mpz_init(m);
  const long e = mpfr_get_z_2exp(m, x.get());
  char* digits = mpz_get_str(nullptr, 10, m);
  oracle::float256 v(digits);
  std::free(digits);
  mpz_clear(m);
  return oracle::mp::ldexp(v, static_cast<int>(e));
}

inline bool encloses(const sintail::Interval& x, const oracle::float256& v) {
  return to_boost(x.lo()) <= v && v <= to_boost(x.hi());
}

/// Runs fn and returns the sintail::Error code it throws.
template <typename Fn>
sintail::Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const sintail::Error& e) {
    return e.code();
  }
  FAIL("expected sintail::Error");
  return sintail::Errc::invalid_argument;
}

/// Fresh, empty scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("sintail-test-" + name + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::vector<std::int64_t> random_indices(std::size_t count, std::int64_t max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(1, max);
  std::vector<std::int64_t> out(count);
  for (auto& n : out) n = dist(rng);
  return out;
}

}  // namespace support
