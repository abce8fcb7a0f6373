// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>

#include "sintail/interval.hpp"

namespace sintail {

using Index = std::int64_t;

/// Binary mantissa precision used for a computation; at least 32 bits.
class PrecisionBits {
 public:
  static constexpr int kMin = 32;
  static constexpr int kDefault = 96;

  constexpr PrecisionBits() = default;
  explicit PrecisionBits(int bits);

  constexpr int bits() const noexcept { return bits_; }
  PrecisionBits doubled() const { return PrecisionBits(bits_ * 2); }

  friend constexpr auto operator<=>(PrecisionBits, PrecisionBits) = default;

 private:
  int bits_ = kDefault;
};

/// Number of significant bits of n (n >= 1).
int bit_length(std::uint64_t n) noexcept;

/// Append-only, per-precision store of pi enclosures. Reads take a shared
/// lock; an entry is built once under the exclusive lock and never mutated.
class PiCache {
 public:
  const Interval& get(prec_t prec);
  /// Adds an externally loaded enclosure unless one already exists at that
  /// precision. Throws Error(invalid_argument) if it does not contain pi.
  void insert(const Interval& pi);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mu_;
  std::map<prec_t, Interval> entries_;
};

/// Process-wide cache used by pi_enclosure.
PiCache& global_pi_cache();

/// [RNDD(pi), RNDU(pi)] at p bits; one ulp wide.
const Interval& pi_enclosure(PrecisionBits p);
const Interval& pi_enclosure(prec_t prec);

/// Binary pi file: "SINTAIL-PI\0", version byte, precision (u64 LE), then the
/// mantissa of RNDD(pi) as ceil(bits / 8) little-endian bytes, scaled so that
/// pi_lo = mantissa * 2^(2 - bits).
inline constexpr char kPiMagic[11] = {'S', 'I', 'N', 'T', 'A', 'I', 'L', '-', 'P', 'I', '\0'};
inline constexpr std::uint8_t kPiFileVersion = 1;

void write_pi_file(const std::filesystem::path& path, PrecisionBits p);
/// nullopt when the file does not exist or holds a different precision;
/// throws Error(cache_format) when it exists but is malformed.
std::optional<Interval> read_pi_file(const std::filesystem::path& path, PrecisionBits p);
/// Loads `path` into the global cache if usable, otherwise computes pi and
/// writes the file. Malformed files are replaced. Returns true on a cache hit.
bool preload_pi(const std::filesystem::path& path, PrecisionBits p);

/// theta = n - pi/2 - 2*pi*a for the center nearest to n, so |theta| <= pi (up
/// to rounding). theta is kept at the guarded internal precision.
struct ReducedAngle {
  Index n = 0;
  std::int64_t a = 0;
  Interval theta;
};

/// Reduction of an integer argument; internal precision is
/// p + bit_length(n) + 16 so that subtracting the multiple of 2*pi does not
/// cancel away the requested accuracy. Throws Error(invalid_argument) if n < 1.
ReducedAngle reduce(Index n, PrecisionBits p);
/// Same reduction about an explicit center index a.
ReducedAngle reduce_about(Index n, std::int64_t a, PrecisionBits p);

/// Enclosure of sin n, clamped to [-1, 1], width <= 2^(4 - p).
Interval sin_enclosure(Index n, PrecisionBits p);

}  // namespace sintail
