// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "sintail/hiprec.hpp"

namespace sintail {

enum class Verdict { tame, wild };

const char* to_string(Verdict v) noexcept;

/// n is tame when every center pi/2 + 2 pi a is at distance >= 4 / n^(1/4),
/// wild otherwise. The verdict is certified: the interval comparison that
/// produced it is strict.
struct Classification {
  Index n = 0;
  std::int64_t a = 0;
  Interval theta;
  Interval threshold;
  Verdict verdict = Verdict::tame;
  PrecisionBits precision_used;
};

struct ClassifyOptions {
  PrecisionBits start{PrecisionBits::kDefault};
  int ceiling_bits = 16384;
};

/// Enclosure of 4 / n^(1/4).
Interval threshold(Index n, PrecisionBits p);

/// Certify-or-refine: compares |theta| against the threshold for the nearest
/// center, doubling precision until one side is strict. Any other center is
/// more than 2 pi - pi > 4 away, which exceeds every threshold.
/// Throws Error(undecidable_at_precision, index = n) past the ceiling.
Classification classify(Index n, const ClassifyOptions& opts = {});

/// Same decision tested against centers a* - 1, a*, a* + 1. Kept as a
/// cross-check of the nearest-center shortcut.
Verdict classify_three_center(Index n, const ClassifyOptions& opts = {});

/// Ordered wild numbers in [1, scan_limit]; W_k = values[k - 1]. When fewer
/// than k wild numbers exist below the limit the table simply ends.
struct WildTable {
  std::vector<Index> values;
  Index scan_limit = 0;
  PrecisionBits precision_used;

  std::size_t size() const noexcept { return values.size(); }
  /// W_k for 1 <= k <= size().
  Index w(std::size_t k) const { return values.at(k - 1); }
  /// Number of wild n <= limit (limit <= scan_limit).
  std::size_t count_upto(Index limit) const;
  /// Copy restricted to [1, limit].
  WildTable truncated(Index limit) const;

  friend bool operator==(const WildTable&, const WildTable&) = default;
};

struct WildScanOptions {
  ClassifyOptions classify;
  unsigned workers = 1;
};

/// Largest scan limit accepted; candidate windows are located in long double.
inline constexpr Index kMaxWildLimit = Index{1} << 48;

/// Scans the centers pi/2 + 2 pi a and certifies only the integers close enough
/// to one of them to possibly be wild.
WildTable wild_up_to(Index limit, const WildScanOptions& opts = {});
/// Appends wild numbers in (table.scan_limit, limit].
WildTable extend_wild_table(WildTable table, Index limit, const WildScanOptions& opts = {});
/// Classifies every integer in [1, limit]; the slow reference strategy.
WildTable wild_exhaustive(Index limit, const WildScanOptions& opts = {});

/// Text cache: "# sintail-wild v1 limit=<L> bits=<p>" then "<k>,<W_k>" lines.
void write_wild_cache(const std::filesystem::path& path, const WildTable& table);
/// nullopt if absent; throws Error(cache_format) if malformed.
std::optional<WildTable> read_wild_cache(const std::filesystem::path& path);
/// Reuses `path` when its bits are >= the requested start precision:
/// truncates when it covers `limit`, otherwise extends it and rewrites the file.
/// A malformed or lower-precision cache is replaced by a fresh scan.
WildTable wild_up_to_cached(Index limit, const std::filesystem::path& path, const WildScanOptions& opts = {});

}  // namespace sintail
