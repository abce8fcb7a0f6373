// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#include "sintail/classify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "sintail/error.hpp"
#include "sintail/parallel.hpp"

namespace sintail {

const char* to_string(Verdict v) noexcept { return v == Verdict::tame ? "tame" : "wild"; }

Interval threshold(Index n, PrecisionBits p) {
  if (n < 1) throw Error(Errc::invalid_argument, "index must be a positive integer, got " + std::to_string(n));
  return Interval::from_int(4, p.bits()) / root4(Interval::from_int(n, p.bits()));
}

namespace {

enum class Decision { tame, wild, open };

Decision compare(const Interval& distance, const Interval& limit) {
  if (distance.lo() >= limit.hi()) return Decision::tame;
  if (distance.hi() < limit.lo()) return Decision::wild;
  return Decision::open;
}

[[noreturn]] void undecidable(Index n, int ceiling) {
  throw Error(Errc::undecidable_at_precision,
              "cannot separate |theta| from the threshold for n = " + std::to_string(n) + " within " +
                  std::to_string(ceiling) + " bits",
              n);
}

}  // namespace

Classification classify(Index n, const ClassifyOptions& opts) {
  for (PrecisionBits p = opts.start; p.bits() <= opts.ceiling_bits; p = p.doubled()) {
    ReducedAngle r = reduce(n, p);
    Interval t = threshold(n, p);
    const Decision d = compare(abs(r.theta), t);
    if (d != Decision::open) {
      return Classification{n, r.a, std::move(r.theta), std::move(t),
                            d == Decision::tame ? Verdict::tame : Verdict::wild, p};
    }
  }
  undecidable(n, opts.ceiling_bits);
}

Verdict classify_three_center(Index n, const ClassifyOptions& opts) {
  const std::int64_t nearest = reduce(n, opts.start).a;
  for (PrecisionBits p = opts.start; p.bits() <= opts.ceiling_bits; p = p.doubled()) {
    const Interval t = threshold(n, p);
    bool all_tame = true;
    bool any_wild = false;
    for (std::int64_t a = nearest - 1; a <= nearest + 1; ++a) {
      const Decision d = compare(abs(reduce_about(n, a, p).theta), t);
      all_tame = all_tame && d == Decision::tame;
      any_wild = any_wild || d == Decision::wild;
    }
    if (any_wild) return Verdict::wild;
    if (all_tame) return Verdict::tame;
  }
  undecidable(n, opts.ceiling_bits);
}

std::size_t WildTable::count_upto(Index limit) const {
  return static_cast<std::size_t>(std::upper_bound(values.begin(), values.end(), limit) - values.begin());
}

WildTable WildTable::truncated(Index limit) const {
  WildTable out;
  out.values.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(count_upto(limit)));
  out.scan_limit = std::min(limit, scan_limit);
  out.precision_used = precision_used;
  return out;
}

namespace {

constexpr std::int64_t kCentersPerBlock = 1 << 14;

void require_limit(Index limit) {
  if (limit < 1 || limit > kMaxWildLimit) {
    throw Error(Errc::invalid_argument, "wild scan limit must be in [1, 2^48], got " + std::to_string(limit));
  }
}

// Wild numbers in (from, to] proposed by centers [a_lo, a_hi].
std::vector<Index> scan_centers(std::int64_t a_lo, std::int64_t a_hi, Index from, Index to,
                                const ClassifyOptions& opts) {
  constexpr long double half_pi = std::numbers::pi_v<long double> / 2;
  std::vector<Index> wild;
  for (std::int64_t a = a_lo; a <= a_hi; ++a) {
    const long double c = static_cast<long double>(4 * a + 1) * half_pi;
    // A wild m satisfies |m - c| < 4 / m^(1/4) <= 4 / max(1, c - 4)^(1/4).
    const long double reach = 4.0L / std::pow(std::max(1.0L, c - 5.0L), 0.25L);
    const long double slack = 1e-6L + c * 1e-15L;
    const auto first = std::max<Index>(from + 1, static_cast<Index>(std::ceil(c - reach - slack)));
    const auto last = std::min<Index>(to, static_cast<Index>(std::floor(c + reach + slack)));
    for (Index m = std::max<Index>(first, 1); m <= last; ++m) {
      if (classify(m, opts).verdict == Verdict::wild) wild.push_back(m);
    }
  }
  return wild;
}

std::vector<Index> scan_range(Index from, Index to, const WildScanOptions& opts) {
  if (to <= from) return {};
  constexpr long double two_pi = 2 * std::numbers::pi_v<long double>;
  const auto a_lo = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::floor((from - 6) / two_pi)));
  const auto a_hi = static_cast<std::int64_t>(std::ceil((to + 6) / two_pi));
  const auto blocks = static_cast<std::size_t>((a_hi - a_lo) / kCentersPerBlock + 1);
  auto parts = map_indexed(blocks, opts.workers, [&](std::size_t b) {
    const std::int64_t lo = a_lo + static_cast<std::int64_t>(b) * kCentersPerBlock;
    const std::int64_t hi = std::min(a_hi, lo + kCentersPerBlock - 1);
    return scan_centers(lo, hi, from, to, opts.classify);
  });
  std::vector<Index> all;
  for (auto& part : parts) all.insert(all.end(), part.begin(), part.end());
  // Windows of neighbouring centers overlap for small n.
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace

WildTable wild_up_to(Index limit, const WildScanOptions& opts) {
  require_limit(limit);
  WildTable table;
  table.values = scan_range(0, limit, opts);
  table.scan_limit = limit;
  table.precision_used = opts.classify.start;
  return table;
}

WildTable extend_wild_table(WildTable table, Index limit, const WildScanOptions& opts) {
  require_limit(limit);
  if (limit <= table.scan_limit) return table.truncated(limit);
  const auto more = scan_range(table.scan_limit, limit, opts);
  table.values.insert(table.values.end(), more.begin(), more.end());
  table.scan_limit = limit;
  table.precision_used = std::min(table.precision_used, opts.classify.start);
  return table;
}

WildTable wild_exhaustive(Index limit, const WildScanOptions& opts) {
  require_limit(limit);
  constexpr Index kBlock = 1 << 14;
  const auto blocks = static_cast<std::size_t>((limit + kBlock - 1) / kBlock);
  auto parts = map_indexed(blocks, opts.workers, [&](std::size_t b) {
    std::vector<Index> wild;
    const Index lo = static_cast<Index>(b) * kBlock + 1;
    const Index hi = std::min(limit, lo + kBlock - 1);
    for (Index n = lo; n <= hi; ++n) {
      if (classify(n, opts.classify).verdict == Verdict::wild) wild.push_back(n);
    }
    return wild;
  });
  WildTable table;
  for (auto& part : parts) table.values.insert(table.values.end(), part.begin(), part.end());
  table.scan_limit = limit;
  table.precision_used = opts.classify.start;
  return table;
}

void write_wild_cache(const std::filesystem::path& path, const WildTable& table) {
  if (!path.parent_path().empty()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << "# sintail-wild v1 limit=" << table.scan_limit << " bits=" << table.precision_used.bits() << '\n';
    for (std::size_t k = 1; k <= table.size(); ++k) out << k << ',' << table.w(k) << '\n';
    if (!out) throw Error(Errc::cache_format, "failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

namespace {

template <typename T>
bool parse_int(std::string_view s, T& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

std::optional<WildTable> read_wild_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  const auto bad = [&path](const std::string& why) { return Error(Errc::cache_format, path.string() + ": " + why); };

  std::string line;
  if (!std::getline(in, line)) throw bad("empty file");
  constexpr std::string_view prefix = "# sintail-wild v1 limit=";
  const auto bits_pos = line.find(" bits=");
  if (line.rfind(prefix, 0) != 0 || bits_pos == std::string::npos) throw bad("bad header");
  Index limit = 0;
  int bits = 0;
  const std::string_view view(line);
  if (!parse_int(view.substr(prefix.size(), bits_pos - prefix.size()), limit) ||
      !parse_int(view.substr(bits_pos + 6), bits) || limit < 1 || limit > kMaxWildLimit ||
      bits < PrecisionBits::kMin) {
    throw bad("bad header fields");
  }

  WildTable table;
  table.scan_limit = limit;
  table.precision_used = PrecisionBits(bits);
  std::size_t expected_k = 1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    std::size_t k = 0;
    Index w = 0;
    if (comma == std::string::npos || !parse_int(std::string_view(line).substr(0, comma), k) ||
        !parse_int(std::string_view(line).substr(comma + 1), w)) {
      throw bad("malformed entry '" + line + "'");
    }
    if (k != expected_k++) throw bad("entry indices must run 1, 2, 3, ...");
    if (w < 1 || w > limit || (!table.values.empty() && w <= table.values.back())) {
      throw bad("entries must be strictly increasing within [1, limit]");
    }
    table.values.push_back(w);
  }
  return table;
}

WildTable wild_up_to_cached(Index limit, const std::filesystem::path& path, const WildScanOptions& opts) {
  require_limit(limit);
  std::optional<WildTable> cached;
  try {
    cached = read_wild_cache(path);
  } catch (const Error&) {
    cached.reset();  // unreadable cache is rebuilt
  }
  if (cached && cached->precision_used >= opts.classify.start) {
    if (cached->scan_limit >= limit) return cached->truncated(limit);
    WildTable table = extend_wild_table(std::move(*cached), limit, opts);
    write_wild_cache(path, table);
    return table;
  }
  WildTable table = wild_up_to(limit, opts);
  write_wild_cache(path, table);
  return table;
}

}  // namespace sintail
