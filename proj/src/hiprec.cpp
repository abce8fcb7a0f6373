// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#include "sintail/hiprec.hpp"

#include <gmp.h>

#include <array>
#include <bit>
#include <fstream>
#include <mutex>
#include <vector>

#include "sintail/error.hpp"

namespace sintail {

PrecisionBits::PrecisionBits(int bits) : bits_(bits) {
  if (bits < kMin) {
    throw Error(Errc::invalid_argument, "precision must be at least 32 bits, got " + std::to_string(bits));
  }
}

int bit_length(std::uint64_t n) noexcept { return n == 0 ? 0 : 64 - std::countl_zero(n); }

const Interval& PiCache::get(prec_t prec) {
  {
    std::shared_lock lock(mu_);
    if (auto it = entries_.find(prec); it != entries_.end()) return it->second;
  }
  Real lo(prec);
  Real hi(prec);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  std::unique_lock lock(mu_);
  return entries_.try_emplace(prec, std::move(lo), std::move(hi)).first->second;
}

void PiCache::insert(const Interval& pi) {
  Real probe_lo(pi.precision() + 8);
  Real probe_hi(pi.precision() + 8);
  mpfr_const_pi(probe_lo.get(), MPFR_RNDD);
  mpfr_const_pi(probe_hi.get(), MPFR_RNDU);
  if (!pi.contains(Interval(std::move(probe_lo), std::move(probe_hi)))) {
    throw Error(Errc::invalid_argument, "pi cache entry does not enclose pi");
  }
  std::unique_lock lock(mu_);
  entries_.try_emplace(pi.precision(), pi);
}

std::size_t PiCache::size() const {
  std::shared_lock lock(mu_);
  return entries_.size();
}

PiCache& global_pi_cache() {
  static PiCache cache;
  return cache;
}

const Interval& pi_enclosure(PrecisionBits p) { return global_pi_cache().get(p.bits()); }
const Interval& pi_enclosure(prec_t prec) { return global_pi_cache().get(prec); }

void write_pi_file(const std::filesystem::path& path, PrecisionBits p) {
  const Interval& pi = pi_enclosure(p);
  const auto bits = static_cast<std::uint64_t>(p.bits());
  mpz_t mant;
  mpz_init(mant);
  // pi in [2, 4): scaling by 2^(bits - 2) makes the mantissa an integer.
  Real scaled(pi.precision());
  mpfr_mul_2si(scaled.get(), pi.lo().get(), static_cast<long>(bits) - 2, MPFR_RNDN);
  mpfr_get_z(mant, scaled.get(), MPFR_RNDN);
  std::vector<unsigned char> bytes((bits + 7) / 8, 0);
  std::size_t count = 0;
  mpz_export(bytes.data(), &count, -1, 1, -1, 0, mant);
  mpz_clear(mant);

  std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(kPiMagic, sizeof kPiMagic);
    out.put(static_cast<char>(kPiFileVersion));
    for (int i = 0; i < 8; ++i) out.put(static_cast<char>((bits >> (8 * i)) & 0xff));
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(Errc::cache_format, "failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::optional<Interval> read_pi_file(const std::filesystem::path& path, PrecisionBits p) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  const auto bad = [&path](const std::string& why) {
    return Error(Errc::cache_format, path.string() + ": " + why);
  };
  std::array<char, sizeof kPiMagic> magic{};
  in.read(magic.data(), magic.size());
  if (!in || !std::equal(magic.begin(), magic.end(), kPiMagic)) throw bad("bad magic");
  const int version = in.get();
  if (version != kPiFileVersion) throw bad("unsupported version");
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) {
    const int c = in.get();
    if (c == EOF) throw bad("truncated header");
    bits |= static_cast<std::uint64_t>(c & 0xff) << (8 * i);
  }
  if (bits != static_cast<std::uint64_t>(p.bits())) return std::nullopt;
  std::vector<unsigned char> bytes((bits + 7) / 8);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!in || in.peek() != EOF) throw bad("mantissa length mismatch");

  mpz_t mant;
  mpz_init(mant);
  mpz_import(mant, bytes.size(), -1, 1, -1, 0, bytes.data());
  const bool width_ok = mpz_sizeinbase(mant, 2) == bits;
  const auto prec = static_cast<prec_t>(bits);
  Real lo(prec);
  mpfr_set_z_2exp(lo.get(), mant, 2 - static_cast<long>(bits), MPFR_RNDN);
  mpz_clear(mant);
  if (!width_ok) throw bad("mantissa has wrong bit length");
  Real hi = lo;
  mpfr_nextabove(hi.get());
  if (mpfr_cmp_d(lo.get(), 3.14159265358979) < 0 || mpfr_cmp_d(hi.get(), 3.1415926535898) > 0) {
    throw bad("stored value is not pi");
  }
  return Interval(std::move(lo), std::move(hi));
}

bool preload_pi(const std::filesystem::path& path, PrecisionBits p) {
  try {
    if (auto pi = read_pi_file(path, p)) {
      global_pi_cache().insert(*pi);
      return true;
    }
  } catch (const Error&) {
    // Corrupt or foreign file: fall through and rewrite it.
  }
  write_pi_file(path, p);
  return false;
}

namespace {

prec_t guarded_precision(Index n, PrecisionBits p) {
  return p.bits() + bit_length(static_cast<std::uint64_t>(n)) + 16;
}

void require_positive(Index n) {
  if (n < 1) throw Error(Errc::invalid_argument, "index must be a positive integer, got " + std::to_string(n));
}

}  // namespace

ReducedAngle reduce_about(Index n, std::int64_t a, PrecisionBits p) {
  require_positive(n);
  const prec_t q = guarded_precision(n, p);
  const Interval& pi = pi_enclosure(q);
  // n - (4a + 1) * pi / 2
  const Interval center = ldexp(mul_int(pi, 4 * a + 1), -1);
  Interval theta = Interval::from_int(n, q) - center;
  return ReducedAngle{n, a, std::move(theta)};
}

ReducedAngle reduce(Index n, PrecisionBits p) {
  require_positive(n);
  const prec_t q = guarded_precision(n, p);
  const Interval& pi = pi_enclosure(q);
  // a = nearest integer to (n - pi/2) / (2 pi); a tie either way keeps |theta| <= pi.
  Real x(q);
  mpfr_div_2ui(x.get(), pi.lo().get(), 1, MPFR_RNDN);
  mpfr_si_sub(x.get(), static_cast<long>(n), x.get(), MPFR_RNDN);
  mpfr_div(x.get(), x.get(), pi.lo().get(), MPFR_RNDN);
  mpfr_div_2ui(x.get(), x.get(), 1, MPFR_RNDN);
  const auto a = static_cast<std::int64_t>(mpfr_get_si(x.get(), MPFR_RNDN));
  return reduce_about(n, a, p);
}

Interval sin_enclosure(Index n, PrecisionBits p) {
  const ReducedAngle r = reduce(n, PrecisionBits(p.bits() + 8));
  // sin n = sin(theta + pi/2 + 2 pi a) = cos(theta)
  return clamp(cos(r.theta).rounded(p.bits()), -1.0, 1.0);
}

}  // namespace sintail
