// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#include "sintail/real.hpp"

#include <cmath>

#include "sintail/error.hpp"

namespace sintail {

Real Real::from_string(const std::string& s, prec_t prec, mpfr_rnd_t rnd) {
  Real r(prec);
  if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, rnd) != 0) {
    throw Error(Errc::invalid_argument, "malformed real literal '" + s + "'");
  }
  return r;
}

std::string Real::to_string(mpfr_rnd_t rnd) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_signbit(v_) ? "-inf" : "inf";
  if (mpfr_zero_p(v_)) return "0";

  // One more digit than the binary grid needs, so a directed parse at the
  // same precision lands back on this exact value.
  const auto digits = static_cast<std::size_t>(
      std::ceil(static_cast<double>(precision() + 1) * 0.30102999566398120) + 2);
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, digits, v_, rnd);
  std::string mant(raw);
  mpfr_free_str(raw);

  std::string out;
  std::size_t pos = 0;
  if (mant[0] == '-') {
    out.push_back('-');
    pos = 1;
  }
  out.push_back(mant[pos]);
  out.push_back('.');
  out.append(mant, pos + 1, std::string::npos);
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  const long e = static_cast<long>(exp10) - 1;
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

}  // namespace sintail
