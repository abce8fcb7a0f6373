// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#include "sintail/error.hpp"

namespace sintail {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "INVALID_ARGUMENT";
    case Errc::domain_error: return "DOMAIN_ERROR";
    case Errc::undecidable_at_precision: return "UNDECIDABLE_AT_PRECISION";
    case Errc::hypothesis_violation: return "HYPOTHESIS_VIOLATION";
    case Errc::cache_format: return "CACHE_FORMAT";
  }
  return "UNKNOWN";
}

}  // namespace sintail
