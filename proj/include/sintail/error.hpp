// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sintail {

enum class Errc {
  invalid_argument,
  domain_error,
  undecidable_at_precision,
  hypothesis_violation,
  cache_format,
};

const char* to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
/// `index()` is the offending n for undecidable classifications, 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::int64_t index = 0)
      : std::runtime_error(what), code_(code), index_(index) {}

  Errc code() const noexcept { return code_; }
  std::int64_t index() const noexcept { return index_; }

 private:
  Errc code_;
  std::int64_t index_;
};

}  // namespace sintail
