// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sintail/hiprec.hpp"
#include "sintail/series.hpp"

namespace sintail::cli {

enum class OutputFormat { human, json };

struct RunConfig {
  PrecisionBits precision_bits;
  Engine engine = Engine::fast;
  std::filesystem::path cache_dir = ".sintail-cache";
  OutputFormat output = OutputFormat::json;
  unsigned workers = 1;
  int max_precision_bits = 16384;
};

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kUndecidable = 3,
};

/// Entry point shared by the executable and the tests. args excludes the
/// program name. Reports go to `out`, diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sintail::cli
