// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#include "sintail/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <map>
#include <ostream>
#include <thread>

#include "sintail/bounds.hpp"
#include "sintail/classify.hpp"
#include "sintail/error.hpp"
#include "sintail/report.hpp"

namespace sintail::cli {
namespace {

bool is_interval(const json& j) {
  return j.is_object() && j.size() == 3 && j.contains("lo") && j.contains("hi") && j.contains("bits");
}

void render_human(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (is_interval(value)) {
      out << pad << key << ": [" << value["lo"].get<std::string>() << ", " << value["hi"].get<std::string>()
          << "] @" << value["bits"] << " bits\n";
    } else if (value.is_object()) {
      out << pad << key << ":\n";
      render_human(value, out, indent + 2);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << pad << key << ":\n";
      for (const auto& item : value) {
        out << pad << "  -\n";
        render_human(item, out, indent + 4);
      }
    } else if (value.is_string()) {
      out << pad << key << ": " << value.get<std::string>() << '\n';
    } else {
      out << pad << key << ": " << value.dump() << '\n';
    }
  }
}

void emit(const json& j, const RunConfig& cfg, std::ostream& out) {
  if (cfg.output == OutputFormat::json) {
    out << j.dump(2) << '\n';
  } else {
    render_human(j, out, 0);
  }
}

std::filesystem::path resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SINTAIL_CACHE_DIR"); env != nullptr && *env != '\0') return env;
  return ".sintail-cache";
}

std::filesystem::path wild_cache_path(const RunConfig& cfg) { return cfg.cache_dir / "wild-v1.txt"; }

std::filesystem::path pi_cache_path(const RunConfig& cfg) {
  return cfg.cache_dir / ("pi-" + std::to_string(cfg.precision_bits.bits()) + ".bin");
}

WildTable load_wild(Index limit, bool use_cache, const RunConfig& cfg) {
  WildScanOptions opts;
  opts.classify.start = cfg.precision_bits;
  opts.classify.ceiling_bits = cfg.max_precision_bits;
  opts.workers = cfg.workers;
  return use_cache ? wild_up_to_cached(limit, wild_cache_path(cfg), opts) : wild_up_to(limit, opts);
}

VerifyOptions verify_options(const RunConfig& cfg) {
  VerifyOptions v;
  v.precision = cfg.precision_bits;
  v.workers = cfg.workers;
  v.ceiling_bits = cfg.max_precision_bits;
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified evaluation of sum_n (2/3 + sin(n)/3)^n / n", "sintail"};
  app.require_subcommand(1);
  app.fallthrough();

  int precision = PrecisionBits::kDefault;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::string output = "json";
  std::string cache_dir;
  int max_precision = 16384;
  app.add_option("--precision", precision, "Working precision in bits (>= 32)")
      ->check(CLI::Range(PrecisionBits::kMin, 1 << 20));
  app.add_option("--max-precision", max_precision, "Ceiling for adaptive precision refinement")
      ->check(CLI::Range(PrecisionBits::kMin, 1 << 20));
  app.add_option("--workers", workers, "Worker threads (results do not depend on this)")
      ->check(CLI::Range(1u, 4096u));
  app.add_option("--output", output, "Report format")->check(CLI::IsMember({"json", "human"}));
  app.add_option("--cache-dir", cache_dir, "Cache directory (default: $SINTAIL_CACHE_DIR or .sintail-cache)");

  // Checked after parsing, so an unknown flag is reported ahead of a missing one.
  std::vector<std::pair<const CLI::App*, const CLI::Option*>> mandatory;

  auto* sum = app.add_subcommand("sum", "Partial sum of the first N terms");
  Index terms = 0;
  std::string engine = "fast";
  bool progress = false;
  mandatory.emplace_back(sum, sum->add_option("--terms", terms, "Number of terms N")->check(CLI::PositiveNumber));
  sum->add_option("--engine", engine, "fast or certified")->check(CLI::IsMember({"fast", "certified"}));
  sum->add_flag("--progress", progress, "Print one progress line per 10^6 terms on stderr");

  auto* classify_cmd = app.add_subcommand("classify", "Tame/wild verdict for one index");
  Index index = 0;
  mandatory.emplace_back(classify_cmd, classify_cmd->add_option("n", index, "Positive index")->check(CLI::PositiveNumber));

  auto* wild = app.add_subcommand("wild", "Enumerate wild numbers up to a limit");
  Index wild_limit = 0;
  bool wild_cache = false;
  bool wild_summary = false;
  mandatory.emplace_back(wild, wild->add_option("--limit", wild_limit, "Scan limit")->check(CLI::Range(Index{1}, kMaxWildLimit)));
  wild->add_flag("--cache", wild_cache, "Read and extend the wild-table cache");
  wild->add_flag("--summary", wild_summary, "Print only the count and last entry");

  auto* verify = app.add_subcommand("verify", "Numerical checks of the convergence argument");
  verify->require_subcommand(1);
  auto* v_tame = verify->add_subcommand("tame", "Tame-term bound for every tame n <= N");
  Index tame_upto = 0;
  Index tame_from = 1;
  mandatory.emplace_back(v_tame, v_tame->add_option("--upto", tame_upto, "Upper end of the sweep")->check(CLI::PositiveNumber));
  v_tame->add_option("--from", tame_from, "Lower end of the sweep")->check(CLI::PositiveNumber);
  auto* v_growth = verify->add_subcommand("wild-growth", "W_k >= k^(77/76)/2 on the wild table");
  Index growth_limit = 0;
  bool growth_cache = false;
  mandatory.emplace_back(v_growth, v_growth->add_option("--limit", growth_limit, "Scan limit")->check(CLI::Range(Index{1}, kMaxWildLimit)));
  v_growth->add_flag("--cache", growth_cache, "Read and extend the wild-table cache");
  auto* v_mahler = verify->add_subcommand("mahler", "Irrationality-measure gap on convergents of pi");
  std::size_t convergents = 5;
  double exponent = kMahlerExponent;
  mandatory.emplace_back(v_mahler, v_mahler->add_option("--convergents", convergents, "Number of convergents")->check(CLI::Range(1, 64)));
  v_mahler->add_option("--exponent", exponent, "Irrationality exponent")->check(CLI::PositiveNumber);

  auto* tail = app.add_subcommand("tail", "Tame and wild tail bounds after N terms");
  Index after = 0;
  mandatory.emplace_back(tail, tail->add_option("--after", after, "Cutoff N")->check(CLI::PositiveNumber));

  auto* certify = app.add_subcommand("certify", "Certified enclosure of the infinite sum");
  Index certify_terms = 0;
  mandatory.emplace_back(certify, certify->add_option("--terms", certify_terms, "Certified prefix length N0")->check(CLI::PositiveNumber));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    for (const auto& [cmd, opt] : mandatory) {
      if (cmd->parsed() && opt->count() == 0) throw CLI::RequiredError(opt->get_name());
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  RunConfig cfg;
  cfg.precision_bits = PrecisionBits(precision);
  cfg.workers = workers;
  cfg.max_precision_bits = max_precision;
  cfg.output = output == "human" ? OutputFormat::human : OutputFormat::json;
  cfg.cache_dir = resolve_cache_dir(cache_dir);

  try {
    if (*sum) {
      cfg.engine = engine == "certified" ? Engine::certified : Engine::fast;
      SumOptions opts;
      opts.engine = cfg.engine;
      opts.precision = cfg.precision_bits;
      opts.workers = cfg.workers;
      if (progress) {
        opts.progress = [&err](Index done, Index total) {
          err << "progress: " << done << '/' << total << " terms\n" << std::flush;
        };
      }
      emit(json(partial_sum(terms, opts)), cfg, out);
      return kOk;
    }
    if (*classify_cmd) {
      emit(json(classify(index, ClassifyOptions{cfg.precision_bits, cfg.max_precision_bits})), cfg, out);
      return kOk;
    }
    if (*wild) {
      if (wild_cache) preload_pi(pi_cache_path(cfg), cfg.precision_bits);
      const WildTable table = load_wild(wild_limit, wild_cache, cfg);
      emit(wild_summary ? wild_summary_json(table) : json(table), cfg, out);
      return kOk;
    }
    if (*verify) {
      const VerifyOptions vopts = verify_options(cfg);
      if (*v_tame) {
        if (tame_from > tame_upto) {
          err << "error: --from must not exceed --upto\n";
          return kUsage;
        }
        const auto rep = verify_lemma_tame(tame_from, tame_upto, vopts);
        emit(json(rep), cfg, out);
        return rep.passed ? kOk : kCheckFailed;
      }
      if (*v_growth) {
        if (growth_cache) preload_pi(pi_cache_path(cfg), cfg.precision_bits);
        const WildTable table = load_wild(growth_limit, growth_cache, cfg);
        const auto rep = verify_wild_growth(table, vopts);
        emit(json(rep), cfg, out);
        return rep.passed ? kOk : kCheckFailed;
      }
      const auto rep = verify_mahler(convergents, exponent, vopts);
      emit(json(rep), cfg, out);
      return rep.summary.passed ? kOk : kCheckFailed;
    }
    if (*tail) {
      emit(json(tail_bound(after)), cfg, out);
      return kOk;
    }
    emit(json(certified_enclosure(certify_terms, verify_options(cfg))), cfg, out);
    return kOk;
  } catch (const Error& e) {
    if (cfg.output == OutputFormat::json) {
      json j{{"error", to_string(e.code())}, {"message", e.what()}};
      if (e.code() == Errc::undecidable_at_precision) j["index"] = e.index();
      out << j.dump(2) << '\n';
    }
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::undecidable_at_precision: return kUndecidable;
      case Errc::invalid_argument:
      case Errc::hypothesis_violation: return kUsage;
      default: return kCheckFailed;
    }
  }
}

}  // namespace sintail::cli
