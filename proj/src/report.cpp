// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#include "sintail/report.hpp"

#include "sintail/error.hpp"

namespace sintail {

void to_json(json& j, const Interval& x) {
  j = json{{"lo", x.lo().to_string(MPFR_RNDD)}, {"hi", x.hi().to_string(MPFR_RNDU)}, {"bits", x.precision()}};
}

void from_json(const json& j, Interval& x) {
  const auto bits = j.at("bits").get<prec_t>();
  x = Interval(Real::from_string(j.at("lo").get<std::string>(), bits, MPFR_RNDU),
               Real::from_string(j.at("hi").get<std::string>(), bits, MPFR_RNDD));
}

void to_json(json& j, const Classification& c) {
  j = json{{"n", c.n},
           {"a", c.a},
           {"theta", c.theta},
           {"threshold", c.threshold},
           {"verdict", to_string(c.verdict)},
           {"precision_bits", c.precision_used.bits()}};
}

void from_json(const json& j, Classification& c) {
  c.n = j.at("n").get<Index>();
  c.a = j.at("a").get<std::int64_t>();
  c.theta = j.at("theta").get<Interval>();
  c.threshold = j.at("threshold").get<Interval>();
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict != "tame" && verdict != "wild") throw Error(Errc::invalid_argument, "unknown verdict " + verdict);
  c.verdict = verdict == "tame" ? Verdict::tame : Verdict::wild;
  c.precision_used = PrecisionBits(j.at("precision_bits").get<int>());
}

void to_json(json& j, const WildTable& t) {
  json entries = json::array();
  for (std::size_t k = 1; k <= t.size(); ++k) entries.push_back(json::array({k, t.w(k)}));
  j = json{{"scan_limit", t.scan_limit},
           {"precision_bits", t.precision_used.bits()},
           {"count", t.size()},
           {"entries", std::move(entries)}};
}

void from_json(const json& j, WildTable& t) {
  t.scan_limit = j.at("scan_limit").get<Index>();
  t.precision_used = PrecisionBits(j.at("precision_bits").get<int>());
  t.values.clear();
  std::size_t k = 1;
  for (const auto& e : j.at("entries")) {
    if (e.at(0).get<std::size_t>() != k++) throw Error(Errc::invalid_argument, "wild entries out of sequence");
    t.values.push_back(e.at(1).get<Index>());
  }
  if (j.at("count").get<std::size_t>() != t.values.size()) throw Error(Errc::invalid_argument, "wild count mismatch");
}

json wild_summary_json(const WildTable& t) {
  json j{{"scan_limit", t.scan_limit}, {"precision_bits", t.precision_used.bits()}, {"count", t.size()}};
  j["last"] = t.values.empty() ? json(nullptr) : json::array({t.size(), t.values.back()});
  return j;
}

void to_json(json& j, const PartialSum& s) {
  j = json{{"upto_n", s.upto_n},
           {"engine", to_string(s.engine)},
           {"value", s.value},
           {"error_estimate", s.error_estimate},
           {"terms_evaluated", s.terms_evaluated},
           {"precision_bits", s.precision.bits()}};
}

void from_json(const json& j, PartialSum& s) {
  s.upto_n = j.at("upto_n").get<Index>();
  const auto engine = j.at("engine").get<std::string>();
  if (engine != "fast" && engine != "certified") throw Error(Errc::invalid_argument, "unknown engine " + engine);
  s.engine = engine == "fast" ? Engine::fast : Engine::certified;
  s.value = j.at("value").get<Interval>();
  s.error_estimate = j.at("error_estimate").get<double>();
  s.terms_evaluated = j.at("terms_evaluated").get<Index>();
  s.precision = PrecisionBits(j.at("precision_bits").get<int>());
}

void to_json(json& j, const TailBound& t) {
  j = json{{"after_n", t.after_n}, {"tame_tail", t.tame_tail}, {"wild_tail", t.wild_tail}, {"total_tail", t.total_tail}};
}

void from_json(const json& j, TailBound& t) {
  t.after_n = j.at("after_n").get<Index>();
  t.tame_tail = j.at("tame_tail").get<double>();
  t.wild_tail = j.at("wild_tail").get<double>();
  t.total_tail = j.at("total_tail").get<double>();
}

void to_json(json& j, const Failure& f) { j = json{{"at", f.at}, {"reason", f.reason}}; }

void from_json(const json& j, Failure& f) {
  f.at = j.at("at").get<Index>();
  f.reason = j.at("reason").get<std::string>();
}

void to_json(json& j, const VerificationReport& r) {
  j = json{{"check", r.check},
           {"range", json::array({r.range_lo, r.range_hi})},
           {"passed", r.passed},
           {"failures", r.failures},
           {"min_slack", r.min_slack ? json(*r.min_slack) : json(nullptr)},
           {"min_slack_at", r.min_slack_at ? json(*r.min_slack_at) : json(nullptr)},
           {"precision_bits", r.precision_bits},
           {"checked", r.checked},
           {"skipped", r.skipped}};
}

void from_json(const json& j, VerificationReport& r) {
  r.check = j.at("check").get<std::string>();
  r.range_lo = j.at("range").at(0).get<Index>();
  r.range_hi = j.at("range").at(1).get<Index>();
  r.passed = j.at("passed").get<bool>();
  r.failures = j.at("failures").get<std::vector<Failure>>();
  const auto& slack = j.at("min_slack");
  r.min_slack = slack.is_null() ? std::nullopt : std::optional<double>(slack.get<double>());
  const auto& at = j.at("min_slack_at");
  r.min_slack_at = at.is_null() ? std::nullopt : std::optional<Index>(at.get<Index>());
  r.precision_bits = j.at("precision_bits").get<int>();
  r.checked = j.at("checked").get<Index>();
  r.skipped = j.at("skipped").get<Index>();
}

void to_json(json& j, const MahlerResult& m) {
  j = json{{"p", m.r.p},
           {"q", m.r.q},
           {"exponent", m.exponent},
           {"passed", m.passed},
           {"gap", m.gap},
           {"bound", m.bound},
           {"precision_bits", m.precision_used.bits()}};
}

void from_json(const json& j, MahlerResult& m) {
  m.r = RationalApprox{j.at("p").get<std::int64_t>(), j.at("q").get<std::int64_t>()};
  m.exponent = j.at("exponent").get<double>();
  m.passed = j.at("passed").get<bool>();
  m.gap = j.at("gap").get<Interval>();
  m.bound = j.at("bound").get<Interval>();
  m.precision_used = PrecisionBits(j.at("precision_bits").get<int>());
}

void to_json(json& j, const MahlerReport& m) {
  j = m.summary;
  j["cases"] = m.cases;
}

void from_json(const json& j, MahlerReport& m) {
  m.summary = j.get<VerificationReport>();
  m.cases = j.at("cases").get<std::vector<MahlerResult>>();
}

void to_json(json& j, const CertifiedEnclosure& c) {
  j = json{{"terms", c.partial.upto_n},
           {"partial_sum", c.partial},
           {"tail", c.tail},
           {"enclosure", c.enclosure},
           {"width", c.width},
           {"upper_bound", c.enclosure.hi().to_double(MPFR_RNDU)}};
}

void from_json(const json& j, CertifiedEnclosure& c) {
  c.partial = j.at("partial_sum").get<PartialSum>();
  c.tail = j.at("tail").get<TailBound>();
  c.enclosure = j.at("enclosure").get<Interval>();
  c.width = j.at("width").get<double>();
}

}  // namespace sintail
