// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The sintail Authors

#pragma once

#include <json.hpp>

#include "sintail/bounds.hpp"

namespace sintail {

using json = nlohmann::json;

// Interval endpoints are decimal strings rounded outward, so each string is a
// valid bound by itself. Parsing rounds inward at "bits", which lands exactly
// on the original binary endpoints.
void to_json(json& j, const Interval& x);
void from_json(const json& j, Interval& x);

void to_json(json& j, const Classification& c);
void from_json(const json& j, Classification& c);

/// Full table including every (k, W_k) entry.
void to_json(json& j, const WildTable& t);
void from_json(const json& j, WildTable& t);
/// Table metadata and the last entry only.
json wild_summary_json(const WildTable& t);

void to_json(json& j, const PartialSum& s);
void from_json(const json& j, PartialSum& s);

void to_json(json& j, const TailBound& t);
void from_json(const json& j, TailBound& t);

void to_json(json& j, const Failure& f);
void from_json(const json& j, Failure& f);

void to_json(json& j, const VerificationReport& r);
void from_json(const json& j, VerificationReport& r);

void to_json(json& j, const MahlerResult& m);
void from_json(const json& j, MahlerResult& m);

void to_json(json& j, const MahlerReport& m);
void from_json(const json& j, MahlerReport& m);

void to_json(json& j, const CertifiedEnclosure& c);
void from_json(const json& j, CertifiedEnclosure& c);

}  // namespace sintail
