// Copyright 2026 The mcss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON document formats used by the command-line tool.
//
// Keys are emitted in a fixed order (ordered_json preserves insertion) and
// field elements are decimal strings, so equal inputs give equal bytes.
// Every reader validates structure and throws kMalformedDocument for shape
// problems; a plan document is additionally re-expanded and its stored forms
// compared against the recomputed ones (kInvalidPlan on mismatch).

#ifndef MCSS_CLI_DOCUMENTS_H_
#define MCSS_CLI_DOCUMENTS_H_

#include <string>

#include <json.hpp>

#include "mcss/runtime.h"
#include "mcss/scheme.h"
#include "mcss/verify.h"

namespace mcss::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

Json plan_to_json(const SchemePlan& plan);
SchemePlan plan_from_json(const Json& doc);

// Lowercase hex SHA-256 of the compact canonical serialization of the plan.
// Whitespace or key order in a file on disk does not affect it.
std::string plan_digest(const SchemePlan& plan);

Json shares_to_json(const SchemePlan& plan, const ShareBundle& bundle);
// Checks the digest against `plan` (kDigestMismatch) and that every share
// belongs to the plan and to the participant it is filed under.
ShareBundle shares_from_json(const Json& doc, const SchemePlan& plan);

Json messages_to_json(const MessageVector& messages);

Json witness_to_json(const RankWitness& w);
Json security_to_json(const SecurityReport& report);
Json decodability_to_json(const SchemePlan& plan, const DecodabilityReport& report);
Json entropy_to_json(const EntropyValue& h);
Json entropy_report_to_json(const EntropyReport& report);
Json theorem2_to_json(const Theorem2Report& report);

// Parses JSON text; syntax errors become kMalformedDocument.
Json parse_json(const std::string& text);
// Two-space indented dump with a trailing newline.
std::string pretty(const Json& doc);

}  // namespace mcss::cli

#endif  // MCSS_CLI_DOCUMENTS_H_
