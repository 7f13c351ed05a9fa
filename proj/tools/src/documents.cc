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

#include "mcss/cli/documents.h"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <cstdio>
#include <string_view>
#include <utility>

#include "mcss/error.h"

namespace mcss::cli {
namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedDocument, what);
}

const Json& member(const Json& doc, const char* key) {
  if (!doc.is_object()) malformed(std::string("expected an object holding '") + key + "'");
  auto it = doc.find(key);
  if (it == doc.end()) malformed(std::string("missing field '") + key + "'");
  return *it;
}

std::uint64_t unsigned_field(const Json& doc, const char* key) {
  const Json& v = member(doc, key);
  if (!v.is_number_unsigned()) malformed(std::string("'") + key + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

int int_field(const Json& doc, const char* key) {
  const auto v = unsigned_field(doc, key);
  if (v > 1'000'000) malformed(std::string("'") + key + "' is implausibly large");
  return static_cast<int>(v);
}

std::string string_field(const Json& doc, const char* key) {
  const Json& v = member(doc, key);
  if (!v.is_string()) malformed(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

const Json& array_field(const Json& doc, const char* key) {
  const Json& v = member(doc, key);
  if (!v.is_array()) malformed(std::string("'") + key + "' must be an array");
  return v;
}

// Decimal digits only: no sign, no whitespace, no leading '+'.
std::uint64_t decimal(const Json& v, const std::string& what) {
  if (!v.is_string()) malformed(what + " must be a decimal string");
  const auto& s = v.get_ref<const std::string&>();
  std::uint64_t out = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    malformed(what + " '" + s + "' is not a decimal integer");
  }
  return out;
}

std::string decimal_string(std::uint64_t v) { return std::to_string(v); }

void check_header(const Json& doc, const char* kind) {
  if (unsigned_field(doc, "format_version") != kFormatVersion) {
    malformed("unsupported format_version; expected " + std::to_string(kFormatVersion));
  }
  if (string_field(doc, "document") != kind) {
    malformed(std::string("expected a '") + kind + "' document");
  }
}

Json header(const char* kind) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["document"] = kind;
  return doc;
}

Json subset_json(const ParticipantSet& s) { return Json(s.members()); }

}  // namespace

Json plan_to_json(const SchemePlan& plan) {
  Json doc = header("scheme-plan");
  doc["q"] = plan.field().modulus();
  doc["participants"] = plan.access().participants();
  Json basis = Json::array();
  for (const auto& clause : plan.access().basis()) basis.push_back(subset_json(clause));
  doc["basis"] = std::move(basis);
  doc["messages"] = plan.messages();
  doc["variables"] = plan.variable_labels();
  doc["config"] = {{"tie_break", std::string(to_string(plan.tie_break()))},
                   {"unsafe", plan.unsafe()}};
  Json shares = Json::array();
  for (const auto& s : plan.shares()) {
    Json entry;
    entry["id"] = to_string(s.id);
    entry["clause"] = s.id.clause;
    entry["participant"] = s.id.participant;
    entry["kind"] = std::string(to_string(s.kind));
    if (s.message) entry["message"] = *s.message;
    if (s.coefficients) {
      entry["a"] = decimal_string(s.coefficients->a);
      entry["b"] = decimal_string(s.coefficients->b);
    }
    Json form = Json::array();
    for (const auto& c : s.form.coefficients()) form.push_back(decimal_string(c.value()));
    entry["form"] = std::move(form);
    shares.push_back(std::move(entry));
  }
  doc["shares"] = std::move(shares);
  return doc;
}

SchemePlan plan_from_json(const Json& doc) {
  check_header(doc, "scheme-plan");
  const auto field = PrimeField::create(unsigned_field(doc, "q"));
  const int n = int_field(doc, "participants");
  std::vector<ParticipantSet> basis;
  for (const Json& clause : array_field(doc, "basis")) {
    if (!clause.is_array()) malformed("each basis clause must be an array");
    std::vector<Participant> members;
    for (const Json& p : clause) {
      if (!p.is_number_unsigned()) malformed("participants must be positive integers");
      members.push_back(p.get<int>());
    }
    basis.push_back(ParticipantSet(std::move(members)));
  }
  auto access = AccessStructure::create(n, std::move(basis));

  const Json& config = member(doc, "config");
  const auto tie_break = parse_tie_break(string_field(config, "tie_break"));
  const Json& unsafe = member(config, "unsafe");
  if (!unsafe.is_boolean()) malformed("'unsafe' must be a boolean");

  std::vector<ShareSpec> specs;
  std::vector<const Json*> forms;
  for (const Json& entry : array_field(doc, "shares")) {
    ShareSpec spec;
    spec.id = parse_share_id(string_field(entry, "id"));
    if (unsigned_field(entry, "clause") != spec.id.clause ||
        unsigned_field(entry, "participant") != static_cast<std::uint64_t>(spec.id.participant)) {
      malformed("clause/participant fields disagree with id " + to_string(spec.id));
    }
    spec.kind = parse_share_kind(string_field(entry, "kind"));
    const std::string name = to_string(spec.id);
    if (entry.contains("message")) spec.message = int_field(entry, "message");
    if (entry.contains("a") != entry.contains("b")) malformed(name + " needs both a and b");
    if (entry.contains("a")) {
      spec.coefficients = Coefficients{decimal(member(entry, "a"), name + ".a"),
                                       decimal(member(entry, "b"), name + ".b")};
    }
    specs.push_back(spec);
    forms.push_back(&array_field(entry, "form"));
  }

  auto plan = SchemePlan::expand(std::move(access), field, std::move(specs), tie_break,
                                 unsafe.get<bool>());
  if (unsigned_field(doc, "messages") != static_cast<std::uint64_t>(plan.messages())) {
    throw Error(ErrorCode::kInvalidPlan, "'messages' disagrees with the share table");
  }
  std::vector<std::string> labels;
  for (const Json& v : array_field(doc, "variables")) {
    if (!v.is_string()) malformed("variable labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  if (labels != plan.variable_labels()) {
    throw Error(ErrorCode::kInvalidPlan, "'variables' disagrees with the share table");
  }
  for (std::size_t i = 0; i < plan.shares().size(); ++i) {
    const auto& entry = plan.shares()[i];
    const Json& stored = *forms[i];
    const std::string name = to_string(entry.id);
    bool same = stored.size() == entry.form.size();
    for (std::size_t c = 0; same && c < stored.size(); ++c) {
      same = decimal(stored[c], name + " form entry") == entry.form[c].value();
    }
    if (!same) {
      throw Error(ErrorCode::kInvalidPlan,
                  "stored form of " + name + " differs from the form implied by the table");
    }
  }
  if (const auto broken = invariant_violations(plan); !broken.empty()) {
    throw Error(ErrorCode::kInvalidPlan, broken.front());
  }
  return plan;
}

std::string plan_digest(const SchemePlan& plan) {
  const std::string bytes = plan_to_json(plan).dump();
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

Json shares_to_json(const SchemePlan& plan, const ShareBundle& bundle) {
  Json doc = header("shares");
  doc["plan_digest"] = plan_digest(plan);
  doc["q"] = plan.field().modulus();
  Json holders = Json::array();
  for (const auto& [p, shares] : bundle.assignments()) {
    Json list = Json::array();
    for (const auto& s : shares) {
      list.push_back({{"id", to_string(s.id)}, {"value", decimal_string(s.value.value())}});
    }
    holders.push_back({{"participant", p}, {"shares", std::move(list)}});
  }
  doc["participants"] = std::move(holders);
  return doc;
}

ShareBundle shares_from_json(const Json& doc, const SchemePlan& plan) {
  check_header(doc, "shares");
  if (string_field(doc, "plan_digest") != plan_digest(plan)) {
    throw Error(ErrorCode::kDigestMismatch,
                "shares were dealt for a different plan (digest mismatch)");
  }
  if (unsigned_field(doc, "q") != plan.field().modulus()) malformed("q differs from the plan");
  ShareBundle bundle;
  for (const Json& holder : array_field(doc, "participants")) {
    const int p = int_field(holder, "participant");
    for (const Json& s : array_field(holder, "shares")) {
      const auto id = parse_share_id(string_field(s, "id"));
      if (id.participant != p) {
        malformed(to_string(id) + " is filed under participant " + std::to_string(p));
      }
      plan.share(id);  // kInvalidShareId for strangers
      if (bundle.has(id)) malformed(to_string(id) + " appears twice");
      bundle.add(p, {id, plan.field().from_residue(decimal(member(s, "value"), to_string(id)))});
    }
  }
  return bundle;
}

Json messages_to_json(const MessageVector& messages) {
  Json doc = header("messages");
  Json values = Json::array();
  for (const auto& m : messages) values.push_back(decimal_string(m.value()));
  doc["messages"] = std::move(values);
  return doc;
}

Json witness_to_json(const RankWitness& w) {
  return {{"rank", w.rank}, {"pivot_rows", w.pivot_rows}, {"pivot_cols", w.pivot_cols}};
}

Json security_to_json(const SecurityReport& report) {
  Json verdicts = Json::array();
  for (const auto& v : report.verdicts) {
    verdicts.push_back({{"subset", subset_json(v.subset)},
                        {"message", v.message},
                        {"shares", v.shares},
                        {"full", witness_to_json(v.full)},
                        {"conditioned", witness_to_json(v.conditioned)},
                        {"secure", v.secure}});
  }
  return {{"scope", report.scope == SubsetScope::kMaximal ? "maximal" : "all-unauthorized"},
          {"secure", report.secure},
          {"verdicts", std::move(verdicts)}};
}

Json decodability_to_json(const SchemePlan& plan, const DecodabilityReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"clause", e.clause},
                       {"subset", subset_json(plan.access().clause(e.clause))},
                       {"message", e.message},
                       {"decodable", e.decodable}});
  }
  return {{"decodable", report.decodable}, {"entries", std::move(entries)}};
}

Json entropy_to_json(const EntropyValue& h) {
  Json out;
  out["log_q_multiple"] = h.log_q_multiple ? Json(*h.log_q_multiple) : Json(nullptr);
  out["bits"] = h.bits;
  return out;
}

Json entropy_report_to_json(const EntropyReport& report) {
  Json messages = Json::array();
  for (const auto& m : report.messages) {
    messages.push_back({{"message", m.message},
                        {"H(S|M)", entropy_to_json(m.shares_given_message)},
                        {"H(M|S)", entropy_to_json(m.message_given_shares)},
                        {"I(M;S)", entropy_to_json(m.mutual_information)},
                        {"independent", m.independent}});
  }
  const auto& d = report.share_distribution;
  return {{"subset", subset_json(report.subset)},
          {"assignments", report.assignments},
          {"shares", report.shares},
          {"distribution",
           {{"support", d.support}, {"min_count", d.min_count}, {"max_count", d.max_count}}},
          {"H(S)", entropy_to_json(report.shares_entropy)},
          {"messages", std::move(messages)}};
}

Json theorem2_to_json(const Theorem2Report& report) {
  Json residuals = Json::array();
  for (const auto& r : report.residuals) {
    residuals.push_back({{"clause", r.clause}, {"H(M|S)", entropy_to_json(r.entropy)}});
  }
  Json doc = header("theorem2-report");
  doc["share"] = to_string(report.share);
  doc["message"] = report.message;
  doc["unsafe"] = report.forced_plan.unsafe();
  doc["failing_clauses"] = report.failing_clauses;
  doc["oracle_run"] = report.oracle_run;
  doc["residuals"] = std::move(residuals);
  doc["decodability"] = decodability_to_json(report.forced_plan, report.decodability);
  doc["confirmed"] = report.confirmed;
  return doc;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(std::string("not valid JSON: ") + e.what());
  }
}

std::string pretty(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace mcss::cli
