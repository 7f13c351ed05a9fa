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

// Symbolic share plans for the monotone circuit construction and the
// share-replacement transform that turns a single-secret plan into an
// individually secure multi-secret plan.
//
// A plan is public. Each share is a linear form over the variable basis
// (M_1, ..., M_m, R_1, ..., R_k): messages first, then one free random per
// random-kind share, in canonical share order. Concrete values only appear
// once a plan is dealt (see runtime.h).

#ifndef MCSS_SCHEME_H_
#define MCSS_SCHEME_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcss/access.h"
#include "mcss/ffield.h"

namespace mcss {

// S_j^{A_i}: the share of participant j for clause i (both 1-based).
// Canonical order is clause-major, then participant.
struct ShareId {
  std::size_t clause = 0;
  Participant participant = 0;

  friend auto operator<=>(const ShareId&, const ShareId&) = default;
};

// "S2^A1".
std::string to_string(const ShareId& id);
// Inverse of to_string. Throws kInvalidShareId.
ShareId parse_share_id(std::string_view text);

enum class ShareKind { kRandom, kFixed, kReplaced };

std::string_view to_string(ShareKind kind);
// Throws kInvalidPlan for unknown names.
ShareKind parse_share_kind(std::string_view text);

class LinForm {
 public:
  LinForm(PrimeField field, std::size_t length);
  static LinForm unit(PrimeField field, std::size_t length, std::size_t index);

  std::size_t size() const { return coefficients_.size(); }
  const FieldVector& coefficients() const { return coefficients_; }
  const FieldElement& operator[](std::size_t i) const { return coefficients_.at(i); }
  void set(std::size_t i, const FieldElement& v) { coefficients_.at(i) = v; }

  FieldElement evaluate(const FieldVector& assignment) const;

  LinForm& operator+=(const LinForm& o);
  LinForm& operator-=(const LinForm& o);
  friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
  friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
  friend LinForm operator*(const FieldElement& s, LinForm f);
  friend bool operator==(const LinForm&, const LinForm&) = default;

 private:
  FieldVector coefficients_;
};

// Replacement a*M_1 + b*M_l, as residues in [0, q).
struct Coefficients {
  std::uint64_t a = 2;
  std::uint64_t b = 1;

  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

struct ShareEntry {
  ShareId id;
  ShareKind kind = ShareKind::kRandom;
  LinForm form;
  // Set for replaced shares only.
  std::optional<int> message;
  std::optional<Coefficients> coefficients;

  friend bool operator==(const ShareEntry&, const ShareEntry&) = default;
};

// How the fixed share of a clause is chosen among the eligible candidates.
enum class TieBreak { kHighestIndex, kLowestIndex };

std::string_view to_string(TieBreak t);
TieBreak parse_tie_break(std::string_view text);

// Per-share definition used to rebuild a plan: kind plus, for replaced
// shares, the message index and coefficients.
struct ShareSpec {
  ShareId id;
  ShareKind kind = ShareKind::kRandom;
  std::optional<int> message;
  std::optional<Coefficients> coefficients;
};

class SchemePlan {
 public:
  // Expands share definitions into linear forms: random shares get their own
  // R column, replaced shares a*M_1 + b*M_l, and each fixed share becomes
  // M_1 minus the sum of its clause siblings. `specs` must name every share
  // of `access` exactly once. Throws kInvalidPlan on structural problems; the
  // algebraic invariants are reported by invariant_violations().
  static SchemePlan expand(AccessStructure access, PrimeField field,
                           std::vector<ShareSpec> specs, TieBreak tie_break,
                           bool unsafe);

  const AccessStructure& access() const { return access_; }
  PrimeField field() const { return field_; }
  int messages() const { return messages_; }
  std::size_t randoms() const { return random_variables_.size(); }
  std::size_t variable_count() const { return messages() + randoms(); }
  std::size_t total_shares() const { return shares_.size(); }
  TieBreak tie_break() const { return tie_break_; }
  // Set once a replacement bypassed the replaceability or coefficient rules.
  bool unsafe() const { return unsafe_; }

  // The random-kind shares whose values are the free variables, in column
  // order.
  const std::vector<ShareId>& random_variables() const { return random_variables_; }
  // "M1".."Mm" followed by the random shares' ids.
  std::vector<std::string> variable_labels() const;
  // Column of M_l (1-based l) and of a random share's variable.
  std::size_t message_column(int message) const;
  std::size_t random_column(const ShareId& id) const;

  // Canonical (clause-major) order.
  const std::vector<ShareEntry>& shares() const { return shares_; }
  // Throws kInvalidShareId.
  const ShareEntry& share(const ShareId& id) const;
  // Shares held by `subset`, participant-major: P_j ascending, then clause.
  std::vector<ShareId> held_shares(const ParticipantSet& subset) const;
  std::vector<ShareId> clause_shares(std::size_t clause) const;

  std::vector<ShareSpec> specs() const;

  friend bool operator==(const SchemePlan&, const SchemePlan&) = default;

 private:
  SchemePlan(AccessStructure access, PrimeField field)
      : access_(std::move(access)), field_(field) {}

  AccessStructure access_;
  PrimeField field_;
  int messages_ = 1;
  std::vector<ShareId> random_variables_;
  std::vector<ShareEntry> shares_;
  TieBreak tie_break_ = TieBreak::kHighestIndex;
  bool unsafe_ = false;
};

// Every share of `access` in canonical order.
std::vector<ShareId> all_shares(const AccessStructure& access);

// Human-readable descriptions of each broken plan invariant; empty for a
// well-formed plan. For unsafe plans the a outside {0, 1}, b != 0 rule is not
// checked.
std::vector<std::string> invariant_violations(const SchemePlan& plan);

// Monotone circuit construction for one secret M_1. In each clause one share
// is fixed (chosen by `tie_break`) and the rest are free randoms.
SchemePlan build_single_secret(const AccessStructure& access, PrimeField field,
                               TieBreak tie_break = TieBreak::kHighestIndex);

// S_j^{A_i} is replaceable iff for every clause A' either P_j is in A' or
// A_i \ {P_j} is contained in A'. Throws kInvalidShareId.
bool is_replaceable(const AccessStructure& access, const ShareId& share);
std::vector<ShareId> replaceable_set(const AccessStructure& access);

struct ReplacementOptions {
  TieBreak tie_break = TieBreak::kHighestIndex;
  // clause -> participant whose share is fixed. Must respect the selection
  // rule (a non-replaceable share whenever the clause has one).
  std::map<std::size_t, Participant> fixed;
  Coefficients default_coefficients;
  std::map<ShareId, Coefficients> coefficients;
  // replaced share -> message index in [2, m]. Unpinned shares take the
  // remaining indices in canonical order.
  std::map<ShareId, int> message_map;
};

// Fixed share of each clause (index i - 1 holds clause i's choice).
std::vector<ShareId> select_fixed_shares(const AccessStructure& access,
                                         const ReplacementOptions& options = {});

// Converts a single-secret plan into a multi-secret plan: identify the
// replaceable shares, fix one share per clause, then replace every
// replaceable non-fixed share by a*M_1 + b*M_l with a fresh l. Throws
// kBadCoefficient, kInvalidOption, kInvalidPlan (plan not single-secret).
SchemePlan apply_replacement(const SchemePlan& plan,
                             const ReplacementOptions& options = {});

// Replaces one random or fixed share by a*M_1 + b*M_{m+1} without checking
// replaceability. If the share was fixed, the clause's remaining random share
// picked by the plan's tie-break becomes the fixed one. The result is marked
// unsafe unless the share is replaceable. Throws kBadCoefficient,
// kInvalidShareId, kInvalidOption.
SchemePlan force_replace(const SchemePlan& plan, const ShareId& share,
                         Coefficients coefficients);

// As force_replace, but any a, b in [0, q) is accepted. Always unsafe; only
// meant for exhibiting why the coefficient restrictions exist.
SchemePlan force_replace_unchecked(const SchemePlan& plan, const ShareId& share,
                                   Coefficients coefficients);

struct RateReport {
  int messages = 0;
  std::size_t total_shares = 0;
  // m / |S| in lowest terms.
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;
};

RateReport rate(const SchemePlan& plan);
// "1/2".
std::string to_string(const RateReport& r);

}  // namespace mcss

#endif  // MCSS_SCHEME_H_
