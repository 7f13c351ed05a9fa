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

#include "mcss/scheme.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <utility>

#include "mcss/error.h"

namespace mcss {
namespace {

void check_share(const AccessStructure& access, const ShareId& id) {
  if (id.clause < 1 || id.clause > access.clause_count() ||
      !access.clause(id.clause).contains(id.participant)) {
    throw Error(ErrorCode::kInvalidShareId,
                to_string(id) + " does not name a share of " + access.to_formula());
  }
}

void check_coefficients(const PrimeField& field, const Coefficients& c,
                        const ShareId& id) {
  const std::string where = " for " + to_string(id);
  if (c.a >= field.modulus() || c.b >= field.modulus()) {
    throw Error(ErrorCode::kBadCoefficient,
                "coefficients must be residues in [0, " +
                    std::to_string(field.modulus()) + ")" + where);
  }
  if (c.a == 0 || c.a == 1) {
    throw Error(ErrorCode::kBadCoefficient,
                "a = " + std::to_string(c.a) + where +
                    "; a = 0 leaves a share equal to b*M_l alone and a = 1 "
                    "lets the rest of the clause compute -b*M_l");
  }
  if (c.b == 0) {
    throw Error(ErrorCode::kBadCoefficient,
                "b = 0" + where + "; the new message would not enter the share");
  }
}

Participant pick(const std::vector<Participant>& candidates, TieBreak t) {
  return t == TieBreak::kHighestIndex
             ? *std::max_element(candidates.begin(), candidates.end())
             : *std::min_element(candidates.begin(), candidates.end());
}

SchemePlan replace_one(const SchemePlan& plan, const ShareId& target,
                       Coefficients coefficients, bool unchecked) {
  const auto& access = plan.access();
  check_share(access, target);
  if (!unchecked) {
    check_coefficients(plan.field(), coefficients, target);
  } else if (coefficients.a >= plan.field().modulus() ||
             coefficients.b >= plan.field().modulus()) {
    throw Error(ErrorCode::kBadCoefficient, "coefficients must be residues mod q");
  }
  auto specs = plan.specs();
  auto spec_of = [&](const ShareId& id) -> ShareSpec& {
    return *std::find_if(specs.begin(), specs.end(),
                         [&](const ShareSpec& s) { return s.id == id; });
  };
  ShareSpec& spec = spec_of(target);
  if (spec.kind == ShareKind::kReplaced) {
    throw Error(ErrorCode::kInvalidOption, to_string(target) + " is already replaced");
  }
  if (spec.kind == ShareKind::kFixed) {
    std::vector<Participant> randoms;
    for (const auto& id : plan.clause_shares(target.clause)) {
      if (spec_of(id).kind == ShareKind::kRandom) randoms.push_back(id.participant);
    }
    if (randoms.empty()) {
      throw Error(ErrorCode::kInvalidOption,
                  "clause A_" + std::to_string(target.clause) +
                      " has no random share left to take over the fixed role of " +
                      to_string(target));
    }
    spec_of({target.clause, pick(randoms, plan.tie_break())}).kind = ShareKind::kFixed;
  }
  spec.kind = ShareKind::kReplaced;
  spec.message = plan.messages() + 1;
  spec.coefficients = coefficients;
  const bool unsafe = plan.unsafe() || unchecked || !is_replaceable(access, target);
  return SchemePlan::expand(access, plan.field(), std::move(specs), plan.tie_break(),
                            unsafe);
}

}  // namespace

std::string to_string(const ShareId& id) {
  return "S" + std::to_string(id.participant) + "^A" + std::to_string(id.clause);
}

ShareId parse_share_id(std::string_view text) {
  auto fail = [&]() -> ShareId {
    throw Error(ErrorCode::kInvalidShareId,
                "'" + std::string(text) + "' is not of the form S<j>^A<i>");
  };
  auto number = [&](std::size_t& pos) -> long long {
    const std::size_t start = pos;
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1'000'000'000) fail();
      ++pos;
    }
    if (pos == start) fail();
    return v;
  };
  std::size_t pos = 0;
  if (text.empty() || text[pos++] != 'S') return fail();
  const long long participant = number(pos);
  if (text.substr(pos, 2) != "^A") return fail();
  pos += 2;
  const long long clause = number(pos);
  if (pos != text.size() || participant < 1 || clause < 1) return fail();
  return ShareId{static_cast<std::size_t>(clause), static_cast<Participant>(participant)};
}

std::string_view to_string(ShareKind kind) {
  switch (kind) {
    case ShareKind::kRandom: return "random";
    case ShareKind::kFixed: return "fixed";
    case ShareKind::kReplaced: return "replaced";
  }
  return "?";
}

ShareKind parse_share_kind(std::string_view text) {
  if (text == "random") return ShareKind::kRandom;
  if (text == "fixed") return ShareKind::kFixed;
  if (text == "replaced") return ShareKind::kReplaced;
  throw Error(ErrorCode::kInvalidPlan, "unknown share kind '" + std::string(text) + "'");
}

std::string_view to_string(TieBreak t) {
  return t == TieBreak::kHighestIndex ? "highest-index" : "lowest-index";
}

TieBreak parse_tie_break(std::string_view text) {
  if (text == "highest-index") return TieBreak::kHighestIndex;
  if (text == "lowest-index") return TieBreak::kLowestIndex;
  throw Error(ErrorCode::kInvalidOption,
              "tie-break must be highest-index or lowest-index, got '" +
                  std::string(text) + "'");
}

LinForm::LinForm(PrimeField field, std::size_t length)
    : coefficients_(length, field.zero()) {}

LinForm LinForm::unit(PrimeField field, std::size_t length, std::size_t index) {
  LinForm f(field, length);
  f.coefficients_.at(index) = field.one();
  return f;
}

FieldElement LinForm::evaluate(const FieldVector& assignment) const {
  if (assignment.size() != coefficients_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "assignment length != form length");
  }
  if (coefficients_.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "empty form has no field");
  }
  FieldElement acc = coefficients_.front().field().zero();
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    acc += coefficients_[i] * assignment[i];
  }
  return acc;
}

LinForm& LinForm::operator+=(const LinForm& o) {
  if (o.size() != size()) throw Error(ErrorCode::kDimensionMismatch, "form lengths differ");
  for (std::size_t i = 0; i < size(); ++i) coefficients_[i] += o.coefficients_[i];
  return *this;
}

LinForm& LinForm::operator-=(const LinForm& o) {
  if (o.size() != size()) throw Error(ErrorCode::kDimensionMismatch, "form lengths differ");
  for (std::size_t i = 0; i < size(); ++i) coefficients_[i] -= o.coefficients_[i];
  return *this;
}

LinForm operator*(const FieldElement& s, LinForm f) {
  for (auto& c : f.coefficients_) c *= s;
  return f;
}

std::vector<ShareId> all_shares(const AccessStructure& access) {
  std::vector<ShareId> out;
  for (std::size_t i = 1; i <= access.clause_count(); ++i) {
    for (Participant p : access.clause(i)) out.push_back({i, p});
  }
  return out;
}

SchemePlan SchemePlan::expand(AccessStructure access, PrimeField field,
                              std::vector<ShareSpec> specs, TieBreak tie_break,
                              bool unsafe) {
  const auto ids = all_shares(access);
  std::sort(specs.begin(), specs.end(),
            [](const ShareSpec& a, const ShareSpec& b) { return a.id < b.id; });
  if (specs.size() != ids.size() ||
      !std::equal(specs.begin(), specs.end(), ids.begin(),
                  [](const ShareSpec& s, const ShareId& id) { return s.id == id; })) {
    throw Error(ErrorCode::kInvalidPlan,
                "share table must list each of the " + std::to_string(ids.size()) +
                    " shares exactly once");
  }

  SchemePlan plan(std::move(access), field);
  plan.tie_break_ = tie_break;
  plan.unsafe_ = unsafe;

  std::set<int> message_indices;
  std::vector<int> fixed_per_clause(plan.access_.clause_count(), 0);
  for (const auto& s : specs) {
    const std::string name = to_string(s.id);
    switch (s.kind) {
      case ShareKind::kRandom:
        plan.random_variables_.push_back(s.id);
        break;
      case ShareKind::kFixed:
        ++fixed_per_clause[s.id.clause - 1];
        break;
      case ShareKind::kReplaced:
        if (!s.message || !s.coefficients) {
          throw Error(ErrorCode::kInvalidPlan,
                      "replaced share " + name + " lacks message index or coefficients");
        }
        if (*s.message < 2 || !message_indices.insert(*s.message).second) {
          throw Error(ErrorCode::kInvalidPlan,
                      "replaced share " + name + " carries message index " +
                          std::to_string(*s.message) +
                          "; each index >= 2 may own exactly one replacement");
        }
        if (s.coefficients->a >= field.modulus() || s.coefficients->b >= field.modulus()) {
          throw Error(ErrorCode::kInvalidPlan, "coefficients of " + name + " exceed q");
        }
        break;
    }
    if (s.kind != ShareKind::kReplaced && (s.message || s.coefficients)) {
      throw Error(ErrorCode::kInvalidPlan,
                  name + " is not replaced but carries replacement data");
    }
  }
  for (std::size_t i = 0; i < fixed_per_clause.size(); ++i) {
    if (fixed_per_clause[i] != 1) {
      throw Error(ErrorCode::kInvalidPlan,
                  "clause A_" + std::to_string(i + 1) + " has " +
                      std::to_string(fixed_per_clause[i]) +
                      " fixed shares; exactly one is required");
    }
  }
  plan.messages_ = 1 + static_cast<int>(message_indices.size());
  if (!message_indices.empty() && *message_indices.rbegin() != plan.messages_) {
    throw Error(ErrorCode::kInvalidPlan,
                "message indices must be exactly 2.." + std::to_string(plan.messages_));
  }

  const std::size_t width = plan.variable_count();
  for (const auto& s : specs) {
    LinForm form(field, width);
    if (s.kind == ShareKind::kRandom) {
      form = LinForm::unit(field, width, plan.random_column(s.id));
    } else if (s.kind == ShareKind::kReplaced) {
      form.set(0, field.from_residue(s.coefficients->a));
      form.set(plan.message_column(*s.message), field.from_residue(s.coefficients->b));
    }
    plan.shares_.push_back({s.id, s.kind, std::move(form), s.message, s.coefficients});
  }
  // Fixed shares absorb the rest of their clause so each clause sums to M_1.
  for (auto& entry : plan.shares_) {
    if (entry.kind != ShareKind::kFixed) continue;
    LinForm form = LinForm::unit(field, width, 0);
    for (const auto& sibling : plan.shares_) {
      if (sibling.id.clause == entry.id.clause && sibling.id != entry.id) {
        form -= sibling.form;
      }
    }
    entry.form = std::move(form);
  }
  return plan;
}

std::vector<std::string> SchemePlan::variable_labels() const {
  std::vector<std::string> out;
  for (int l = 1; l <= messages_; ++l) out.push_back("M" + std::to_string(l));
  for (const auto& id : random_variables_) out.push_back(to_string(id));
  return out;
}

std::size_t SchemePlan::message_column(int message) const {
  if (message < 1 || message > messages_) {
    throw Error(ErrorCode::kBadMessageIndex,
                "message index " + std::to_string(message) + " outside [1, " +
                    std::to_string(messages_) + "]");
  }
  return static_cast<std::size_t>(message - 1);
}

std::size_t SchemePlan::random_column(const ShareId& id) const {
  auto it = std::find(random_variables_.begin(), random_variables_.end(), id);
  if (it == random_variables_.end()) {
    throw Error(ErrorCode::kInvalidShareId, to_string(id) + " is not a random share");
  }
  return static_cast<std::size_t>(messages_) +
         static_cast<std::size_t>(it - random_variables_.begin());
}

const ShareEntry& SchemePlan::share(const ShareId& id) const {
  auto it = std::lower_bound(
      shares_.begin(), shares_.end(), id,
      [](const ShareEntry& e, const ShareId& key) { return e.id < key; });
  if (it == shares_.end() || it->id != id) {
    throw Error(ErrorCode::kInvalidShareId,
                to_string(id) + " does not name a share of " + access_.to_formula());
  }
  return *it;
}

std::vector<ShareId> SchemePlan::held_shares(const ParticipantSet& subset) const {
  std::vector<ShareId> out;
  for (Participant p : subset) {
    for (std::size_t i = 1; i <= access_.clause_count(); ++i) {
      if (access_.clause(i).contains(p)) out.push_back({i, p});
    }
  }
  return out;
}

std::vector<ShareId> SchemePlan::clause_shares(std::size_t clause) const {
  std::vector<ShareId> out;
  for (Participant p : access_.clause(clause)) out.push_back({clause, p});
  return out;
}

std::vector<ShareSpec> SchemePlan::specs() const {
  std::vector<ShareSpec> out;
  for (const auto& e : shares_) out.push_back({e.id, e.kind, e.message, e.coefficients});
  return out;
}

std::vector<std::string> invariant_violations(const SchemePlan& plan) {
  std::vector<std::string> out;
  const PrimeField f = plan.field();
  const std::size_t width = plan.variable_count();
  const LinForm target = LinForm::unit(f, width, 0);

  for (std::size_t i = 1; i <= plan.access().clause_count(); ++i) {
    LinForm sum(f, width);
    int fixed = 0;
    for (const auto& id : plan.clause_shares(i)) {
      sum += plan.share(id).form;
      fixed += plan.share(id).kind == ShareKind::kFixed;
    }
    if (sum != target) {
      out.push_back("shares of A_" + std::to_string(i) + " do not sum to M1");
    }
    if (fixed != 1) {
      out.push_back("A_" + std::to_string(i) + " has " + std::to_string(fixed) +
                    " fixed shares");
    }
  }

  std::vector<int> owners(static_cast<std::size_t>(plan.messages()) + 1, 0);
  std::size_t replaced = 0;
  std::set<std::size_t> random_columns;
  for (const auto& e : plan.shares()) {
    const std::string name = to_string(e.id);
    if (e.form.size() != width) {
      out.push_back(name + " has a form of the wrong length");
      continue;
    }
    if (e.kind == ShareKind::kRandom) {
      std::size_t nonzero = 0, column = 0;
      for (std::size_t c = 0; c < width; ++c) {
        if (!e.form[c].is_zero()) {
          ++nonzero;
          column = c;
        }
      }
      if (nonzero != 1 || !e.form[column].is_one() ||
          column < static_cast<std::size_t>(plan.messages()) ||
          !random_columns.insert(column).second) {
        out.push_back(name + " is not a distinct unit vector on a random column");
      }
    } else if (e.kind == ShareKind::kReplaced) {
      ++replaced;
      if (!e.message || *e.message < 2 || *e.message > plan.messages()) {
        out.push_back(name + " has no valid message index");
        continue;
      }
      ++owners[static_cast<std::size_t>(*e.message)];
      const auto& a = e.form[0];
      const auto& b = e.form[plan.message_column(*e.message)];
      std::size_t nonzero = 0;
      for (const auto& c : e.form.coefficients()) nonzero += !c.is_zero();
      if (nonzero > 2 || (!plan.unsafe() && (a.is_zero() || a.is_one() || b.is_zero()))) {
        out.push_back(name + " is not of the form a*M1 + b*M" +
                      std::to_string(*e.message) + " with a outside {0,1}, b != 0");
      }
      if (!e.coefficients || e.coefficients->a != a.value() ||
          e.coefficients->b != b.value()) {
        out.push_back(name + " records coefficients that disagree with its form");
      }
    }
  }
  for (int l = 2; l <= plan.messages(); ++l) {
    if (owners[static_cast<std::size_t>(l)] != 1) {
      out.push_back("M" + std::to_string(l) + " appears in " +
                    std::to_string(owners[static_cast<std::size_t>(l)]) +
                    " replacements");
    }
  }
  if (replaced + 1 != static_cast<std::size_t>(plan.messages())) {
    out.push_back("m - 1 != number of replaced shares");
  }
  return out;
}

SchemePlan build_single_secret(const AccessStructure& access, PrimeField field,
                               TieBreak tie_break) {
  std::vector<ShareSpec> specs;
  for (std::size_t i = 1; i <= access.clause_count(); ++i) {
    const Participant fixed = pick(access.clause(i).members(), tie_break);
    for (Participant p : access.clause(i)) {
      specs.push_back({{i, p}, p == fixed ? ShareKind::kFixed : ShareKind::kRandom,
                       std::nullopt, std::nullopt});
    }
  }
  return SchemePlan::expand(access, field, std::move(specs), tie_break, false);
}

bool is_replaceable(const AccessStructure& access, const ShareId& share) {
  check_share(access, share);
  const ParticipantSet rest = access.clause(share.clause).without(share.participant);
  return std::all_of(access.basis().begin(), access.basis().end(),
                     [&](const ParticipantSet& other) {
                       return other.contains(share.participant) || rest.is_subset_of(other);
                     });
}

std::vector<ShareId> replaceable_set(const AccessStructure& access) {
  std::vector<ShareId> out;
  for (const auto& id : all_shares(access)) {
    if (is_replaceable(access, id)) out.push_back(id);
  }
  return out;
}

std::vector<ShareId> select_fixed_shares(const AccessStructure& access,
                                         const ReplacementOptions& options) {
  for (const auto& [clause, participant] : options.fixed) {
    check_share(access, {clause, participant});
  }
  std::vector<ShareId> out;
  for (std::size_t i = 1; i <= access.clause_count(); ++i) {
    std::vector<Participant> replaceable, other;
    for (Participant p : access.clause(i)) {
      (is_replaceable(access, {i, p}) ? replaceable : other).push_back(p);
    }
    const auto& candidates = other.empty() ? replaceable : other;
    if (auto pin = options.fixed.find(i); pin != options.fixed.end()) {
      if (std::find(candidates.begin(), candidates.end(), pin->second) ==
          candidates.end()) {
        throw Error(ErrorCode::kInvalidOption,
                    "cannot fix " + to_string(ShareId{i, pin->second}) +
                        ": clause A_" + std::to_string(i) +
                        " has a non-replaceable share, which must be the fixed one");
      }
      out.push_back({i, pin->second});
    } else {
      out.push_back({i, pick(candidates, options.tie_break)});
    }
  }
  return out;
}

SchemePlan apply_replacement(const SchemePlan& plan, const ReplacementOptions& options) {
  if (plan.messages() != 1 || plan.unsafe()) {
    throw Error(ErrorCode::kInvalidPlan,
                "replacement starts from a single-secret plan (m = 1), got m = " +
                    std::to_string(plan.messages()));
  }
  const auto& access = plan.access();
  const PrimeField field = plan.field();
  const auto fixed = select_fixed_shares(access, options);

  std::vector<ShareId> to_replace;
  for (const auto& id : replaceable_set(access)) {
    if (std::find(fixed.begin(), fixed.end(), id) == fixed.end()) to_replace.push_back(id);
  }

  for (const auto& [id, c] : options.coefficients) {
    if (std::find(to_replace.begin(), to_replace.end(), id) == to_replace.end()) {
      throw Error(ErrorCode::kInvalidOption,
                  "coefficients given for " + to_string(id) + ", which is not replaced");
    }
  }

  // Message indices: pinned first, the rest in canonical order.
  const int m = 1 + static_cast<int>(to_replace.size());
  std::map<ShareId, int> message_of;
  std::set<int> taken;
  for (const auto& [id, l] : options.message_map) {
    if (std::find(to_replace.begin(), to_replace.end(), id) == to_replace.end()) {
      throw Error(ErrorCode::kInvalidOption,
                  "message mapping names " + to_string(id) + ", which is not replaced");
    }
    if (l < 2 || l > m || !taken.insert(l).second) {
      throw Error(ErrorCode::kInvalidOption,
                  "message index " + std::to_string(l) + " for " + to_string(id) +
                      " is outside [2, " + std::to_string(m) + "] or reused");
    }
    message_of[id] = l;
  }
  int next = 2;
  for (const auto& id : to_replace) {
    if (message_of.count(id)) continue;
    while (taken.count(next)) ++next;
    message_of[id] = next;
    taken.insert(next);
  }

  std::vector<ShareSpec> specs;
  for (const auto& id : all_shares(access)) {
    ShareSpec s{id, ShareKind::kRandom, std::nullopt, std::nullopt};
    if (std::find(fixed.begin(), fixed.end(), id) != fixed.end()) {
      s.kind = ShareKind::kFixed;
    } else if (auto it = message_of.find(id); it != message_of.end()) {
      auto c = options.coefficients.find(id);
      s.kind = ShareKind::kReplaced;
      s.message = it->second;
      s.coefficients = c == options.coefficients.end() ? options.default_coefficients
                                                        : c->second;
      check_coefficients(field, *s.coefficients, id);
    }
    specs.push_back(s);
  }
  return SchemePlan::expand(access, field, std::move(specs), options.tie_break, false);
}

SchemePlan force_replace(const SchemePlan& plan, const ShareId& share,
                         Coefficients coefficients) {
  return replace_one(plan, share, coefficients, false);
}

SchemePlan force_replace_unchecked(const SchemePlan& plan, const ShareId& share,
                                   Coefficients coefficients) {
  return replace_one(plan, share, coefficients, true);
}

RateReport rate(const SchemePlan& plan) {
  RateReport r;
  r.messages = plan.messages();
  r.total_shares = plan.total_shares();
  const auto m = static_cast<std::uint64_t>(r.messages);
  const auto g = std::gcd(m, static_cast<std::uint64_t>(r.total_shares));
  r.numerator = m / g;
  r.denominator = r.total_shares / g;
  return r;
}

std::string to_string(const RateReport& r) {
  return std::to_string(r.numerator) + "/" + std::to_string(r.denominator);
}

}  // namespace mcss
