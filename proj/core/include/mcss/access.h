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

// Monotone access structures given by their basis of minimal authorized
// sets. Participants are numbered from 1.

#ifndef MCSS_ACCESS_H_
#define MCSS_ACCESS_H_

#include <compare>
#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace mcss {

using Participant = int;

// Sorted, duplicate-free set of participant indices. Ordered
// lexicographically, which is the canonical order for lists of subsets.
class ParticipantSet {
 public:
  ParticipantSet() = default;
  ParticipantSet(std::initializer_list<Participant> members);
  explicit ParticipantSet(std::vector<Participant> members);

  // Members of a bitmask, bit i standing for participant i + 1.
  static ParticipantSet from_mask(std::uint64_t mask);

  const std::vector<Participant>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Participant p) const;
  bool is_subset_of(const ParticipantSet& other) const;
  ParticipantSet without(Participant p) const;
  ParticipantSet with(Participant p) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend auto operator<=>(const ParticipantSet&, const ParticipantSet&) = default;
  friend bool operator==(const ParticipantSet&, const ParticipantSet&) = default;

 private:
  std::vector<Participant> members_;
};

// "{1,2,4}".
std::string to_string(const ParticipantSet& s);

inline constexpr std::size_t kDefaultEnumerationGuard = 20;

class AccessStructure {
 public:
  // Validates an explicit basis: every clause has at least two members in
  // [1, n] and no clause contains another. Clause order is kept; it defines
  // the clause indices A_1..A_r. Throws kEmptyClause, kSingletonClause,
  // kOutOfRangeParticipant or kNotAntichain.
  static AccessStructure create(int participants,
                                std::vector<ParticipantSet> basis);

  int participants() const { return n_; }
  const std::vector<ParticipantSet>& basis() const { return basis_; }
  std::size_t clause_count() const { return basis_.size(); }
  // 1-based, matching A_1..A_r.
  const ParticipantSet& clause(std::size_t i) const { return basis_.at(i - 1); }

  // Human-readable notes, e.g. participants that appear in no clause.
  const std::vector<std::string>& warnings() const { return warnings_; }

  // Throws kOutOfRangeParticipant for members outside [1, n].
  bool is_authorized(const ParticipantSet& subset) const;

  // Canonical DNF text, "(P1&P2&P4)|(P1&P3&P4)|(P2&P3)".
  std::string to_formula() const;

  friend bool operator==(const AccessStructure& a, const AccessStructure& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  AccessStructure(int n, std::vector<ParticipantSet> basis);

  int n_ = 0;
  std::vector<ParticipantSet> basis_;
  std::vector<std::string> warnings_;
};

// Parses a disjunction of conjunctions of positive literals:
//   clause ('|' clause)*, clause = ['('] P<k> ('&' P<k>)* [')']
// Whitespace is insignificant. Clauses that repeat or contain an earlier
// clause are absorbed (the remaining clauses keep their relative order).
// n is the largest index mentioned unless `participants` is given.
// Throws kSyntaxError, kNegationNotAllowed, kSingletonClause.
AccessStructure parse_dnf(std::string_view formula, int participants = 0);

// Every unauthorized U such that U + {p} is authorized for each p not in U,
// in canonical order. Throws kTooManyParticipants when n > guard.
std::vector<ParticipantSet> maximal_unauthorized(
    const AccessStructure& gamma, std::size_t guard = kDefaultEnumerationGuard);

// Every unauthorized subset including the empty set, canonical order.
std::vector<ParticipantSet> unauthorized_subsets(
    const AccessStructure& gamma, std::size_t guard = kDefaultEnumerationGuard);

// Every authorized subset, canonical order.
std::vector<ParticipantSet> authorized_subsets(
    const AccessStructure& gamma, std::size_t guard = kDefaultEnumerationGuard);

}  // namespace mcss

#endif  // MCSS_ACCESS_H_
