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

#include "mcss/access.h"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

#include "mcss/error.h"

namespace mcss {
namespace {

std::vector<Participant> normalize(std::vector<Participant> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void check_guard(const AccessStructure& gamma, std::size_t guard) {
  const auto n = static_cast<std::size_t>(gamma.participants());
  if (n > guard || n > 62) {
    throw Error(ErrorCode::kTooManyParticipants,
                std::to_string(n) + " participants exceed the subset "
                "enumeration guard of " + std::to_string(std::min<std::size_t>(guard, 62)));
  }
}

std::uint64_t to_mask(const ParticipantSet& s) {
  std::uint64_t mask = 0;
  for (Participant p : s) mask |= std::uint64_t{1} << (p - 1);
  return mask;
}

// Authorization of every mask in [0, 2^n), by clause containment.
std::vector<bool> authorization_table(const AccessStructure& gamma) {
  std::vector<std::uint64_t> clauses;
  for (const auto& c : gamma.basis()) clauses.push_back(to_mask(c));
  const std::uint64_t total = std::uint64_t{1} << gamma.participants();
  std::vector<bool> table(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    table[mask] = std::any_of(clauses.begin(), clauses.end(),
                              [mask](std::uint64_t c) { return (c & mask) == c; });
  }
  return table;
}

class DnfParser {
 public:
  explicit DnfParser(std::string_view text) : text_(text) {}

  std::vector<ParticipantSet> parse() {
    std::vector<ParticipantSet> clauses;
    skip_space();
    if (at_end()) fail("empty formula");
    clauses.push_back(clause());
    skip_space();
    while (!at_end()) {
      expect('|');
      clauses.push_back(clause());
      skip_space();
    }
    return clauses;
  }

 private:
  ParticipantSet clause() {
    skip_space();
    const bool parenthesized = peek() == '(';
    if (parenthesized) ++pos_;
    std::vector<Participant> members{literal()};
    skip_space();
    while (peek() == '&') {
      ++pos_;
      members.push_back(literal());
      skip_space();
    }
    if (parenthesized) expect(')');
    ParticipantSet out(std::move(members));
    if (out.size() == 1) {
      throw Error(ErrorCode::kSingletonClause,
                  "clause (P" + std::to_string(*out.begin()) +
                      ") authorizes a single participant, who would then "
                      "hold the secret itself; every authorized set needs at "
                      "least two participants");
    }
    return out;
  }

  Participant literal() {
    skip_space();
    const char c = peek();
    if (c == '!' || c == '~' || c == '-' ||
        text_.substr(pos_).starts_with("\xC2\xAC")) {
      throw Error(ErrorCode::kNegationNotAllowed,
                  "negated literal at offset " + std::to_string(pos_) +
                      "; access structures must be monotone");
    }
    if (c != 'P') fail("expected participant literal P<k>");
    ++pos_;
    const std::size_t start = pos_;
    long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > std::numeric_limits<int>::max()) fail("participant index too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected digits after P");
    if (value < 1) fail("participant indices start at 1");
    return static_cast<Participant>(value);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kSyntaxError,
                what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParticipantSet::ParticipantSet(std::initializer_list<Participant> members)
    : members_(normalize(std::vector<Participant>(members))) {}

ParticipantSet::ParticipantSet(std::vector<Participant> members)
    : members_(normalize(std::move(members))) {}

ParticipantSet ParticipantSet::from_mask(std::uint64_t mask) {
  ParticipantSet s;
  for (int i = 0; i < 64; ++i) {
    if (mask >> i & 1) s.members_.push_back(i + 1);
  }
  return s;
}

bool ParticipantSet::contains(Participant p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

bool ParticipantSet::is_subset_of(const ParticipantSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

ParticipantSet ParticipantSet::without(Participant p) const {
  ParticipantSet s = *this;
  std::erase(s.members_, p);
  return s;
}

ParticipantSet ParticipantSet::with(Participant p) const {
  auto v = members_;
  v.push_back(p);
  return ParticipantSet(std::move(v));
}

std::string to_string(const ParticipantSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.members()[i]);
  }
  return out + "}";
}

AccessStructure::AccessStructure(int n, std::vector<ParticipantSet> basis)
    : n_(n), basis_(std::move(basis)) {}

AccessStructure AccessStructure::create(int participants,
                                        std::vector<ParticipantSet> basis) {
  if (participants < 1) {
    throw Error(ErrorCode::kOutOfRangeParticipant,
                "participant count must be positive");
  }
  if (basis.empty()) {
    throw Error(ErrorCode::kEmptyClause, "basis has no clauses");
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& clause = basis[i];
    const std::string label = "A_" + std::to_string(i + 1) + " = " + to_string(clause);
    if (clause.empty()) throw Error(ErrorCode::kEmptyClause, label + " is empty");
    if (clause.size() == 1) {
      throw Error(ErrorCode::kSingletonClause,
                  label + " authorizes a single participant; every "
                  "authorized set needs at least two participants");
    }
    if (clause.members().front() < 1 || clause.members().back() > participants) {
      throw Error(ErrorCode::kOutOfRangeParticipant,
                  label + " names a participant outside [1, " +
                      std::to_string(participants) + "]");
    }
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i != j && basis[i].is_subset_of(basis[j])) {
        throw Error(ErrorCode::kNotAntichain,
                    "A_" + std::to_string(i + 1) + " = " + to_string(basis[i]) +
                        " is contained in A_" + std::to_string(j + 1) + " = " +
                        to_string(basis[j]) + "; a basis lists minimal sets only");
      }
    }
  }
  AccessStructure gamma(participants, std::move(basis));
  for (Participant p = 1; p <= participants; ++p) {
    const bool used = std::any_of(gamma.basis_.begin(), gamma.basis_.end(),
                                  [p](const ParticipantSet& c) { return c.contains(p); });
    if (!used) {
      gamma.warnings_.push_back("participant P" + std::to_string(p) +
                                " appears in no clause and receives no shares");
    }
  }
  return gamma;
}

bool AccessStructure::is_authorized(const ParticipantSet& subset) const {
  if (!subset.empty() &&
      (subset.members().front() < 1 || subset.members().back() > n_)) {
    throw Error(ErrorCode::kOutOfRangeParticipant,
                to_string(subset) + " is not within [1, " + std::to_string(n_) + "]");
  }
  return std::any_of(basis_.begin(), basis_.end(), [&](const ParticipantSet& c) {
    return c.is_subset_of(subset);
  });
}

std::string AccessStructure::to_formula() const {
  std::string out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += '|';
    out += '(';
    bool first = true;
    for (Participant p : basis_[i]) {
      if (!first) out += '&';
      first = false;
      out += 'P' + std::to_string(p);
    }
    out += ')';
  }
  return out;
}

AccessStructure parse_dnf(std::string_view formula, int participants) {
  auto clauses = DnfParser(formula).parse();
  // Absorption: drop any clause that contains another clause (or duplicates
  // an earlier one).
  std::vector<ParticipantSet> minimal;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    bool absorbed = false;
    for (std::size_t j = 0; j < clauses.size() && !absorbed; ++j) {
      if (i == j || !clauses[j].is_subset_of(clauses[i])) continue;
      absorbed = clauses[j] != clauses[i] || j < i;
    }
    if (!absorbed) minimal.push_back(clauses[i]);
  }
  int max_index = 0;
  for (const auto& c : minimal) max_index = std::max(max_index, c.members().back());
  return AccessStructure::create(participants > 0 ? participants : max_index,
                                 std::move(minimal));
}

std::vector<ParticipantSet> maximal_unauthorized(const AccessStructure& gamma,
                                                 std::size_t guard) {
  check_guard(gamma, guard);
  const auto table = authorization_table(gamma);
  const int n = gamma.participants();
  std::vector<ParticipantSet> out;
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    if (table[mask]) continue;
    bool maximal = true;
    for (int p = 0; p < n && maximal; ++p) {
      const std::uint64_t bit = std::uint64_t{1} << p;
      if (!(mask & bit) && !table[mask | bit]) maximal = false;
    }
    if (maximal) out.push_back(ParticipantSet::from_mask(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ParticipantSet> unauthorized_subsets(const AccessStructure& gamma,
                                                 std::size_t guard) {
  check_guard(gamma, guard);
  const auto table = authorization_table(gamma);
  std::vector<ParticipantSet> out;
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    if (!table[mask]) out.push_back(ParticipantSet::from_mask(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ParticipantSet> authorized_subsets(const AccessStructure& gamma,
                                               std::size_t guard) {
  check_guard(gamma, guard);
  const auto table = authorization_table(gamma);
  std::vector<ParticipantSet> out;
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    if (table[mask]) out.push_back(ParticipantSet::from_mask(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mcss
