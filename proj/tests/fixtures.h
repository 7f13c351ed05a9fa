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

// Shared fixtures plus brute-force oracles that deliberately avoid the
// library's elimination code.

#ifndef MCSS_TESTS_FIXTURES_H_
#define MCSS_TESTS_FIXTURES_H_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "mcss/access.h"
#include "mcss/error.h"
#include "mcss/ffield.h"
#include "mcss/scheme.h"

namespace mcss::testing {

// The code of the mcss::Error thrown by fn, or nullopt if none was thrown.
template <class F>
std::optional<ErrorCode> error_code_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline constexpr const char* kExampleFormula = "(P1&P2&P4)|(P1&P3&P4)|(P2&P3)";

inline AccessStructure example_access() { return parse_dnf(kExampleFormula); }

// M_2 -> S_2^{A_1}, M_3 -> S_2^{A_3}, M_4 -> S_3^{A_2}.
inline ReplacementOptions example_options() {
  ReplacementOptions o;
  o.message_map[{1, 2}] = 2;
  o.message_map[{3, 2}] = 3;
  o.message_map[{2, 3}] = 4;
  return o;
}

inline SchemePlan example_single(std::uint64_t q = 5) {
  return build_single_secret(example_access(), PrimeField::create(q));
}

inline SchemePlan example_multi(std::uint64_t q = 5) {
  return apply_replacement(example_single(q), example_options());
}

// Random antichain of clauses (each of size >= 2) over n <= max_n
// participants with 1..max_r clauses.
inline AccessStructure random_access(std::mt19937_64& rng, int max_n = 5,
                                     int max_r = 4) {
  std::uniform_int_distribution<int> n_dist(2, max_n);
  const int n = n_dist(rng);
  std::uniform_int_distribution<int> r_dist(1, max_r);
  const int r = r_dist(rng);
  std::uniform_int_distribution<std::uint64_t> mask_dist(1, (std::uint64_t{1} << n) - 1);
  std::vector<ParticipantSet> basis;
  for (int attempt = 0; attempt < 200 && static_cast<int>(basis.size()) < r; ++attempt) {
    const auto candidate = ParticipantSet::from_mask(mask_dist(rng));
    if (candidate.size() < 2) continue;
    const bool comparable = std::any_of(basis.begin(), basis.end(), [&](const auto& c) {
      return c.is_subset_of(candidate) || candidate.is_subset_of(c);
    });
    if (!comparable) basis.push_back(candidate);
  }
  return AccessStructure::create(n, basis);
}

inline std::uint64_t random_prime(std::mt19937_64& rng) {
  static constexpr std::uint64_t kPrimes[] = {3, 5, 7};
  return kPrimes[std::uniform_int_distribution<int>(0, 2)(rng)];
}

inline Coefficients random_coefficients(std::mt19937_64& rng, std::uint64_t q) {
  return {std::uniform_int_distribution<std::uint64_t>(2, q - 1)(rng),
          std::uniform_int_distribution<std::uint64_t>(1, q - 1)(rng)};
}

// Authorization by direct definition: some clause contained in the subset.
inline bool brute_authorized(const std::vector<std::set<int>>& basis,
                             const std::set<int>& subset) {
  for (const auto& clause : basis) {
    if (std::includes(subset.begin(), subset.end(), clause.begin(), clause.end())) {
      return true;
    }
  }
  return false;
}

// Rank by counting the row space: |span| = q^rank. Exponential in rows.
inline std::size_t brute_rank(const FieldMatrix& m) {
  const std::uint64_t q = m.field().modulus();
  std::set<std::vector<std::uint64_t>> span;
  std::vector<std::uint64_t> coeffs(m.rows(), 0);
  while (true) {
    std::vector<std::uint64_t> v(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) v[c] = (v[c] + coeffs[r] * m.raw(r, c)) % q;
    }
    span.insert(v);
    std::size_t i = 0;
    while (i < coeffs.size() && ++coeffs[i] == q) coeffs[i++] = 0;
    if (i == coeffs.size()) break;
  }
  std::size_t rank = 0;
  for (std::uint64_t size = 1; size < span.size(); size *= q) ++rank;
  return rank;
}

// Definition of replaceability expanded over every clause.
inline bool brute_replaceable(const AccessStructure& a, const ShareId& id) {
  for (std::size_t k = 1; k <= a.clause_count(); ++k) {
    const auto& other = a.clause(k).members();
    bool owner_in = std::find(other.begin(), other.end(), id.participant) != other.end();
    bool rest_in = true;
    for (Participant p : a.clause(id.clause).members()) {
      if (p == id.participant) continue;
      if (std::find(other.begin(), other.end(), p) == other.end()) rest_in = false;
    }
    if (!owner_in && !rest_in) return false;
  }
  return true;
}

}  // namespace mcss::testing

#endif  // MCSS_TESTS_FIXTURES_H_
