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

// Machine checks for decodability and individual security of a plan.
//
// Two independent routes are provided. The rank route stacks the linear
// forms held by a subset U into a matrix A (t rows) and declares message l
// secure when both A and A_l (A with the M_l column zeroed) have rank t:
// then S_U is uniform over F_q^t with or without M_l, so I(M_l; S_U) = 0.
// The oracle route enumerates every assignment of (M, R), tabulates the
// induced distributions and decides independence by exact count equality.

#ifndef MCSS_VERIFY_H_
#define MCSS_VERIFY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcss/access.h"
#include "mcss/ffield.h"
#include "mcss/scheme.h"

namespace mcss {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

// Shares held by a subset as rows over the plan's variable basis. Rows are
// participant-major (P_j ascending, then clause); columns are M_1..M_m
// followed by the free randoms.
struct RepMatrix {
  FieldMatrix matrix;
  ParticipantSet subset;
  std::vector<ShareId> row_labels;
  std::vector<std::string> column_labels;
};

RepMatrix representative_matrix(const SchemePlan& plan, const ParticipantSet& subset);

struct SecurityVerdict {
  ParticipantSet subset;
  int message = 0;
  std::size_t shares = 0;    // t
  RankWitness full;          // witness for rank(A)
  RankWitness conditioned;   // witness for rank(A_l)
  bool secure = false;       // both ranks equal t
};

// Throws kBadMessageIndex unless 1 <= message <= m.
SecurityVerdict check_security_rank(const SchemePlan& plan, const ParticipantSet& subset,
                                    int message);

enum class SubsetScope {
  // Maximal unauthorized subsets only; smaller ones hold a row subset of a
  // full-rank stack and are covered by monotonicity.
  kMaximal,
  // Every unauthorized subset, for cross-validation.
  kAllUnauthorized,
};

struct SecurityReport {
  SubsetScope scope = SubsetScope::kMaximal;
  std::vector<SecurityVerdict> verdicts;  // subset-major, then message
  bool secure = true;
};

// Throws kTooManyParticipants past the enumeration guard.
SecurityReport check_security_all(const SchemePlan& plan,
                                  SubsetScope scope = SubsetScope::kMaximal,
                                  std::size_t guard = kDefaultEnumerationGuard);

struct DecodabilityEntry {
  std::size_t clause = 0;
  int message = 0;
  bool decodable = false;
};

struct DecodabilityReport {
  std::vector<DecodabilityEntry> entries;  // clause-major, then message
  bool decodable = true;
};

// For each basis clause A_i and each l: is e_{M_l} in the row space of the
// forms held by A_i?
DecodabilityReport check_decodability(const SchemePlan& plan);

// An entropy in bits, with the exact integer multiple of log2(q) whenever
// it is one (every distribution met here is uniform on q^d outcomes).
struct EntropyValue {
  std::optional<long long> log_q_multiple;
  double bits = 0.0;
};

// "4*log2(q)" or the bit value when no exact multiple exists.
std::string to_string(const EntropyValue& h);

struct DistributionSummary {
  std::uint64_t support = 0;      // outcomes with nonzero count
  std::uint64_t min_count = 0;
  std::uint64_t max_count = 0;
  bool uniform() const { return min_count == max_count; }
};

struct MessageEntropy {
  int message = 0;
  EntropyValue shares_given_message;  // H(S_U | M_l)
  EntropyValue message_given_shares;  // H(M_l | S_U)
  EntropyValue mutual_information;    // I(M_l; S_U)
  // Joint counts equal the product of the marginals exactly.
  bool independent = false;
};

struct EntropyReport {
  ParticipantSet subset;
  std::uint64_t assignments = 0;      // q^(m+k)
  std::size_t shares = 0;             // t
  DistributionSummary share_distribution;
  EntropyValue shares_entropy;        // H(S_U)
  std::vector<MessageEntropy> messages;
};

// Exhaustive enumeration over all q^(m+k) equally likely assignments.
// Throws kBudgetExceeded when q^(m+k) > budget.
EntropyReport entropy_oracle(const SchemePlan& plan, const ParticipantSet& subset,
                             std::uint64_t budget = kDefaultOracleBudget);

// q^(m+k), saturating at UINT64_MAX.
std::uint64_t oracle_assignments(const SchemePlan& plan);

struct ResidualEntropy {
  std::size_t clause = 0;
  EntropyValue entropy;  // H(M_l | S_{A_i})
};

struct Theorem2Report {
  SchemePlan forced_plan;
  ShareId share;
  int message = 0;  // index of the forced message
  DecodabilityReport decodability;
  std::vector<std::size_t> failing_clauses;  // clauses that cannot recover it
  bool oracle_run = false;
  std::vector<ResidualEntropy> residuals;    // one per failing clause
  // Some clause fails and, when the oracle ran, some failing clause is left
  // with exactly one field symbol of uncertainty.
  bool confirmed = false;
};

// Force-replaces a non-replaceable share and measures the decoding loss.
// Throws kShareIsReplaceable when the share passes the replaceability test.
Theorem2Report theorem2_harness(const SchemePlan& plan, const ShareId& share,
                                Coefficients coefficients,
                                std::uint64_t budget = kDefaultOracleBudget);

}  // namespace mcss

#endif  // MCSS_VERIFY_H_
