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

#ifndef MCSS_RUNTIME_H_
#define MCSS_RUNTIME_H_

#include <map>
#include <random>
#include <vector>

#include "mcss/access.h"
#include "mcss/ffield.h"
#include "mcss/scheme.h"

namespace mcss {

// M_1..M_m, in order.
using MessageVector = FieldVector;

struct DealtShare {
  ShareId id;
  FieldElement value;

  friend bool operator==(const DealtShare&, const DealtShare&) = default;
};

// participant -> that participant's shares in clause order.
class ShareBundle {
 public:
  void add(Participant p, DealtShare share);

  const std::map<Participant, std::vector<DealtShare>>& assignments() const {
    return assignments_;
  }
  ParticipantSet participants() const;
  // Keeps only the members of `subset`.
  ShareBundle restricted_to(const ParticipantSet& subset) const;
  // Throws kMissingShare.
  const FieldElement& value(const ShareId& id) const;
  bool has(const ShareId& id) const;

  friend bool operator==(const ShareBundle&, const ShareBundle&) = default;

 private:
  std::map<Participant, std::vector<DealtShare>> assignments_;
};

// Samples R_1..R_k uniformly (in random-variable order) and evaluates every
// share's form. Throws kLengthMismatch if |messages| != m.
ShareBundle deal(const SchemePlan& plan, const MessageVector& messages,
                 std::mt19937_64& rng);

// Same, with the free randoms supplied by the caller.
ShareBundle deal_with_randoms(const SchemePlan& plan, const MessageVector& messages,
                              const FieldVector& randoms);

// Solves the held shares' forms for the message coordinates. `shares` must
// contain every share of every member of `subset` (extra entries are
// ignored). Throws kNotAuthorized, kMissingShare, kInconsistentShares, or
// kUnderdeterminedMessage; the last is unreachable for plans produced by
// apply_replacement.
MessageVector reconstruct(const SchemePlan& plan, const ParticipantSet& subset,
                          const ShareBundle& shares);

}  // namespace mcss

#endif  // MCSS_RUNTIME_H_
