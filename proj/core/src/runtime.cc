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

#include "mcss/runtime.h"

#include <algorithm>
#include <string>

#include "mcss/error.h"

namespace mcss {

void ShareBundle::add(Participant p, DealtShare share) {
  auto& list = assignments_[p];
  auto pos = std::lower_bound(list.begin(), list.end(), share.id,
                              [](const DealtShare& s, const ShareId& id) { return s.id < id; });
  list.insert(pos, std::move(share));
}

ParticipantSet ShareBundle::participants() const {
  std::vector<Participant> out;
  for (const auto& [p, _] : assignments_) out.push_back(p);
  return ParticipantSet(std::move(out));
}

ShareBundle ShareBundle::restricted_to(const ParticipantSet& subset) const {
  ShareBundle out;
  for (const auto& [p, list] : assignments_) {
    if (subset.contains(p)) out.assignments_[p] = list;
  }
  return out;
}

bool ShareBundle::has(const ShareId& id) const {
  auto it = assignments_.find(id.participant);
  if (it == assignments_.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(),
                     [&](const DealtShare& s) { return s.id == id; });
}

const FieldElement& ShareBundle::value(const ShareId& id) const {
  auto it = assignments_.find(id.participant);
  if (it != assignments_.end()) {
    for (const auto& s : it->second) {
      if (s.id == id) return s.value;
    }
  }
  throw Error(ErrorCode::kMissingShare, "no value for " + to_string(id));
}

ShareBundle deal_with_randoms(const SchemePlan& plan, const MessageVector& messages,
                              const FieldVector& randoms) {
  if (messages.size() != static_cast<std::size_t>(plan.messages())) {
    throw Error(ErrorCode::kLengthMismatch,
                "plan has " + std::to_string(plan.messages()) + " messages, got " +
                    std::to_string(messages.size()));
  }
  if (randoms.size() != plan.randoms()) {
    throw Error(ErrorCode::kLengthMismatch,
                "plan has " + std::to_string(plan.randoms()) + " free randoms, got " +
                    std::to_string(randoms.size()));
  }
  FieldVector assignment;
  assignment.reserve(plan.variable_count());
  for (const auto& v : messages) {
    if (!(v.field() == plan.field())) {
      throw Error(ErrorCode::kFieldMismatch, "message is not in the plan's field");
    }
    assignment.push_back(v);
  }
  assignment.insert(assignment.end(), randoms.begin(), randoms.end());

  ShareBundle bundle;
  for (const auto& e : plan.shares()) {
    bundle.add(e.id.participant, {e.id, e.form.evaluate(assignment)});
  }
  return bundle;
}

ShareBundle deal(const SchemePlan& plan, const MessageVector& messages,
                 std::mt19937_64& rng) {
  if (messages.size() != static_cast<std::size_t>(plan.messages())) {
    throw Error(ErrorCode::kLengthMismatch,
                "plan has " + std::to_string(plan.messages()) + " messages, got " +
                    std::to_string(messages.size()));
  }
  FieldVector randoms;
  randoms.reserve(plan.randoms());
  for (std::size_t i = 0; i < plan.randoms(); ++i) {
    randoms.push_back(plan.field().sample(rng));
  }
  return deal_with_randoms(plan, messages, randoms);
}

MessageVector reconstruct(const SchemePlan& plan, const ParticipantSet& subset,
                          const ShareBundle& shares) {
  if (!plan.access().is_authorized(subset)) {
    throw Error(ErrorCode::kNotAuthorized,
                to_string(subset) + " is not authorized under " +
                    plan.access().to_formula());
  }
  const PrimeField f = plan.field();
  FieldMatrix system(f, 0, plan.variable_count());
  FieldVector values;
  for (const auto& id : plan.held_shares(subset)) {
    system.append_row(plan.share(id).form.coefficients());
    const FieldElement& v = shares.value(id);
    if (!(v.field() == f)) {
      throw Error(ErrorCode::kFieldMismatch, to_string(id) + " is not in the plan's field");
    }
    values.push_back(v);
  }

  SolutionSpace solution{};
  try {
    solution = solve(system, values);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInconsistent) throw;
    throw Error(ErrorCode::kInconsistentShares,
                "share values held by " + to_string(subset) +
                    " contradict the plan; at least one share was altered");
  }

  MessageVector out;
  for (int l = 1; l <= plan.messages(); ++l) {
    const std::size_t col = plan.message_column(l);
    for (const auto& direction : solution.nullspace) {
      if (!direction[col].is_zero()) {
        throw Error(ErrorCode::kUnderdeterminedMessage,
                    "M" + std::to_string(l) + " is not determined by the shares of " +
                        to_string(subset));
      }
    }
    out.push_back(solution.particular[col]);
  }
  return out;
}

}  // namespace mcss
