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

#include "mcss/verify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>

#include "mcss/error.h"

namespace mcss {
namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

// q^e, or nullopt once it would exceed `cap`.
std::optional<std::uint64_t> bounded_pow(std::uint64_t q, std::size_t e, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (v > cap / q) return std::nullopt;
    v *= q;
  }
  return v;
}

// Outcome counts keyed by a 64-bit code; dense when the code space is small.
class Histogram {
 public:
  explicit Histogram(std::optional<std::uint64_t> code_space) {
    if (code_space && *code_space <= kDenseLimit) dense_.assign(*code_space, 0);
  }

  void add(std::uint64_t code) {
    if (!dense_.empty()) {
      ++dense_[code];
    } else {
      ++sparse_[code];
    }
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    if (!dense_.empty()) {
      for (std::uint64_t c = 0; c < dense_.size(); ++c) {
        if (dense_[c]) fn(c, static_cast<std::uint64_t>(dense_[c]));
      }
    } else {
      for (const auto& [c, n] : sparse_) fn(c, n);
    }
  }

  std::uint64_t count(std::uint64_t code) const {
    if (!dense_.empty()) return code < dense_.size() ? dense_[code] : 0;
    auto it = sparse_.find(code);
    return it == sparse_.end() ? 0 : it->second;
  }

  DistributionSummary summary() const {
    DistributionSummary s;
    s.min_count = std::numeric_limits<std::uint64_t>::max();
    for_each([&](std::uint64_t, std::uint64_t n) {
      ++s.support;
      s.min_count = std::min(s.min_count, n);
      s.max_count = std::max(s.max_count, n);
    });
    if (s.support == 0) s.min_count = 0;
    return s;
  }

  // Shannon entropy of count/total, with the exact log_q multiple when the
  // distribution is uniform on a power of q.
  EntropyValue entropy(std::uint64_t total, std::uint64_t q) const {
    const auto s = summary();
    EntropyValue h;
    if (s.uniform()) {
      long long d = 0;
      std::uint64_t v = 1;
      while (v < s.support && v <= std::numeric_limits<std::uint64_t>::max() / q) {
        v *= q;
        ++d;
      }
      if (v == s.support) {
        h.log_q_multiple = d;
        h.bits = static_cast<double>(d) * std::log2(static_cast<double>(q));
        return h;
      }
    }
    long double acc = 0;
    for_each([&](std::uint64_t, std::uint64_t n) {
      acc += static_cast<long double>(n) * std::log2(static_cast<long double>(n));
    });
    h.bits = static_cast<double>(std::log2(static_cast<long double>(total)) -
                                 acc / static_cast<long double>(total));
    return h;
  }

 private:
  std::vector<std::uint32_t> dense_;
  std::unordered_map<std::uint64_t, std::uint64_t> sparse_;
};

EntropyValue difference(const EntropyValue& a, const EntropyValue& b, double q) {
  EntropyValue out;
  if (a.log_q_multiple && b.log_q_multiple) {
    out.log_q_multiple = *a.log_q_multiple - *b.log_q_multiple;
    out.bits = static_cast<double>(*out.log_q_multiple) * std::log2(q);
  } else {
    out.bits = a.bits - b.bits;
  }
  return out;
}

}  // namespace

RepMatrix representative_matrix(const SchemePlan& plan, const ParticipantSet& subset) {
  RepMatrix rep{FieldMatrix(plan.field(), 0, plan.variable_count()), subset,
                plan.held_shares(subset), plan.variable_labels()};
  for (const auto& id : rep.row_labels) {
    rep.matrix.append_row(plan.share(id).form.coefficients());
  }
  return rep;
}

SecurityVerdict check_security_rank(const SchemePlan& plan, const ParticipantSet& subset,
                                    int message) {
  const std::size_t column = plan.message_column(message);
  const RepMatrix rep = representative_matrix(plan, subset);
  SecurityVerdict v;
  v.subset = subset;
  v.message = message;
  v.shares = rep.matrix.rows();
  v.full = rank_witness(rep.matrix);
  v.conditioned = rank_witness(rep.matrix.with_column_zeroed(column));
  v.secure = v.full.rank == v.shares && v.conditioned.rank == v.shares;
  return v;
}

SecurityReport check_security_all(const SchemePlan& plan, SubsetScope scope,
                                  std::size_t guard) {
  const auto subsets = scope == SubsetScope::kMaximal
                           ? maximal_unauthorized(plan.access(), guard)
                           : unauthorized_subsets(plan.access(), guard);
  SecurityReport report;
  report.scope = scope;
  for (const auto& u : subsets) {
    for (int l = 1; l <= plan.messages(); ++l) {
      report.verdicts.push_back(check_security_rank(plan, u, l));
      report.secure = report.secure && report.verdicts.back().secure;
    }
  }
  return report;
}

DecodabilityReport check_decodability(const SchemePlan& plan) {
  DecodabilityReport report;
  const PrimeField f = plan.field();
  for (std::size_t i = 1; i <= plan.access().clause_count(); ++i) {
    const FieldMatrix held = representative_matrix(plan, plan.access().clause(i)).matrix;
    const std::size_t base_rank = rank(held);
    for (int l = 1; l <= plan.messages(); ++l) {
      FieldMatrix stacked = held;
      stacked.append_row(
          LinForm::unit(f, plan.variable_count(), plan.message_column(l)).coefficients());
      const bool ok = rank(stacked) == base_rank;
      report.entries.push_back({i, l, ok});
      report.decodable = report.decodable && ok;
    }
  }
  return report;
}

std::string to_string(const EntropyValue& h) {
  std::ostringstream os;
  if (h.log_q_multiple) {
    os << *h.log_q_multiple << "*log2(q)";
  } else {
    os << h.bits << " bits";
  }
  return os.str();
}

std::uint64_t oracle_assignments(const SchemePlan& plan) {
  return bounded_pow(plan.field().modulus(), plan.variable_count(),
                     std::numeric_limits<std::uint64_t>::max())
      .value_or(std::numeric_limits<std::uint64_t>::max());
}

EntropyReport entropy_oracle(const SchemePlan& plan, const ParticipantSet& subset,
                             std::uint64_t budget) {
  const std::uint64_t q = plan.field().modulus();
  const std::size_t vars = plan.variable_count();
  const auto total = bounded_pow(q, vars, budget);
  if (!total) {
    throw Error(ErrorCode::kBudgetExceeded,
                "q^(m+k) = " + std::to_string(q) + "^" + std::to_string(vars) +
                    " assignments exceed the enumeration budget of " +
                    std::to_string(budget));
  }
  const PrimeField f = plan.field();
  const auto held = plan.held_shares(subset);
  const std::size_t t = held.size();
  const auto messages = static_cast<std::size_t>(plan.messages());

  // columns[j][r]: coefficient of variable j in the r-th held share.
  std::vector<std::vector<std::uint64_t>> columns(vars, std::vector<std::uint64_t>(t));
  for (std::size_t r = 0; r < t; ++r) {
    const auto& form = plan.share(held[r]).form;
    for (std::size_t j = 0; j < vars; ++j) columns[j][r] = form[j].value();
  }

  // Tuples are coded in base q when that fits; otherwise interned.
  const auto joint_space =
      bounded_pow(q, t + 1, std::numeric_limits<std::uint64_t>::max() / 2);
  const bool direct = joint_space.has_value();
  std::unordered_map<std::string, std::uint64_t> interned;
  auto code_of = [&](const std::vector<std::uint64_t>& tuple) -> std::uint64_t {
    if (direct) {
      std::uint64_t code = 0;
      for (std::size_t r = t; r-- > 0;) code = code * q + tuple[r];
      return code;
    }
    std::string key(reinterpret_cast<const char*>(tuple.data()),
                    tuple.size() * sizeof(std::uint64_t));
    return interned.try_emplace(std::move(key), interned.size()).first->second;
  };

  const std::optional<std::uint64_t> tuple_space =
      direct ? std::optional<std::uint64_t>(*joint_space / q) : std::nullopt;
  Histogram shares_hist(tuple_space);
  std::vector<Histogram> joint_hist(messages, Histogram(joint_space));
  std::vector<Histogram> message_hist(messages, Histogram(q));

  // Odometer over assignments. Stepping digit j by one (including the wrap
  // from q-1 to 0) adds column j to the share tuple mod q.
  std::vector<std::uint64_t> digits(vars, 0);
  std::vector<std::uint64_t> tuple(t, 0);
  for (std::uint64_t step = 0; step < *total; ++step) {
    const std::uint64_t code = code_of(tuple);
    shares_hist.add(code);
    for (std::size_t l = 0; l < messages; ++l) {
      joint_hist[l].add(code * q + digits[l]);
      message_hist[l].add(digits[l]);
    }
    for (std::size_t j = 0; j < vars; ++j) {
      for (std::size_t r = 0; r < t; ++r) tuple[r] = f.add(tuple[r], columns[j][r]);
      if (++digits[j] < q) break;
      digits[j] = 0;
    }
  }

  EntropyReport report;
  report.subset = subset;
  report.assignments = *total;
  report.shares = t;
  report.share_distribution = shares_hist.summary();
  report.shares_entropy = shares_hist.entropy(*total, q);
  const double qd = static_cast<double>(q);
  for (std::size_t l = 0; l < messages; ++l) {
    MessageEntropy me;
    me.message = static_cast<int>(l + 1);
    const EntropyValue h_joint = joint_hist[l].entropy(*total, q);
    const EntropyValue h_message = message_hist[l].entropy(*total, q);
    me.shares_given_message = difference(h_joint, h_message, qd);
    me.message_given_shares = difference(h_joint, report.shares_entropy, qd);
    me.mutual_information = difference(report.shares_entropy, me.shares_given_message, qd);

    // Independence: count(s, v) * N == count(s) * count(v) for all s, v, and
    // the joint support is the full product of the marginal supports.
    const auto joint_summary = joint_hist[l].summary();
    const auto message_summary = message_hist[l].summary();
    bool independent =
        joint_summary.support == report.share_distribution.support * message_summary.support;
    joint_hist[l].for_each([&](std::uint64_t key, std::uint64_t n) {
      if (!independent) return;
      const auto lhs = static_cast<uint128>(n) * *total;
      const auto rhs = static_cast<uint128>(shares_hist.count(key / q)) *
                       message_hist[l].count(key % q);
      independent = lhs == rhs;
    });
    me.independent = independent;
    report.messages.push_back(me);
  }
  return report;
}

Theorem2Report theorem2_harness(const SchemePlan& plan, const ShareId& share,
                                Coefficients coefficients, std::uint64_t budget) {
  if (is_replaceable(plan.access(), share)) {
    throw Error(ErrorCode::kShareIsReplaceable,
                to_string(share) + " is replaceable; the harness needs a share that "
                "fails the replaceability test");
  }
  Theorem2Report report{force_replace(plan, share, coefficients), share, 0, {}, {},
                        false, {}, false};
  report.message = report.forced_plan.messages();
  report.decodability = check_decodability(report.forced_plan);
  for (const auto& e : report.decodability.entries) {
    if (e.message == report.message && !e.decodable) {
      report.failing_clauses.push_back(e.clause);
    }
  }
  report.confirmed = !report.failing_clauses.empty();
  if (report.confirmed && oracle_assignments(report.forced_plan) <= budget) {
    report.oracle_run = true;
    bool one_symbol = false;
    for (std::size_t clause : report.failing_clauses) {
      const auto oracle = entropy_oracle(report.forced_plan,
                                         plan.access().clause(clause), budget);
      const auto& residual =
          oracle.messages[static_cast<std::size_t>(report.message - 1)].message_given_shares;
      report.residuals.push_back({clause, residual});
      one_symbol = one_symbol || residual.log_q_multiple == 1;
    }
    report.confirmed = one_symbol;
  }
  return report;
}

}  // namespace mcss
