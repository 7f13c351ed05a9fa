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

#include "mcss/cli/commands.h"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "mcss/access.h"
#include "mcss/cli/documents.h"
#include "mcss/runtime.h"

namespace mcss::cli {
namespace {

[[noreturn]] void usage(const std::string& what) {
  throw Error(ErrorCode::kInvalidOption, what);
}

std::string read_input(const std::string& path, Io io) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(io.in), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) usage("cannot open '" + path + "' for reading");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, Io io) {
  if (path.empty() || path == "-") {
    io.out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) usage("cannot write '" + path + "'");
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    usage(what + " '" + s + "' is not a non-negative integer");
  }
  return v;
}

Coefficients parse_pair(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) usage("coefficients must be 'a,b', got '" + text + "'");
  return {parse_u64(parts[0], "a"), parse_u64(parts[1], "b")};
}

// "1,2", "{1,2}", "P1,P2" or "{P1, P2}"; empty text is the empty set.
ParticipantSet parse_subset(const std::string& text) {
  std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') usage("unbalanced braces in subset '" + text + "'");
    body = trim(std::string_view(body).substr(1, body.size() - 2));
  }
  std::vector<Participant> members;
  if (body.empty()) return {};
  for (auto item : split(body, ',')) {
    if (!item.empty() && (item.front() == 'P' || item.front() == 'p')) item.erase(0, 1);
    const auto v = parse_u64(item, "participant");
    if (v < 1 || v > 1'000'000) usage("participant index out of range in '" + text + "'");
    members.push_back(static_cast<Participant>(v));
  }
  return ParticipantSet(std::move(members));
}

AccessStructure load_structure(const StructureInput& s, Io io) {
  if (s.formula.empty() == s.basis_file.empty()) {
    usage("give exactly one of --formula or --basis");
  }
  if (!s.formula.empty()) return parse_dnf(s.formula, s.participants);
  const std::string text = trim(read_input(s.basis_file, io));
  if (text.empty() || (text.front() != '{' && text.front() != '[')) {
    return parse_dnf(text, s.participants);
  }
  const Json doc = parse_json(text);
  const Json* clauses = &doc;
  int n = s.participants;
  if (doc.is_object()) {
    if (!doc.contains("basis")) throw Error(ErrorCode::kMalformedDocument, "missing 'basis'");
    clauses = &doc.at("basis");
    if (doc.contains("participants") && n == 0) {
      if (!doc.at("participants").is_number_unsigned()) {
        throw Error(ErrorCode::kMalformedDocument, "'participants' must be an integer");
      }
      n = doc.at("participants").get<int>();
    }
  }
  if (!clauses->is_array()) throw Error(ErrorCode::kMalformedDocument, "basis must be an array");
  std::vector<ParticipantSet> basis;
  int largest = 0;
  for (const Json& clause : *clauses) {
    if (!clause.is_array()) throw Error(ErrorCode::kMalformedDocument, "clauses must be arrays");
    std::vector<Participant> members;
    for (const Json& p : clause) {
      if (!p.is_number_unsigned() || p.get<std::uint64_t>() > 1'000'000) {
        throw Error(ErrorCode::kMalformedDocument, "participants must be positive integers");
      }
      members.push_back(p.get<int>());
      largest = std::max(largest, members.back());
    }
    basis.push_back(ParticipantSet(std::move(members)));
  }
  return AccessStructure::create(n == 0 ? largest : n, std::move(basis));
}

void print_warnings(const AccessStructure& a, Io io) {
  for (const auto& w : a.warnings()) io.err << "warning: " << w << "\n";
}

SchemePlan load_plan(const std::string& path, Io io) {
  if (path.empty()) usage("--plan is required");
  return plan_from_json(parse_json(read_input(path, io)));
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : " ") + s;
  return out.empty() ? "(none)" : out;
}

std::vector<std::string> share_names(const std::vector<ShareId>& ids) {
  std::vector<std::string> out;
  for (const auto& id : ids) out.push_back(to_string(id));
  return out;
}

ReplacementOptions replacement_options(const BuildOptions& o) {
  ReplacementOptions r;
  r.tie_break = o.tie_break;
  for (const auto& f : o.fix) {
    const auto id = parse_share_id(f);
    if (!r.fixed.emplace(id.clause, id.participant).second) {
      usage("clause A" + std::to_string(id.clause) + " is pinned twice");
    }
  }
  for (const auto& c : o.coeff) {
    const auto eq = c.find('=');
    if (eq == std::string::npos) {
      r.default_coefficients = parse_pair(c);
    } else {
      r.coefficients[parse_share_id(trim(c.substr(0, eq)))] = parse_pair(c.substr(eq + 1));
    }
  }
  for (const auto& m : o.map) {
    const auto eq = m.find('=');
    if (eq == std::string::npos) usage("--map expects S<j>^A<i>=<l>, got '" + m + "'");
    const auto l = parse_u64(trim(m.substr(eq + 1)), "message index");
    if (l > 1'000'000) usage("message index out of range");
    r.message_map[parse_share_id(trim(m.substr(0, eq)))] = static_cast<int>(l);
  }
  return r;
}

template <class F>
int guarded(Io io, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    io.err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotAuthorized: return kExitNotAuthorized;
    case ErrorCode::kInconsistentShares: return kExitInconsistent;
    case ErrorCode::kBudgetExceeded: return kExitBudget;
    case ErrorCode::kUnderdeterminedMessage: return kExitVerificationFailed;
    default: return kExitValidation;
  }
}

int cmd_analyze(const AnalyzeOptions& o, Io io) {
  return guarded(io, [&] {
    const auto access = load_structure(o.structure, io);
    print_warnings(access, io);
    const auto field = PrimeField::create(o.q);
    const auto single = build_single_secret(access, field, o.tie_break);
    ReplacementOptions r;
    r.tie_break = o.tie_break;
    const auto multi = apply_replacement(single, r);

    std::vector<ShareId> replaced;
    for (const auto& s : multi.shares()) {
      if (s.kind == ShareKind::kReplaced) replaced.push_back(s.id);
    }
    std::vector<std::string> maximal;
    const bool enumerable = static_cast<std::size_t>(access.participants()) <= kDefaultEnumerationGuard;
    if (enumerable) {
      for (const auto& u : maximal_unauthorized(access)) maximal.push_back(to_string(u));
    }

    if (o.json) {
      Json doc;
      doc["format_version"] = kFormatVersion;
      doc["document"] = "analysis";
      doc["structure"] = access.to_formula();
      doc["participants"] = access.participants();
      doc["q"] = o.q;
      doc["maximal_unauthorized"] = enumerable ? Json(maximal) : Json(nullptr);
      doc["replaceable"] = share_names(replaceable_set(access));
      doc["fixed"] = share_names(select_fixed_shares(access, r));
      doc["replaced"] = share_names(replaced);
      doc["messages"] = multi.messages();
      doc["shares"] = multi.total_shares();
      doc["rate_single"] = to_string(rate(single));
      doc["rate_multi"] = to_string(rate(multi));
      io.out << pretty(doc);
    } else {
      io.out << "structure: " << access.to_formula() << "\n"
             << "participants: " << access.participants() << "\n"
             << "q: " << o.q << "\n"
             << "maximal unauthorized: "
             << (enumerable ? join(maximal) : std::string("(skipped, too many participants)"))
             << "\n"
             << "replaceable: " << join(share_names(replaceable_set(access))) << "\n"
             << "fixed: " << join(share_names(select_fixed_shares(access, r))) << "\n"
             << "replaced: " << join(share_names(replaced)) << "\n"
             << "messages: " << multi.messages() << "\n"
             << "shares: " << multi.total_shares() << "\n"
             << "rate single-secret: " << to_string(rate(single)) << "\n"
             << "rate multi-secret: " << to_string(rate(multi)) << "\n";
    }
    return kExitOk;
  });
}

int cmd_build(const BuildOptions& o, Io io) {
  return guarded(io, [&] {
    const auto access = load_structure(o.structure, io);
    print_warnings(access, io);
    const auto field = PrimeField::create(o.q);
    auto plan = build_single_secret(access, field, o.tie_break);
    if (o.single_secret) {
      if (!o.fix.empty() || !o.coeff.empty() || !o.map.empty()) {
        usage("--single-secret takes no replacement options");
      }
    } else {
      plan = apply_replacement(plan, replacement_options(o));
    }
    write_output(o.output, pretty(plan_to_json(plan)), io);
    return kExitOk;
  });
}

int cmd_deal(const DealOptions& o, Io io) {
  return guarded(io, [&] {
    const auto plan = load_plan(o.plan, io);
    MessageVector messages;
    if (!trim(o.messages).empty()) {
      for (const auto& m : split(o.messages, ',')) {
        messages.push_back(plan.field().from_residue(parse_u64(m, "message")));
      }
    }
    std::mt19937_64 rng(o.seed);
    const auto bundle = deal(plan, messages, rng);
    write_output(o.output, pretty(shares_to_json(plan, bundle)), io);
    return kExitOk;
  });
}

int cmd_reconstruct(const ReconstructOptions& o, Io io) {
  return guarded(io, [&] {
    if (o.plan == "-" && o.shares == "-") usage("plan and shares cannot both come from stdin");
    const auto plan = load_plan(o.plan, io);
    const auto bundle = shares_from_json(parse_json(read_input(o.shares, io)), plan);
    const auto subset = o.subset.empty() ? bundle.participants() : parse_subset(o.subset);
    const auto messages = reconstruct(plan, subset, bundle.restricted_to(subset));
    if (o.json) {
      write_output(o.output, pretty(messages_to_json(messages)), io);
    } else {
      std::ostringstream text;
      for (std::size_t l = 0; l < messages.size(); ++l) {
        text << "M" << l + 1 << " = " << messages[l].value() << "\n";
      }
      write_output(o.output, text.str(), io);
    }
    return kExitOk;
  });
}

int cmd_verify(const VerifyOptions& o, Io io) {
  return guarded(io, [&] {
    const auto plan = load_plan(o.plan, io);
    const auto scope = o.exhaustive ? SubsetScope::kAllUnauthorized : SubsetScope::kMaximal;
    const bool use_rank = o.mode != VerifyMode::kOracle;
    const bool use_oracle = o.mode != VerifyMode::kRank;
    if (use_oracle && oracle_assignments(plan) > o.budget) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "oracle needs q^(m+k) = " + std::to_string(oracle_assignments(plan)) +
                      " assignments, budget is " + std::to_string(o.budget));
    }

    Json doc;
    doc["format_version"] = kFormatVersion;
    doc["document"] = "verification-report";
    doc["plan_digest"] = plan_digest(plan);
    doc["mode"] = o.mode == VerifyMode::kRank ? "rank" : o.mode == VerifyMode::kOracle ? "oracle" : "both";
    doc["scope"] = o.exhaustive ? "all-unauthorized" : "maximal";
    doc["unsafe"] = plan.unsafe();

    const auto decodability = check_decodability(plan);
    doc["decodability"] = decodability_to_json(plan, decodability);
    bool pass = decodability.decodable;

    SecurityReport rank_report;
    if (use_rank) {
      rank_report = check_security_all(plan, scope);
      doc["rank"] = security_to_json(rank_report);
      pass = pass && rank_report.secure;
    }
    if (use_oracle) {
      const auto subsets = o.exhaustive ? unauthorized_subsets(plan.access())
                                        : maximal_unauthorized(plan.access());
      Json reports = Json::array();
      bool secure = true;
      bool agree = true;
      for (const auto& u : subsets) {
        const auto r = entropy_oracle(plan, u, o.budget);
        for (const auto& m : r.messages) {
          secure = secure && m.independent;
          if (use_rank) {
            const auto it = std::find_if(
                rank_report.verdicts.begin(), rank_report.verdicts.end(),
                [&](const SecurityVerdict& v) { return v.subset == u && v.message == m.message; });
            agree = agree && it != rank_report.verdicts.end() && it->secure == m.independent;
          }
        }
        reports.push_back(entropy_report_to_json(r));
      }
      bool oracle_decodable = true;
      for (std::size_t i = 1; i <= plan.access().clause_count(); ++i) {
        const auto r = entropy_oracle(plan, plan.access().clause(i), o.budget);
        for (const auto& m : r.messages) {
          oracle_decodable = oracle_decodable && m.message_given_shares.log_q_multiple == 0;
        }
      }
      doc["oracle"] = {{"secure", secure}, {"decodable", oracle_decodable},
                       {"subsets", std::move(reports)}};
      pass = pass && secure && oracle_decodable;
      if (use_rank) {
        doc["agreement"] = agree;
        pass = pass && agree;
      }
    }
    doc["pass"] = pass;
    write_output(o.output, pretty(doc), io);
    io.err << (pass ? "verification passed" : "verification FAILED") << "\n";
    return pass ? kExitOk : kExitVerificationFailed;
  });
}

int cmd_theorem2(const Theorem2Options& o, Io io) {
  return guarded(io, [&] {
    SchemePlan plan = [&] {
      if (!o.plan.empty()) return load_plan(o.plan, io);
      const auto access = load_structure(o.structure, io);
      return apply_replacement(build_single_secret(access, PrimeField::create(o.q)));
    }();
    const auto report =
        theorem2_harness(plan, parse_share_id(o.share), parse_pair(o.coeff), o.budget);
    if (!o.forced_plan.empty()) {
      write_output(o.forced_plan, pretty(plan_to_json(report.forced_plan)), io);
    }
    write_output(o.output, pretty(theorem2_to_json(report)), io);
    return report.confirmed ? kExitOk : kExitVerificationFailed;
  });
}

int run(const std::vector<std::string>& args, Io io) {
  CLI::App app{"Multi-secret sharing for general access structures", "mcss"};
  app.require_subcommand(1);

  auto add_structure = [](CLI::App* cmd, StructureInput& s) {
    cmd->add_option("--formula", s.formula, "DNF formula, e.g. (P1&P2)|(P2&P3)");
    cmd->add_option("--basis", s.basis_file, "file holding a formula or JSON basis ('-' = stdin)");
    cmd->add_option("--participants", s.participants, "participant count (default: largest index)");
  };
  const auto tie_breaks = CLI::IsMember({"highest-index", "lowest-index"});
  std::string tie_break_text = "highest-index";

  AnalyzeOptions analyze;
  auto* c_analyze = app.add_subcommand("analyze", "replaceable shares, fixed shares and rates");
  add_structure(c_analyze, analyze.structure);
  c_analyze->add_option("--q", analyze.q, "prime field size")->capture_default_str();
  c_analyze->add_option("--tie-break", tie_break_text, "fixed-share tie-break")
      ->check(tie_breaks);
  c_analyze->add_flag("--json", analyze.json, "JSON output");

  BuildOptions build;
  auto* c_build = app.add_subcommand("build", "build a scheme-plan document");
  add_structure(c_build, build.structure);
  c_build->add_option("--q", build.q, "prime field size")->capture_default_str();
  c_build->add_option("--tie-break", tie_break_text, "fixed-share tie-break")
      ->check(tie_breaks);
  c_build->add_option("--fix", build.fix, "pin the fixed share of a clause, e.g. S4^A1");
  c_build->add_option("--coeff", build.coeff, "a,b for every replacement or S2^A1=a,b");
  c_build->add_option("--map", build.map, "pin a message index, e.g. S2^A1=2");
  c_build->add_flag("--single-secret", build.single_secret, "skip the replacement step");
  c_build->add_option("--output", build.output, "output path ('-' = stdout)");

  DealOptions deal_opts;
  auto* c_deal = app.add_subcommand("deal", "deal shares for a plan");
  c_deal->add_option("--plan", deal_opts.plan, "plan document ('-' = stdin)")->capture_default_str();
  c_deal->add_option("--messages", deal_opts.messages, "M_1..M_m, comma separated")->required();
  c_deal->add_option("--seed", deal_opts.seed, "random seed")->capture_default_str();
  c_deal->add_option("--output", deal_opts.output, "output path ('-' = stdout)");

  ReconstructOptions rec;
  auto* c_rec = app.add_subcommand("reconstruct", "recover all messages from shares");
  c_rec->add_option("--plan", rec.plan, "plan document")->required();
  c_rec->add_option("--shares", rec.shares, "shares document ('-' = stdin)")->capture_default_str();
  c_rec->add_option("--subset", rec.subset, "participants pooling shares, e.g. 2,3");
  c_rec->add_flag("--json", rec.json, "JSON output");
  c_rec->add_option("--output", rec.output, "output path ('-' = stdout)");

  VerifyOptions ver;
  std::string mode_text = "rank";
  auto* c_ver = app.add_subcommand("verify", "check decodability and individual security");
  c_ver->add_option("--plan", ver.plan, "plan document ('-' = stdin)")->capture_default_str();
  c_ver->add_option("--mode", mode_text, "rank, oracle or both")
      ->check(CLI::IsMember({"rank", "oracle", "both"}))
      ->capture_default_str();
  c_ver->add_flag("--exhaustive", ver.exhaustive, "check every unauthorized subset");
  c_ver->add_option("--budget", ver.budget, "oracle assignment budget")->capture_default_str();
  c_ver->add_option("--output", ver.output, "output path ('-' = stdout)");

  Theorem2Options t2;
  auto* c_t2 = app.add_subcommand("theorem2-demo",
                                  "force-replace a non-replaceable share and measure the loss");
  c_t2->add_option("--plan", t2.plan, "plan document (default: build from --formula/--basis)");
  add_structure(c_t2, t2.structure);
  c_t2->add_option("--q", t2.q, "prime field size")->capture_default_str();
  c_t2->add_option("--share", t2.share, "share to force")->capture_default_str();
  c_t2->add_option("--coeff", t2.coeff, "a,b")->capture_default_str();
  c_t2->add_option("--budget", t2.budget, "oracle assignment budget")->capture_default_str();
  c_t2->add_option("--forced-plan", t2.forced_plan, "write the forced plan document here");
  c_t2->add_option("--output", t2.output, "output path ('-' = stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  analyze.tie_break = build.tie_break = parse_tie_break(tie_break_text);
  ver.mode = mode_text == "rank" ? VerifyMode::kRank
             : mode_text == "oracle" ? VerifyMode::kOracle
                                     : VerifyMode::kBoth;

  if (c_analyze->parsed()) return cmd_analyze(analyze, io);
  if (c_build->parsed()) return cmd_build(build, io);
  if (c_deal->parsed()) return cmd_deal(deal_opts, io);
  if (c_rec->parsed()) return cmd_reconstruct(rec, io);
  if (c_ver->parsed()) return cmd_verify(ver, io);
  return cmd_theorem2(t2, io);
}

}  // namespace mcss::cli
