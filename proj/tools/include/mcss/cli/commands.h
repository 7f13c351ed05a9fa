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

// Subcommands of the `mcss` tool. Each takes explicit streams so tests can
// drive it in-process; "-" as a path means the corresponding stream.
//
// Exit codes: 0 ok, 1 verification failed, 2 validation or usage error,
// 3 subset not authorized, 4 inconsistent shares, 5 oracle budget exceeded.

#ifndef MCSS_CLI_COMMANDS_H_
#define MCSS_CLI_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mcss/error.h"
#include "mcss/scheme.h"
#include "mcss/verify.h"

namespace mcss::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitValidation = 2,
  kExitNotAuthorized = 3,
  kExitInconsistent = 4,
  kExitBudget = 5,
};

int exit_code_for(ErrorCode code);

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// Exactly one of formula / basis_file. A basis file holds either a formula
// or JSON: [[1,2],[2,3]] or {"participants": n, "basis": [...]}.
struct StructureInput {
  std::string formula;
  std::string basis_file;
  int participants = 0;  // 0: largest index mentioned
};

inline constexpr std::uint64_t kDefaultModulus = 5;

struct AnalyzeOptions {
  StructureInput structure;
  std::uint64_t q = kDefaultModulus;
  TieBreak tie_break = TieBreak::kHighestIndex;
  bool json = false;
};

struct BuildOptions {
  StructureInput structure;
  std::uint64_t q = kDefaultModulus;
  TieBreak tie_break = TieBreak::kHighestIndex;
  std::vector<std::string> fix;    // "S4^A1"
  std::vector<std::string> coeff;  // "a,b" (default) or "S2^A1=a,b"
  std::vector<std::string> map;    // "S2^A1=2"
  bool single_secret = false;
  std::string output = "-";
};

struct DealOptions {
  std::string plan = "-";
  std::string messages;  // "1,2,3,4"
  std::uint64_t seed = 0;
  std::string output = "-";
};

struct ReconstructOptions {
  std::string plan;
  std::string shares = "-";
  std::string subset;  // empty: every participant in the shares document
  bool json = false;
  std::string output = "-";
};

enum class VerifyMode { kRank, kOracle, kBoth };

struct VerifyOptions {
  std::string plan = "-";
  VerifyMode mode = VerifyMode::kRank;
  bool exhaustive = false;
  std::uint64_t budget = kDefaultOracleBudget;
  std::string output = "-";
};

struct Theorem2Options {
  std::string plan;  // empty: build the default plan from `structure`
  StructureInput structure;
  std::uint64_t q = kDefaultModulus;
  std::string share = "S1^A1";
  std::string coeff = "2,1";
  std::uint64_t budget = kDefaultOracleBudget;
  std::string forced_plan;  // optional path for the forced plan document
  std::string output = "-";
};

int cmd_analyze(const AnalyzeOptions& options, Io io);
int cmd_build(const BuildOptions& options, Io io);
int cmd_deal(const DealOptions& options, Io io);
int cmd_reconstruct(const ReconstructOptions& options, Io io);
int cmd_verify(const VerifyOptions& options, Io io);
int cmd_theorem2(const Theorem2Options& options, Io io);

// Full command line without the program name, e.g. {"build", "--q", "7"}.
int run(const std::vector<std::string>& args, Io io);

}  // namespace mcss::cli

#endif  // MCSS_CLI_COMMANDS_H_
