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

#ifndef MCSS_ERROR_H_
#define MCSS_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcss {

enum class ErrorCode {
  // ffield
  kNonPrimeModulus,
  kModulusTooSmall,
  kFieldMismatch,
  kDimensionMismatch,
  kInconsistent,
  // access
  kSyntaxError,
  kNegationNotAllowed,
  kSingletonClause,
  kEmptyClause,
  kNotAntichain,
  kOutOfRangeParticipant,
  kTooManyParticipants,
  // scheme
  kInvalidShareId,
  kBadCoefficient,
  kInvalidOption,
  kInvalidPlan,
  // runtime
  kLengthMismatch,
  kValueOutOfRange,
  kMissingShare,
  kNotAuthorized,
  kInconsistentShares,
  kUnderdeterminedMessage,
  // verify
  kBadMessageIndex,
  kBudgetExceeded,
  kShareIsReplaceable,
  // documents
  kMalformedDocument,
  kDigestMismatch,
};

// Stable identifier used in diagnostics, e.g. "SingletonClause".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mcss

#endif  // MCSS_ERROR_H_
