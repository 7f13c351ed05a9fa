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

#include "mcss/error.h"

namespace mcss {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::kModulusTooSmall: return "ModulusTooSmall";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInconsistent: return "Inconsistent";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kNegationNotAllowed: return "NegationNotAllowed";
    case ErrorCode::kSingletonClause: return "SingletonClause";
    case ErrorCode::kEmptyClause: return "EmptyClause";
    case ErrorCode::kNotAntichain: return "NotAntichain";
    case ErrorCode::kOutOfRangeParticipant: return "OutOfRangeParticipant";
    case ErrorCode::kTooManyParticipants: return "TooManyParticipants";
    case ErrorCode::kInvalidShareId: return "InvalidShareId";
    case ErrorCode::kBadCoefficient: return "BadCoefficient";
    case ErrorCode::kInvalidOption: return "InvalidOption";
    case ErrorCode::kInvalidPlan: return "InvalidPlan";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kValueOutOfRange: return "ValueOutOfRange";
    case ErrorCode::kMissingShare: return "MissingShare";
    case ErrorCode::kNotAuthorized: return "NotAuthorized";
    case ErrorCode::kInconsistentShares: return "InconsistentShares";
    case ErrorCode::kUnderdeterminedMessage: return "UnderdeterminedMessage";
    case ErrorCode::kBadMessageIndex: return "BadMessageIndex";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kShareIsReplaceable: return "ShareIsReplaceable";
    case ErrorCode::kMalformedDocument: return "MalformedDocument";
    case ErrorCode::kDigestMismatch: return "DigestMismatch";
  }
  return "Unknown";
}

}  // namespace mcss
