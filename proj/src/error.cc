// Copyright 2026 The listpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "listpriv/error.h"

namespace listpriv {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroMassSymbol: return "ZeroMassSymbol";
    case ErrorCode::kPmfNotNormalized: return "PmfNotNormalized";
    case ErrorCode::kEmptyPreimage: return "EmptyPreimage";
    case ErrorCode::kListSizeOutOfRange: return "ListSizeOutOfRange";
    case ErrorCode::kBadFunctionRange: return "BadFunctionRange";
    case ErrorCode::kAlphabetTooSmall: return "AlphabetTooSmall";
    case ErrorCode::kTooManyRequested: return "TooManyRequested";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotStochastic: return "NotStochastic";
    case ErrorCode::kInvalidEstimator: return "InvalidEstimator";
    case ErrorCode::kRhoOutOfRange: return "RhoOutOfRange";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kNotBinaryFunction: return "NotBinaryFunction";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kHashMismatch: return "HashMismatch";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kSolverFailure: return "SolverFailure";
  }
  return "Unknown";
}

}  // namespace listpriv
