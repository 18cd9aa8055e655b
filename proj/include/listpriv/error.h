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

#ifndef LISTPRIV_ERROR_H_
#define LISTPRIV_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace listpriv {

enum class ErrorCode {
  kZeroMassSymbol,
  kPmfNotNormalized,
  kEmptyPreimage,
  kListSizeOutOfRange,
  kBadFunctionRange,
  kAlphabetTooSmall,
  kTooManyRequested,
  kDimensionMismatch,
  kNotStochastic,
  kInvalidEstimator,
  kRhoOutOfRange,
  kInstanceTooLarge,
  kNotBinaryFunction,
  kParseError,
  kHashMismatch,
  kIoError,
  kSolverFailure,
};

// Stable identifier printed by the CLI, e.g. "PmfNotNormalized".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace listpriv

#endif  // LISTPRIV_ERROR_H_
