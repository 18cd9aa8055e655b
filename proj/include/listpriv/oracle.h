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

#ifndef LISTPRIV_ORACLE_H_
#define LISTPRIV_ORACLE_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "listpriv/instance.h"
#include "listpriv/rational.h"

namespace listpriv {

inline constexpr std::uint64_t kDefaultOracleCap = 100'000;

struct OracleOptions {
  // Upper bound on k * C(r, l), the number of list constraints.
  std::uint64_t max_list_constraints = kDefaultOracleCap;
};

struct OracleResult {
  Rational optimum;  // pi^(l)(rho)
  StochasticMatrix witness;
  // active_lists[i]: every l-list attaining max_L sum_{x in L} P_X(x) W(i|x).
  std::vector<std::vector<std::vector<int>>> active_lists;
  // Witness rows are identical within each preimage.
  bool add_noise_form = false;
  int pivots = 0;
};

// Exact list rho-privacy: the largest list privacy over all rho-recoverable
// mechanisms, by an exact rational LP over W and per-output epigraph
// variables t_i >= sum_{x in L} P_X(x) W(i|x) for every l-list L.
// The result is certified by re-evaluating the witness with list_privacy.
// Throws kRhoOutOfRange, kInstanceTooLarge, or kSolverFailure.
OracleResult pi_exact(const Instance& inst, const Rational& rho, const OracleOptions& options = {});

// pi_exact at every grid point, in grid order. Throws kSolverFailure if the
// values are not nonincreasing in rho.
std::vector<std::pair<Rational, OracleResult>> pi_exact_curve(const Instance& inst,
                                                              const std::vector<Rational>& grid,
                                                              const OracleOptions& options = {});

// The same LP in CPLEX LP text format over the original W variables
// (decimal coefficients, for cross-checking with floating-point solvers).
std::string oracle_lp_text(const Instance& inst, const Rational& rho, const OracleOptions& options = {});

// Reads the cap from LISTPRIV_ORACLE_CAP when set.
OracleOptions oracle_options_from_env();

}  // namespace listpriv

#endif  // LISTPRIV_ORACLE_H_
