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

#ifndef LISTPRIV_ADVERSARY_H_
#define LISTPRIV_ADVERSARY_H_

#include <vector>

#include "listpriv/instance.h"
#include "listpriv/rational.h"

namespace listpriv {

struct PrivacyReport {
  Rational privacy;  // pi_rho^(l)(W)
  ListEstimator estimator;
  // max_L sum_{x in L} P_X(x) W(i|x), per output symbol i.
  std::vector<Rational> per_output_mass;
};

// For each output i, the l inputs with the largest joint mass P_X(x) W(i|x),
// ties broken by ascending index. Lists are in rank order.
ListEstimator map_list_estimator(const Instance& inst, const StochasticMatrix& w);

// Exact list privacy of W under the MAP list estimator.
PrivacyReport list_privacy(const Instance& inst, const StochasticMatrix& w);

// P(X not in g(F(X))) for an arbitrary estimator.
Rational miss_probability(const Instance& inst, const StochasticMatrix& w, const ListEstimator& g);

}  // namespace listpriv

#endif  // LISTPRIV_ADVERSARY_H_
