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

#include "listpriv/adversary.h"

#include <algorithm>
#include <numeric>

#include "listpriv/error.h"

namespace listpriv {
namespace {

std::vector<int> map_list(const Instance& inst, const StochasticMatrix& w, int i) {
  std::vector<Rational> score(inst.r());
  for (int x = 0; x < inst.r(); ++x) score[x] = inst.pmf(x) * w(x, i);
  std::vector<int> order(inst.r());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (score[a] != score[b]) return score[a] > score[b];
    return a < b;
  });
  order.resize(inst.l());
  return order;
}

}  // namespace

ListEstimator map_list_estimator(const Instance& inst, const StochasticMatrix& w) {
  require_dimensions(w, inst);
  std::vector<std::vector<int>> lists;
  lists.reserve(inst.k());
  for (int i = 0; i < inst.k(); ++i) lists.push_back(map_list(inst, w, i));
  return ListEstimator(std::move(lists), inst.r(), inst.l());
}

PrivacyReport list_privacy(const Instance& inst, const StochasticMatrix& w) {
  ListEstimator g = map_list_estimator(inst, w);
  std::vector<Rational> per_output(inst.k());
  Rational captured(0);
  for (int i = 0; i < inst.k(); ++i) {
    for (int x : g.list(i)) per_output[i] += inst.pmf(x) * w(x, i);
    captured += per_output[i];
  }
  return PrivacyReport{Rational(1) - captured, std::move(g), std::move(per_output)};
}

Rational miss_probability(const Instance& inst, const StochasticMatrix& w, const ListEstimator& g) {
  require_dimensions(w, inst);
  if (g.size() != inst.k()) {
    throw Error(ErrorCode::kDimensionMismatch, "estimator has " + std::to_string(g.size()) +
                                                   " lists but k = " + std::to_string(inst.k()));
  }
  Rational hit(0);
  for (int i = 0; i < inst.k(); ++i) {
    for (int x : g.list(i)) hit += inst.pmf(x) * w(x, i);
  }
  return Rational(1) - hit;
}

}  // namespace listpriv
