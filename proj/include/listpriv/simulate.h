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

#ifndef LISTPRIV_SIMULATE_H_
#define LISTPRIV_SIMULATE_H_

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "listpriv/instance.h"
#include "listpriv/rational.h"

namespace listpriv {

struct SimReport {
  std::uint64_t trials = 0;
  std::uint64_t misses = 0;
  double empirical_privacy = 0.0;  // misses / trials
  double std_error = 0.0;          // sqrt(p (1 - p) / trials)
  std::uint64_t seed = 0;

  friend bool operator==(const SimReport&, const SimReport&) = default;
};

// Inverse-CDF sampler over a rational pmf. Cumulative sums are converted to
// exact thresholds floor(F_j * 2^64) and compared with a raw 64-bit draw.
class DiscreteSampler {
 public:
  explicit DiscreteSampler(std::span<const Rational> pmf);

  int operator()(std::uint64_t draw) const;

 private:
  std::vector<std::uint64_t> thresholds_;  // for cumulative sums below 1
  int last_positive_ = 0;
};

// The generator is std::mt19937_64 seeded with `seed`; X ~ P_X and then
// F ~ W(.|X), one draw each per trial. Throws kDimensionMismatch or
// kInvalidEstimator on inconsistent inputs.
SimReport simulate_game(const Instance& inst, const StochasticMatrix& w, const ListEstimator& g,
                        std::uint64_t trials, std::uint64_t seed);

// Seed for stream `index` of a batch.
inline std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t index) { return seed + index; }

struct SweepRow {
  Rational rho;
  SimReport sim;
  Rational analytic;  // exact list privacy of the swept mechanism
};

// For each rho, builds W = make_mechanism(rho), simulates the MAP estimator
// with derived_seed(seed, index), and records the exact privacy alongside.
std::vector<SweepRow> simulate_sweep(const Instance& inst,
                                     const std::function<StochasticMatrix(const Rational&)>& make_mechanism,
                                     const std::vector<Rational>& grid, std::uint64_t trials, std::uint64_t seed);

}  // namespace listpriv

#endif  // LISTPRIV_SIMULATE_H_
