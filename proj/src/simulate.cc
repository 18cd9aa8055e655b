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

#include "listpriv/simulate.h"

#include <cmath>

#include "listpriv/adversary.h"
#include "listpriv/error.h"

namespace listpriv {

DiscreteSampler::DiscreteSampler(std::span<const Rational> pmf) {
  Rational cumulative(0);
  for (std::size_t j = 0; j < pmf.size(); ++j) {
    if (pmf[j].sign() > 0) last_positive_ = static_cast<int>(j);
    cumulative += pmf[j];
    if (cumulative < Rational(1)) {
      thresholds_.push_back(scaled_floor_u64(cumulative));
    } else {
      break;
    }
  }
}

int DiscreteSampler::operator()(std::uint64_t draw) const {
  for (std::size_t j = 0; j < thresholds_.size(); ++j) {
    if (draw < thresholds_[j]) return static_cast<int>(j);
  }
  return last_positive_;
}

SimReport simulate_game(const Instance& inst, const StochasticMatrix& w, const ListEstimator& g,
                        std::uint64_t trials, std::uint64_t seed) {
  require_dimensions(w, inst);
  if (g.size() != inst.k()) {
    throw Error(ErrorCode::kDimensionMismatch, "estimator has " + std::to_string(g.size()) +
                                                   " lists but k = " + std::to_string(inst.k()));
  }
  if (trials == 0) throw Error(ErrorCode::kDimensionMismatch, "trials must be positive");

  const DiscreteSampler source(inst.pmf());
  std::vector<DiscreteSampler> channel;
  channel.reserve(inst.r());
  for (int x = 0; x < inst.r(); ++x) {
    std::vector<Rational> row(w.entries().row(x).begin(), w.entries().row(x).end());
    channel.emplace_back(row);
  }
  // hit[i * r + x]: x is in g(i).
  std::vector<char> hit(static_cast<std::size_t>(inst.k()) * inst.r(), 0);
  for (int i = 0; i < inst.k(); ++i) {
    for (int x : g.list(i)) hit[static_cast<std::size_t>(i) * inst.r() + x] = 1;
  }

  std::mt19937_64 gen(seed);
  std::uint64_t misses = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const int x = source(gen());
    const int i = channel[x](gen());
    if (!hit[static_cast<std::size_t>(i) * inst.r() + x]) ++misses;
  }
  SimReport report;
  report.trials = trials;
  report.misses = misses;
  report.seed = seed;
  report.empirical_privacy = static_cast<double>(misses) / static_cast<double>(trials);
  const double p = report.empirical_privacy;
  report.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  return report;
}

std::vector<SweepRow> simulate_sweep(const Instance& inst,
                                     const std::function<StochasticMatrix(const Rational&)>& make_mechanism,
                                     const std::vector<Rational>& grid, std::uint64_t trials, std::uint64_t seed) {
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const StochasticMatrix w = make_mechanism(grid[j]);
    PrivacyReport exact = list_privacy(inst, w);
    SimReport sim = simulate_game(inst, w, exact.estimator, trials, derived_seed(seed, j));
    rows.push_back(SweepRow{grid[j], sim, exact.privacy});
  }
  return rows;
}

}  // namespace listpriv
