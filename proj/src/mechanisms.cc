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

#include "listpriv/mechanisms.h"

#include "listpriv/envelope.h"
#include "listpriv/error.h"

namespace listpriv {

NoisePmf::NoisePmf(RationalMatrix conditional) : conditional_(std::move(conditional)) {
  if (conditional_.rows() != conditional_.cols() || conditional_.rows() < 1) {
    throw Error(ErrorCode::kDimensionMismatch, "noise pmf must be a square k x k table");
  }
  if (!is_row_stochastic(conditional_)) {
    throw Error(ErrorCode::kNotStochastic, "every noise row must be a pmf");
  }
}

NoisePmf NoisePmf::symmetric(int k, const Rational& keep) {
  require_unit_interval(keep);
  RationalMatrix table(k, k);
  const Rational spill = k > 1 ? (Rational(1) - keep) / Rational(k - 1) : Rational(0);
  for (int i = 0; i < k; ++i) {
    for (int n = 0; n < k; ++n) table(i, n) = n == 0 ? keep : spill;
  }
  return NoisePmf(std::move(table));
}

StochasticMatrix uniform_qr(const Instance& inst) {
  RationalMatrix w(inst.r(), inst.k());
  w.setConstant(Rational(1, inst.k()));
  return StochasticMatrix(std::move(w));
}

StochasticMatrix deterministic_qr(const Instance& inst) {
  RationalMatrix w(inst.r(), inst.k());
  w.setConstant(Rational(0));
  for (int x = 0; x < inst.r(); ++x) w(x, inst.f(x)) = Rational(1);
  return StochasticMatrix(std::move(w));
}

StochasticMatrix add_noise_qr(const Instance& inst, const NoisePmf& noise) {
  if (noise.k() != inst.k()) {
    throw Error(ErrorCode::kDimensionMismatch, "noise is " + std::to_string(noise.k()) + "x" +
                                                   std::to_string(noise.k()) + " but k = " + std::to_string(inst.k()));
  }
  const int k = inst.k();
  RationalMatrix w(inst.r(), k);
  for (int x = 0; x < inst.r(); ++x) {
    const int fx = inst.f(x);
    for (int j = 0; j < k; ++j) w(x, j) = noise.conditional()(fx, ((j - fx) % k + k) % k);
  }
  return StochasticMatrix(std::move(w));
}

StochasticMatrix optimal_binary_qr(const Instance& inst, const Rational& rho) {
  if (inst.k() != 2) {
    throw Error(ErrorCode::kNotBinaryFunction, "optimal binary mechanism needs k = 2, got k = " + std::to_string(inst.k()));
  }
  require_unit_interval(rho);
  const Rational keep = max(rho, first_breakpoint(inst));
  return add_noise_qr(inst, NoisePmf::symmetric(2, keep));
}

Instance counterexample_instance() {
  std::vector<Rational> pmf(5, Rational(1, 5));
  return Instance::create(std::move(pmf), {0, 0, 1, 1, 2}, 2);
}

std::pair<Instance, StochasticMatrix> counterexample_qr(const Rational& rho) {
  if (rho < Rational(1, 2) || rho > Rational(1)) {
    throw Error(ErrorCode::kRhoOutOfRange, "counterexample mechanism is defined for 1/2 <= rho <= 1, got " + rho.str());
  }
  Instance inst = counterexample_instance();
  const Rational flip = Rational(1) - rho;
  RationalMatrix w(5, 3);
  w.setConstant(Rational(0));
  for (int x = 0; x < 5; ++x) w(x, inst.f(x)) = rho;
  w(2, 0) = flip;
  w(3, 0) = flip;
  w(0, 1) = flip;
  w(1, 1) = flip;
  w(4, 0) = flip / Rational(2);
  w(4, 1) = flip / Rational(2);
  return {std::move(inst), StochasticMatrix(std::move(w))};
}

}  // namespace listpriv
