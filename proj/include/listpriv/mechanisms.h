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

#ifndef LISTPRIV_MECHANISMS_H_
#define LISTPRIV_MECHANISMS_H_

#include <utility>

#include "listpriv/dense.h"
#include "listpriv/instance.h"

namespace listpriv {

// Noise for an add-noise mechanism F(X) = f(X) + N mod k:
// conditional(i, n) = P(N = n | f(X) = i).
class NoisePmf {
 public:
  // Throws kNotStochastic unless every row is a pmf.
  explicit NoisePmf(RationalMatrix conditional);

  // P(N = 0) = keep, the remaining mass split evenly over n != 0.
  static NoisePmf symmetric(int k, const Rational& keep);

  int k() const { return static_cast<int>(conditional_.rows()); }
  const RationalMatrix& conditional() const { return conditional_; }

 private:
  RationalMatrix conditional_;
};

// W_0(i|x) = 1/k.
StochasticMatrix uniform_qr(const Instance& inst);

// W_1(i|x) = 1 iff i = f(x).
StochasticMatrix deterministic_qr(const Instance& inst);

// W(j|x) = P(N = (j - f(x)) mod k | f(X) = f(x)). Throws kDimensionMismatch
// unless the noise is k x k.
StochasticMatrix add_noise_qr(const Instance& inst, const NoisePmf& noise);

// The binary mechanism keeping f(x) with probability max{rho, rho_1}.
// Throws kNotBinaryFunction when k != 2 and kRhoOutOfRange outside [0, 1].
StochasticMatrix optimal_binary_qr(const Instance& inst, const Rational& rho);

// Five equiprobable symbols, f = (0, 0, 1, 1, 2), l = 2.
Instance counterexample_instance();

// The non-add-noise mechanism on counterexample_instance() with list privacy
// 1 - rho for 1/2 <= rho <= 1. Throws kRhoOutOfRange for rho outside [1/2, 1].
std::pair<Instance, StochasticMatrix> counterexample_qr(const Rational& rho);

}  // namespace listpriv

#endif  // LISTPRIV_MECHANISMS_H_
