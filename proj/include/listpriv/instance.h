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

#ifndef LISTPRIV_INSTANCE_H_
#define LISTPRIV_INSTANCE_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "listpriv/dense.h"
#include "listpriv/rational.h"

namespace listpriv {

// A list-privacy problem: a strictly positive pmf on X = {0..r-1}, a
// surjective f: X -> Z = {0..k-1}, and a list size 1 <= l < r.
class Instance {
 public:
  // Validates and builds an instance. When `declared_k` is absent the range
  // size is max(f) + 1. Throws Error with one of kAlphabetTooSmall,
  // kDimensionMismatch, kZeroMassSymbol, kPmfNotNormalized,
  // kBadFunctionRange, kEmptyPreimage, kListSizeOutOfRange.
  static Instance create(std::vector<Rational> pmf, std::vector<int> f, int l,
                         std::optional<int> declared_k = std::nullopt,
                         std::vector<std::string> labels = {});

  int r() const { return static_cast<int>(pmf_.size()); }
  int k() const { return k_; }
  int l() const { return l_; }

  const std::vector<Rational>& pmf() const { return pmf_; }
  const Rational& pmf(int x) const { return pmf_[x]; }
  const std::vector<int>& f() const { return f_; }
  int f(int x) const { return f_[x]; }

  // f^{-1}(i) in ascending index order.
  const std::vector<int>& preimage(int i) const { return preimages_[i]; }
  // f^{-1}(i) ordered by (probability descending, index ascending).
  const std::vector<int>& ranked_preimage(int i) const { return ranked_preimages_[i]; }
  // X ordered by (probability descending, index ascending).
  const std::vector<int>& ranked_alphabet() const { return ranked_alphabet_; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int x) const;

  // Same pmf and f with a different list size.
  Instance with_list_size(int l) const;

  Rational mass(std::span<const int> subset) const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.pmf_ == b.pmf_ && a.f_ == b.f_ && a.l_ == b.l_ && a.k_ == b.k_ &&
           a.labels_ == b.labels_;
  }

 private:
  Instance() = default;

  std::vector<Rational> pmf_;
  std::vector<int> f_;
  int k_ = 0;
  int l_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> preimages_;
  std::vector<std::vector<int>> ranked_preimages_;
  std::vector<int> ranked_alphabet_;
};

// [A]_t: the t elements of `subset` with the largest probabilities, ties
// broken by ascending index. Returned in rank order, so the result for t is a
// prefix of the result for t + 1. Throws kTooManyRequested when t > |A|.
std::vector<int> top_elements(std::span<const int> subset, int t,
                              std::span<const Rational> pmf);

// L_t^*.
std::vector<int> top_of_alphabet(const Instance& inst, int t);

// A query-response mechanism W: X -> Z; entries(x, i) = W(i|x).
class StochasticMatrix {
 public:
  // Throws kNotStochastic if an entry is negative or a row does not sum to 1.
  explicit StochasticMatrix(RationalMatrix entries);

  Eigen::Index rows() const { return entries_.rows(); }
  Eigen::Index cols() const { return entries_.cols(); }
  const Rational& operator()(Eigen::Index x, Eigen::Index i) const { return entries_(x, i); }
  const RationalMatrix& entries() const { return entries_; }

  friend bool operator==(const StochasticMatrix& a, const StochasticMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  RationalMatrix entries_;
};

// Throws kDimensionMismatch unless W is r x k for this instance.
void require_dimensions(const StochasticMatrix& w, const Instance& inst);

// min_x W(f(x)|x).
Rational recoverability(const StochasticMatrix& w, const Instance& inst);

// W(f(x)|x) >= rho for every x.
bool check_rho_recoverable(const StochasticMatrix& w, const Instance& inst, const Rational& rho);

// True if W has identical rows within every preimage f^{-1}(i).
bool has_add_noise_form(const StochasticMatrix& w, const Instance& inst);

// g: Z -> L_l. lists[i] is kept in the order supplied.
class ListEstimator {
 public:
  // Throws kInvalidEstimator unless every list holds exactly l distinct
  // elements of {0..r-1}.
  ListEstimator(std::vector<std::vector<int>> lists, int r, int l);

  int size() const { return static_cast<int>(lists_.size()); }
  const std::vector<int>& list(int i) const { return lists_[i]; }
  const std::vector<std::vector<int>>& lists() const { return lists_; }
  bool contains(int i, int x) const;

 private:
  std::vector<std::vector<int>> lists_;
};

// Throws kRhoOutOfRange unless 0 <= rho <= 1.
void require_unit_interval(const Rational& rho);

}  // namespace listpriv

#endif  // LISTPRIV_INSTANCE_H_
