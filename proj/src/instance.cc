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

#include "listpriv/instance.h"

#include <algorithm>
#include <numeric>

#include "listpriv/error.h"

namespace listpriv {
namespace {

std::vector<int> rank_by_mass(std::vector<int> subset, std::span<const Rational> pmf) {
  std::stable_sort(subset.begin(), subset.end(), [&](int a, int b) {
    if (pmf[a] != pmf[b]) return pmf[a] > pmf[b];
    return a < b;
  });
  return subset;
}

}  // namespace

Instance Instance::create(std::vector<Rational> pmf, std::vector<int> f, int l,
                          std::optional<int> declared_k, std::vector<std::string> labels) {
  const int r = static_cast<int>(pmf.size());
  if (r < 2) {
    throw Error(ErrorCode::kAlphabetTooSmall, "alphabet needs at least 2 symbols, got " + std::to_string(r));
  }
  if (static_cast<int>(f.size()) != r) {
    throw Error(ErrorCode::kDimensionMismatch, "f has " + std::to_string(f.size()) +
                                                   " entries but pmf has " + std::to_string(r));
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != r) {
    throw Error(ErrorCode::kDimensionMismatch, "labels must have length r = " + std::to_string(r));
  }
  Rational total(0);
  for (int x = 0; x < r; ++x) {
    if (pmf[x].sign() <= 0) {
      throw Error(ErrorCode::kZeroMassSymbol, "P_X(" + std::to_string(x) + ") = " + pmf[x].str() + " is not positive");
    }
    total += pmf[x];
  }
  if (total != Rational(1)) {
    throw Error(ErrorCode::kPmfNotNormalized, "pmf sums to " + total.str() + ", not 1");
  }

  int k = 0;
  if (declared_k) {
    k = *declared_k;
  } else {
    k = *std::max_element(f.begin(), f.end()) + 1;
  }
  if (k < 2) {
    throw Error(ErrorCode::kBadFunctionRange, "f must take at least 2 values, range size is " + std::to_string(k));
  }
  for (int x = 0; x < r; ++x) {
    if (f[x] < 0 || f[x] >= k) {
      throw Error(ErrorCode::kBadFunctionRange, "f(" + std::to_string(x) + ") = " + std::to_string(f[x]) +
                                                    " outside {0.." + std::to_string(k - 1) + "}");
    }
  }
  std::vector<std::vector<int>> preimages(k);
  for (int x = 0; x < r; ++x) preimages[f[x]].push_back(x);
  for (int i = 0; i < k; ++i) {
    if (preimages[i].empty()) {
      throw Error(ErrorCode::kEmptyPreimage, "f^{-1}(" + std::to_string(i) + ") is empty");
    }
  }
  if (l < 1 || l >= r) {
    throw Error(ErrorCode::kListSizeOutOfRange,
                "list size l = " + std::to_string(l) + " must satisfy 1 <= l < r = " + std::to_string(r));
  }

  Instance inst;
  inst.pmf_ = std::move(pmf);
  inst.f_ = std::move(f);
  inst.k_ = k;
  inst.l_ = l;
  inst.labels_ = std::move(labels);
  inst.preimages_ = std::move(preimages);
  for (const auto& pre : inst.preimages_) inst.ranked_preimages_.push_back(rank_by_mass(pre, inst.pmf_));
  std::vector<int> all(r);
  std::iota(all.begin(), all.end(), 0);
  inst.ranked_alphabet_ = rank_by_mass(std::move(all), inst.pmf_);
  return inst;
}

std::string Instance::label(int x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

Instance Instance::with_list_size(int l) const {
  return create(pmf_, f_, l, k_, labels_);
}

Rational Instance::mass(std::span<const int> subset) const {
  Rational total(0);
  for (int x : subset) total += pmf_[x];
  return total;
}

std::vector<int> top_elements(std::span<const int> subset, int t, std::span<const Rational> pmf) {
  if (t < 0 || t > static_cast<int>(subset.size())) {
    throw Error(ErrorCode::kTooManyRequested, "requested " + std::to_string(t) + " elements from a set of " +
                                                  std::to_string(subset.size()));
  }
  std::vector<int> ranked = rank_by_mass(std::vector<int>(subset.begin(), subset.end()), pmf);
  ranked.resize(t);
  return ranked;
}

std::vector<int> top_of_alphabet(const Instance& inst, int t) {
  return top_elements(inst.ranked_alphabet(), t, inst.pmf());
}

StochasticMatrix::StochasticMatrix(RationalMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.cols() == 0) {
    throw Error(ErrorCode::kNotStochastic, "mechanism matrix is empty");
  }
  if (!is_row_stochastic(entries_)) {
    throw Error(ErrorCode::kNotStochastic, "mechanism has a negative entry or a row not summing to 1");
  }
}

void require_dimensions(const StochasticMatrix& w, const Instance& inst) {
  if (w.rows() != inst.r() || w.cols() != inst.k()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "mechanism is " + std::to_string(w.rows()) + "x" + std::to_string(w.cols()) +
                    " but the instance needs " + std::to_string(inst.r()) + "x" + std::to_string(inst.k()));
  }
}

Rational recoverability(const StochasticMatrix& w, const Instance& inst) {
  require_dimensions(w, inst);
  Rational lowest(1);
  for (int x = 0; x < inst.r(); ++x) lowest = min(lowest, w(x, inst.f(x)));
  return lowest;
}

bool check_rho_recoverable(const StochasticMatrix& w, const Instance& inst, const Rational& rho) {
  return recoverability(w, inst) >= rho;
}

bool has_add_noise_form(const StochasticMatrix& w, const Instance& inst) {
  require_dimensions(w, inst);
  for (int i = 0; i < inst.k(); ++i) {
    const auto& pre = inst.preimage(i);
    for (std::size_t j = 1; j < pre.size(); ++j) {
      if (!rows_equal(w.entries(), pre[0], pre[j])) return false;
    }
  }
  return true;
}

ListEstimator::ListEstimator(std::vector<std::vector<int>> lists, int r, int l) : lists_(std::move(lists)) {
  for (std::size_t i = 0; i < lists_.size(); ++i) {
    const auto& list = lists_[i];
    if (static_cast<int>(list.size()) != l) {
      throw Error(ErrorCode::kInvalidEstimator, "list " + std::to_string(i) + " has " +
                                                    std::to_string(list.size()) + " entries, expected " +
                                                    std::to_string(l));
    }
    std::vector<int> sorted = list;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
        (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= r))) {
      throw Error(ErrorCode::kInvalidEstimator, "list " + std::to_string(i) + " is not an l-subset of X");
    }
  }
}

bool ListEstimator::contains(int i, int x) const {
  const auto& list = lists_[i];
  return std::find(list.begin(), list.end(), x) != list.end();
}

void require_unit_interval(const Rational& rho) {
  if (rho < Rational(0) || rho > Rational(1)) {
    throw Error(ErrorCode::kRhoOutOfRange, "rho = " + rho.str() + " is outside [0, 1]");
  }
}

}  // namespace listpriv
