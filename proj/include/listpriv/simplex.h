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

#ifndef LISTPRIV_SIMPLEX_H_
#define LISTPRIV_SIMPLEX_H_

#include <type_traits>
#include <vector>

#include "listpriv/dense.h"

namespace listpriv {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

// minimize c'x subject to A x = b, x >= 0.
template <typename Scalar>
struct LinearProgram {
  DenseMatrix<Scalar> a;
  DenseVector<Scalar> b;
  DenseVector<Scalar> c;
};

template <typename Scalar>
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  DenseVector<Scalar> x;
  Scalar objective{0};
  std::vector<Eigen::Index> basis;  // basic column per constraint row
  int pivots = 0;
};

namespace simplex_detail {

template <typename Scalar>
bool is_negative(const Scalar& v) {
  if constexpr (std::is_floating_point_v<Scalar>) {
    return v < Scalar(-1e-11);
  } else {
    return v < Scalar(0);
  }
}

template <typename Scalar>
bool is_positive(const Scalar& v) {
  return is_negative(Scalar(-v));
}

template <typename Scalar>
bool is_nonzero(const Scalar& v) {
  return is_negative(v) || is_positive(v);
}

// Dense tableau: rows 0..m-1 are constraints, row m holds reduced costs with
// -objective in the last column.
template <typename Scalar>
class Tableau {
 public:
  Tableau(DenseMatrix<Scalar> t, std::vector<Eigen::Index> basis)
      : t_(std::move(t)), basis_(std::move(basis)) {}

  Eigen::Index rows() const { return t_.rows() - 1; }
  Eigen::Index rhs_col() const { return t_.cols() - 1; }
  DenseMatrix<Scalar>& data() { return t_; }
  const std::vector<Eigen::Index>& basis() const { return basis_; }
  int pivots() const { return pivots_; }

  void pivot(Eigen::Index row, Eigen::Index col) {
    const Scalar inv = Scalar(1) / t_(row, col);
    std::vector<Eigen::Index> support;
    for (Eigen::Index j = 0; j < t_.cols(); ++j) {
      if (is_nonzero(t_(row, j))) {
        t_(row, j) *= inv;
        support.push_back(j);
      } else {
        t_(row, j) = Scalar(0);
      }
    }
    for (Eigen::Index r = 0; r < t_.rows(); ++r) {
      if (r == row || !is_nonzero(t_(r, col))) continue;
      const Scalar factor = t_(r, col);
      for (Eigen::Index j : support) t_(r, j) -= factor * t_(row, j);
      t_(r, col) = Scalar(0);
    }
    basis_[row] = col;
    ++pivots_;
  }

  // Bland's rule over columns [0, enter_limit). Returns false if unbounded.
  bool optimize(Eigen::Index enter_limit) {
    const Eigen::Index m = rows();
    while (true) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < enter_limit; ++j) {
        if (is_negative(t_(m, j))) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Scalar best_ratio(0);
      for (Eigen::Index r = 0; r < m; ++r) {
        if (!is_positive(t_(r, enter))) continue;
        const Scalar ratio = t_(r, rhs_col()) / t_(r, enter);
        if (leave < 0 || ratio < best_ratio ||
            (!is_nonzero(Scalar(ratio - best_ratio)) && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

 private:
  DenseMatrix<Scalar> t_;
  std::vector<Eigen::Index> basis_;
  int pivots_ = 0;
};

}  // namespace simplex_detail

// Two-phase primal simplex with Bland's anti-cycling rule. With an exact
// scalar type (Rational) every step is exact; floating types use a fixed
// 1e-11 zero tolerance.
template <typename Scalar>
LpSolution<Scalar> solve_lp(const LinearProgram<Scalar>& lp) {
  using simplex_detail::is_negative;
  using simplex_detail::is_nonzero;
  const Eigen::Index m = lp.a.rows();
  const Eigen::Index n = lp.a.cols();
  const Eigen::Index width = n + m + 1;

  // Phase 1: artificial column n + r for row r, rows scaled so b >= 0.
  DenseMatrix<Scalar> t(m + 1, width);
  t.setConstant(Scalar(0));
  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index r = 0; r < m; ++r) {
    const bool flip = is_negative(lp.b(r));
    for (Eigen::Index j = 0; j < n; ++j) t(r, j) = flip ? Scalar(-lp.a(r, j)) : lp.a(r, j);
    t(r, n + r) = Scalar(1);
    t(r, width - 1) = flip ? Scalar(-lp.b(r)) : lp.b(r);
    basis[r] = n + r;
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index r = 0; r < m; ++r) t(m, j) -= t(r, j);
  }
  for (Eigen::Index r = 0; r < m; ++r) t(m, width - 1) -= t(r, width - 1);

  simplex_detail::Tableau<Scalar> tab(std::move(t), std::move(basis));
  tab.optimize(n + m);
  LpSolution<Scalar> out;
  if (is_nonzero(tab.data()(m, width - 1))) {
    out.status = LpStatus::kInfeasible;
    out.pivots = tab.pivots();
    return out;
  }
  // Drive zero-valued artificials out of the basis where possible; rows
  // with no structural entry are redundant and keep their artificial.
  for (Eigen::Index r = 0; r < m; ++r) {
    if (tab.basis()[r] < n) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (is_nonzero(tab.data()(r, j))) {
        tab.pivot(r, j);
        break;
      }
    }
  }

  // Phase 2 reduced costs.
  auto& d = tab.data();
  for (Eigen::Index j = 0; j < width; ++j) d(m, j) = j < n ? lp.c(j) : Scalar(0);
  for (Eigen::Index r = 0; r < m; ++r) {
    const Eigen::Index bj = tab.basis()[r];
    if (bj >= n || !is_nonzero(lp.c(bj))) continue;
    const Scalar cb = lp.c(bj);
    for (Eigen::Index j = 0; j < width; ++j) {
      if (is_nonzero(d(r, j))) d(m, j) -= cb * d(r, j);
    }
  }
  if (!tab.optimize(n)) {
    out.status = LpStatus::kUnbounded;
    out.pivots = tab.pivots();
    return out;
  }
  out.status = LpStatus::kOptimal;
  out.x = DenseVector<Scalar>::Constant(n, Scalar(0));
  for (Eigen::Index r = 0; r < m; ++r) {
    if (tab.basis()[r] < n) out.x(tab.basis()[r]) = d(r, width - 1);
  }
  out.objective = Scalar(-d(m, width - 1));
  out.basis = tab.basis();
  out.pivots = tab.pivots();
  return out;
}

}  // namespace listpriv

#endif  // LISTPRIV_SIMPLEX_H_
