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

#ifndef LISTPRIV_DENSE_H_
#define LISTPRIV_DENSE_H_

#include <Eigen/Core>

#include "listpriv/rational.h"

namespace listpriv {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = DenseVector<Rational>;

template <typename Derived>
bool is_row_stochastic(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index x = 0; x < m.rows(); ++x) {
    Scalar total(0);
    for (Eigen::Index i = 0; i < m.cols(); ++i) {
      if (m(x, i) < Scalar(0)) return false;
      total += m(x, i);
    }
    if (!(total == Scalar(1))) return false;
  }
  return true;
}

// True when rows x and y agree entrywise.
template <typename Derived>
bool rows_equal(const Eigen::MatrixBase<Derived>& m, Eigen::Index x, Eigen::Index y) {
  for (Eigen::Index i = 0; i < m.cols(); ++i) {
    if (!(m(x, i) == m(y, i))) return false;
  }
  return true;
}

}  // namespace listpriv

#endif  // LISTPRIV_DENSE_H_
