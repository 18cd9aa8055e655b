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

#include "listpriv/oracle.h"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "listpriv/adversary.h"
#include "listpriv/envelope.h"
#include "listpriv/error.h"
#include "listpriv/simplex.h"

namespace listpriv {
namespace {

std::vector<std::vector<int>> all_lists(int r, int l) {
  std::vector<std::vector<int>> lists;
  std::vector<int> combo(l);
  for (int j = 0; j < l; ++j) combo[j] = j;
  while (true) {
    lists.push_back(combo);
    int j = l - 1;
    while (j >= 0 && combo[j] == r - l + j) --j;
    if (j < 0) return lists;
    ++combo[j];
    for (int m = j + 1; m < l; ++m) combo[m] = combo[m - 1] + 1;
  }
}

std::vector<std::vector<int>> checked_lists(const Instance& inst, const OracleOptions& options) {
  const std::uint64_t lists = count_candidate_sets(inst.r(), inst.l()) - count_candidate_sets(inst.r(), inst.l() - 1);
  const std::uint64_t constraints = lists * static_cast<std::uint64_t>(inst.k());
  if (lists > options.max_list_constraints || constraints > options.max_list_constraints) {
    throw Error(ErrorCode::kInstanceTooLarge, "oracle LP needs " + std::to_string(constraints) +
                                                  " list constraints (cap " +
                                                  std::to_string(options.max_list_constraints) + ")");
  }
  return all_lists(inst.r(), inst.l());
}

}  // namespace

OracleResult pi_exact(const Instance& inst, const Rational& rho, const OracleOptions& options) {
  require_unit_interval(rho);
  const auto lists = checked_lists(inst, options);
  const int r = inst.r();
  const int k = inst.k();
  const auto num_lists = static_cast<Eigen::Index>(lists.size());

  // Columns: w(x, i) at x*k + i, shifted by rho on i = f(x); t_i; one
  // surplus per list constraint. Rows: r row sums, then k * |lists|.
  const Eigen::Index w_cols = r * k;
  const Eigen::Index t_col = w_cols;
  const Eigen::Index surplus_col = w_cols + k;
  const Eigen::Index n = surplus_col + k * num_lists;
  const Eigen::Index m = r + k * num_lists;

  LinearProgram<Rational> lp;
  lp.a = RationalMatrix::Constant(m, n, Rational(0));
  lp.b = RationalVector::Constant(m, Rational(0));
  lp.c = RationalVector::Constant(n, Rational(0));
  for (int i = 0; i < k; ++i) lp.c(t_col + i) = Rational(1);

  for (int x = 0; x < r; ++x) {
    for (int i = 0; i < k; ++i) lp.a(x, x * k + i) = Rational(1);
    lp.b(x) = Rational(1) - rho;
  }
  for (int i = 0; i < k; ++i) {
    for (Eigen::Index li = 0; li < num_lists; ++li) {
      const Eigen::Index row = r + i * num_lists + li;
      lp.a(row, t_col + i) = Rational(1);
      lp.a(row, surplus_col + i * num_lists + li) = Rational(-1);
      Rational shifted(0);
      for (int x : lists[li]) {
        lp.a(row, x * k + i) = -inst.pmf(x);
        if (inst.f(x) == i) shifted += inst.pmf(x);
      }
      lp.b(row) = rho * shifted;
    }
  }

  const LpSolution<Rational> sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kSolverFailure,
                std::string("oracle LP reported ") + (sol.status == LpStatus::kInfeasible ? "infeasible" : "unbounded"));
  }

  RationalMatrix w(r, k);
  for (int x = 0; x < r; ++x) {
    for (int i = 0; i < k; ++i) w(x, i) = sol.x(x * k + i) + (inst.f(x) == i ? rho : Rational(0));
  }
  StochasticMatrix witness(std::move(w));
  const Rational optimum = Rational(1) - sol.objective;

  const PrivacyReport certificate = list_privacy(inst, witness);
  if (certificate.privacy != optimum || !check_rho_recoverable(witness, inst, rho)) {
    throw Error(ErrorCode::kSolverFailure, "oracle witness failed certification: LP " + optimum.str() +
                                               ", evaluated " + certificate.privacy.str());
  }

  OracleResult out{optimum, witness, {}, has_add_noise_form(witness, inst), sol.pivots};
  out.active_lists.resize(k);
  for (int i = 0; i < k; ++i) {
    for (const auto& list : lists) {
      Rational mass(0);
      for (int x : list) mass += inst.pmf(x) * witness(x, i);
      if (mass == certificate.per_output_mass[i]) out.active_lists[i].push_back(list);
    }
  }
  return out;
}

std::vector<std::pair<Rational, OracleResult>> pi_exact_curve(const Instance& inst, const std::vector<Rational>& grid,
                                                              const OracleOptions& options) {
  std::vector<std::pair<Rational, OracleResult>> out;
  out.reserve(grid.size());
  for (const auto& rho : grid) out.emplace_back(rho, pi_exact(inst, rho, options));
  std::vector<std::size_t> order(out.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return out[a].first < out[b].first; });
  for (std::size_t j = 1; j < order.size(); ++j) {
    if (out[order[j]].second.optimum > out[order[j - 1]].second.optimum) {
      throw Error(ErrorCode::kSolverFailure, "oracle values increase between rho = " + out[order[j - 1]].first.str() +
                                                 " and rho = " + out[order[j]].first.str());
    }
  }
  return out;
}

std::string oracle_lp_text(const Instance& inst, const Rational& rho, const OracleOptions& options) {
  require_unit_interval(rho);
  const auto lists = checked_lists(inst, options);
  auto w_name = [](int x, int i) { return "w_" + std::to_string(x) + "_" + std::to_string(i); };
  std::ostringstream os;
  os.precision(17);
  os << "\\ list rho-privacy oracle: privacy = 1 - objective\n";
  os << "\\ r=" << inst.r() << " k=" << inst.k() << " l=" << inst.l() << " rho=" << rho.str() << "\n";
  os << "Minimize\n obj:";
  for (int i = 0; i < inst.k(); ++i) os << (i ? " + " : " ") << "t_" << i;
  os << "\nSubject To\n";
  for (int x = 0; x < inst.r(); ++x) {
    os << " row_" << x << ":";
    for (int i = 0; i < inst.k(); ++i) os << (i ? " + " : " ") << w_name(x, i);
    os << " = 1\n";
  }
  for (int i = 0; i < inst.k(); ++i) {
    for (std::size_t li = 0; li < lists.size(); ++li) {
      os << " list_" << i << "_" << li << ": t_" << i;
      for (int x : lists[li]) os << " - " << inst.pmf(x).to_double() << " " << w_name(x, i);
      os << " >= 0\n";
    }
  }
  os << "Bounds\n";
  for (int x = 0; x < inst.r(); ++x) {
    os << " " << w_name(x, inst.f(x)) << " >= " << rho.to_double() << "\n";
  }
  os << "End\n";
  return os.str();
}

OracleOptions oracle_options_from_env() {
  OracleOptions options;
  if (const char* cap = std::getenv("LISTPRIV_ORACLE_CAP"); cap != nullptr && *cap != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(cap, &end, 10);
    if (end == cap || *end != '\0') {
      throw Error(ErrorCode::kParseError, std::string("LISTPRIV_ORACLE_CAP is not an integer: ") + cap);
    }
    options.max_list_constraints = value;
  }
  return options;
}

}  // namespace listpriv
