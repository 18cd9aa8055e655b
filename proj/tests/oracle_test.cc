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

#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "listpriv/adversary.h"
#include "listpriv/catalog.h"
#include "listpriv/envelope.h"
#include "listpriv/error.h"
#include "listpriv/mechanisms.h"
#include "test_util.h"

namespace listpriv {
namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

void expect_certified(const Instance& inst, const Rational& rho, const OracleResult& result) {
  EXPECT_TRUE(check_rho_recoverable(result.witness, inst, rho));
  const PrivacyReport report = list_privacy(inst, result.witness);
  EXPECT_EQ(report.privacy, result.optimum);
  ASSERT_EQ(static_cast<int>(result.active_lists.size()), inst.k());
  for (int i = 0; i < inst.k(); ++i) {
    ASSERT_FALSE(result.active_lists[i].empty());
    for (const auto& list : result.active_lists[i]) {
      Rational mass(0);
      for (int x : list) mass += inst.pmf(x) * result.witness(x, i);
      EXPECT_EQ(mass, report.per_output_mass[i]);
    }
  }
  EXPECT_EQ(result.add_noise_form, has_add_noise_form(result.witness, inst));
}

TEST(PiExactTest, Examples) {
  const Instance fig1 = fig1_instance();
  const auto at_half = pi_exact(fig1, q(1, 2));
  EXPECT_EQ(at_half.optimum, q(7, 20));
  expect_certified(fig1, q(1, 2), at_half);

  const auto at_seven = pi_exact(fig1, q(7, 10));
  EXPECT_EQ(at_seven.optimum, q(63, 200));
  expect_certified(fig1, q(7, 10), at_seven);

  const Instance ce = counterexample_instance();
  const auto ce_result = pi_exact(ce, q(3, 4));
  EXPECT_EQ(ce_result.optimum, q(1, 4));
  expect_certified(ce, q(3, 4), ce_result);
}

TEST(PiExactTest, LowRhoMatchesClosedForm) {
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 15; ++trial) {
    const Instance inst = testing::random_instance(gen, {.max_r = 6});
    for (const Rational& rho : {q(0), q(1, 2 * inst.k()), q(1, inst.k())}) {
      EXPECT_EQ(pi_exact(inst, rho).optimum, pi_at_low_rho(inst));
    }
  }
}

TEST(PiExactTest, BoundedByEnvelopeAndTightForBinary) {
  std::mt19937_64 gen(8);
  for (int trial = 0; trial < 12; ++trial) {
    const Instance inst = testing::random_instance(gen, {.max_r = 6});
    for (int j = 0; j <= 10; ++j) {
      const Rational rho(j, 10);
      const OracleResult result = pi_exact(inst, rho);
      expect_certified(inst, rho, result);
      const Rational bound = pi_upper(inst, rho);
      EXPECT_LE(result.optimum, bound);
      if (inst.k() == 2) EXPECT_EQ(result.optimum, bound);
    }
  }
}

TEST(PiExactCurveTest, BinaryGridOfBreakpointsAndMidpoints) {
  const Instance inst = fig1_instance();
  const PrivacyCurve curve = privacy_curve(inst);
  std::vector<Rational> grid{q(0)};
  for (const auto& seg : curve.segments()) {
    grid.push_back((seg.rho_lo + seg.rho_hi) / q(2));
    grid.push_back(seg.rho_hi);
  }
  for (const auto& [rho, result] : pi_exact_curve(inst, grid)) EXPECT_EQ(result.optimum, curve.evaluate(rho));
  const auto single = pi_exact_curve(inst, {q(0)});
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].second.optimum, pi_at_low_rho(inst));
}

TEST(PiExactCurveTest, TernaryValuesStayBelowEnvelope) {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<int> f{0, 1, 2, 0, 0};
    std::shuffle(f.begin(), f.end(), gen);
    const Instance inst = Instance::create(testing::random_pmf(gen, 5, 9), f, 2);
    const auto grid = testing::unit_grid(21);
    for (const auto& [rho, result] : pi_exact_curve(inst, grid)) EXPECT_LE(result.optimum, pi_upper(inst, rho));
  }
}

TEST(PiExactTest, Errors) {
  EXPECT_THROW(pi_exact(fig1_instance(), q(2)), Error);
  try {
    pi_exact(fig1_instance(), q(1, 2), OracleOptions{.max_list_constraints = 10});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInstanceTooLarge);
  }
}

TEST(OracleLpTextTest, ListsEveryConstraint) {
  const std::string text = oracle_lp_text(fig1_instance(), q(1, 2));
  EXPECT_NE(text.find("Minimize"), std::string::npos);
  EXPECT_NE(text.find("list_1_34:"), std::string::npos);
  EXPECT_EQ(text.find("list_1_35:"), std::string::npos);
  EXPECT_NE(text.find("w_6_1 >= 0.5"), std::string::npos);
  EXPECT_NE(text.find("End"), std::string::npos);
}

TEST(OracleOptionsTest, ReadsCapFromEnvironment) {
  ::setenv("LISTPRIV_ORACLE_CAP", "42", 1);
  EXPECT_EQ(oracle_options_from_env().max_list_constraints, 42u);
  ::setenv("LISTPRIV_ORACLE_CAP", "x", 1);
  EXPECT_THROW(oracle_options_from_env(), Error);
  ::unsetenv("LISTPRIV_ORACLE_CAP");
  EXPECT_EQ(oracle_options_from_env().max_list_constraints, kDefaultOracleCap);
}

}  // namespace
}  // namespace listpriv
