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

#include "listpriv/io.h"

#include <random>

#include <gtest/gtest.h>

#include "listpriv/catalog.h"
#include "listpriv/error.h"
#include "test_util.h"

namespace listpriv {
namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

TEST(CurveExportTest, SegmentsCsvIsExact) {
  EXPECT_EQ(curve_segments_csv(privacy_curve(fig1_instance())),
            "rho_lo,rho_hi,slope,intercept,lambda_size\n"
            "0,3/5,0,7/20,3\n"
            "3/5,2/3,-1/4,1/2,2\n"
            "2/3,3/4,-11/20,7/10,1\n"
            "3/4,1,-19/20,1,0\n");
}

TEST(CurveExportTest, SamplesCsv) {
  const std::string csv = curve_samples_csv(privacy_curve(fig1_instance()), 5);
  EXPECT_EQ(csv,
            "rho,pi_u,rho_exact,pi_u_exact\n"
            "0,0.35,0,7/20\n"
            "0.25,0.35,1/4,7/20\n"
            "0.5,0.35,1/2,7/20\n"
            "0.75,0.2875,3/4,23/80\n"
            "1,0.05,1,1/20\n");
  EXPECT_THROW(curve_samples_csv(privacy_curve(fig1_instance()), 1), Error);
}

TEST(CurveExportTest, JsonCarriesBreakpoints) {
  const Json j = curve_to_json(privacy_curve(fig1_instance()), fig1_instance());
  EXPECT_EQ(j["breakpoints"], Json::array({"3/5", "2/3", "3/4"}));
  EXPECT_EQ(j["pi_at_zero"], "7/20");
  EXPECT_EQ(j["pi_at_one"], "1/20");
  EXPECT_EQ(j["segments"].size(), 4u);
}

TEST(MechanismIoTest, RoundTripAndHashCheck) {
  std::mt19937_64 gen(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = testing::random_instance(gen);
    const StochasticMatrix w = testing::random_recoverable(gen, inst, testing::random_unit_rational(gen));
    const Json doc = parse_json_text(mechanism_to_json(w, inst, "random").dump());
    EXPECT_EQ(parse_mechanism(doc, &inst), w);
  }
  const Instance fig1 = fig1_instance();
  const Json doc = mechanism_to_json(uniform_qr(fig1), fig1, "uniform");
  // Same pmf and f with a different l share the hash.
  const Instance shorter = fig1.with_list_size(2);
  EXPECT_NO_THROW(parse_mechanism(doc, &shorter));
  Json tampered = doc;
  tampered["instance_hash"] = "0000000000000000";
  try {
    parse_mechanism(tampered, &fig1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHashMismatch);
  }
  EXPECT_NE(instance_hash(fig1), instance_hash(uniform4_instance()));
}

TEST(MechanismIoTest, RejectsNonStochasticRows) {
  const Json doc = parse_json_text(R"({"rows": [["1/2", "1/3"], ["0", "1"]]})");
  EXPECT_THROW(parse_mechanism(doc), Error);
}

TEST(NoiseIoTest, Parses) {
  const NoisePmf noise = parse_noise(parse_json_text(R"({"noise": [["3/4", "0.25"], ["1/2", "1/2"]]})"));
  EXPECT_EQ(noise.conditional()(0, 1), q(1, 4));
}

TEST(ReportIoTest, UsesLabels) {
  const Instance inst = Instance::create(std::vector<Rational>(3, q(1, 3)), {0, 1, 1}, 1, 2, {"a", "b", "c"});
  const Json j = report_to_json(list_privacy(inst, deterministic_qr(inst)), inst);
  EXPECT_EQ(j["privacy"], "1/3");
  EXPECT_EQ(j["estimator"], Json::array({Json::array({"a"}), Json::array({"b"})}));
}

}  // namespace
}  // namespace listpriv
