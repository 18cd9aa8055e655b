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

#ifndef LISTPRIV_ENVELOPE_H_
#define LISTPRIV_ENVELOPE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "listpriv/instance.h"
#include "listpriv/rational.h"

namespace listpriv {

// Largest number of candidate sets (|Lambda| <= l) enumerated exhaustively.
inline constexpr std::uint64_t kMaxCandidateSets = 2'000'000;

// Affine function rho -> P_X(Lambda) + rho * sum_i P_X([f^{-1}(i) \ Lambda]_{m_i})
// with m_i = min{l - |Lambda|, |f^{-1}(i) \ Lambda|}.
struct EnvelopeLine {
  std::vector<int> lambda;  // ascending
  Rational intercept;
  Rational slope;

  int size() const { return static_cast<int>(lambda.size()); }
  Rational value(const Rational& rho) const { return intercept + slope * rho; }
};

// A maximizer of the converse-bound objective at one rho.
struct LambdaDecomposition {
  std::vector<int> lambda;            // ascending
  std::vector<int> per_class_counts;  // |Lambda ∩ f^{-1}(i)|
  Rational objective;

  int size() const { return static_cast<int>(lambda.size()); }
};

// pi_u(rho) = intercept + slope * rho on [rho_lo, rho_hi].
struct CurveSegment {
  Rational rho_lo;
  Rational rho_hi;
  Rational slope;
  Rational intercept;
  int lambda_size = 0;
  std::vector<int> lambda;  // canonical witness of the envelope line

  Rational value(const Rational& rho) const { return intercept + slope * rho; }
};

// The converse bound pi_u^(l) as an exact piecewise-affine function on [0, 1].
class PrivacyCurve {
 public:
  PrivacyCurve(std::vector<CurveSegment> segments, std::vector<Rational> breakpoints)
      : segments_(std::move(segments)), breakpoints_(std::move(breakpoints)) {}

  const std::vector<CurveSegment>& segments() const { return segments_; }
  // rho_1 <= ... <= rho_l; rho_j is the largest rho at which |Lambda_rho| >= l - j + 1.
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }

  // Throws kRhoOutOfRange outside [0, 1].
  Rational evaluate(const Rational& rho) const;
  const CurveSegment& segment_at(const Rational& rho) const;

 private:
  std::vector<CurveSegment> segments_;
  std::vector<Rational> breakpoints_;
};

// sum_{t=0}^{l} C(r, t), saturating at UINT64_MAX.
std::uint64_t count_candidate_sets(int r, int l);

EnvelopeLine envelope_line(const Instance& inst, std::span<const int> lambda);

// One line per Lambda with |Lambda| <= l, by cardinality then lexicographic
// order. Throws kInstanceTooLarge beyond kMaxCandidateSets.
std::vector<EnvelopeLine> enumerate_lines(const Instance& inst);

// Lambda ∩ f^{-1}(i) = [f^{-1}(i)]_{|Lambda ∩ f^{-1}(i)|} for every i.
bool has_ranked_structure(const Instance& inst, std::span<const int> lambda);

// Canonical order among objective-equal candidates: larger |Lambda| first,
// then sets with ranked structure, then lexicographically smaller.
bool preferred_witness(const Instance& inst, std::span<const int> a, std::span<const int> b);

LambdaDecomposition lambda_rho(const Instance& inst, const Rational& rho);
Rational pi_upper(const Instance& inst, const Rational& rho);

// 1 - P_X(L_l^*); the list rho-privacy for 0 <= rho <= 1/k.
Rational pi_at_low_rho(const Instance& inst);
// 1 - sum_i P_X([f^{-1}(i)]_{min{l, |f^{-1}(i)|}}).
Rational pi_at_one(const Instance& inst);

PrivacyCurve privacy_curve(const Instance& inst);
Rational first_breakpoint(const Instance& inst);

}  // namespace listpriv

#endif  // LISTPRIV_ENVELOPE_H_
