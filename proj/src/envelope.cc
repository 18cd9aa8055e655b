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

#include "listpriv/envelope.h"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

#include "listpriv/error.h"

namespace listpriv {
namespace {

// Visits every subset of {0..r-1} of size t in lexicographic order.
template <typename Visit>
void for_each_combination(int r, int t, Visit&& visit) {
  std::vector<int> combo(t);
  for (int j = 0; j < t; ++j) combo[j] = j;
  while (true) {
    visit(std::span<const int>(combo));
    int j = t - 1;
    while (j >= 0 && combo[j] == r - t + j) --j;
    if (j < 0) return;
    ++combo[j];
    for (int m = j + 1; m < t; ++m) combo[m] = combo[m - 1] + 1;
  }
}

Rational intersection(const EnvelopeLine& a, const EnvelopeLine& b) {
  return (a.intercept - b.intercept) / (b.slope - a.slope);
}

}  // namespace

Rational PrivacyCurve::evaluate(const Rational& rho) const {
  return segment_at(rho).value(rho);
}

const CurveSegment& PrivacyCurve::segment_at(const Rational& rho) const {
  require_unit_interval(rho);
  for (const auto& seg : segments_) {
    if (rho <= seg.rho_hi) return seg;
  }
  return segments_.back();
}

std::uint64_t count_candidate_sets(int r, int l) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(r, t)
  for (int t = 0; t <= l && t <= r; ++t) {
    if (total > kMax - binom) return kMax;
    total += binom;
    const auto next = static_cast<unsigned __int128>(binom) * static_cast<unsigned>(r - t) / static_cast<unsigned>(t + 1);
    if (next > kMax) return kMax;
    binom = static_cast<std::uint64_t>(next);
  }
  return total;
}

EnvelopeLine envelope_line(const Instance& inst, std::span<const int> lambda) {
  EnvelopeLine line;
  line.lambda.assign(lambda.begin(), lambda.end());
  std::sort(line.lambda.begin(), line.lambda.end());
  std::vector<char> in_lambda(inst.r(), 0);
  for (int x : line.lambda) in_lambda[x] = 1;
  line.intercept = inst.mass(line.lambda);
  const int budget = inst.l() - line.size();
  for (int i = 0; i < inst.k(); ++i) {
    int taken = 0;
    for (int x : inst.ranked_preimage(i)) {
      if (taken == budget) break;
      if (in_lambda[x]) continue;
      line.slope += inst.pmf(x);
      ++taken;
    }
  }
  return line;
}

std::vector<EnvelopeLine> enumerate_lines(const Instance& inst) {
  const std::uint64_t count = count_candidate_sets(inst.r(), inst.l());
  if (count > kMaxCandidateSets) {
    throw Error(ErrorCode::kInstanceTooLarge, "exhaustive enumeration needs " + std::to_string(count) +
                                                  " candidate sets (limit " + std::to_string(kMaxCandidateSets) + ")");
  }
  std::vector<EnvelopeLine> lines;
  lines.reserve(count);
  for (int t = 0; t <= inst.l(); ++t) {
    for_each_combination(inst.r(), t, [&](std::span<const int> lambda) {
      lines.push_back(envelope_line(inst, lambda));
    });
  }
  return lines;
}

bool has_ranked_structure(const Instance& inst, std::span<const int> lambda) {
  std::vector<char> in_lambda(inst.r(), 0);
  for (int x : lambda) in_lambda[x] = 1;
  for (int i = 0; i < inst.k(); ++i) {
    // Members of Lambda must form a prefix of the ranked preimage.
    bool gap = false;
    for (int x : inst.ranked_preimage(i)) {
      if (!in_lambda[x]) {
        gap = true;
      } else if (gap) {
        return false;
      }
    }
  }
  return true;
}

bool preferred_witness(const Instance& inst, std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) return a.size() > b.size();
  const bool ra = has_ranked_structure(inst, a);
  const bool rb = has_ranked_structure(inst, b);
  if (ra != rb) return ra;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

LambdaDecomposition lambda_rho(const Instance& inst, const Rational& rho) {
  require_unit_interval(rho);
  const std::vector<EnvelopeLine> lines = enumerate_lines(inst);
  // Full scan first, then tie-break among all maximizers.
  Rational best = lines.front().value(rho);
  for (const auto& line : lines) best = max(best, line.value(rho));
  const EnvelopeLine* winner = nullptr;
  for (const auto& line : lines) {
    if (line.value(rho) != best) continue;
    if (winner == nullptr || preferred_witness(inst, line.lambda, winner->lambda)) winner = &line;
  }
  LambdaDecomposition out;
  out.lambda = winner->lambda;
  out.objective = best;
  out.per_class_counts.assign(inst.k(), 0);
  for (int x : out.lambda) ++out.per_class_counts[inst.f(x)];
  return out;
}

Rational pi_upper(const Instance& inst, const Rational& rho) {
  return Rational(1) - lambda_rho(inst, rho).objective;
}

Rational pi_at_low_rho(const Instance& inst) {
  const auto top = top_of_alphabet(inst, inst.l());
  return Rational(1) - inst.mass(top);
}

Rational pi_at_one(const Instance& inst) {
  Rational covered(0);
  for (int i = 0; i < inst.k(); ++i) {
    const auto& pre = inst.ranked_preimage(i);
    const int t = std::min<int>(inst.l(), static_cast<int>(pre.size()));
    covered += inst.mass(std::span<const int>(pre).first(t));
  }
  return Rational(1) - covered;
}

PrivacyCurve privacy_curve(const Instance& inst) {
  // Deduplicate by (slope, intercept), keeping the canonical witness.
  std::map<std::pair<Rational, Rational>, EnvelopeLine> distinct;
  for (auto& line : enumerate_lines(inst)) {
    auto key = std::make_pair(line.slope, line.intercept);
    auto it = distinct.find(key);
    if (it == distinct.end()) {
      distinct.emplace(std::move(key), std::move(line));
    } else if (preferred_witness(inst, line.lambda, it->second.lambda)) {
      it->second = std::move(line);
    }
  }
  // Map order is slope ascending, intercept ascending; keep the highest
  // intercept per slope.
  std::vector<EnvelopeLine> sorted;
  for (auto& [key, line] : distinct) {
    if (!sorted.empty() && sorted.back().slope == line.slope) sorted.pop_back();
    sorted.push_back(line);
  }

  std::vector<EnvelopeLine> hull;
  for (auto& line : sorted) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      if (intersection(a, line) <= intersection(a, b)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(std::move(line));
  }

  std::vector<CurveSegment> segments;
  const Rational zero(0), one(1);
  for (std::size_t j = 0; j < hull.size(); ++j) {
    Rational lo = j == 0 ? zero : max(zero, intersection(hull[j - 1], hull[j]));
    Rational hi = j + 1 == hull.size() ? one : min(one, intersection(hull[j], hull[j + 1]));
    if (!(lo < hi)) continue;
    CurveSegment seg;
    seg.rho_lo = std::move(lo);
    seg.rho_hi = std::move(hi);
    seg.slope = -hull[j].slope;
    seg.intercept = one - hull[j].intercept;
    seg.lambda_size = hull[j].size();
    seg.lambda = hull[j].lambda;
    segments.push_back(std::move(seg));
  }

  std::vector<Rational> breakpoints;
  for (int j = 1; j <= inst.l(); ++j) {
    Rational rho_j(0);
    for (const auto& seg : segments) {
      if (seg.lambda_size >= inst.l() - j + 1) rho_j = max(rho_j, seg.rho_hi);
    }
    breakpoints.push_back(std::move(rho_j));
  }
  return PrivacyCurve(std::move(segments), std::move(breakpoints));
}

Rational first_breakpoint(const Instance& inst) {
  return privacy_curve(inst).breakpoints().front();
}

}  // namespace listpriv
