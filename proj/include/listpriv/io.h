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

#ifndef LISTPRIV_IO_H_
#define LISTPRIV_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "listpriv/adversary.h"
#include "listpriv/envelope.h"
#include "listpriv/instance.h"
#include "listpriv/mechanisms.h"
#include "listpriv/oracle.h"
#include "listpriv/simulate.h"

namespace listpriv {

using Json = nlohmann::ordered_json;

// Instance files are JSON objects:
//   {"pmf": ["3/10", "0.2", ...], "f": [0, 0, 1, ...], "l": 3,
//    "k": 2, "labels": ["a", "b", ...], "rho": "1/2"}
// "k", "labels" and "rho" are optional. pmf entries are strings holding
// "p/q" or a decimal literal; they are read exactly.
struct InstanceDocument {
  Instance instance;
  std::optional<Rational> rho;
};

InstanceDocument parse_instance(const Json& raw);
InstanceDocument parse_instance_text(std::string_view text);
Json instance_to_json(const Instance& inst, const std::optional<Rational>& rho = std::nullopt);
std::string serialize_instance(const Instance& inst, const std::optional<Rational>& rho = std::nullopt);

// 16 hex digits of FNV-1a over the canonical pmf strings and f; list size
// and labels do not enter, so one mechanism file serves every l.
std::string instance_hash(const Instance& inst);

// Mechanism files: {"instance_hash": "...", "kind": "...", "rows": [["1/2", "1/2"], ...]}
Json mechanism_to_json(const StochasticMatrix& w, const Instance& inst, std::string_view kind);
// Throws kHashMismatch when `inst` is given and the stored hash differs.
StochasticMatrix parse_mechanism(const Json& raw, const Instance* inst = nullptr);

// Noise files: {"noise": [["3/4", "1/4"], ["3/4", "1/4"]]}, row i = P(N = . | f(X) = i).
NoisePmf parse_noise(const Json& raw);

Json curve_to_json(const PrivacyCurve& curve, const Instance& inst);
// rho_lo,rho_hi,slope,intercept,lambda_size as exact rational strings.
std::string curve_segments_csv(const PrivacyCurve& curve);
// `samples` evenly spaced points on [0, 1] (samples >= 2): rho,pi_u decimals.
std::string curve_samples_csv(const PrivacyCurve& curve, int samples);

Json report_to_json(const PrivacyReport& report, const Instance& inst);
Json oracle_to_json(const OracleResult& result, const Instance& inst, const Rational& rho);
Json sim_report_to_json(const SimReport& report);
// rho,empirical,analytic,error,std_error
std::string sweep_csv(const std::vector<SweepRow>& rows);

std::string read_file(const std::string& path);
Json parse_json_text(std::string_view text);

}  // namespace listpriv

#endif  // LISTPRIV_IO_H_
