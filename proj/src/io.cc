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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "listpriv/error.h"

namespace listpriv {
namespace {

[[noreturn]] void bad_field(const std::string& message) { throw Error(ErrorCode::kParseError, message); }

const Json& require_field(const Json& raw, const char* name) {
  if (!raw.is_object()) bad_field("expected a JSON object");
  auto it = raw.find(name);
  if (it == raw.end()) bad_field(std::string("missing field \"") + name + "\"");
  return *it;
}

Rational rational_field(const Json& value, const std::string& where) {
  if (!value.is_string()) bad_field(where + ": expected a string such as \"3/10\" or \"0.3\"");
  try {
    return Rational::parse(value.get<std::string>());
  } catch (const Error& e) {
    bad_field(where + ": " + e.what());
  }
}

int int_field(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) bad_field(where + ": expected an integer");
  return value.get<int>();
}

RationalMatrix rational_table(const Json& rows, const std::string& where) {
  if (!rows.is_array() || rows.empty() || !rows[0].is_array()) bad_field(where + ": expected an array of rows");
  const auto cols = static_cast<Eigen::Index>(rows[0].size());
  RationalMatrix out(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t x = 0; x < rows.size(); ++x) {
    if (!rows[x].is_array() || static_cast<Eigen::Index>(rows[x].size()) != cols) {
      throw Error(ErrorCode::kDimensionMismatch, where + ": row " + std::to_string(x) + " has the wrong length");
    }
    for (std::size_t i = 0; i < rows[x].size(); ++i) {
      out(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(i)) =
          rational_field(rows[x][i], where + "[" + std::to_string(x) + "][" + std::to_string(i) + "]");
    }
  }
  return out;
}

Json rational_rows(const RationalMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index x = 0; x < m.rows(); ++x) {
    Json row = Json::array();
    for (Eigen::Index i = 0; i < m.cols(); ++i) row.push_back(m(x, i).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json labelled_list(const std::vector<int>& list, const Instance& inst) {
  Json out = Json::array();
  for (int x : list) {
    if (inst.labels().empty()) {
      out.push_back(x);
    } else {
      out.push_back(inst.label(x));
    }
  }
  return out;
}

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

InstanceDocument parse_instance(const Json& raw) {
  const Json& pmf_raw = require_field(raw, "pmf");
  const Json& f_raw = require_field(raw, "f");
  const Json& l_raw = require_field(raw, "l");
  if (!pmf_raw.is_array()) bad_field("\"pmf\" must be an array");
  if (!f_raw.is_array()) bad_field("\"f\" must be an array");

  std::vector<Rational> pmf;
  for (std::size_t x = 0; x < pmf_raw.size(); ++x) pmf.push_back(rational_field(pmf_raw[x], "pmf[" + std::to_string(x) + "]"));
  std::vector<int> f;
  for (std::size_t x = 0; x < f_raw.size(); ++x) f.push_back(int_field(f_raw[x], "f[" + std::to_string(x) + "]"));
  const int l = int_field(l_raw, "l");

  std::optional<int> k;
  if (auto it = raw.find("k"); it != raw.end()) k = int_field(*it, "k");
  std::vector<std::string> labels;
  if (auto it = raw.find("labels"); it != raw.end()) {
    if (!it->is_array()) bad_field("\"labels\" must be an array of strings");
    for (const auto& label : *it) {
      if (!label.is_string()) bad_field("\"labels\" must be an array of strings");
      labels.push_back(label.get<std::string>());
    }
  }
  std::optional<Rational> rho;
  if (auto it = raw.find("rho"); it != raw.end()) {
    rho = rational_field(*it, "rho");
    require_unit_interval(*rho);
  }
  return InstanceDocument{Instance::create(std::move(pmf), std::move(f), l, k, std::move(labels)), rho};
}

InstanceDocument parse_instance_text(std::string_view text) { return parse_instance(parse_json_text(text)); }

Json instance_to_json(const Instance& inst, const std::optional<Rational>& rho) {
  Json out;
  Json pmf = Json::array();
  for (const auto& p : inst.pmf()) pmf.push_back(p.str());
  out["pmf"] = std::move(pmf);
  out["f"] = inst.f();
  out["l"] = inst.l();
  out["k"] = inst.k();
  if (!inst.labels().empty()) out["labels"] = inst.labels();
  if (rho) out["rho"] = rho->str();
  return out;
}

std::string serialize_instance(const Instance& inst, const std::optional<Rational>& rho) {
  return instance_to_json(inst, rho).dump(2) + "\n";
}

std::string instance_hash(const Instance& inst) {
  std::string canonical;
  for (const auto& p : inst.pmf()) canonical += p.str() + ",";
  canonical += ";";
  for (int v : inst.f()) canonical += std::to_string(v) + ",";
  canonical += ";k=" + std::to_string(inst.k());
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json mechanism_to_json(const StochasticMatrix& w, const Instance& inst, std::string_view kind) {
  require_dimensions(w, inst);
  Json out;
  out["instance_hash"] = instance_hash(inst);
  out["kind"] = std::string(kind);
  out["rows"] = rational_rows(w.entries());
  return out;
}

StochasticMatrix parse_mechanism(const Json& raw, const Instance* inst) {
  StochasticMatrix w(rational_table(require_field(raw, "rows"), "rows"));
  if (inst != nullptr) {
    if (auto it = raw.find("instance_hash"); it != raw.end()) {
      if (!it->is_string() || it->get<std::string>() != instance_hash(*inst)) {
        throw Error(ErrorCode::kHashMismatch, "mechanism was built for a different instance (hash " +
                                                  (it->is_string() ? it->get<std::string>() : std::string("?")) +
                                                  ", expected " + instance_hash(*inst) + ")");
      }
    }
    require_dimensions(w, *inst);
  }
  return w;
}

NoisePmf parse_noise(const Json& raw) { return NoisePmf(rational_table(require_field(raw, "noise"), "noise")); }

Json curve_to_json(const PrivacyCurve& curve, const Instance& inst) {
  Json out;
  out["r"] = inst.r();
  out["k"] = inst.k();
  out["l"] = inst.l();
  Json breakpoints = Json::array();
  for (const auto& b : curve.breakpoints()) breakpoints.push_back(b.str());
  out["breakpoints"] = std::move(breakpoints);
  out["pi_at_zero"] = curve.evaluate(Rational(0)).str();
  out["pi_at_one"] = curve.evaluate(Rational(1)).str();
  Json segments = Json::array();
  for (const auto& seg : curve.segments()) {
    Json s;
    s["rho_lo"] = seg.rho_lo.str();
    s["rho_hi"] = seg.rho_hi.str();
    s["slope"] = seg.slope.str();
    s["intercept"] = seg.intercept.str();
    s["lambda_size"] = seg.lambda_size;
    s["lambda"] = labelled_list(seg.lambda, inst);
    segments.push_back(std::move(s));
  }
  out["segments"] = std::move(segments);
  return out;
}

std::string curve_segments_csv(const PrivacyCurve& curve) {
  std::ostringstream os;
  os << "rho_lo,rho_hi,slope,intercept,lambda_size\n";
  for (const auto& seg : curve.segments()) {
    os << seg.rho_lo << ',' << seg.rho_hi << ',' << seg.slope << ',' << seg.intercept << ',' << seg.lambda_size
       << '\n';
  }
  return os.str();
}

std::string curve_samples_csv(const PrivacyCurve& curve, int samples) {
  if (samples < 2) throw Error(ErrorCode::kParseError, "--samples must be at least 2");
  std::ostringstream os;
  os << "rho,pi_u,rho_exact,pi_u_exact\n";
  for (int j = 0; j < samples; ++j) {
    const Rational rho(j, samples - 1);
    const Rational value = curve.evaluate(rho);
    os << decimal(rho.to_double()) << ',' << decimal(value.to_double()) << ',' << rho << ',' << value << '\n';
  }
  return os.str();
}

Json report_to_json(const PrivacyReport& report, const Instance& inst) {
  Json out;
  out["privacy"] = report.privacy.str();
  out["privacy_decimal"] = report.privacy.to_double();
  Json lists = Json::array();
  for (const auto& list : report.estimator.lists()) lists.push_back(labelled_list(list, inst));
  out["estimator"] = std::move(lists);
  Json mass = Json::array();
  for (const auto& m : report.per_output_mass) mass.push_back(m.str());
  out["per_output_mass"] = std::move(mass);
  return out;
}

Json oracle_to_json(const OracleResult& result, const Instance& inst, const Rational& rho) {
  Json out;
  out["rho"] = rho.str();
  out["optimum"] = result.optimum.str();
  out["optimum_decimal"] = result.optimum.to_double();
  out["witness"] = rational_rows(result.witness.entries());
  Json active = Json::array();
  for (const auto& per_output : result.active_lists) {
    Json lists = Json::array();
    for (const auto& list : per_output) lists.push_back(labelled_list(list, inst));
    active.push_back(std::move(lists));
  }
  out["active_lists"] = std::move(active);
  out["add_noise_form"] = result.add_noise_form;
  out["pivots"] = result.pivots;
  return out;
}

Json sim_report_to_json(const SimReport& report) {
  Json out;
  out["trials"] = report.trials;
  out["misses"] = report.misses;
  out["empirical_privacy"] = report.empirical_privacy;
  out["std_error"] = report.std_error;
  out["seed"] = report.seed;
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "rho,empirical,analytic,error,std_error\n";
  for (const auto& row : rows) {
    const double analytic = row.analytic.to_double();
    os << row.rho << ',' << decimal(row.sim.empirical_privacy) << ',' << decimal(analytic) << ','
       << decimal(row.sim.empirical_privacy - analytic) << ',' << decimal(row.sim.std_error) << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t j = 0; j < e.byte && j < text.size(); ++j) {
      if (text[j] == '\n') ++line;
    }
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + e.what());
  }
}

}  // namespace listpriv
