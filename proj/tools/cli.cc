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

#include "cli.h"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "listpriv/adversary.h"
#include "listpriv/catalog.h"
#include "listpriv/envelope.h"
#include "listpriv/error.h"
#include "listpriv/io.h"
#include "listpriv/mechanisms.h"
#include "listpriv/oracle.h"
#include "listpriv/simulate.h"

namespace listpriv::cli {
namespace {

struct Options {
  std::string instance;
  int list_size = 0;
  std::string output;
  std::string format = "exact";
  int samples = 0;
  std::string kind;
  std::string rho;
  std::string noise;
  std::string mechanism;
  int grid = 0;
  std::string lp_dump;
  std::uint64_t trials = 0;
  std::optional<std::uint64_t> seed;
  int sweep = 0;
};

// A path to an instance file, or a catalog name when no such file exists.
InstanceDocument load_instance(const Options& opt) {
  std::ifstream probe(opt.instance);
  InstanceDocument doc = [&] {
    if (!probe) {
      if (auto inst = catalog_instance(opt.instance)) return InstanceDocument{*inst, std::nullopt};
    }
    return parse_instance_text(read_file(opt.instance));
  }();
  if (opt.list_size > 0) doc.instance = doc.instance.with_list_size(opt.list_size);
  return doc;
}

std::optional<Rational> rho_option(const Options& opt, const InstanceDocument& doc) {
  if (!opt.rho.empty()) {
    Rational rho = Rational::parse(opt.rho);
    require_unit_interval(rho);
    return rho;
  }
  return doc.rho;
}

Rational required_rho(const Options& opt, const InstanceDocument& doc, const char* what) {
  auto rho = rho_option(opt, doc);
  if (!rho) throw Error(ErrorCode::kRhoOutOfRange, std::string(what) + " needs --rho");
  return *rho;
}

void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, "cannot write '" + opt.output + "'");
  file << text;
}

std::vector<Rational> uniform_grid(int points) {
  if (points < 2) throw Error(ErrorCode::kParseError, "grid needs at least 2 points");
  std::vector<Rational> grid;
  for (int j = 0; j < points; ++j) grid.emplace_back(j, points - 1);
  return grid;
}

StochasticMatrix build_mechanism(const std::string& kind, const Instance& inst, const std::optional<Rational>& rho,
                                 const std::string& noise_path) {
  auto need_rho = [&]() -> const Rational& {
    if (!rho) throw Error(ErrorCode::kRhoOutOfRange, "--kind " + kind + " needs --rho");
    return *rho;
  };
  if (kind == "uniform") return uniform_qr(inst);
  if (kind == "deterministic") return deterministic_qr(inst);
  if (kind == "optimal-binary") return optimal_binary_qr(inst, need_rho());
  if (kind == "counterexample") {
    auto [ce_inst, w] = counterexample_qr(need_rho());
    if (ce_inst.pmf() != inst.pmf() || ce_inst.f() != inst.f()) {
      throw Error(ErrorCode::kDimensionMismatch, "the counterexample mechanism only applies to the counterexample instance");
    }
    return w;
  }
  if (kind == "noise-file") {
    if (noise_path.empty()) throw Error(ErrorCode::kParseError, "--kind noise-file needs --noise");
    return add_noise_qr(inst, parse_noise(parse_json_text(read_file(noise_path))));
  }
  throw Error(ErrorCode::kParseError, "unknown mechanism kind '" + kind + "'");
}

std::string cmd_validate(const Options& opt) {
  const Instance inst = load_instance(opt).instance;
  std::ostringstream os;
  os << "r=" << inst.r() << " k=" << inst.k() << " l=" << inst.l() << ", preimages [";
  for (int i = 0; i < inst.k(); ++i) os << (i ? "," : "") << inst.preimage(i).size();
  os << "]\n";
  return os.str();
}

std::string cmd_curve(const Options& opt) {
  const Instance inst = load_instance(opt).instance;
  const PrivacyCurve curve = privacy_curve(inst);
  if (opt.format == "exact") return curve_to_json(curve, inst).dump(2) + "\n";
  if (opt.format == "csv") return opt.samples > 0 ? curve_samples_csv(curve, opt.samples) : curve_segments_csv(curve);
  throw Error(ErrorCode::kParseError, "unknown --format '" + opt.format + "'");
}

std::string cmd_mechanism(const Options& opt) {
  const InstanceDocument doc = load_instance(opt);
  const StochasticMatrix w = build_mechanism(opt.kind, doc.instance, rho_option(opt, doc), opt.noise);
  Json out = mechanism_to_json(w, doc.instance, opt.kind);
  if (auto rho = rho_option(opt, doc)) out["rho"] = rho->str();
  return out.dump(2) + "\n";
}

std::string cmd_eval(const Options& opt) {
  const InstanceDocument doc = load_instance(opt);
  const Instance& inst = doc.instance;
  const StochasticMatrix w = parse_mechanism(parse_json_text(read_file(opt.mechanism)), &inst);
  const PrivacyReport report = list_privacy(inst, w);
  Json out = report_to_json(report, inst);
  if (auto rho = rho_option(opt, doc)) {
    const Rational bound = pi_upper(inst, *rho);
    out["rho"] = rho->str();
    out["recoverable"] = check_rho_recoverable(w, inst, *rho);
    out["pi_upper"] = bound.str();
    out["gap"] = (bound - report.privacy).str();
  }
  return out.dump(2) + "\n";
}

std::string cmd_oracle(const Options& opt) {
  const InstanceDocument doc = load_instance(opt);
  const Instance& inst = doc.instance;
  const OracleOptions options = oracle_options_from_env();
  if (!opt.lp_dump.empty()) {
    const Rational rho = required_rho(opt, doc, "--lp-dump");
    std::ofstream file(opt.lp_dump, std::ios::binary);
    if (!file) throw Error(ErrorCode::kIoError, "cannot write '" + opt.lp_dump + "'");
    file << oracle_lp_text(inst, rho, options);
  }
  if (opt.grid > 0) {
    std::ostringstream os;
    os << "rho,oracle,envelope,equal,add_noise_form,oracle_decimal,envelope_decimal\n";
    for (const auto& [rho, result] : pi_exact_curve(inst, uniform_grid(opt.grid), options)) {
      const Rational envelope = pi_upper(inst, rho);
      os << rho << ',' << result.optimum << ',' << envelope << ',' << (result.optimum == envelope ? "true" : "false")
         << ',' << (result.add_noise_form ? "true" : "false") << ',' << to_decimal(result.optimum) << ','
         << to_decimal(envelope) << '\n';
    }
    return os.str();
  }
  const Rational rho = required_rho(opt, doc, "oracle");
  const OracleResult result = pi_exact(inst, rho, options);
  Json out = oracle_to_json(result, inst, rho);
  const Rational envelope = pi_upper(inst, rho);
  out["envelope"] = envelope.str();
  out["equal"] = result.optimum == envelope;
  return out.dump(2) + "\n";
}

std::string cmd_simulate(const Options& opt) {
  const InstanceDocument doc = load_instance(opt);
  const Instance& inst = doc.instance;
  if (!opt.seed) throw Error(ErrorCode::kParseError, "--seed is required");
  if (opt.trials == 0) throw Error(ErrorCode::kParseError, "--trials must be positive");
  if (opt.sweep > 0) {
    const std::string kind = opt.kind.empty() ? "optimal-binary" : opt.kind;
    auto factory = [&](const Rational& rho) { return build_mechanism(kind, inst, rho, opt.noise); };
    std::vector<Rational> grid = uniform_grid(opt.sweep);
    if (kind == "counterexample") {
      // Defined on [1/2, 1] only.
      for (auto& rho : grid) rho = Rational(1, 2) + rho / Rational(2);
    }
    return sweep_csv(simulate_sweep(inst, factory, grid, opt.trials, *opt.seed));
  }
  if (opt.mechanism.empty()) throw Error(ErrorCode::kParseError, "--mechanism or --sweep is required");
  const StochasticMatrix w = parse_mechanism(parse_json_text(read_file(opt.mechanism)), &inst);
  const PrivacyReport exact = list_privacy(inst, w);
  const SimReport sim = simulate_game(inst, w, exact.estimator, opt.trials, *opt.seed);
  Json out = sim_report_to_json(sim);
  out["exact_privacy"] = exact.privacy.str();
  out["exact_privacy_decimal"] = exact.privacy.to_double();
  return out.dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact list-privacy / recoverability tradeoffs for finite alphabets", "listpriv"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("instance", opt.instance, "Instance file, or a catalog name (fig1, uniform4, counterexample)")
        ->required();
    sub->add_option("--list-size,-l", opt.list_size, "Override the list size l");
    sub->add_option("--output,-o", opt.output, "Write to this file instead of standard output");
  };

  auto* validate = app.add_subcommand("validate", "Check an instance and print its shape");
  add_common(validate);

  auto* curve = app.add_subcommand("curve", "Exact converse-bound curve pi_u(rho)");
  add_common(curve);
  curve->add_option("--format", opt.format, "exact (JSON) or csv")->check(CLI::IsMember({"exact", "csv"}));
  curve->add_option("--samples", opt.samples, "With --format csv: sample n evenly spaced points");

  auto* mechanism = app.add_subcommand("mechanism", "Build a query-response mechanism");
  add_common(mechanism);
  mechanism->add_option("--kind", opt.kind, "uniform|deterministic|optimal-binary|counterexample|noise-file")
      ->required()
      ->check(CLI::IsMember({"uniform", "deterministic", "optimal-binary", "counterexample", "noise-file"}));
  mechanism->add_option("--rho", opt.rho, "Recoverability level, p/q or decimal");
  mechanism->add_option("--noise", opt.noise, "Noise file for --kind noise-file");

  auto* eval = app.add_subcommand("eval", "Exact list privacy of a mechanism");
  add_common(eval);
  eval->add_option("--mechanism", opt.mechanism, "Mechanism file")->required();
  eval->add_option("--rho", opt.rho, "Also check recoverability and report the gap to pi_u(rho)");

  auto* oracle = app.add_subcommand("oracle", "Exact list rho-privacy by linear programming");
  add_common(oracle);
  auto* rho_opt = oracle->add_option("--rho", opt.rho, "Single rho");
  auto* grid_opt = oracle->add_option("--grid", opt.grid, "Evenly spaced grid of n points on [0, 1] (CSV)");
  rho_opt->excludes(grid_opt);
  oracle->add_option("--lp-dump", opt.lp_dump, "Also write the LP at --rho in CPLEX LP format");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of list privacy");
  add_common(simulate);
  simulate->add_option("--mechanism", opt.mechanism, "Mechanism file");
  simulate->add_option("--trials", opt.trials, "Number of trials")->required();
  simulate->add_option("--seed", opt.seed, "Generator seed (mt19937_64)")->required();
  simulate->add_option("--sweep", opt.sweep, "Sweep n rho values (CSV) instead of one mechanism file");
  simulate->add_option("--kind", opt.kind, "Mechanism family for --sweep (default optimal-binary)");
  simulate->add_option("--noise", opt.noise, "Noise file for --kind noise-file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error[UsageError]: " << e.what() << "\n";
    return 1;
  }

  try {
    std::string text;
    if (*validate) text = cmd_validate(opt);
    if (*curve) text = cmd_curve(opt);
    if (*mechanism) text = cmd_mechanism(opt);
    if (*eval) text = cmd_eval(opt);
    if (*oracle) text = cmd_oracle(opt);
    if (*simulate) text = cmd_simulate(opt);
    emit(opt, out, text);
    return 0;
  } catch (const Error& e) {
    err << "error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error[Internal]: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace listpriv::cli
