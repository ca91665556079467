// Copyright 2026 The qprobe Authors
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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <utility>

#include "qprobe/measures.hpp"
#include "qprobe/protocols.hpp"

namespace qprobe::cli {

namespace {

using KeyValues = std::vector<std::pair<std::string, double>>;

double require_x(const RunConfig& cfg) {
  if (!cfg.x) throw CliError(kExitValidation, "--x is required");
  return OneParamState(*cfg.x).x();
}

ModelConfig model_config(const RunConfig& cfg, ModelVariant fallback) {
  ModelVariant v = fallback;
  if (cfg.model) {
    const auto parsed = parse_model_variant(*cfg.model);
    if (!parsed) throw CliError(kExitValidation, "unknown model '" + *cfg.model + "'");
    v = *parsed;
  }
  ModelConfig m{v, cfg.g, cfg.delta, cfg.nmax, true};
  m.validate();
  return m;
}

double gamma_or(const RunConfig& cfg, double fallback) {
  const double g = cfg.gamma.value_or(fallback);
  if (!(g >= 0.0) || !std::isfinite(g)) throw CliError(kExitValidation, "gamma must be >= 0");
  return g;
}

void add_report(KeyValues& kv, const std::string& prefix, const CorrelationReport& r) {
  kv.emplace_back(prefix + "concurrence", r.concurrence);
  kv.emplace_back(prefix + "mutual_info", r.mutual_info);
  kv.emplace_back(prefix + "classical", r.classical);
  kv.emplace_back(prefix + "discord", r.discord);
  kv.emplace_back(prefix + "classical_eq20", r.classical_eq20);
}

// Text to stdout as "name value"; to --out as a two-column CSV.
void emit_key_values(const KeyValues& kv, const std::string& out_path, std::ostream& out) {
  std::string text;
  for (const auto& [k, v] : kv) text += k + " " + format_number(v) + "\n";
  out << text;
  if (!out_path.empty()) {
    std::string csv = "quantity,value\n";
    for (const auto& [k, v] : kv) csv += k + "," + format_number(v) + "\n";
    write_file(out_path, csv);
  }
}

void emit_table(const Table& t, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << to_csv(t);
  } else {
    write_file(out_path, to_csv(t));
  }
}

std::string svg_path(const std::string& csv_path, const std::string& suffix) {
  std::string stem = csv_path;
  if (stem.size() > 4 && stem.compare(stem.size() - 4, 4, ".csv") == 0) stem.resize(stem.size() - 4);
  return stem + suffix + ".svg";
}

std::vector<std::string> present(const Table& t, std::vector<std::string> wanted) {
  std::vector<std::string> out;
  for (std::string& w : wanted) {
    for (const std::string& h : t.header) {
      if (h == w) out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace

int cmd_measures(const RunConfig& cfg, std::ostream& out) {
  const double x = require_x(cfg);
  const DensityMatrix rho = one_param_density(x);
  const CorrelationReport r = correlation_report(rho);
  const ClassicalCorrelation cc = classical_correlation_optimized(rho);
  const Eq20Branches b = eq20_min_conditional_entropy(extract_xstate(rho));

  KeyValues kv{{"x", x}};
  add_report(kv, "", r);
  kv.emplace_back("min_conditional_entropy", cc.min_conditional_entropy);
  kv.emplace_back("eq20_branch1", b.branch1);
  kv.emplace_back("eq20_branch2", b.branch2);
  kv.emplace_back("eq20_selected_branch", b.selected);
  kv.emplace_back("optimizer_theta", r.optimizer_basis.theta);
  kv.emplace_back("optimizer_phi", r.optimizer_basis.phi);
  kv.emplace_back("sigma_z_readout", 3.0 - 4.0 * x);
  emit_key_values(kv, cfg.out, out);
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  SweepOptions opts;
  opts.x_start = cfg.x_start;
  opts.x_stop = cfg.x_stop;
  opts.x_step = cfg.x_step;
  opts.gamma = gamma_or(cfg, 0.1);
  opts.model = model_config(cfg, ModelVariant::secii_qubit);
  opts.dt = cfg.dt;
  if (cfg.emit_svg && (cfg.out.empty() || cfg.out == "-")) {
    throw CliError(kExitValidation, "--emit-svg requires --out");
  }

  const Table t = run_sweep(opts);
  emit_table(t, cfg.out, out);
  if (cfg.emit_svg) {
    write_file(svg_path(cfg.out, "_correlations"),
               render_svg(t, present(t, {"discord", "classical", "discord_noisy", "classical_noisy"}),
                          "Quantum discord and classical correlation vs. x"));
    write_file(svg_path(cfg.out, "_readout"),
               render_svg(t, present(t, {"concurrence", "sigma_z", "concurrence_noisy", "sigma_z_noisy"}),
                          "Concurrence and probe <sigma_z> vs. x"));
  }
  return kExitOk;
}

int cmd_evolve(const RunConfig& cfg, std::ostream& out) {
  const double x = require_x(cfg);
  const ModelConfig model = model_config(cfg, ModelVariant::secii_qubit);
  const double gamma = gamma_or(cfg, 0.0);
  if (cfg.samples < 2) throw CliError(kExitValidation, "--samples must be at least 2");

  double t_end = 0.0;
  if (cfg.t_end) {
    t_end = *cfg.t_end;
  } else {
    t_end = model.is_secii() ? std::numbers::pi / (2.0 * model.g) : find_transfer_time(model.exchange_strength());
  }
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw CliError(kExitValidation, "--t-end must be positive");

  ProbePrep prep = model.is_secii() ? ProbePrep::ground : ProbePrep::excited;
  if (cfg.probe == "g" || cfg.probe == "ground") {
    prep = ProbePrep::ground;
  } else if (cfg.probe == "e" || cfg.probe == "excited") {
    prep = ProbePrep::excited;
  } else if (!cfg.probe.empty()) {
    throw CliError(kExitValidation, "--probe must be 'g' or 'e'");
  }

  const DensityMatrix joint0 = initial_joint_state(model, one_param_density(x), prep);
  std::vector<double> times;
  for (int k = 1; k < cfg.samples; ++k) times.push_back(t_end * k / (cfg.samples - 1));
  const EvolutionResult r = gamma > 0.0
                                ? integrate_master(joint0, model, NoiseConfig::spontaneous_emission(model, gamma),
                                                   t_end, cfg.dt, times)
                                : evolve_unitary(joint0, model, times);

  Table t;
  t.header = {"t", "concurrence", "mutual_info", "classical", "discord", "sigma_z", "p_excited", "leakage"};
  auto add_row = [&](double time, const DensityMatrix& ab, const DensityMatrix& probe) {
    const QubitProjection view = qubit_view_ab(model, ab);
    const CorrelationReport rep = correlation_report(view.state);
    const double p_e = probe(0, 0).real();
    t.rows.push_back({time, rep.concurrence, rep.mutual_info, rep.classical, rep.discord, 2.0 * p_e - 1.0, p_e,
                      view.leakage});
  };
  add_row(0.0, reduced_ab(model, joint0), reduced_probe(model, joint0));
  for (std::size_t k = 0; k < r.times.size(); ++k) add_row(r.times[k], r.reduced_ab[k], r.probe[k]);
  emit_table(t, cfg.out, out);
  return kExitOk;
}

int cmd_probe(const RunConfig& cfg, std::ostream& out) {
  const double x = require_x(cfg);
  const ModelConfig model = model_config(cfg, ModelVariant::secii_qubit);
  if (!model.is_secii()) throw CliError(kExitValidation, "probe supports the secii-qubit and secii-boson models");
  const double gamma = gamma_or(cfg, 0.0);
  const NoiseConfig noise = gamma > 0.0 ? NoiseConfig::spontaneous_emission(model, gamma) : NoiseConfig::none();
  const ProbeCycleReport r = run_probe_cycle(x, model, cfg.n, noise, cfg.dt);

  KeyValues kv{{"x", x}, {"t_read", r.t_read}, {"mean_sigma_z", r.mean_sigma_z}};
  const SigmaZInference inferred = infer_from_sigmaz(std::clamp(r.mean_sigma_z, -1.0, 1.0));
  kv.emplace_back("x_inferred", inferred.x_hat);
  kv.emplace_back("concurrence_inferred", inferred.concurrence);
  if (cfg.shots > 0) {
    const double p_e = std::clamp((1.0 + r.mean_sigma_z) / 2.0, 0.0, 1.0);
    const ShotRecord s = sample_shots(p_e, cfg.shots, cfg.seed);
    const ReadoutGroup group[] = {{ReadoutMap::secii_probe, s.shots, s.frequency()}};
    const XEstimate e = estimate_from_counts(group);
    kv.emplace_back("shots", static_cast<double>(s.shots));
    kv.emplace_back("count_excited", static_cast<double>(s.count_excited));
    kv.emplace_back("x_hat", e.x_hat);
    kv.emplace_back("x_stderr", e.standard_error);
    kv.emplace_back("x_ci99_lo", e.ci99.first);
    kv.emplace_back("x_ci99_hi", e.ci99.second);
  }
  kv.emplace_back("restoration_distance", r.restoration_distance);
  kv.emplace_back("state_restored", r.state_restored ? 1.0 : 0.0);
  kv.emplace_back("leakage", r.leakage);
  add_report(kv, "before_", r.measures_before);
  add_report(kv, "after_", r.measures_after);
  emit_key_values(kv, cfg.out, out);
  return kExitOk;
}

int cmd_qnd(const RunConfig& cfg, std::ostream& out) {
  const double x = require_x(cfg);
  const ModelConfig model = model_config(cfg, ModelVariant::seciii_effective);
  if (model.variant != ModelVariant::seciii_effective) throw CliError(kExitValidation, "qnd requires --model seciii-eff");
  if (cfg.cycles < 1) throw CliError(kExitValidation, "--cycles must be at least 1");
  const QndRun run = run_qnd_sequence(x, cfg.cycles, cfg.shots, cfg.seed, model);

  KeyValues kv{{"x", x}, {"cycles", cfg.cycles}, {"shots_per_stage", static_cast<double>(cfg.shots)}};
  kv.emplace_back("x_hat", run.estimate.x_hat);
  kv.emplace_back("x_stderr", run.estimate.standard_error);
  kv.emplace_back("x_ci99_lo", run.estimate.ci99.first);
  kv.emplace_back("x_ci99_hi", run.estimate.ci99.second);
  kv.emplace_back("restoration_distance", run.restoration_distance);
  add_report(kv, "derived_", run.estimate.derived);
  if (cfg.report_tm) {
    kv.emplace_back("exchange_strength", run.timing.exchange_strength);
    kv.emplace_back("transfer_time_derived", run.timing.derived_time);
    kv.emplace_back("fidelity_derived", run.timing.derived_fidelity);
    kv.emplace_back("transfer_time_quoted", run.timing.quoted_time);
    kv.emplace_back("fidelity_quoted", run.timing.quoted_fidelity);
    kv.emplace_back("fidelity_shortfall_quoted", 1.0 - run.timing.quoted_fidelity);
  }

  std::string text;
  for (const auto& [k, v] : kv) text += k + " " + format_number(v) + "\n";
  out << text;
  if (!cfg.out.empty()) {
    Table t;
    t.header = {"cycle", "stage", "probe_excited", "duration", "p_excited", "shots", "count_excited",
                "distance_to_initial", "distance_to_corner_swap"};
    int stage = 0;
    for (const QndStageRecord& s : run.stages) {
      t.rows.push_back({static_cast<double>(s.cycle), static_cast<double>(stage++),
                        s.stage.probe_prep == ProbePrep::excited ? 1.0 : 0.0, s.stage.duration,
                        s.stage.outcome_p_excited, static_cast<double>(s.shots.shots),
                        static_cast<double>(s.shots.count_excited), s.distance_to_initial,
                        s.distance_to_corner_swap});
    }
    write_file(cfg.out, to_csv(t));
  }
  return kExitOk;
}

int cmd_plot(const RunConfig& cfg, std::ostream& out) {
  if (cfg.csv.empty()) throw CliError(kExitValidation, "--csv is required");
  if (cfg.columns.empty()) throw CliError(kExitValidation, "--columns is required");
  const Table t = parse_csv(read_file(cfg.csv));
  const std::string title = cfg.title.empty() ? cfg.csv : cfg.title;
  const std::string svg = render_svg(t, cfg.columns, title);
  if (cfg.out.empty() || cfg.out == "-") {
    out << svg;
  } else {
    write_file(cfg.out, svg);
  }
  return kExitOk;
}

}  // namespace qprobe::cli
