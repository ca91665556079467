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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero when any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qprobe/dynamics.hpp"
#include "qprobe/measures.hpp"
#include "qprobe/protocols.hpp"
#include "qprobe/states.hpp"

#ifdef QPROBE_HAVE_CLI
#include "qprobe/cli.hpp"
#endif

namespace {

using namespace qprobe;

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    note(ok ? what : "NOT MET " + what);
  }
  void note(const std::string& what) { detail = detail.empty() ? what : detail + "; " + what; }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::vector<double> family_grid(int points) {
  std::vector<double> xs;
  for (int k = 0; k < points; ++k) xs.push_back(0.5 + 0.5 * k / (points - 1));
  return xs;
}

const ModelConfig kQubitModel{ModelVariant::secii_qubit, 1.0, 0.0, 2, true};

double max_report_difference(const CorrelationReport& a, const CorrelationReport& b) {
  return std::max({std::abs(a.concurrence - b.concurrence), std::abs(a.mutual_info - b.mutual_info),
                   std::abs(a.classical - b.classical), std::abs(a.discord - b.discord)});
}

Outcome concurrence_golden() {
  double worst = 0.0;
  for (double x : family_grid(51)) {
    worst = std::max(worst, std::abs(concurrence(one_param_density(x)) - std::abs(2.0 - 3.0 * x)));
  }
  Outcome o;
  o.check(worst <= 1e-10, fmt("max |C - |2-3x|| = %.3e over 51 points", worst));
  return o;
}

// Shared time grid for the closed-form dynamics checks: 200 points on (0, 2pi/g].
std::vector<double> dynamics_times() {
  std::vector<double> ts;
  for (int k = 1; k <= 200; ++k) ts.push_back(2.0 * kPi * k / 200.0);
  return ts;
}

Outcome concurrence_dynamics() {
  double worst = 0.0;
  const std::vector<double> ts = dynamics_times();
  for (double x : {0.5, 0.75, 0.9}) {
    const DensityMatrix joint = initial_joint_state(kQubitModel, one_param_density(x), ProbePrep::ground);
    const EvolutionResult r = evolve_unitary(joint, kQubitModel, ts);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const double c = concurrence(qubit_view_ab(kQubitModel, r.reduced_ab[k]).state);
      worst = std::max(worst, std::abs(c - concurrence_time_formula(x, ts[k])));
    }
  }
  Outcome o;
  o.check(worst <= 1e-8, fmt("max concurrence error = %.3e at 600 samples", worst));
  return o;
}

Outcome probe_law() {
  double worst = 0.0;
  const std::vector<double> ts = dynamics_times();
  for (double x : {0.5, 0.75, 0.9}) {
    const DensityMatrix joint = initial_joint_state(kQubitModel, one_param_density(x), ProbePrep::ground);
    const EvolutionResult r = evolve_unitary(joint, kQubitModel, ts);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const double s = std::sin(ts[k]);
      worst = std::max(worst, std::abs(r.probe[k](0, 0).real() - 2.0 * (1.0 - x) * s * s));
    }
  }
  Outcome o;
  o.check(worst <= 1e-9, fmt("max |P(e) - 2(1-x)sin^2(gt)| = %.3e", worst));
  return o;
}

Outcome readout_identity() {
  double worst_sz = 0.0;
  double worst_inv = 0.0;
  for (double x : family_grid(11)) {
    for (int n : {1, 3}) {
      const ProbeCycleReport r = run_probe_cycle(x, kQubitModel, n, NoiseConfig::none());
      worst_sz = std::max(worst_sz, std::abs(r.mean_sigma_z - (3.0 - 4.0 * x)));
    }
    worst_inv = std::max(worst_inv, std::abs(infer_from_sigmaz(3.0 - 4.0 * x).x_hat - x));
  }
  Outcome o;
  o.check(worst_sz <= 1e-9, fmt("max |<sz> - (3-4x)| = %.3e", worst_sz));
  o.check(worst_inv <= 1e-12, fmt("max inversion error = %.3e", worst_inv));
  return o;
}

Outcome non_disturbance() {
  double worst = 0.0;
  for (double x : family_grid(11)) {
    const CorrelationReport before = correlation_report(one_param_density(x));
    const DensityMatrix joint = initial_joint_state(kQubitModel, one_param_density(x), ProbePrep::ground);
    const EvolutionResult r = evolve_unitary(joint, kQubitModel, {kPi / 2, kPi, 3 * kPi / 2, 2 * kPi});
    for (const DensityMatrix& ab : r.reduced_ab) {
      worst = std::max(worst, max_report_difference(before, correlation_report(qubit_view_ab(kQubitModel, ab).state)));
    }
  }
  Outcome o;
  o.check(worst <= 1e-6, fmt("max measure change over n = 1..4 = %.3e", worst));
  return o;
}

Outcome corner_swap_invariance() {
  const ComplexMatrix xx = kron(pauli_x(), pauli_x());
  double worst = 0.0;
  double worst_map = 0.0;
  double closed_form_shift = 0.0;
  for (double x : family_grid(21)) {
    const DensityMatrix rho = one_param_density(x);
    const DensityMatrix conj(two_qubit_space(), xx * rho.matrix() * xx);
    worst_map = std::max(worst_map, trace_distance(conj, corner_swap(rho)));
    const CorrelationReport a = correlation_report(rho);
    const CorrelationReport b = correlation_report(conj);
    worst = std::max(worst, max_report_difference(a, b));
    closed_form_shift = std::max(closed_form_shift, std::abs(a.classical_eq20 - b.classical_eq20));
  }
  Outcome o;
  o.check(worst <= 1e-6, fmt("max measure change under sx(x)sx = %.3e", worst));
  o.check(worst_map <= 1e-12, fmt("corner_swap vs explicit conjugation = %.3e", worst_map));
  // The closed form selects its branch from r44, which the swap moves.
  o.note(fmt("closed-form classical correlation shifts by up to %.4f (branch selection)", closed_form_shift));
  return o;
}

Outcome closed_form_cross_check() {
  double worst_excess = -1.0;
  double worst_x = 0.0;
  int violations = 0;
  for (double x : family_grid(51)) {
    const DensityMatrix rho = one_param_density(x);
    const double definitional = classical_correlation_optimized(rho).min_conditional_entropy;
    const Eq20Branches b = eq20_min_conditional_entropy(extract_xstate(rho));
    const double excess = definitional - std::min(b.branch1, b.branch2);
    if (excess > 1e-6) ++violations;
    if (excess > worst_excess) {
      worst_excess = excess;
      worst_x = x;
    }
  }
  const DensityMatrix half = one_param_density(0.5);
  const double branch2_gap = std::abs(classical_correlation_optimized(half).min_conditional_entropy -
                                      eq20_min_conditional_entropy(extract_xstate(half)).branch2);
  const DensityMatrix bell = one_param_density(1.0);
  const double closed_at_one = classical_correlation_eq20(extract_xstate(bell));
  const double definitional_at_one = classical_correlation_optimized(bell).value;

  Outcome o;
  o.check(branch2_gap <= 1e-6, fmt("branch-2 gap at x = 0.5: %.3e", branch2_gap));
  o.check(std::abs(closed_at_one) <= 1e-9 && std::abs(definitional_at_one - 1.0) <= 1e-6,
          "x = 1 divergence reproduced: closed form " + fmt("%.6f", closed_at_one) + ", definitional " +
              fmt("%.6f", definitional_at_one));
  o.check(violations == 0, std::to_string(violations) + "/51 grid points have definitional minimum above a branch" +
                               fmt(" by more than 1e-6 (worst %.6f", worst_excess) + fmt(" at x = %.2f)", worst_x));
  return o;
}

Outcome master_equation() {
  const DensityMatrix joint = initial_joint_state(kQubitModel, one_param_density(0.75), ProbePrep::ground);
  const double t1 = kPi / 2.0;
  std::vector<double> samples;
  for (int k = 1; k <= 10; ++k) samples.push_back(t1 * k / 10.0);

  const EvolutionResult exact = evolve_unitary(joint, kQubitModel, {t1});
  const EvolutionResult clean = integrate_master(joint, kQubitModel, NoiseConfig::none(), t1, kDefaultDt, samples);
  const EvolutionResult noisy = integrate_master(joint, kQubitModel,
                                                 NoiseConfig::spontaneous_emission(kQubitModel, 0.1), t1, kDefaultDt,
                                                 samples);
  const double gap = trace_distance(clean.joint_states.back(), exact.joint_states.back());
  double drift = 0.0;
  double min_eig = 1.0;
  double richardson = 0.0;
  for (const EvolutionResult* r : {&clean, &noisy}) {
    drift = std::max(drift, r->max_trace_drift);
    richardson = std::max(richardson, r->richardson_discrepancy);
    for (const DensityMatrix& s : r->joint_states) min_eig = std::min(min_eig, min_eigenvalue(s.matrix()));
  }
  Outcome o;
  o.check(gap <= 1e-6, fmt("gamma = 0 vs spectral at pi/2g: %.3e", gap));
  o.check(drift <= 1e-8, fmt("trace drift %.3e", drift));
  o.check(min_eig >= -1e-8, fmt("min eigenvalue %.3e", min_eig));
  o.check(richardson <= 1e-7, fmt("half-step discrepancy %.3e", richardson));
  return o;
}

Outcome noisy_sweep() {
  Outcome o;
#ifdef QPROBE_HAVE_CLI
  const cli::SweepOptions opts;
  cli::SweepOptions serial = opts;
  serial.threads = 1;
  const cli::Table t = cli::run_sweep(opts);
  const std::size_t c = t.column("concurrence"), cn = t.column("concurrence_noisy");
  const std::size_t d = t.column("discord"), dn = t.column("discord_noisy");
  double worst_c = -1.0;
  int discord_gain = 0;
  for (const auto& row : t.rows) {
    worst_c = std::max(worst_c, row[cn] - row[c]);
    if (row[0] > 0.8 && row[dn] > row[d]) ++discord_gain;
  }
  const std::vector<std::string> cols{"discord", "classical", "discord_noisy", "classical_noisy"};
  const std::string csv = cli::to_csv(t);
  const std::string svg = cli::render_svg(t, cols, "correlations");
  const cli::Table again = cli::run_sweep(serial);
  const bool same = csv == cli::to_csv(again) && svg == cli::render_svg(again, cols, "correlations");

  o.check(worst_c <= 1e-12, fmt("max (concurrence_noisy - concurrence) = %.3e", worst_c));
  o.check(discord_gain > 0, std::to_string(discord_gain) + " grid points with x > 0.8 where discord_noisy > discord");
  o.check(same, fmt("CSV and SVG byte-identical across thread counts (%.0f bytes)", static_cast<double>(csv.size())));
#else
  o.check(false, "command-line tool not built");
#endif
  return o;
}

Outcome dispersive_validity() {
  const double j20 = 1.0 / 40.0;
  const double t_period = kPi / (2.0 * std::sqrt(2.0) * j20);
  const double d20 = dispersive_comparison(0.75, 1.0, 20.0, t_period).deviation;
  const double d40 = dispersive_comparison(0.75, 1.0, 40.0, t_period).deviation;
  Outcome o;
  o.check(d20 <= 0.05, fmt("deviation at delta = 20g: %.4f", d20));
  o.check(d40 < d20, fmt("deviation at delta = 40g: %.4f", d40));
  return o;
}

Outcome qnd_protocol() {
  double worst_swap = 0.0;
  double worst_restore = 0.0;
  TransferTimeReport timing;
  for (double x : family_grid(6)) {
    const QndRun run = run_qnd_sequence(x, 5, 0, 1);
    for (const QndStageRecord& s : run.stages) {
      if (s.stage.probe_prep == ProbePrep::excited) worst_swap = std::max(worst_swap, s.distance_to_corner_swap);
    }
    worst_restore = std::max(worst_restore, run.restoration_distance);
    timing = run.timing;
  }
  Outcome o;
  o.check(worst_swap <= 1e-9, fmt("stage-e vs corner swap %.3e", worst_swap));
  o.check(worst_restore <= 1e-9, fmt("restoration over 5 cycles %.3e", worst_restore));
  o.check(timing.derived_fidelity >= 1.0 - 1e-9,
          fmt("F(t* = %.6f)", timing.derived_time) + fmt(" = %.12f", timing.derived_fidelity));
  o.check(timing.quoted_fidelity < timing.derived_fidelity,
          fmt("quoted t_m = %.6f", timing.quoted_time) + fmt(" has F = %.6f", timing.quoted_fidelity));
  return o;
}

Outcome estimation() {
  const double x = 0.75;
  const double p = readout_probability(ReadoutMap::secii_probe, x);
  double worst = 0.0;
  int covered = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const ShotRecord r = sample_shots(p, 10000, seed);
    const ReadoutGroup g[] = {{ReadoutMap::secii_probe, r.shots, r.frequency()}};
    const XEstimate e = estimate_from_counts(g);
    worst = std::max(worst, std::abs(e.x_hat - x));
    if (e.ci99.first <= x && x <= e.ci99.second) ++covered;
  }
  Outcome o;
  o.check(worst <= 0.02, fmt("max |x_hat - 0.75| = %.4f", worst));
  o.check(covered >= 99, std::to_string(covered) + "/100 seeds cover x");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"concurrence golden values", concurrence_golden},
      {"concurrence dynamics", concurrence_dynamics},
      {"probe excitation law", probe_law},
      {"readout identity and inversion", readout_identity},
      {"non-disturbance at readout times", non_disturbance},
      {"corner-swap invariance", corner_swap_invariance},
      {"closed-form classical correlation cross-check", closed_form_cross_check},
      {"master-equation correctness", master_equation},
      {"noisy sweep and artifacts", noisy_sweep},
      {"dispersive validity", dispersive_validity},
      {"QND protocol", qnd_protocol},
      {"estimation", estimation},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
