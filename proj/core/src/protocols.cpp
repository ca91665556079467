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

#include "qprobe/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qprobe {

namespace {

constexpr double kRestoredTol = 1e-8;
constexpr double kCleanTransfer = 1.0 - 1e-6;
constexpr int kTransferScanPoints = 4000;
constexpr int kGoldenIterations = 200;

// Atom basis (|e>, |g>); A is the most significant index, C the least.
constexpr int kIndex(int a, int b, int c) { return 4 * a + 2 * b + c; }

ModelConfig effective_model_for(double exchange_strength) {
  if (!(exchange_strength > 0.0) || !std::isfinite(exchange_strength)) {
    throw std::invalid_argument("exchange strength must be positive");
  }
  return ModelConfig{ModelVariant::seciii_effective, 1.0, 1.0 / (2.0 * exchange_strength), 2, true};
}

double transfer_fidelity_with(const SpectralPropagator& prop, double t) {
  const ComplexMatrix u = prop.unitary(t);
  const double r = 1.0 / std::sqrt(2.0);
  // |s,e> -> |ee,g>
  Eigen::VectorXcd src1 = Eigen::VectorXcd::Zero(8);
  src1(kIndex(0, 1, 0)) = r;
  src1(kIndex(1, 0, 0)) = r;
  const double p1 = std::norm((u * src1)(kIndex(0, 0, 1)));
  // |gg,e> -> |s,g>
  Eigen::VectorXcd dst2 = Eigen::VectorXcd::Zero(8);
  dst2(kIndex(0, 1, 1)) = r;
  dst2(kIndex(1, 0, 1)) = r;
  const double p2 = std::norm(dst2.dot(u.col(kIndex(1, 1, 0))));
  return 0.5 * (p1 + p2);
}

DensityMatrix as_two_qubit(const DensityMatrix& ab) { return DensityMatrix(two_qubit_space(), ab.matrix()); }

}  // namespace

ProbeCycleReport run_probe_cycle(double x, const ModelConfig& cfg, int n_half_periods, const NoiseConfig& noise,
                                 double dt) {
  if (!cfg.is_secii()) throw std::invalid_argument("probe cycle requires a single-probe cavity model");
  if (n_half_periods <= 0) throw std::invalid_argument("n must be a positive odd integer");
  if (n_half_periods % 2 == 0) throw std::invalid_argument("no readout information at even multiples");
  const DensityMatrix rho0 = one_param_density(x);
  const double t = n_half_periods * std::numbers::pi / (2.0 * cfg.g);

  const DensityMatrix joint0 = initial_joint_state(cfg, rho0, ProbePrep::ground);
  const EvolutionResult evolution = noise.noiseless() ? evolve_unitary(joint0, cfg, {t})
                                                      : integrate_master(joint0, cfg, noise, t, dt);
  const DensityMatrix& probe = evolution.probe.back();
  const QubitProjection view = qubit_view_ab(cfg, evolution.reduced_ab.back());

  const double distance = trace_distance(view.state, rho0);
  return ProbeCycleReport{
      t,
      expectation(probe, pauli_z()),
      view.state,
      view.leakage,
      distance <= kRestoredTol,
      distance,
      correlation_report(rho0),
      correlation_report(view.state),
  };
}

double transfer_fidelity(double exchange_strength, double t) {
  const SpectralPropagator prop(build_hamiltonian(effective_model_for(exchange_strength)));
  return transfer_fidelity_with(prop, t);
}

double find_transfer_time(double exchange_strength) {
  const SpectralPropagator prop(build_hamiltonian(effective_model_for(exchange_strength)));
  auto fidelity = [&](double t) { return transfer_fidelity_with(prop, t); };

  const double t_max = 4.0 * std::numbers::pi / exchange_strength;
  const double step = t_max / kTransferScanPoints;
  double prev = fidelity(0.0);
  double cur = fidelity(step);
  for (int i = 1; i < kTransferScanPoints; ++i) {
    const double next = fidelity((i + 1) * step);
    if (cur >= prev && cur >= next && cur > 0.5) {
      // Golden-section maximization on the bracketing cells.
      const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
      double a = (i - 1) * step;
      double b = (i + 1) * step;
      double c = b - inv_phi * (b - a);
      double d = a + inv_phi * (b - a);
      double fc = fidelity(c);
      double fd = fidelity(d);
      for (int k = 0; k < kGoldenIterations && b - a > 1e-13 * b; ++k) {
        if (fc >= fd) {
          b = d;
          d = c;
          fd = fc;
          c = b - inv_phi * (b - a);
          fc = fidelity(c);
        } else {
          a = c;
          c = d;
          fc = fd;
          d = a + inv_phi * (b - a);
          fd = fidelity(d);
        }
      }
      double t_star = 0.5 * (a + b);
      // The peak is flat to first order, so golden section stalls near
      // sqrt(eps). Bisect the symmetric difference instead.
      const double h = 1e-3 * step;
      auto slope = [&](double t) { return fidelity(t + h) - fidelity(t - h); };
      double lo = t_star - 10.0 * h;
      double hi = t_star + 10.0 * h;
      if (slope(lo) > 0.0 && slope(hi) < 0.0) {
        while (hi - lo > 1e-15 * hi) {
          const double mid = 0.5 * (lo + hi);
          if (mid <= lo || mid >= hi) break;
          (slope(mid) > 0.0 ? lo : hi) = mid;
        }
        t_star = 0.5 * (lo + hi);
      }
      if (fidelity(t_star) < kCleanTransfer) break;
      return t_star;
    }
    prev = cur;
    cur = next;
  }
  throw std::runtime_error("no clean transfer");
}

TransferTimeReport transfer_time_report(const ModelConfig& cfg) {
  TransferTimeReport r;
  r.exchange_strength = cfg.exchange_strength();
  r.derived_time = find_transfer_time(r.exchange_strength);
  r.derived_fidelity = transfer_fidelity(r.exchange_strength, r.derived_time);
  r.quoted_time = cfg.delta * std::numbers::pi / (cfg.g * cfg.g);
  r.quoted_fidelity = transfer_fidelity(r.exchange_strength, r.quoted_time);
  return r;
}

QndRun run_qnd_sequence(double x, int n_cycles, std::uint64_t shots_per_stage, std::uint64_t seed,
                        const ModelConfig& cfg) {
  if (cfg.variant != ModelVariant::seciii_effective) {
    throw std::invalid_argument("QND sequence requires the effective exchange model");
  }
  if (n_cycles < 1) throw std::invalid_argument("at least one QND cycle is required");
  const DensityMatrix rho0 = one_param_density(x);
  const DensityMatrix swapped = corner_swap(rho0);
  const TransferTimeReport timing = transfer_time_report(cfg);
  const SpectralPropagator prop(build_hamiltonian(cfg));

  std::vector<QndStageRecord> stages;
  DensityMatrix ab = rho0;
  double restoration = 0.0;
  std::uint64_t stream = 0;
  for (int cycle = 1; cycle <= n_cycles; ++cycle) {
    for (ProbePrep prep : {ProbePrep::excited, ProbePrep::ground}) {
      const DensityMatrix joint = prop.evolve(initial_joint_state(cfg, ab, prep), timing.derived_time);
      const double p_excited = std::clamp(reduced_probe(cfg, joint)(0, 0).real(), 0.0, 1.0);
      ab = as_two_qubit(reduced_ab(cfg, joint));

      QndStageRecord rec;
      rec.cycle = cycle;
      rec.stage = QndStage{prep, timing.derived_time, p_excited};
      rec.shots = shots_per_stage > 0 ? sample_shots(p_excited, shots_per_stage, seed, stream)
                                      : ShotRecord{0, 0, seed, stream};
      rec.distance_to_initial = trace_distance(ab, rho0);
      rec.distance_to_corner_swap = trace_distance(ab, swapped);
      stages.push_back(rec);
      ++stream;
    }
    restoration = std::max(restoration, stages.back().distance_to_initial);
  }

  // Pool outcomes by probe preparation.
  ReadoutGroup group_e{ReadoutMap::seciii_stage_e, 0, 0.0};
  ReadoutGroup group_g{ReadoutMap::seciii_stage_g, 0, 0.0};
  double exact_e = 0.0, exact_g = 0.0;
  std::uint64_t count_e = 0, count_g = 0;
  for (const QndStageRecord& s : stages) {
    const bool excited = s.stage.probe_prep == ProbePrep::excited;
    (excited ? group_e.shots : group_g.shots) += s.shots.shots;
    (excited ? count_e : count_g) += s.shots.count_excited;
    (excited ? exact_e : exact_g) += s.stage.outcome_p_excited / n_cycles;
  }

  XEstimate estimate;
  if (shots_per_stage == 0) {
    group_e.frequency = exact_e;
    group_g.frequency = exact_g;
    const ReadoutGroup groups[2] = {group_e, group_g};
    estimate = estimate_exact(groups);
  } else {
    group_e.frequency = static_cast<double>(count_e) / static_cast<double>(group_e.shots);
    group_g.frequency = static_cast<double>(count_g) / static_cast<double>(group_g.shots);
    const ReadoutGroup groups[2] = {group_e, group_g};
    estimate = estimate_from_counts(groups);
  }

  return QndRun{ab, std::move(stages), estimate, restoration, timing};
}

}  // namespace qprobe
