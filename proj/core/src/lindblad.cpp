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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qprobe/dynamics.hpp"

namespace qprobe {

namespace {

constexpr int kRichardsonWindowSteps = 256;

class LindbladRhs {
 public:
  LindbladRhs(ComplexMatrix h, const NoiseConfig& noise) : h_(std::move(h)) {
    for (const CollapseOperator& c : noise.collapse_ops) {
      if (c.rate == 0.0) continue;
      if (c.op.rows() != h_.rows() || c.op.cols() != h_.cols()) {
        throw std::invalid_argument("collapse operator dimension does not match the model");
      }
      channels_.push_back({c.rate, c.op, c.op.adjoint(), c.op.adjoint() * c.op});
    }
  }

  ComplexMatrix operator()(const ComplexMatrix& rho) const {
    const Complex minus_i(0.0, -1.0);
    ComplexMatrix d = minus_i * (h_ * rho - rho * h_);
    for (const Channel& c : channels_) {
      d += c.rate * (2.0 * c.l * rho * c.l_dag - c.l_dag_l * rho - rho * c.l_dag_l);
    }
    return d;
  }

 private:
  struct Channel {
    double rate;
    ComplexMatrix l;
    ComplexMatrix l_dag;
    ComplexMatrix l_dag_l;
  };
  ComplexMatrix h_;
  std::vector<Channel> channels_;
};

struct StepStats {
  double max_trace_drift = 0.0;
  double max_hermiticity_drift = 0.0;
};

// Advances rho over `duration` in ceil(duration/dt) equal RK4 steps.
void advance(const LindbladRhs& f, ComplexMatrix& rho, double duration, double dt, StepStats& stats) {
  if (duration <= 0.0) return;
  const long steps = std::max(1L, static_cast<long>(std::ceil(duration / dt - 1e-9)));
  const double h = duration / static_cast<double>(steps);
  for (long s = 0; s < steps; ++s) {
    const ComplexMatrix k1 = f(rho);
    const ComplexMatrix k2 = f(rho + (0.5 * h) * k1);
    const ComplexMatrix k3 = f(rho + (0.5 * h) * k2);
    const ComplexMatrix k4 = f(rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    stats.max_hermiticity_drift = std::max(stats.max_hermiticity_drift, hermiticity_deviation(rho));
    rho = (rho + rho.adjoint()) * 0.5;
    const double drift = std::abs(rho.trace().real() - 1.0);
    stats.max_trace_drift = std::max(stats.max_trace_drift, drift);
    if (!(drift <= kTraceRejectTol)) {
      throw std::runtime_error("step rejected: trace drift " + std::to_string(drift) +
                               " exceeds 1e-6; reduce dt");
    }
  }
}

}  // namespace

EvolutionResult integrate_master(const DensityMatrix& rho0, const ModelConfig& cfg, const NoiseConfig& noise,
                                 double t_end, double dt, std::vector<double> sample_times) {
  cfg.validate();
  noise.validate();
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be positive");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw std::invalid_argument("t_end must be positive");
  const HilbertSpace space = cfg.space();
  if (rho0.space().total_dim() != space.total_dim()) {
    throw std::invalid_argument("initial state does not live on the model space");
  }
  if (sample_times.empty()) sample_times.push_back(t_end);
  for (std::size_t i = 0; i < sample_times.size(); ++i) {
    const double t = sample_times[i];
    if (!(t > 0.0) || t > t_end * (1.0 + 1e-12) || (i > 0 && !(t > sample_times[i - 1]))) {
      throw std::invalid_argument("sample times must be strictly increasing within (0, t_end]");
    }
  }

  const LindbladRhs rhs(build_hamiltonian(cfg), noise);
  EvolutionResult out;

  {
    // Half-step self-check over a short window at the start of the run.
    const double window = std::min(t_end, kRichardsonWindowSteps * dt);
    StepStats scratch;
    ComplexMatrix coarse = rho0.matrix();
    ComplexMatrix fine = rho0.matrix();
    advance(rhs, coarse, window, dt, scratch);
    advance(rhs, fine, window, 0.5 * dt, scratch);
    out.richardson_discrepancy = max_abs(coarse - fine);
    if (out.richardson_discrepancy > kRichardsonTol) {
      throw std::runtime_error("half-step self-check failed: discrepancy " +
                               std::to_string(out.richardson_discrepancy) + " exceeds 1e-7; reduce dt");
    }
  }

  StepStats stats;
  ComplexMatrix rho = rho0.matrix();
  double t = 0.0;
  for (double target : sample_times) {
    advance(rhs, rho, target - t, dt, stats);
    t = target;
    DensityMatrix state(space, rho);
    out.times.push_back(t);
    out.reduced_ab.push_back(reduced_ab(cfg, state));
    out.probe.push_back(reduced_probe(cfg, state));
    out.joint_states.push_back(std::move(state));
  }
  out.max_trace_drift = stats.max_trace_drift;
  out.max_hermiticity_drift = stats.max_hermiticity_drift;
  return out;
}

}  // namespace qprobe
