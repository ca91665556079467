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

#include "qprobe/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qprobe {

namespace {

constexpr double kTruncationRelTol = 0.10;
constexpr double kTruncationAbsFloor = 1e-9;
constexpr double kMinDeltaOverG = 5.0;

ComplexMatrix vacuum(int levels) {
  ComplexMatrix m = ComplexMatrix::Zero(levels, levels);
  m(0, 0) = 1.0;
  return m;
}

// Places a 4×4 two-qubit operator on two modes with `levels` each ({0,1} subspace).
ComplexMatrix embed_two_qubit(const ComplexMatrix& rho_ab, int levels) {
  ComplexMatrix out = ComplexMatrix::Zero(levels * levels, levels * levels);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out((i / 2) * levels + i % 2, (j / 2) * levels + j % 2) = rho_ab(i, j);
    }
  }
  return out;
}

}  // namespace

DensityMatrix initial_joint_state(const ModelConfig& cfg, const DensityMatrix& rho_ab, ProbePrep prep) {
  if (rho_ab.dim() != 4) throw std::invalid_argument("initial_joint_state: expected a two-qubit A,B state");
  const HilbertSpace space = cfg.space();
  const ComplexMatrix probe = probe_state(prep).matrix();
  switch (cfg.variant) {
    case ModelVariant::secii_qubit:
    case ModelVariant::seciii_effective:
      return DensityMatrix(space, kron(rho_ab.matrix(), probe));
    case ModelVariant::secii_boson:
      return DensityMatrix(space, kron(embed_two_qubit(rho_ab.matrix(), cfg.n_max + 1), probe));
    case ModelVariant::seciii_full: {
      const int levels = cfg.n_max + 1;
      return DensityMatrix(space, kron(kron(rho_ab.matrix(), probe), kron(vacuum(levels), vacuum(levels))));
    }
  }
  throw std::invalid_argument("unknown model variant");
}

DensityMatrix reduced_ab(const ModelConfig&, const DensityMatrix& joint) {
  return partial_trace(joint, {0, 1});
}

DensityMatrix reduced_probe(const ModelConfig& cfg, const DensityMatrix& joint) {
  return partial_trace(joint, {cfg.probe_factor()});
}

QubitProjection qubit_view_ab(const ModelConfig& cfg, const DensityMatrix& ab) {
  if (ab.space().factor_count() != 2) throw std::invalid_argument("qubit_view_ab: expected an A,B state");
  if (ab.dim() == 4) return {DensityMatrix(two_qubit_space(), ab.matrix()), 0.0};
  const int levels = ab.space().dim(0);
  if (cfg.variant != ModelVariant::secii_boson || ab.space().dim(1) != levels) {
    throw std::invalid_argument("qubit_view_ab: unexpected A,B layout");
  }
  ComplexMatrix sub(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) sub(i, j) = ab((i / 2) * levels + i % 2, (j / 2) * levels + j % 2);
  }
  const double kept = sub.trace().real();
  if (kept <= 0.0) throw std::runtime_error("qubit_view_ab: no weight in the {0,1} photon subspace");
  return {DensityMatrix(two_qubit_space(), (sub + sub.adjoint()) * (0.5 / kept)), 1.0 - kept};
}

SecIIClosedForm closed_form_secii(double x, double gt) {
  const OneParamState family(x);
  const double s2 = std::sin(gt) * std::sin(gt);
  const double c2 = std::cos(gt) * std::cos(gt);
  const XState xs{(1.0 - x) * s2, x / 2.0, x / 2.0, (1.0 - x) * c2, 1.0 - 1.5 * x};
  const double pe = 2.0 * (1.0 - x) * s2;
  const double probe[2] = {pe, 1.0 - pe};
  return {xs.to_density(), DensityMatrix::diagonal(probe_space(), probe)};
}

EvolutionResult evolve_unitary(const DensityMatrix& rho0, const ModelConfig& cfg, const std::vector<double>& times) {
  const SpectralPropagator prop(build_hamiltonian(cfg));
  EvolutionResult out;
  double previous = -1.0;
  for (double t : times) {
    if (!(t > previous) || t < 0.0) throw std::invalid_argument("sample times must be strictly increasing and >= 0");
    previous = t;
    DensityMatrix joint = prop.evolve(rho0, t);
    out.times.push_back(t);
    out.reduced_ab.push_back(reduced_ab(cfg, joint));
    out.probe.push_back(reduced_probe(cfg, joint));
    out.joint_states.push_back(std::move(joint));
  }
  return out;
}

DispersiveComparison dispersive_comparison(double x, double g, double delta, double t_end, int samples) {
  if (!(t_end >= 0.0) || samples < 2) throw std::invalid_argument("dispersive_comparison: bad time grid");
  const DensityMatrix rho_ab = one_param_density(x);

  const ModelConfig eff{ModelVariant::seciii_effective, g, delta, 2, true};
  const SpectralPropagator eff_prop(build_hamiltonian(eff));
  const DensityMatrix eff0 = initial_joint_state(eff, rho_ab, ProbePrep::excited);

  std::vector<DensityMatrix> eff_states;
  eff_states.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    eff_states.push_back(eff_prop.evolve(eff0, t_end * k / (samples - 1)));
  }

  auto max_deviation = [&](int n_max) {
    const ModelConfig full{ModelVariant::seciii_full, g, delta, n_max, true};
    const SpectralPropagator full_prop(build_hamiltonian(full));
    const DensityMatrix full0 = initial_joint_state(full, rho_ab, ProbePrep::excited);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      const DensityMatrix atoms = partial_trace(full_prop.evolve(full0, t_end * k / (samples - 1)), {0, 1, 2});
      worst = std::max(worst, trace_distance(atoms.matrix(), eff_states[static_cast<std::size_t>(k)].matrix()));
    }
    return worst;
  };

  DispersiveComparison out;
  out.t_end = t_end;
  out.deviation = max_deviation(2);
  out.deviation_nmax3 = max_deviation(3);
  const double change = std::abs(out.deviation_nmax3 - out.deviation);
  if (change > kTruncationRelTol * out.deviation && change > kTruncationAbsFloor) {
    throw std::runtime_error("increase n_max");
  }
  return out;
}

double dispersive_deviation(double x, double delta_over_g, double t_end) {
  if (!(delta_over_g >= kMinDeltaOverG)) {
    throw std::invalid_argument("dispersive_deviation requires delta/g >= 5");
  }
  return dispersive_comparison(x, 1.0, delta_over_g, t_end).deviation;
}

}  // namespace qprobe
