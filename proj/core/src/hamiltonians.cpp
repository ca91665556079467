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

#include <cmath>
#include <stdexcept>

#include "qprobe/dynamics.hpp"

namespace qprobe {

namespace {

// Atoms use the (|e>, |g>) basis; cavities use photon number as the index.
ComplexMatrix atom_lowering() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(1, 0) = 1.0;
  return m;
}

ComplexMatrix atom_excited_projector() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  return m;
}

ComplexMatrix boson_lowering(int levels) {
  ComplexMatrix m = ComplexMatrix::Zero(levels, levels);
  for (int n = 1; n < levels; ++n) m(n - 1, n) = std::sqrt(static_cast<double>(n));
  return m;
}

ComplexMatrix number_operator(int levels) {
  ComplexMatrix m = ComplexMatrix::Zero(levels, levels);
  for (int n = 0; n < levels; ++n) m(n, n) = static_cast<double>(n);
  return m;
}

// Jaynes-Cummings exchange σ⁺a + a†σ⁻ between an atom and a cavity factor.
ComplexMatrix exchange(const ComplexMatrix& atom_lower, const ComplexMatrix& mode_lower) {
  return atom_lower.adjoint() * mode_lower + mode_lower.adjoint() * atom_lower;
}

bool is_atom_factor(const ModelConfig& cfg, std::size_t f) {
  switch (cfg.variant) {
    case ModelVariant::secii_qubit:
    case ModelVariant::secii_boson:
      return f == 2;
    case ModelVariant::seciii_full:
      return f < 3;
    case ModelVariant::seciii_effective:
      return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(ModelVariant v) {
  switch (v) {
    case ModelVariant::secii_qubit: return "secii-qubit";
    case ModelVariant::secii_boson: return "secii-boson";
    case ModelVariant::seciii_full: return "seciii-full";
    case ModelVariant::seciii_effective: return "seciii-eff";
  }
  return "unknown";
}

std::optional<ModelVariant> parse_model_variant(std::string_view name) {
  if (name == "secii-qubit" || name == "secii_qubit") return ModelVariant::secii_qubit;
  if (name == "secii-boson" || name == "secii_boson") return ModelVariant::secii_boson;
  if (name == "seciii-full" || name == "seciii_full") return ModelVariant::seciii_full;
  if (name == "seciii-eff" || name == "seciii_effective" || name == "seciii-effective") {
    return ModelVariant::seciii_effective;
  }
  return std::nullopt;
}

void ModelConfig::validate() const {
  if (!(g > 0.0) || !std::isfinite(g)) throw std::invalid_argument("coupling g must be positive");
  const bool needs_delta = variant == ModelVariant::seciii_full || variant == ModelVariant::seciii_effective;
  if (needs_delta && (!(delta > 0.0) || !std::isfinite(delta))) {
    throw std::invalid_argument("detuning delta must be positive for the dispersive models");
  }
  const bool needs_nmax = variant == ModelVariant::secii_boson || variant == ModelVariant::seciii_full;
  if (needs_nmax && n_max < 2) throw std::invalid_argument("n_max must be at least 2");
  if (needs_nmax && n_max > 8) throw std::invalid_argument("n_max above 8 is not supported by dense storage");
}

double ModelConfig::exchange_strength() const {
  if (variant != ModelVariant::seciii_full && variant != ModelVariant::seciii_effective) {
    throw std::invalid_argument("exchange strength is defined for the dispersive models only");
  }
  validate();
  return g * g / (2.0 * delta);
}

HilbertSpace ModelConfig::space() const {
  validate();
  const int levels = n_max + 1;
  switch (variant) {
    case ModelVariant::secii_qubit: return HilbertSpace({2, 2, 2}, {"A", "B", "C"});
    case ModelVariant::secii_boson: return HilbertSpace({levels, levels, 2}, {"A", "B", "C"});
    case ModelVariant::seciii_full:
      return HilbertSpace({2, 2, 2, levels, levels}, {"A", "B", "C", "cav1", "cav2"});
    case ModelVariant::seciii_effective: return HilbertSpace({2, 2, 2}, {"A", "B", "C"});
  }
  throw std::invalid_argument("unknown model variant");
}

NoiseConfig NoiseConfig::spontaneous_emission(const ModelConfig& cfg, double gamma) {
  NoiseConfig n;
  n.gamma = gamma;
  n.collapse_ops.push_back({gamma, probe_lowering(cfg)});
  n.validate();
  return n;
}

void NoiseConfig::validate() const {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("gamma must be non-negative");
  for (const CollapseOperator& c : collapse_ops) {
    if (!(c.rate >= 0.0) || !std::isfinite(c.rate)) throw std::invalid_argument("collapse rates must be non-negative");
  }
}

bool NoiseConfig::noiseless() const {
  for (const CollapseOperator& c : collapse_ops) {
    if (c.rate > 0.0) return false;
  }
  return true;
}

ComplexMatrix build_hamiltonian(const ModelConfig& cfg) {
  const HilbertSpace space = cfg.space();
  const double c = cfg.g / std::sqrt(2.0);

  switch (cfg.variant) {
    case ModelVariant::secii_qubit:
    case ModelVariant::secii_boson: {
      const int levels = space.dim(0);
      const ComplexMatrix sm = embed(space, 2, atom_lowering());
      const ComplexMatrix a_a = embed(space, 0, boson_lowering(levels));
      const ComplexMatrix a_b = embed(space, 1, boson_lowering(levels));
      return c * (exchange(sm, a_a) + exchange(sm, a_b));
    }
    case ModelVariant::seciii_full: {
      const int levels = cfg.n_max + 1;
      const ComplexMatrix s_a = embed(space, 0, atom_lowering());
      const ComplexMatrix s_b = embed(space, 1, atom_lowering());
      const ComplexMatrix s_c = embed(space, 2, atom_lowering());
      const ComplexMatrix a1 = embed(space, 3, boson_lowering(levels));
      const ComplexMatrix a2 = embed(space, 4, boson_lowering(levels));
      // Frame rotating at the cavity frequency: C sits at δ. The Stark shift
      // of C (two cavities) exceeds that of A/B (one cavity) by g²/2δ, so
      // compensation raises A/B by the same amount to keep the exchange resonant.
      const double detuning_ab =
          cfg.delta + (cfg.stark_compensation ? cfg.g * cfg.g / (2.0 * cfg.delta) : 0.0);
      ComplexMatrix h = detuning_ab * (embed(space, 0, atom_excited_projector()) +
                                       embed(space, 1, atom_excited_projector())) +
                        cfg.delta * embed(space, 2, atom_excited_projector());
      h += c * (exchange(s_c, a1) + exchange(s_c, a2) + exchange(s_a, a1) + exchange(s_b, a2));
      return h;
    }
    case ModelVariant::seciii_effective: {
      const double j = cfg.exchange_strength();
      const ComplexMatrix s_a = embed(space, 0, atom_lowering());
      const ComplexMatrix s_b = embed(space, 1, atom_lowering());
      const ComplexMatrix s_c = embed(space, 2, atom_lowering());
      return j * (exchange(s_c, s_a) + exchange(s_c, s_b));
    }
  }
  throw std::invalid_argument("unknown model variant");
}

ComplexMatrix excitation_number(const ModelConfig& cfg) {
  const HilbertSpace space = cfg.space();
  ComplexMatrix n = ComplexMatrix::Zero(space.total_dim(), space.total_dim());
  for (std::size_t f = 0; f < space.factor_count(); ++f) {
    n += embed(space, f, is_atom_factor(cfg, f) ? atom_excited_projector() : number_operator(space.dim(f)));
  }
  return n;
}

ComplexMatrix probe_lowering(const ModelConfig& cfg) {
  return embed(cfg.space(), cfg.probe_factor(), atom_lowering());
}

ComplexMatrix probe_sigma_z(const ModelConfig& cfg) {
  return embed(cfg.space(), cfg.probe_factor(), pauli_z());
}

}  // namespace qprobe
