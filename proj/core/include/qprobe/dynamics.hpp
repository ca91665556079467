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

#ifndef QPROBE_DYNAMICS_HPP_
#define QPROBE_DYNAMICS_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "qprobe/qcore.hpp"
#include "qprobe/states.hpp"

namespace qprobe {

// Units: ħ = 1, energies in units of g, times in units of 1/g.

enum class ModelVariant {
  secii_qubit,      // probe + two cavities truncated to {0,1} photons; factors A,B,C
  secii_boson,      // probe + two bosonic cavities with n_max photons; factors A,B,C
  seciii_full,      // atoms A,B,C + cavities 1,2 (dispersive regime, detuning retained)
  seciii_effective  // atoms A,B,C with XY exchange of strength g²/2δ
};

std::string_view to_string(ModelVariant v);
/// Accepts the CLI spellings secii-qubit, secii-boson, seciii-full, seciii-eff.
std::optional<ModelVariant> parse_model_variant(std::string_view name);

struct ModelConfig {
  ModelVariant variant = ModelVariant::secii_qubit;
  double g = 1.0;
  double delta = 0.0;              // seciii variants only
  int n_max = 2;                   // secii_boson and seciii_full
  bool stark_compensation = true;  // seciii_full

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
  /// g²/(2δ); seciii variants only.
  double exchange_strength() const;
  HilbertSpace space() const;
  bool is_secii() const {
    return variant == ModelVariant::secii_qubit || variant == ModelVariant::secii_boson;
  }
  /// Factor index of the probe atom C.
  std::size_t probe_factor() const { return 2; }
};

struct CollapseOperator {
  double rate = 0.0;
  ComplexMatrix op;
};

/// Each (rate, L) contributes rate·(2LρL† − L†Lρ − ρL†L).
struct NoiseConfig {
  double gamma = 0.0;
  std::vector<CollapseOperator> collapse_ops;

  /// Spontaneous emission of the probe: exactly one (γ, σ⁻_C) channel.
  static NoiseConfig spontaneous_emission(const ModelConfig& cfg, double gamma);
  static NoiseConfig none() { return {}; }
  void validate() const;
  bool noiseless() const;
};

/// Interaction-picture Hamiltonian of the chosen model on cfg.space().
ComplexMatrix build_hamiltonian(const ModelConfig& cfg);

/// Σ σ⁺σ⁻ over atoms + Σ a†a over cavities.
ComplexMatrix excitation_number(const ModelConfig& cfg);
/// σ⁻ of the probe atom C embedded in the model space.
ComplexMatrix probe_lowering(const ModelConfig& cfg);
/// σz = |e><e| − |g><g| of the probe embedded in the model space.
ComplexMatrix probe_sigma_z(const ModelConfig& cfg);

/// Joint initial state: two-qubit rho_ab placed on A,B (as the {0,1}-photon
/// subspace for bosonic cavities), probe C in `prep`, and vacuum cavities for
/// seciii_full.
DensityMatrix initial_joint_state(const ModelConfig& cfg, const DensityMatrix& rho_ab, ProbePrep prep);

/// Reduced A,B state (for secii_boson: on the full photon-number space).
DensityMatrix reduced_ab(const ModelConfig& cfg, const DensityMatrix& joint);
DensityMatrix reduced_probe(const ModelConfig& cfg, const DensityMatrix& joint);

struct QubitProjection {
  DensityMatrix state;  // 4×4, renormalized
  double leakage = 0.0; // weight outside the ≤1-photon-per-mode subspace
};
/// Two-qubit view of an A,B state. Exact for 2-level factors; for bosonic
/// cavities projects onto photon numbers {0,1} and renormalizes.
QubitProjection qubit_view_ab(const ModelConfig& cfg, const DensityMatrix& ab);

struct SecIIClosedForm {
  DensityMatrix rho_ab;
  DensityMatrix rho_c;
};
/// Reduced states of the secii_qubit model with the probe prepared in |g>.
SecIIClosedForm closed_form_secii(double x, double gt);

struct EvolutionResult {
  std::vector<double> times;
  std::vector<DensityMatrix> joint_states;
  std::vector<DensityMatrix> reduced_ab;
  std::vector<DensityMatrix> probe;
  double richardson_discrepancy = 0.0;  // max |ρ_dt − ρ_dt/2| on the self-check window
  double max_trace_drift = 0.0;
  double max_hermiticity_drift = 0.0;   // before the per-step symmetrization
};

inline constexpr double kDefaultDt = 1e-3;
inline constexpr double kTraceRejectTol = 1e-6;
inline constexpr double kRichardsonTol = 1e-7;

/// Fixed-step RK4 on the Lindblad equation. Samples at `sample_times`
/// (strictly increasing, in (0, t_end]); empty means {t_end}. Throws
/// std::runtime_error when the trace drifts by more than 1e-6 in one step or
/// the half-step self-check exceeds 1e-7.
EvolutionResult integrate_master(const DensityMatrix& rho0, const ModelConfig& cfg, const NoiseConfig& noise,
                                 double t_end, double dt = kDefaultDt, std::vector<double> sample_times = {});

/// Unitary evolution of `rho0` sampled at the given times via spectral propagation.
EvolutionResult evolve_unitary(const DensityMatrix& rho0, const ModelConfig& cfg, const std::vector<double>& times);

struct DispersiveComparison {
  double deviation = 0.0;        // n_max = 2
  double deviation_nmax3 = 0.0;
  double t_end = 0.0;
};

/// Max over [0, t_end] of the trace distance between reduced A,B,C states of
/// seciii_full (vacuum cavities, Stark compensation) and seciii_effective,
/// starting from ρ₀(x) ⊗ |e><e|. Throws std::runtime_error("increase n_max")
/// when n_max = 2 and 3 differ by more than 10%.
DispersiveComparison dispersive_comparison(double x, double g, double delta, double t_end, int samples = 201);
double dispersive_deviation(double x, double delta_over_g, double t_end);

}  // namespace qprobe

#endif  // QPROBE_DYNAMICS_HPP_
