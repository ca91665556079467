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
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "qprobe/dynamics.hpp"
#include "qprobe/measures.hpp"

namespace qprobe {
namespace {

constexpr double kPi = std::numbers::pi;

ModelConfig qubit_model() { return ModelConfig{ModelVariant::secii_qubit, 1.0, 0.0, 2, true}; }

std::vector<ModelConfig> all_models() {
  return {
      qubit_model(),
      ModelConfig{ModelVariant::secii_boson, 1.0, 0.0, 2, true},
      ModelConfig{ModelVariant::secii_boson, 0.7, 0.0, 3, true},
      ModelConfig{ModelVariant::seciii_full, 1.0, 20.0, 2, true},
      ModelConfig{ModelVariant::seciii_full, 1.0, 20.0, 2, false},
      ModelConfig{ModelVariant::seciii_effective, 1.0, 10.0, 2, true},
  };
}

TEST(ModelConfigTest, ParseAndValidate) {
  EXPECT_EQ(parse_model_variant("secii-qubit"), ModelVariant::secii_qubit);
  EXPECT_EQ(parse_model_variant("secii-boson"), ModelVariant::secii_boson);
  EXPECT_EQ(parse_model_variant("seciii-full"), ModelVariant::seciii_full);
  EXPECT_EQ(parse_model_variant("seciii-eff"), ModelVariant::seciii_effective);
  EXPECT_FALSE(parse_model_variant("qubit").has_value());
  for (ModelVariant v : {ModelVariant::secii_qubit, ModelVariant::secii_boson, ModelVariant::seciii_full,
                         ModelVariant::seciii_effective}) {
    EXPECT_EQ(parse_model_variant(to_string(v)), v);
  }

  EXPECT_THROW((ModelConfig{ModelVariant::secii_qubit, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((ModelConfig{ModelVariant::seciii_effective, 1.0, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((ModelConfig{ModelVariant::secii_boson, 1.0, 0.0, 1}.validate()), std::invalid_argument);
  EXPECT_THROW(qubit_model().exchange_strength(), std::invalid_argument);
  EXPECT_DOUBLE_EQ((ModelConfig{ModelVariant::seciii_effective, 1.0, 10.0}.exchange_strength()), 0.05);
}

TEST(HamiltonianTest, Dimensions) {
  EXPECT_EQ(build_hamiltonian(qubit_model()).rows(), 8);
  EXPECT_EQ(build_hamiltonian(ModelConfig{ModelVariant::secii_boson, 1.0, 0.0, 2}).rows(), 18);
  EXPECT_EQ(build_hamiltonian(ModelConfig{ModelVariant::seciii_full, 1.0, 10.0, 2}).rows(), 72);
  EXPECT_EQ(build_hamiltonian(ModelConfig{ModelVariant::seciii_effective, 1.0, 10.0}).rows(), 8);
}

TEST(HamiltonianTest, CollectiveCouplingElement) {
  // Index = 4A + 2B + C; cavities count photons, the probe uses (|e>, |g>).
  const ComplexMatrix h = build_hamiltonian(qubit_model());
  Eigen::VectorXcd e00 = Eigen::VectorXcd::Zero(8);
  e00(0) = 1.0;
  Eigen::VectorXcd gs = Eigen::VectorXcd::Zero(8);
  gs(2 + 1) = gs(4 + 1) = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(e00.dot(h * gs) - 1.0), 0.0, 1e-15);

  const ModelConfig scaled{ModelVariant::secii_qubit, 2.5};
  EXPECT_NEAR(e00.dot(build_hamiltonian(scaled) * gs).real(), 2.5, 1e-14);
}

TEST(HamiltonianTest, EffectiveExchangeStrength) {
  const ComplexMatrix h = build_hamiltonian(ModelConfig{ModelVariant::seciii_effective, 1.0, 10.0});
  // Single-excitation hopping between the probe C and each of A, B.
  const int a_excited = 0 * 4 + 1 * 2 + 1;  // A=e, B=g, C=g
  const int c_excited = 1 * 4 + 1 * 2 + 0;  // A=g, B=g, C=e
  const int b_excited = 1 * 4 + 0 * 2 + 1;
  EXPECT_NEAR(h(c_excited, a_excited).real(), 0.05, 1e-15);
  EXPECT_NEAR(h(c_excited, b_excited).real(), 0.05, 1e-15);
  EXPECT_NEAR(std::abs(h(a_excited, b_excited)), 0.0, 1e-15);
}

TEST(HamiltonianTest, HermitianAndExcitationConserving) {
  for (const ModelConfig& cfg : all_models()) {
    const ComplexMatrix h = build_hamiltonian(cfg);
    const ComplexMatrix n = excitation_number(cfg);
    EXPECT_LE(hermiticity_deviation(h), 0.0) << to_string(cfg.variant);
    EXPECT_LE(max_abs(h * n - n * h), 1e-12) << to_string(cfg.variant);
  }
}

TEST(ClosedFormTest, InitialTime) {
  for (double x : {0.5, 0.75, 1.0}) {
    const SecIIClosedForm c = closed_form_secii(x, 0.0);
    EXPECT_LE(max_abs(c.rho_ab.matrix() - one_param_density(x).matrix()), 1e-15);
    EXPECT_LE(max_abs(c.rho_c.matrix() - probe_state(ProbePrep::ground).matrix()), 1e-15);
  }
  EXPECT_THROW(closed_form_secii(0.4, 1.0), std::invalid_argument);
}

TEST(ClosedFormTest, HalfPeriodIsCornerSwap) {
  const SecIIClosedForm c = closed_form_secii(0.75, kPi / 2);
  EXPECT_LE(max_abs(c.rho_ab.matrix() - corner_swap(one_param_density(0.75)).matrix()), 1e-15);
  EXPECT_NEAR(c.rho_c(0, 0).real(), 0.5, 1e-15);
}

TEST(ClosedFormTest, ConcurrenceFollowsTimeFormula) {
  for (double x : {0.5, 0.62, 0.75, 0.9}) {
    for (int k = 0; k <= 40; ++k) {
      const double gt = 0.1 * k;
      EXPECT_NEAR(concurrence(closed_form_secii(x, gt).rho_ab), concurrence_time_formula(x, gt), 1e-10)
          << x << " " << gt;
    }
  }
}

TEST(UnitaryEvolutionTest, ReproducesClosedForm) {
  const ModelConfig cfg = qubit_model();
  std::vector<double> times;
  for (int k = 0; k <= 50; ++k) times.push_back(0.08 * k);
  for (double x : {0.5, 0.75, 0.9}) {
    const EvolutionResult r =
        evolve_unitary(initial_joint_state(cfg, one_param_density(x), ProbePrep::ground), cfg, times);
    for (std::size_t k = 0; k < times.size(); ++k) {
      const SecIIClosedForm c = closed_form_secii(x, cfg.g * times[k]);
      EXPECT_LE(max_abs(r.reduced_ab[k].matrix() - c.rho_ab.matrix()), 1e-9) << x << " " << times[k];
      EXPECT_LE(max_abs(r.probe[k].matrix() - c.rho_c.matrix()), 1e-9) << x << " " << times[k];
    }
  }
}

TEST(UnitaryEvolutionTest, ReadoutTimes) {
  const ModelConfig cfg = qubit_model();
  for (int i = 0; i <= 10; ++i) {
    const double x = 0.5 + 0.05 * i;
    const std::vector<double> tn = {kPi / 2, kPi, 3 * kPi / 2, 2 * kPi};
    const EvolutionResult r = evolve_unitary(initial_joint_state(cfg, one_param_density(x), ProbePrep::ground), cfg, tn);
    for (std::size_t n = 0; n < tn.size(); ++n) {
      EXPECT_NEAR(concurrence(r.reduced_ab[n]), std::abs(2 - 3 * x), 1e-9);
      const double sz = expectation(r.probe[n], pauli_z());
      if (n % 2 == 0) {
        EXPECT_NEAR(sz, 3 - 4 * x, 1e-9) << x;
      } else {
        EXPECT_NEAR(sz, -1.0, 1e-9) << x;
      }
    }
  }
}

TEST(UnitaryEvolutionTest, RejectsUnorderedTimes) {
  const ModelConfig cfg = qubit_model();
  const DensityMatrix j = initial_joint_state(cfg, one_param_density(0.7), ProbePrep::ground);
  EXPECT_THROW(evolve_unitary(j, cfg, {1.0, 0.5}), std::invalid_argument);
}

TEST(BosonModelTest, ExcitationNumberConserved) {
  const ModelConfig cfg{ModelVariant::secii_boson, 1.0, 0.0, 2};
  const DensityMatrix j = initial_joint_state(cfg, one_param_density(0.6), ProbePrep::ground);
  const ComplexMatrix n = excitation_number(cfg);
  const double n0 = expectation(j, n);
  EXPECT_NEAR(n0, 2 * 0.4 + 0.6, 1e-15);
  std::vector<double> times;
  for (int k = 1; k <= 30; ++k) times.push_back(0.25 * k);
  const EvolutionResult r = evolve_unitary(j, cfg, times);
  for (const DensityMatrix& s : r.joint_states) EXPECT_NEAR(expectation(s, n), n0, 1e-9);

  const NoiseConfig none = NoiseConfig::none();
  const EvolutionResult m = integrate_master(j, cfg, none, 2.0, 1e-3, {0.5, 1.0, 2.0});
  for (const DensityMatrix& s : m.joint_states) EXPECT_NEAR(expectation(s, n), n0, 1e-9);
}

TEST(BosonModelTest, TwoPhotonComponentDoesNotRevive) {
  const ModelConfig cfg{ModelVariant::secii_boson, 1.0, 0.0, 2};
  const double x = 0.6;
  const EvolutionResult r = evolve_unitary(initial_joint_state(cfg, one_param_density(x), ProbePrep::ground), cfg,
                                           {kPi / 2, kPi});
  const QubitProjection at_pi = qubit_view_ab(cfg, r.reduced_ab[1]);
  EXPECT_GT(at_pi.leakage, 1e-3);
  EXPECT_GT(trace_distance(at_pi.state, one_param_density(x)), 1e-3);
}

TEST(MasterEquationTest, NoiselessLimitMatchesClosedForm) {
  const ModelConfig cfg = qubit_model();
  const DensityMatrix j = initial_joint_state(cfg, one_param_density(0.75), ProbePrep::ground);
  const EvolutionResult r = integrate_master(j, cfg, NoiseConfig::spontaneous_emission(cfg, 0.0), kPi / 2);
  EXPECT_LE(max_abs(r.reduced_ab.back().matrix() - closed_form_secii(0.75, kPi / 2).rho_ab.matrix()), 1e-6);
  const DensityMatrix exact = propagate(j, build_hamiltonian(cfg), kPi / 2);
  EXPECT_LE(max_abs(r.joint_states.back().matrix() - exact.matrix()), 1e-6);
  EXPECT_LE(r.richardson_discrepancy, kRichardsonTol);
}

TEST(MasterEquationTest, NoiselessLimitAtLongerTimes) {
  const ModelConfig cfg{ModelVariant::seciii_effective, 1.0, 2.0};
  const DensityMatrix j = initial_joint_state(cfg, one_param_density(0.6), ProbePrep::excited);
  const EvolutionResult r = integrate_master(j, cfg, NoiseConfig::none(), 10.0, 1e-3, {2.5, 5.0, 10.0});
  const SpectralPropagator p(build_hamiltonian(cfg));
  for (std::size_t k = 0; k < r.times.size(); ++k) {
    EXPECT_LE(max_abs(r.joint_states[k].matrix() - p.evolve(j, r.times[k]).matrix()), 1e-6);
  }
}

TEST(MasterEquationTest, DriftBoundsUnderDecay) {
  const ModelConfig cfg = qubit_model();
  const NoiseConfig noise = NoiseConfig::spontaneous_emission(cfg, 0.1);
  ASSERT_EQ(noise.collapse_ops.size(), 1u);
  std::vector<double> times;
  for (int k = 1; k <= 20; ++k) times.push_back(0.25 * k);
  for (double x : {0.5, 0.8, 1.0}) {
    const DensityMatrix j = initial_joint_state(cfg, one_param_density(x), ProbePrep::ground);
    const EvolutionResult r = integrate_master(j, cfg, noise, 5.0, 1e-3, times);
    EXPECT_LE(r.max_trace_drift, 1e-8);
    EXPECT_LE(r.max_hermiticity_drift, 1e-10);
    EXPECT_LE(r.richardson_discrepancy, 1e-7);
    for (const DensityMatrix& s : r.joint_states) {
      EXPECT_NEAR(s.matrix().trace().real(), 1.0, 1e-8);
      EXPECT_GE(min_eigenvalue(s.matrix()), -1e-8);
    }
  }
}

TEST(MasterEquationTest, DecayLowersProbeExcitation) {
  const ModelConfig cfg = qubit_model();
  const DensityMatrix j = initial_joint_state(cfg, one_param_density(0.75), ProbePrep::ground);
  const EvolutionResult noisy = integrate_master(j, cfg, NoiseConfig::spontaneous_emission(cfg, 0.1), kPi / 2);
  const double sz = expectation(noisy.probe.back(), pauli_z());
  EXPECT_LT(sz, 0.0);
  EXPECT_GT(sz, -0.2);
}

TEST(MasterEquationTest, DiscordIncreasesForLargeX) {
  const ModelConfig cfg = qubit_model();
  const double x = 0.9;
  const DensityMatrix j = initial_joint_state(cfg, one_param_density(x), ProbePrep::ground);
  const EvolutionResult noisy = integrate_master(j, cfg, NoiseConfig::spontaneous_emission(cfg, 0.1), kPi / 2);
  const DensityMatrix ab(two_qubit_space(), noisy.reduced_ab.back().matrix());
  EXPECT_GT(discord(ab), discord(one_param_density(x)));
  EXPECT_LE(concurrence(ab), concurrence(one_param_density(x)) + 1e-12);
}

TEST(MasterEquationTest, Errors) {
  const ModelConfig cfg = qubit_model();
  const DensityMatrix j = initial_joint_state(cfg, one_param_density(0.75), ProbePrep::ground);
  const NoiseConfig noise = NoiseConfig::spontaneous_emission(cfg, 0.1);
  EXPECT_THROW(integrate_master(j, cfg, noise, 1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(integrate_master(j, cfg, noise, -1.0), std::invalid_argument);
  EXPECT_THROW(integrate_master(j, cfg, noise, 1.0, 1e-3, {0.5, 0.4}), std::invalid_argument);
  EXPECT_THROW(integrate_master(one_param_density(0.7), cfg, noise, 1.0), std::invalid_argument);
  EXPECT_THROW(NoiseConfig::spontaneous_emission(cfg, -0.1), std::invalid_argument);
  // Steps this coarse cannot hold the trace or pass the half-step check.
  EXPECT_THROW(integrate_master(j, cfg, NoiseConfig::spontaneous_emission(cfg, 0.5), 3.0, 0.5), std::runtime_error);
}

TEST(DispersiveTest, DeviationShrinksWithDetuning) {
  const double j20 = 1.0 / 40.0;
  const double t_period = kPi / (2.0 * std::sqrt(2.0) * j20);
  const DispersiveComparison d20 = dispersive_comparison(0.75, 1.0, 20.0, t_period);
  const DispersiveComparison d40 = dispersive_comparison(0.75, 1.0, 40.0, t_period);
  EXPECT_LE(d20.deviation, 0.05);
  EXPECT_LT(d40.deviation, d20.deviation);
  EXPECT_NEAR(d20.deviation, d20.deviation_nmax3, 0.1 * d20.deviation);
  EXPECT_NEAR(dispersive_deviation(0.75, 20.0, t_period), d20.deviation, 0.0);
}

TEST(DispersiveTest, VanishesAsCouplingVanishes) {
  double previous = 1.0;
  for (double g : {0.1, 0.01, 0.001}) {
    const double d = dispersive_comparison(0.75, g, 1.0, 50.0, 51).deviation;
    EXPECT_LT(d, previous);
    previous = d;
  }
  EXPECT_LT(previous, 1e-5);
}

TEST(DispersiveTest, Errors) {
  EXPECT_THROW(dispersive_deviation(0.75, 2.0, 10.0), std::invalid_argument);
  EXPECT_THROW(dispersive_deviation(0.3, 20.0, 10.0), std::invalid_argument);
}

}  // namespace
}  // namespace qprobe
