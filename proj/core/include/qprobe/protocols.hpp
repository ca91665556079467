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

#ifndef QPROBE_PROTOCOLS_HPP_
#define QPROBE_PROTOCOLS_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qprobe/dynamics.hpp"
#include "qprobe/measures.hpp"

namespace qprobe {

// ---- Single-probe cycle (cavity models) -----------------------------------

struct ProbeCycleReport {
  double t_read = 0.0;
  double mean_sigma_z = 0.0;
  DensityMatrix post_state;          // reduced A,B (two-qubit view)
  double leakage = 0.0;              // bosonic weight outside {0,1} photons
  bool state_restored = false;       // trace distance to ρ₀ ≤ 1e-8
  double restoration_distance = 0.0;
  CorrelationReport measures_before;
  CorrelationReport measures_after;
};

/// Evolves ρ₀(x) ⊗ |g><g| to t = nπ/2g and reads the probe. Throws
/// std::invalid_argument for even n ("no readout information at even
/// multiples") or a model without cavities coupling A and B to the probe.
ProbeCycleReport run_probe_cycle(double x, const ModelConfig& cfg, int n_half_periods, const NoiseConfig& noise,
                                 double dt = kDefaultDt);

// ---- Transfer timing (effective exchange model) ---------------------------

/// Mean transfer probability of the two excitation-swap channels after time t
/// under H_eff with exchange strength J.
double transfer_fidelity(double exchange_strength, double t);

/// Smallest t* > 0 with F(t*) ≥ 1 − 1e-9 (golden-section refinement).
/// Throws std::runtime_error("no clean transfer") if nothing reaches 1 − 1e-6.
double find_transfer_time(double exchange_strength);

struct TransferTimeReport {
  double exchange_strength = 0.0;
  double derived_time = 0.0;
  double derived_fidelity = 0.0;
  double quoted_time = 0.0;     // δπ/g² = π/(2J)
  double quoted_fidelity = 0.0;
};
TransferTimeReport transfer_time_report(const ModelConfig& cfg);

// ---- Shots and estimation --------------------------------------------------

struct ShotRecord {
  std::uint64_t shots = 0;
  std::uint64_t count_excited = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;  // stage index
  double frequency() const { return shots == 0 ? 0.0 : static_cast<double>(count_excited) / static_cast<double>(shots); }
};

/// Counter-based Bernoulli draws keyed by (seed, stream, shot index).
ShotRecord sample_shots(double p_excited, std::uint64_t shots, std::uint64_t seed, std::uint64_t stream = 0);

/// Probe readout law P(e | x) for each kind of measurement group.
enum class ReadoutMap {
  secii_probe,      // 2(1 − x)
  seciii_stage_e,   // 2x − 1
  seciii_stage_g    // 2(1 − x)
};
double readout_probability(ReadoutMap map, double x);

struct ReadoutGroup {
  ReadoutMap map = ReadoutMap::secii_probe;
  std::uint64_t shots = 0;
  double frequency = 0.0;  // observed fraction of excited outcomes
};

struct XEstimate {
  double x_hat = 0.0;
  double standard_error = 0.0;
  std::pair<double, double> ci99{0.0, 0.0};
  CorrelationReport derived;
};

inline constexpr double kZ995 = 2.5758293035489004;

/// Pooled maximum-likelihood estimate of x clamped to [1/2, 1]; throws
/// std::invalid_argument when the groups carry no shots.
XEstimate estimate_from_counts(std::span<const ReadoutGroup> groups);

/// Exact-statistics mode: `frequency` holds exact probabilities, stderr is 0.
XEstimate estimate_exact(std::span<const ReadoutGroup> groups);

// ---- QND sequence (effective exchange model) ------------------------------

struct QndStage {
  ProbePrep probe_prep = ProbePrep::excited;
  double duration = 0.0;
  double outcome_p_excited = 0.0;
};

struct QndStageRecord {
  int cycle = 0;
  QndStage stage;
  ShotRecord shots;
  double distance_to_initial = 0.0;      // A,B state after the stage vs ρ₀
  double distance_to_corner_swap = 0.0;  // A,B state after the stage vs corner_swap(ρ₀)
};

struct QndRun {
  DensityMatrix final_state;
  std::vector<QndStageRecord> stages;
  XEstimate estimate;
  double restoration_distance = 0.0;  // worst over completed cycles
  TransferTimeReport timing;
};

/// Alternating |e>/|g> probes, each evolved for the derived transfer time and
/// traced out. shots_per_stage = 0 selects exact-statistics mode.
QndRun run_qnd_sequence(double x, int n_cycles, std::uint64_t shots_per_stage, std::uint64_t seed,
                        const ModelConfig& cfg = ModelConfig{ModelVariant::seciii_effective, 1.0, 10.0, 2, true});

}  // namespace qprobe

#endif  // QPROBE_PROTOCOLS_HPP_
