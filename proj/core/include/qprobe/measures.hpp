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

#ifndef QPROBE_MEASURES_HPP_
#define QPROBE_MEASURES_HPP_

#include <array>

#include "qprobe/qcore.hpp"
#include "qprobe/states.hpp"

namespace qprobe {

/// Projector pair {|v><v|, I - |v><v|} with |v> = cos(θ/2)|0> + e^{iφ} sin(θ/2)|1>.
struct MeasurementBasis {
  double theta = 0.0;  // [0, π]
  double phi = 0.0;    // [0, 2π)

  /// Maps arbitrary angles onto the canonical ranges without changing the projectors.
  static MeasurementBasis canonical(double theta, double phi);
  std::array<ComplexMatrix, 2> projectors() const;
};

enum class MeasuredSubsystem { a, b };

struct CorrelationReport {
  double concurrence = 0.0;
  double mutual_info = 0.0;
  double classical = 0.0;
  double discord = 0.0;
  double classical_eq20 = 0.0;  // closed form; NaN when the state is outside its validity
  MeasurementBasis optimizer_basis;
};

struct ClassicalCorrelation {
  double value = 0.0;                // bits
  double min_conditional_entropy = 0.0;
  MeasurementBasis basis;            // minimizer
};

/// Wootters concurrence. Throws std::invalid_argument for non two-qubit input.
double concurrence(const DensityMatrix& rho);

/// max{0, |2-3x| - (1-x)|sin 2gt|}.
double concurrence_time_formula(double x, double gt);

/// S(a) + S(b) - S(ab) in bits for a two-factor state.
double mutual_information(const DensityMatrix& rho);

/// Spectrum of an X-state from its closed form: {r11, block-, block+, r44}.
/// Reduces to {r11, r22 - r23, r22 + r23, r44} when r22 = r33.
std::array<double, 4> xstate_spectrum(const XState& xs);
double mutual_information(const XState& xs);

/// Σ_k p_k S(ρ_k) after a projective measurement on one subsystem; outcomes
/// with p_k ≤ 1e-12 contribute zero.
double conditional_entropy(const DensityMatrix& rho, const MeasurementBasis& basis,
                           MeasuredSubsystem side = MeasuredSubsystem::b);

/// S(ρ_unmeasured) - min over bases of conditional_entropy: 64×32 grid
/// followed by simplex refinement from the four best cells.
ClassicalCorrelation classical_correlation_optimized(const DensityMatrix& rho,
                                                     MeasuredSubsystem side = MeasuredSubsystem::b);

/// Piecewise closed form with the 0.4716 threshold on r44, evaluated verbatim.
/// Throws std::invalid_argument when r22 != r33.
double classical_correlation_eq20(const XState& xs);

/// Branch values of the closed-form minimum conditional entropy.
struct Eq20Branches {
  double branch1 = 0.0;  // used when r44 <= 0.4716
  double branch2 = 0.0;  // used when r44 > 0.4716
  int selected = 1;
  double selected_value() const { return selected == 1 ? branch1 : branch2; }
};
Eq20Branches eq20_min_conditional_entropy(const XState& xs);

inline constexpr double kEq20Threshold = 0.4716;

/// mutual_information - classical_correlation_optimized.
double discord(const DensityMatrix& rho);

/// Every measure for a two-qubit state; classical_eq20 is NaN unless the
/// state is a symmetric X-state.
CorrelationReport correlation_report(const DensityMatrix& rho);

struct SigmaZInference {
  double x_hat = 0.0;
  double concurrence = 0.0;
  double discord = 0.0;
  double classical = 0.0;
};

/// Inverts <σz> = 3 - 4x; throws std::invalid_argument when |<σz>| > 1.
SigmaZInference infer_from_sigmaz(double mean_sigma_z);

}  // namespace qprobe

#endif  // QPROBE_MEASURES_HPP_
