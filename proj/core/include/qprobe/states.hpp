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

#ifndef QPROBE_STATES_HPP_
#define QPROBE_STATES_HPP_

#include <string_view>

#include "qprobe/qcore.hpp"

namespace qprobe {

// Two-qubit states use the basis |00>,|01>,|10>,|11> with factor 0 = "a"
// (rows {1,2} vs {3,4}) and factor 1 = "b" (rows {1,3} vs {2,4}).

inline constexpr double kFamilyMin = 0.5;
inline constexpr double kFamilyMax = 1.0;

HilbertSpace two_qubit_space();
HilbertSpace probe_space();

/// Validated family parameter x in [1/2, 1].
class OneParamState {
 public:
  /// Throws std::invalid_argument("x out of family domain").
  explicit OneParamState(double x);

  double x() const { return x_; }

  // Weights of (|01>+|10>)/√2, (|01>-|10>)/√2 and |11>.
  double symmetric_weight() const { return 1.0 - x_; }
  double antisymmetric_weight() const { return 2.0 * x_ - 1.0; }
  double corner_weight() const { return 1.0 - x_; }

  DensityMatrix density() const;

 private:
  double x_;
};

/// The one-parameter family: populations (0, x/2, x/2, 1-x), coherence 1 - 3x/2.
DensityMatrix one_param_density(double x);

/// Two-qubit state whose only nonzero entries are the diagonal and a real (2,3) coherence.
struct XState {
  double r11 = 0.0;
  double r22 = 0.0;
  double r33 = 0.0;
  double r44 = 0.0;
  double r23 = 0.0;

  /// Throws std::invalid_argument if normalization or positivity fails.
  void validate() const;
  DensityMatrix to_density() const;
  bool symmetric(double tol = 1e-9) const;
};

/// Throws std::invalid_argument with a fixed message when the
/// corner coherences or other off-pattern entries exceed 1e-8.
XState extract_xstate(const DensityMatrix& rho);

enum class ProbePrep { ground, excited };

std::string_view to_string(ProbePrep prep);

/// Probe qubit state in the (|e>, |g>) basis.
DensityMatrix probe_state(ProbePrep prep);

/// Conjugation by σx⊗σx; for the family this swaps the (1,1) and (4,4) corners.
DensityMatrix corner_swap(const DensityMatrix& rho);

/// rho ⊗ |prep><prep|, probe appended as the last factor labelled "C".
DensityMatrix join_with_probe(const DensityMatrix& rho, ProbePrep prep);

}  // namespace qprobe

#endif  // QPROBE_STATES_HPP_
