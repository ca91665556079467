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

#include "qprobe/states.hpp"

#include <cmath>
#include <stdexcept>

namespace qprobe {

namespace {

constexpr double kXStatePatternTol = 1e-8;
constexpr double kPositivitySlack = 1e-12;

}  // namespace

HilbertSpace two_qubit_space() { return HilbertSpace({2, 2}, {"a", "b"}); }

HilbertSpace probe_space() { return HilbertSpace({2}, {"C"}); }

OneParamState::OneParamState(double x) : x_(x) {
  if (!(x >= kFamilyMin && x <= kFamilyMax)) throw std::invalid_argument("x out of family domain");
}

DensityMatrix OneParamState::density() const {
  XState xs{0.0, x_ / 2.0, x_ / 2.0, 1.0 - x_, 1.0 - 1.5 * x_};
  return xs.to_density();
}

DensityMatrix one_param_density(double x) { return OneParamState(x).density(); }

void XState::validate() const {
  for (double p : {r11, r22, r33, r44}) {
    if (!std::isfinite(p) || p < -kPositivitySlack) throw std::invalid_argument("XState: negative population");
  }
  if (!std::isfinite(r23)) throw std::invalid_argument("XState: non-finite coherence");
  if (std::abs(r11 + r22 + r33 + r44 - 1.0) > kTraceTol) {
    throw std::invalid_argument("XState: populations do not sum to 1");
  }
  if (r23 * r23 > r22 * r33 + kPositivitySlack) throw std::invalid_argument("XState: coherence violates positivity");
}

DensityMatrix XState::to_density() const {
  validate();
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = r11;
  m(1, 1) = r22;
  m(2, 2) = r33;
  m(3, 3) = r44;
  m(1, 2) = r23;
  m(2, 1) = r23;
  return DensityMatrix(two_qubit_space(), std::move(m));
}

bool XState::symmetric(double tol) const { return std::abs(r22 - r33) <= tol; }

XState extract_xstate(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("extract_xstate: expected a two-qubit state");
  const ComplexMatrix& m = rho.matrix();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const bool allowed = i == j || (i == 1 && j == 2) || (i == 2 && j == 1);
      if (!allowed && std::abs(m(i, j)) > kXStatePatternTol) {
        throw std::invalid_argument("not an X-state of Eq. 14 type");
      }
    }
  }
  if (std::abs(m(1, 2).imag()) > kXStatePatternTol) throw std::invalid_argument("not an X-state of Eq. 14 type");
  return XState{m(0, 0).real(), m(1, 1).real(), m(2, 2).real(), m(3, 3).real(), m(1, 2).real()};
}

std::string_view to_string(ProbePrep prep) {
  return prep == ProbePrep::ground ? "ground" : "excited";
}

DensityMatrix probe_state(ProbePrep prep) {
  const double pe = prep == ProbePrep::excited ? 1.0 : 0.0;
  const double pops[2] = {pe, 1.0 - pe};
  return DensityMatrix::diagonal(probe_space(), pops);
}

DensityMatrix corner_swap(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("corner_swap: expected a two-qubit state");
  const ComplexMatrix xx = kron(pauli_x(), pauli_x());
  return DensityMatrix(rho.space(), xx * rho.matrix() * xx);
}

DensityMatrix join_with_probe(const DensityMatrix& rho, ProbePrep prep) {
  return kron(rho, probe_state(prep));
}

}  // namespace qprobe
