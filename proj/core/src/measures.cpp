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

#include "qprobe/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "simplex.hpp"

namespace qprobe {

namespace {

constexpr int kGridPhi = 64;
constexpr int kGridTheta = 32;
constexpr int kRestarts = 4;
constexpr int kSimplexIterations = 200;
constexpr double kSimplexTol = 1e-10;

// Eigenvalues of ρ below this are round-off when forming √ρ for the concurrence.
constexpr double kConcurrenceRootFloor = 1e-14;

using Mat2 = Eigen::Matrix2cd;

double xlog2x(double p) { return p > kEntropyZeroClip ? p * std::log2(p) : 0.0; }

double entropy_2x2(const Mat2& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double r = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
  const double mean = 0.5 * (a + d);
  return -xlog2x(mean + r) - xlog2x(mean - r);
}

void require_two_qubit(const DensityMatrix& rho, const char* what) {
  if (rho.dim() != 4 || rho.space().factor_count() != 2) {
    throw std::invalid_argument(std::string(what) + ": expected a two-qubit state");
  }
}

// Unnormalized state of the unmeasured qubit for projector `proj` on `side`.
Mat2 conditional_block(const ComplexMatrix& rho, const Mat2& proj, MeasuredSubsystem side) {
  Mat2 out = Mat2::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex acc = 0.0;
      for (int m = 0; m < 2; ++m) {
        for (int n = 0; n < 2; ++n) {
          // Tr_measured[(P ⊗ I or I ⊗ P) ρ]: contract ρ's measured indices with P_{n,m}.
          const Complex r = side == MeasuredSubsystem::b ? rho(2 * i + m, 2 * j + n)
                                                         : rho(2 * m + i, 2 * n + j);
          acc += r * proj(n, m);
        }
      }
      out(i, j) = acc;
    }
  }
  return out;
}

struct Candidate {
  double value;
  double theta;
  double phi;
};

bool candidate_less(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.theta != b.theta) return a.theta < b.theta;
  return a.phi < b.phi;
}

}  // namespace

MeasurementBasis MeasurementBasis::canonical(double theta, double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  theta = std::fmod(theta, two_pi);
  if (theta < 0.0) theta += two_pi;
  if (theta > std::numbers::pi) {
    // |v(θ,φ)> and |v(2π-θ, φ+π)> differ by a global phase.
    theta = two_pi - theta;
    phi += std::numbers::pi;
  }
  phi = std::fmod(phi, two_pi);
  if (phi < 0.0) phi += two_pi;
  if (phi >= two_pi) phi = 0.0;
  return {theta, phi};
}

std::array<ComplexMatrix, 2> MeasurementBasis::projectors() const {
  Eigen::Vector2cd v(std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi));
  ComplexMatrix p0 = v * v.adjoint();
  ComplexMatrix p1 = ComplexMatrix::Identity(2, 2) - p0;
  return {p0, p1};
}

double concurrence(const DensityMatrix& rho) {
  require_two_qubit(rho, "concurrence");
  const ComplexMatrix yy = kron(pauli_y(), pauli_y());
  const ComplexMatrix root = psd_sqrt(rho.matrix(), kConcurrenceRootFloor);
  // √ρ̃ = (σy⊗σy) conj(√ρ) (σy⊗σy); the singular values of √ρ √ρ̃ are the
  // square roots of the eigenvalues of √ρ ρ̃ √ρ.
  const ComplexMatrix root_tilde = yy * root.conjugate() * yy;
  const Eigen::JacobiSVD<ComplexMatrix> svd(root * root_tilde);
  const RealVector& s = svd.singularValues();  // descending
  return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

double concurrence_time_formula(double x, double gt) {
  OneParamState validated(x);
  return std::max(0.0, std::abs(2.0 - 3.0 * x) - (1.0 - x) * std::abs(std::sin(2.0 * gt)));
}

double mutual_information(const DensityMatrix& rho) {
  if (rho.space().factor_count() != 2) throw std::invalid_argument("mutual_information: state is not bipartite");
  return entropy_bits(partial_trace(rho, {0})) + entropy_bits(partial_trace(rho, {1})) - entropy_bits(rho);
}

std::array<double, 4> xstate_spectrum(const XState& xs) {
  const double mean = 0.5 * (xs.r22 + xs.r33);
  const double half_gap = 0.5 * (xs.r22 - xs.r33);
  const double radius = std::sqrt(half_gap * half_gap + xs.r23 * xs.r23);
  return {xs.r11, mean - radius, mean + radius, xs.r44};
}

double mutual_information(const XState& xs) {
  xs.validate();
  const std::array<double, 4> spectrum = xstate_spectrum(xs);
  const double pa[2] = {xs.r11 + xs.r22, xs.r33 + xs.r44};
  const double pb[2] = {xs.r11 + xs.r33, xs.r22 + xs.r44};
  return entropy_bits_of_spectrum(pa) + entropy_bits_of_spectrum(pb) - entropy_bits_of_spectrum(spectrum);
}

double conditional_entropy(const DensityMatrix& rho, const MeasurementBasis& basis, MeasuredSubsystem side) {
  require_two_qubit(rho, "conditional_entropy");
  const std::array<ComplexMatrix, 2> projectors = basis.projectors();
  double total = 0.0;
  for (const ComplexMatrix& p : projectors) {
    const Mat2 block = conditional_block(rho.matrix(), p, side);
    const double pk = block.trace().real();
    if (pk <= kEntropyZeroClip) continue;
    total += pk * entropy_2x2(block / pk);
  }
  return total;
}

ClassicalCorrelation classical_correlation_optimized(const DensityMatrix& rho, MeasuredSubsystem side) {
  require_two_qubit(rho, "classical_correlation_optimized");
  const DensityMatrix unmeasured = partial_trace(rho, {side == MeasuredSubsystem::b ? std::size_t{0} : std::size_t{1}});
  const double s_unmeasured = entropy_bits(unmeasured);

  auto objective = [&](double theta, double phi) {
    return conditional_entropy(rho, MeasurementBasis{theta, phi}, side);
  };

  const double d_theta = std::numbers::pi / (kGridTheta - 1);
  const double d_phi = 2.0 * std::numbers::pi / kGridPhi;
  std::vector<Candidate> grid;
  grid.reserve(kGridPhi * kGridTheta);
  for (int i = 0; i < kGridPhi; ++i) {
    for (int j = 0; j < kGridTheta; ++j) {
      const double theta = j * d_theta;
      const double phi = i * d_phi;
      grid.push_back({objective(theta, phi), theta, phi});
    }
  }
  std::partial_sort(grid.begin(), grid.begin() + kRestarts, grid.end(), candidate_less);

  Candidate best = grid.front();
  for (int k = 0; k < kRestarts; ++k) {
    const detail::SimplexResult r = detail::nelder_mead_2d(
        objective, {grid[static_cast<std::size_t>(k)].theta, grid[static_cast<std::size_t>(k)].phi},
        {0.5 * d_theta, 0.5 * d_phi}, kSimplexIterations, kSimplexTol);
    const MeasurementBasis b = MeasurementBasis::canonical(r.point[0], r.point[1]);
    const Candidate c{r.value, b.theta, b.phi};
    if (candidate_less(c, best)) best = c;
  }

  ClassicalCorrelation out;
  out.min_conditional_entropy = best.value;
  out.value = std::max(0.0, s_unmeasured - best.value);
  out.basis = MeasurementBasis{best.theta, best.phi};
  return out;
}

Eq20Branches eq20_min_conditional_entropy(const XState& xs) {
  xs.validate();
  if (!xs.symmetric()) throw std::invalid_argument("outside Eq. 20 validity");
  Eq20Branches b;
  const double mid = xs.r22 + xs.r33;
  b.branch1 = xlog2x(mid) - xlog2x(xs.r22) - xlog2x(xs.r33);
  const double theta = std::sqrt((xs.r11 - xs.r44) * (xs.r11 - xs.r44) + 4.0 * xs.r23 * xs.r23);
  auto ylog2y = [](double y) { return y > 0.0 ? y * std::log2(y) : 0.0; };
  b.branch2 = 1.0 - 0.5 * (ylog2y(1.0 - theta) + ylog2y(1.0 + theta));
  b.selected = xs.r44 <= kEq20Threshold ? 1 : 2;
  return b;
}

double classical_correlation_eq20(const XState& xs) {
  const Eq20Branches b = eq20_min_conditional_entropy(xs);
  const double pa[2] = {xs.r11 + xs.r22, xs.r33 + xs.r44};
  return entropy_bits_of_spectrum(pa) - b.selected_value();
}

double discord(const DensityMatrix& rho) {
  return mutual_information(rho) - classical_correlation_optimized(rho).value;
}

CorrelationReport correlation_report(const DensityMatrix& rho) {
  require_two_qubit(rho, "correlation_report");
  CorrelationReport r;
  r.concurrence = concurrence(rho);
  r.mutual_info = mutual_information(rho);
  const ClassicalCorrelation cc = classical_correlation_optimized(rho);
  r.classical = cc.value;
  r.optimizer_basis = cc.basis;
  r.discord = r.mutual_info - r.classical;
  r.classical_eq20 = std::numeric_limits<double>::quiet_NaN();
  try {
    const XState xs = extract_xstate(rho);
    if (xs.symmetric()) r.classical_eq20 = classical_correlation_eq20(xs);
  } catch (const std::invalid_argument&) {
    // not a symmetric X-state: the closed form does not apply
  }
  return r;
}

SigmaZInference infer_from_sigmaz(double mean_sigma_z) {
  if (!(std::abs(mean_sigma_z) <= 1.0)) throw std::invalid_argument("mean sigma_z outside [-1, 1]");
  SigmaZInference out;
  out.x_hat = std::clamp((3.0 - mean_sigma_z) / 4.0, kFamilyMin, kFamilyMax);
  out.concurrence = std::abs(3.0 * mean_sigma_z - 1.0) / 4.0;
  const DensityMatrix rho = one_param_density(out.x_hat);
  const ClassicalCorrelation cc = classical_correlation_optimized(rho);
  out.classical = cc.value;
  out.discord = mutual_information(rho) - cc.value;
  return out;
}

}  // namespace qprobe
