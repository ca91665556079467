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

#ifndef QPROBE_QCORE_HPP_
#define QPROBE_QCORE_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qprobe {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Tolerances shared by every module.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kNegativeEigenTol = 1e-8;
inline constexpr double kEntropyZeroClip = 1e-12;
inline constexpr double kEigenInputHermitianTol = 1e-8;

/// Tensor-factor layout of a Hilbert space, e.g. {2,2,2} labelled {"A","B","C"}.
class HilbertSpace {
 public:
  HilbertSpace() = default;
  HilbertSpace(std::vector<int> factor_dims, std::vector<std::string> labels);

  /// Unlabelled space; factors get labels "0", "1", ...
  static HilbertSpace unlabelled(std::vector<int> factor_dims);

  const std::vector<int>& factor_dims() const { return dims_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t factor_count() const { return dims_.size(); }
  int dim(std::size_t factor) const { return dims_.at(factor); }
  int total_dim() const;

  /// Index of the factor with the given label; throws std::invalid_argument.
  std::size_t index_of(const std::string& label) const;

  /// Concatenation (this ⊗ other). Labels must stay unique.
  HilbertSpace tensor(const HilbertSpace& other) const;
  /// Sub-space made of the given factors, in ascending factor order.
  HilbertSpace subspace(std::span<const std::size_t> factors) const;

  friend bool operator==(const HilbertSpace&, const HilbertSpace&) = default;

 private:
  std::vector<int> dims_;
  std::vector<std::string> labels_;
};

/// Positive, unit-trace, Hermitian matrix on a declared HilbertSpace.
/// Construction validates the invariants and throws std::invalid_argument.
class DensityMatrix {
 public:
  DensityMatrix(HilbertSpace space, ComplexMatrix mat);

  const HilbertSpace& space() const { return space_; }
  const ComplexMatrix& matrix() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }
  Complex operator()(int i, int j) const { return mat_(i, j); }

  /// Pure state |psi><psi| (psi is normalized internally).
  static DensityMatrix pure(HilbertSpace space, const Eigen::VectorXcd& psi);
  /// Diagonal state with the given populations.
  static DensityMatrix diagonal(HilbertSpace space, std::span<const double> populations);

 private:
  HilbertSpace space_;
  ComplexMatrix mat_;
};

struct HermitianEigen {
  RealVector values;     // ascending
  ComplexMatrix vectors; // orthonormal columns
};

// ---- Standard operators ----------------------------------------------------

ComplexMatrix identity(int dim);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Embeds a single-factor operator into the full space: I ⊗ .. ⊗ op ⊗ .. ⊗ I.
ComplexMatrix embed(const HilbertSpace& space, std::size_t factor, const ComplexMatrix& op);

// ---- Core operations -------------------------------------------------------

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on `keep` (any order given; the result keeps ascending factor order).
/// Throws std::invalid_argument("bad subsystem") for an empty or out-of-range set.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep);

/// Eigen-decomposition of a Hermitian matrix. The input is symmetrized first;
/// a deviation above 1e-8 is rejected as "not Hermitian".
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

/// Positive square root. Eigenvalues in [-1e-8, zero_floor] are treated as 0;
/// anything below -1e-8 throws "not PSD".
ComplexMatrix psd_sqrt(const ComplexMatrix& m, double zero_floor = 0.0);
ComplexMatrix psd_sqrt(const DensityMatrix& rho);

/// exp(-iHt) realized through one eigen-decomposition of H; reusable across times.
class SpectralPropagator {
 public:
  explicit SpectralPropagator(const ComplexMatrix& hamiltonian);

  const RealVector& eigenvalues() const { return eig_.values; }
  const ComplexMatrix& eigenvectors() const { return eig_.vectors; }
  int dim() const { return static_cast<int>(eig_.values.size()); }

  ComplexMatrix unitary(double t) const;
  DensityMatrix evolve(const DensityMatrix& rho, double t) const;

 private:
  HermitianEigen eig_;
};

/// rho(t) = exp(-iHt) rho exp(iHt). Throws std::invalid_argument on a dimension mismatch.
DensityMatrix propagate(const DensityMatrix& rho, const ComplexMatrix& h, double t);

/// Von Neumann entropy in bits; eigenvalues below 1e-12 count as exact zeros.
double entropy_bits(const DensityMatrix& rho);
double entropy_bits(const ComplexMatrix& hermitian);
double entropy_bits_of_spectrum(std::span<const double> eigenvalues);

/// Half the trace norm of (a - b).
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

double max_abs(const ComplexMatrix& m);
double hermiticity_deviation(const ComplexMatrix& m);
double min_eigenvalue(const ComplexMatrix& hermitian);

/// Real part of Tr(rho * op).
double expectation(const DensityMatrix& rho, const ComplexMatrix& op);

}  // namespace qprobe

#endif  // QPROBE_QCORE_HPP_
