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

#include "qprobe/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qprobe {

namespace {

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    }
  }
  return true;
}

ComplexMatrix symmetrized(const ComplexMatrix& m) {
  return (m + m.adjoint()) * 0.5;
}

}  // namespace

// ---- HilbertSpace ----------------------------------------------------------

HilbertSpace::HilbertSpace(std::vector<int> factor_dims, std::vector<std::string> labels)
    : dims_(std::move(factor_dims)), labels_(std::move(labels)) {
  if (dims_.empty()) throw std::invalid_argument("HilbertSpace needs at least one factor");
  if (dims_.size() != labels_.size()) {
    throw std::invalid_argument("HilbertSpace: one label per factor required");
  }
  for (int d : dims_) {
    if (d <= 0) throw std::invalid_argument("HilbertSpace: factor dimensions must be positive");
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw std::invalid_argument("HilbertSpace: labels must be unique");
}

HilbertSpace HilbertSpace::unlabelled(std::vector<int> factor_dims) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < factor_dims.size(); ++i) labels.push_back(std::to_string(i));
  return HilbertSpace(std::move(factor_dims), std::move(labels));
}

int HilbertSpace::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), 1, std::multiplies<>());
}

std::size_t HilbertSpace::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::invalid_argument("no factor labelled '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

HilbertSpace HilbertSpace::tensor(const HilbertSpace& other) const {
  std::vector<int> dims = dims_;
  std::vector<std::string> labels = labels_;
  dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
  labels.insert(labels.end(), other.labels_.begin(), other.labels_.end());
  return HilbertSpace(std::move(dims), std::move(labels));
}

HilbertSpace HilbertSpace::subspace(std::span<const std::size_t> factors) const {
  std::vector<std::size_t> sorted(factors.begin(), factors.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> dims;
  std::vector<std::string> labels;
  for (std::size_t f : sorted) {
    dims.push_back(dims_.at(f));
    labels.push_back(labels_.at(f));
  }
  return HilbertSpace(std::move(dims), std::move(labels));
}

// ---- DensityMatrix ---------------------------------------------------------

DensityMatrix::DensityMatrix(HilbertSpace space, ComplexMatrix mat)
    : space_(std::move(space)), mat_(std::move(mat)) {
  if (mat_.rows() != mat_.cols()) throw std::invalid_argument("density matrix must be square");
  if (mat_.rows() != space_.total_dim()) {
    throw std::invalid_argument("density matrix dimension does not match its Hilbert space");
  }
  if (!all_finite(mat_)) throw std::invalid_argument("density matrix has non-finite entries");
  if (hermiticity_deviation(mat_) > kHermitianTol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  const Complex tr = mat_.trace();
  if (std::abs(tr.real() - 1.0) > kTraceTol || std::abs(tr.imag()) > kTraceTol) {
    throw std::invalid_argument("density matrix trace differs from 1");
  }
  if (min_eigenvalue(mat_) < -kNegativeEigenTol) {
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::pure(HilbertSpace space, const Eigen::VectorXcd& psi) {
  const double norm = psi.norm();
  if (norm == 0.0) throw std::invalid_argument("pure state needs a nonzero vector");
  Eigen::VectorXcd v = psi / norm;
  ComplexMatrix m = v * v.adjoint();
  return DensityMatrix(std::move(space), symmetrized(m));
}

DensityMatrix DensityMatrix::diagonal(HilbertSpace space, std::span<const double> populations) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(populations.size()),
                                        static_cast<Eigen::Index>(populations.size()));
  for (std::size_t i = 0; i < populations.size(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = populations[i];
  }
  return DensityMatrix(std::move(space), std::move(m));
}

// ---- Operators -------------------------------------------------------------

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  const Complex i(0.0, 1.0);
  ComplexMatrix m(2, 2);
  m << 0.0, -i, i, 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

ComplexMatrix embed(const HilbertSpace& space, std::size_t factor, const ComplexMatrix& op) {
  if (factor >= space.factor_count()) throw std::invalid_argument("bad subsystem");
  if (op.rows() != space.dim(factor) || op.cols() != space.dim(factor)) {
    throw std::invalid_argument("operator dimension does not match factor");
  }
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (std::size_t f = 0; f < space.factor_count(); ++f) {
    out = kron(out, f == factor ? op : identity(space.dim(f)));
  }
  return out;
}

// ---- Core operations -------------------------------------------------------

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(a.space().tensor(b.space()), kron(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  const HilbertSpace& space = rho.space();
  const std::size_t n = space.factor_count();
  if (keep.empty()) throw std::invalid_argument("bad subsystem");
  std::vector<bool> kept(n, false);
  for (std::size_t k : keep) {
    if (k >= n) throw std::invalid_argument("bad subsystem");
    kept[k] = true;
  }

  // Row-major strides: factor 0 is the most significant digit.
  std::vector<int> stride(n, 1);
  for (std::size_t f = n - 1; f > 0; --f) stride[f - 1] = stride[f] * space.dim(f);

  std::vector<std::size_t> kept_factors, traced_factors;
  for (std::size_t f = 0; f < n; ++f) (kept[f] ? kept_factors : traced_factors).push_back(f);

  auto decode = [&](int flat, const std::vector<std::size_t>& factors) {
    // flat is a mixed-radix index over `factors`; returns its offset in the full space.
    int offset = 0;
    for (std::size_t idx = factors.size(); idx-- > 0;) {
      const int d = space.dim(factors[idx]);
      offset += (flat % d) * stride[factors[idx]];
      flat /= d;
    }
    return offset;
  };

  int kept_dim = 1, traced_dim = 1;
  for (std::size_t f : kept_factors) kept_dim *= space.dim(f);
  for (std::size_t f : traced_factors) traced_dim *= space.dim(f);

  std::vector<int> kept_offset(static_cast<std::size_t>(kept_dim));
  std::vector<int> traced_offset(static_cast<std::size_t>(traced_dim));
  for (int i = 0; i < kept_dim; ++i) kept_offset[static_cast<std::size_t>(i)] = decode(i, kept_factors);
  for (int i = 0; i < traced_dim; ++i) traced_offset[static_cast<std::size_t>(i)] = decode(i, traced_factors);

  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(kept_dim, kept_dim);
  for (int i = 0; i < kept_dim; ++i) {
    for (int j = 0; j < kept_dim; ++j) {
      Complex acc = 0.0;
      for (int t : traced_offset) {
        acc += m(kept_offset[static_cast<std::size_t>(i)] + t, kept_offset[static_cast<std::size_t>(j)] + t);
      }
      out(i, j) = acc;
    }
  }
  return DensityMatrix(space.subspace(kept_factors), symmetrized(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eigen: matrix is not square");
  if (!all_finite(m)) throw std::invalid_argument("hermitian_eigen: non-finite entries");
  if (hermiticity_deviation(m) > kEigenInputHermitianTol) throw std::invalid_argument("not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(symmetrized(m));
  if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_eigen: solver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, double zero_floor) {
  const HermitianEigen eig = hermitian_eigen(m);
  RealVector roots(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double v = eig.values(i);
    if (v < -kNegativeEigenTol) throw std::invalid_argument("not PSD");
    roots(i) = v <= zero_floor ? 0.0 : std::sqrt(v);
  }
  return symmetrized(eig.vectors * roots.asDiagonal() * eig.vectors.adjoint());
}

ComplexMatrix psd_sqrt(const DensityMatrix& rho) { return psd_sqrt(rho.matrix()); }

SpectralPropagator::SpectralPropagator(const ComplexMatrix& hamiltonian)
    : eig_(hermitian_eigen(hamiltonian)) {}

ComplexMatrix SpectralPropagator::unitary(double t) const {
  Eigen::VectorXcd phases(eig_.values.size());
  for (Eigen::Index i = 0; i < eig_.values.size(); ++i) {
    phases(i) = std::polar(1.0, -eig_.values(i) * t);
  }
  return eig_.vectors * phases.asDiagonal() * eig_.vectors.adjoint();
}

DensityMatrix SpectralPropagator::evolve(const DensityMatrix& rho, double t) const {
  if (rho.dim() != dim()) throw std::invalid_argument("propagate: dimension mismatch");
  if (t == 0.0) return rho;
  const ComplexMatrix u = unitary(t);
  return DensityMatrix(rho.space(), symmetrized(u * rho.matrix() * u.adjoint()));
}

DensityMatrix propagate(const DensityMatrix& rho, const ComplexMatrix& h, double t) {
  if (h.rows() != rho.dim() || h.cols() != rho.dim()) {
    throw std::invalid_argument("propagate: dimension mismatch");
  }
  return SpectralPropagator(h).evolve(rho, t);
}

double entropy_bits_of_spectrum(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double p : eigenvalues) {
    if (p > kEntropyZeroClip) s -= p * std::log2(p);
  }
  return s;
}

double entropy_bits(const ComplexMatrix& hermitian) {
  const HermitianEigen eig = hermitian_eigen(hermitian);
  return entropy_bits_of_spectrum(std::span<const double>(eig.values.data(),
                                                          static_cast<std::size_t>(eig.values.size())));
}

double entropy_bits(const DensityMatrix& rho) { return entropy_bits(rho.matrix()); }

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  const HermitianEigen eig = hermitian_eigen(a - b);
  return 0.5 * eig.values.cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return trace_distance(a.matrix(), b.matrix());
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_deviation(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(m - m.adjoint());
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(symmetrized(hermitian), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& op) {
  return (rho.matrix() * op).trace().real();
}

}  // namespace qprobe
