// Copyright 2026 The qdpamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "error.hpp"

namespace qdpamp {

namespace {

double MaxAbsDeviationFromAdjoint(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m, double tol) {
  Require(m.rows() > 0 && m.rows() == m.cols(),
          "hermitian matrix must be square and non-empty");
  Require(MaxAbsDeviationFromAdjoint(m) <= tol,
          "matrix is not hermitian within tolerance");
  m_ = (m + m.adjoint()) * 0.5;
}

HermitianMatrix HermitianMatrix::Identity(int dim) {
  return HermitianMatrix(ComplexMatrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::Zero(int dim) {
  return HermitianMatrix(ComplexMatrix::Zero(dim, dim));
}

RealVector HermitianMatrix::Eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m_,
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double HermitianMatrix::MinEigenvalue() const { return Eigenvalues()(0); }

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& other) const {
  Require(dim() == other.dim(), "dimension mismatch in hermitian difference");
  return HermitianMatrix(m_ - other.m_);
}

PureState::PureState(ComplexVector amplitudes, double tol)
    : amps_(std::move(amplitudes)) {
  Require(amps_.size() > 0, "pure state must have at least one amplitude");
  Require(std::abs(amps_.squaredNorm() - 1.0) <= tol,
          "pure state amplitudes are not normalized");
}

Complex PureState::Overlap(const PureState& other) const {
  Require(dim() == other.dim(), "dimension mismatch in overlap");
  return amps_.dot(other.amps_);
}

ComplexMatrix PureState::Projector() const {
  return amps_ * amps_.adjoint();
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m, double tol)
    : h_(m, std::max(tol, tol::kHermitian)) {
  Require(std::abs(h_.matrix().trace().real() - 1.0) <= tol,
          "density matrix trace differs from 1");
  Require(h_.MinEigenvalue() >= -tol,
          "density matrix is not positive semidefinite");
}

DensityMatrix::DensityMatrix(const PureState& psi)
    : DensityMatrix(psi.Projector()) {}

DensityMatrix DensityMatrix::MaximallyMixed(int dim) {
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / double(dim));
}

DensityMatrix DensityMatrix::BasisState(int dim, int i) {
  Require(i >= 0 && i < dim, "basis index out of range");
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  m(i, i) = 1.0;
  return DensityMatrix(m);
}

Povm::Povm(std::vector<HermitianMatrix> elems, std::vector<int> labels,
           double tol)
    : elements(std::move(elems)), outcome_labels(std::move(labels)) {
  Require(!elements.empty(), "POVM needs at least one element");
  Require(outcome_labels.size() == elements.size(),
          "POVM label count differs from element count");
  const int d = elements.front().dim();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& e : elements) {
    Require(e.dim() == d, "POVM elements have differing dimensions");
    Require(IsPsd(e, tol), "POVM element is not positive semidefinite");
    sum += e.matrix();
  }
  Require((sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() <= tol,
          "POVM elements do not sum to the identity");
}

double TraceNorm(const HermitianMatrix& a) {
  return 0.5 * a.Eigenvalues().cwiseAbs().sum();
}

double TraceDistance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  Require(rho.dim() == sigma.dim(), "dimension mismatch in trace distance");
  return TraceNorm(rho.hermitian() - sigma.hermitian());
}

std::vector<double> PovmProbabilities(const Povm& povm,
                                      const DensityMatrix& rho, double tol) {
  Require(povm.dim() == rho.dim(), "POVM and state dimensions differ");
  std::vector<double> probs;
  probs.reserve(povm.elements.size());
  for (const auto& e : povm.elements) {
    const double p = (e.matrix() * rho.matrix()).trace().real();
    Require(p >= -tol && p <= 1.0 + tol, "POVM probability outside [0, 1]");
    probs.push_back(std::clamp(p, 0.0, 1.0));
  }
  return probs;
}

bool IsPsd(const HermitianMatrix& a, double tol) {
  return a.MinEigenvalue() >= -tol;
}

double OperatorNorm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues()(0);
}

double MaxRowSumNorm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().rowwise().sum().maxCoeff();
}

double MaxGeneralizedEigenvalue(const HermitianMatrix& a,
                                const HermitianMatrix& b, double tol) {
  Require(a.dim() == b.dim(), "dimension mismatch in generalized eigenvalue");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> sb(b.matrix());
  const auto& evals = sb.eigenvalues();
  const auto& evecs = sb.eigenvectors();
  std::vector<int> support;
  for (int i = 0; i < evals.size(); ++i) {
    if (evals(i) > tol) {
      support.push_back(i);
    } else {
      const ComplexVector v = evecs.col(i);
      if (v.dot(a.matrix() * v).real() > tol) {
        return std::numeric_limits<double>::infinity();
      }
    }
  }
  if (support.empty()) return std::numeric_limits<double>::infinity();
  const int k = static_cast<int>(support.size());
  ComplexMatrix w(a.dim(), k);
  for (int j = 0; j < k; ++j) {
    w.col(j) = evecs.col(support[j]) / std::sqrt(evals(support[j]));
  }
  const ComplexMatrix reduced = w.adjoint() * a.matrix() * w;
  return HermitianMatrix(reduced, 1e-9).Eigenvalues()(k - 1);
}

namespace pauli {

ComplexMatrix I() { return ComplexMatrix::Identity(2, 2); }

ComplexMatrix X() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix Y() {
  const Complex i(0, 1);
  ComplexMatrix m(2, 2);
  m << 0, -i, i, 0;
  return m;
}

ComplexMatrix Z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix Get(int k) {
  switch (k) {
    case 0: return I();
    case 1: return X();
    case 2: return Y();
    case 3: return Z();
  }
  Fail(ErrorCode::kValidation, "pauli index must be in 0..3");
}

}  // namespace pauli

ComplexMatrix Kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix BlochState(const Eigen::Vector3d& r) {
  Require(r.norm() <= 1.0 + tol::kInvariant, "bloch vector outside unit ball");
  ComplexMatrix m = pauli::I();
  for (int k = 0; k < 3; ++k) m += r(k) * pauli::Get(k + 1);
  return DensityMatrix(m * 0.5);
}

Eigen::Vector3d BlochVector(const ComplexMatrix& rho) {
  Require(rho.rows() == 2 && rho.cols() == 2, "bloch vector needs a qubit");
  Eigen::Vector3d r;
  for (int k = 0; k < 3; ++k) {
    r(k) = (pauli::Get(k + 1) * rho).trace().real();
  }
  return r;
}

}  // namespace qdpamp
