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

// Dense complex linear algebra on small matrices: Hermitian spectra, trace
// distance, POVM statistics and operator norms. Dimensions are expected to be
// tiny (d <= 64), so everything is dense and eager.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

#include "tolerance.hpp"

namespace qdpamp {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// A square matrix equal to its conjugate transpose. Construction validates
// the entrywise deviation and then stores the exactly symmetrized matrix.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const ComplexMatrix& m,
                           double tol = tol::kHermitian);

  static HermitianMatrix Identity(int dim);
  static HermitianMatrix Zero(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }

  // Ascending eigenvalues.
  RealVector Eigenvalues() const;
  double MinEigenvalue() const;

  HermitianMatrix operator-(const HermitianMatrix& other) const;

 private:
  ComplexMatrix m_;
};

// Unit vector in C^d.
class PureState {
 public:
  explicit PureState(ComplexVector amplitudes, double tol = tol::kInvariant);

  int dim() const { return static_cast<int>(amps_.size()); }
  const ComplexVector& amplitudes() const { return amps_; }

  // <this|other>
  Complex Overlap(const PureState& other) const;
  ComplexMatrix Projector() const;

 private:
  ComplexVector amps_;
};

// Positive semidefinite, unit-trace Hermitian matrix.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& m,
                         double tol = tol::kInvariant);
  explicit DensityMatrix(const PureState& psi);

  static DensityMatrix MaximallyMixed(int dim);
  // |i><i| in the computational basis, i zero-based.
  static DensityMatrix BasisState(int dim, int i);

  int dim() const { return h_.dim(); }
  const ComplexMatrix& matrix() const { return h_.matrix(); }
  const HermitianMatrix& hermitian() const { return h_; }

 private:
  HermitianMatrix h_;
};

struct Povm {
  Povm(std::vector<HermitianMatrix> elements, std::vector<int> labels,
       double tol = tol::kInvariant);

  int dim() const { return elements.front().dim(); }

  std::vector<HermitianMatrix> elements;
  std::vector<int> outcome_labels;
};

// (1/2) sum_i |lambda_i(A)|.
double TraceNorm(const HermitianMatrix& a);

double TraceDistance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Tr(E_i rho) for every element, clamped into [0, 1] after the tolerance
// check.
std::vector<double> PovmProbabilities(const Povm& povm,
                                      const DensityMatrix& rho,
                                      double tol = tol::kInvariant);

bool IsPsd(const HermitianMatrix& a, double tol = tol::kInvariant);

// Largest singular value.
double OperatorNorm(const ComplexMatrix& a);
// Maximum absolute row sum.
double MaxRowSumNorm(const ComplexMatrix& a);

// Largest lambda with A - lambda B >= 0 failing, i.e. sup_v <v|A|v>/<v|B|v>,
// for B positive definite. Returns +inf when B is singular on a direction A
// does not vanish on.
double MaxGeneralizedEigenvalue(const HermitianMatrix& a,
                                const HermitianMatrix& b,
                                double tol = tol::kInvariant);

namespace pauli {
ComplexMatrix I();
ComplexMatrix X();
ComplexMatrix Y();
ComplexMatrix Z();
// Pauli k for k in {1, 2, 3}; 0 gives the identity.
ComplexMatrix Get(int k);
}  // namespace pauli

ComplexMatrix Kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Density matrix (I + r.sigma)/2. |r| must be <= 1 within tolerance.
DensityMatrix BlochState(const Eigen::Vector3d& r);
Eigen::Vector3d BlochVector(const ComplexMatrix& rho);

}  // namespace qdpamp
