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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "linalg.hpp"
#include "test_util.hpp"

namespace qdpamp {
namespace {

using testing::Diag;
using testing::Eig2;
using testing::Ket;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

TEST(HermitianMatrix, RejectsNonHermitian) {
  ComplexMatrix m(2, 2);
  m << 1, 2, 0, 1;
  EXPECT_QDPA_ERROR(HermitianMatrix{m}, ErrorCode::kValidation);
  ComplexMatrix rect(2, 3);
  rect.setZero();
  EXPECT_QDPA_ERROR(HermitianMatrix{rect}, ErrorCode::kValidation);
}

TEST(HermitianMatrix, EigenvaluesMatchClosedForm2x2) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexMatrix a = testing::RandomDensity(rng, 2) -
                            testing::RandomDensity(rng, 2);
    const auto [lo, hi] = Eig2(a);
    const RealVector ev = HermitianMatrix(a, 1e-10).Eigenvalues();
    EXPECT_NEAR(ev(0), lo, 1e-12);
    EXPECT_NEAR(ev(1), hi, 1e-12);
  }
}

TEST(TraceNorm, Examples) {
  EXPECT_EQ(TraceNorm(HermitianMatrix::Zero(2)), 0.0);
  EXPECT_NEAR(TraceNorm(HermitianMatrix(Diag({1, -1}))), 1.0, 1e-15);
  const PureState zero(Ket({1, 0}));
  const PureState plus(Ket({kInvSqrt2, kInvSqrt2}));
  const HermitianMatrix diff(zero.Projector() - plus.Projector());
  EXPECT_NEAR(TraceNorm(diff), kInvSqrt2, 1e-12);
}

TEST(TraceDistance, Examples) {
  const DensityMatrix zero = DensityMatrix::BasisState(2, 0);
  const DensityMatrix one = DensityMatrix::BasisState(2, 1);
  const DensityMatrix plus(PureState(Ket({kInvSqrt2, kInvSqrt2})));
  EXPECT_EQ(TraceDistance(zero, zero), 0.0);
  EXPECT_NEAR(TraceDistance(zero, one), 1.0, 1e-15);
  EXPECT_NEAR(TraceDistance(zero, plus), kInvSqrt2, 1e-12);
  EXPECT_QDPA_ERROR(TraceDistance(zero, DensityMatrix::BasisState(3, 0)),
                    ErrorCode::kValidation);
}

TEST(TraceDistance, PureStateIdentityAcrossDimensions) {
  std::mt19937_64 rng(11);
  for (int dim = 2; dim <= 6; ++dim) {
    for (int trial = 0; trial < 50; ++trial) {
      const PureState a(testing::RandomKet(rng, dim));
      const PureState b(testing::RandomKet(rng, dim));
      const double expected = std::sqrt(1.0 - std::norm(a.Overlap(b)));
      EXPECT_NEAR(TraceDistance(DensityMatrix(a), DensityMatrix(b)), expected,
                  1e-9);
    }
  }
}

TEST(TraceDistance, QubitMatchesHalfBlochDistance) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.57, 0.57);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Vector3d r(u(rng), u(rng), u(rng));
    const Eigen::Vector3d s(u(rng), u(rng), u(rng));
    EXPECT_NEAR(TraceDistance(BlochState(r), BlochState(s)),
                (r - s).norm() / 2, 1e-12);
  }
}

TEST(DensityMatrix, Validation) {
  EXPECT_QDPA_ERROR(DensityMatrix(Diag({1, 1})), ErrorCode::kValidation);
  EXPECT_QDPA_ERROR(DensityMatrix(Diag({1.5, -0.5})), ErrorCode::kValidation);
  EXPECT_NO_THROW(DensityMatrix(Diag({0.25, 0.75})));
  EXPECT_QDPA_ERROR(PureState(Ket({1, 1})), ErrorCode::kValidation);
}

TEST(PovmProbabilities, Examples) {
  const Povm basis({HermitianMatrix(Diag({1, 0})),
                    HermitianMatrix(Diag({0, 1}))},
                   {0, 1});
  const auto p = PovmProbabilities(basis, DensityMatrix::BasisState(2, 0));
  EXPECT_EQ(p[0], 1.0);
  EXPECT_EQ(p[1], 0.0);

  const Povm trivial({HermitianMatrix(Diag({0.5, 0.5})),
                      HermitianMatrix(Diag({0.5, 0.5}))},
                     {0, 1});
  std::mt19937_64 rng(3);
  const auto q = PovmProbabilities(
      trivial, DensityMatrix(testing::RandomDensity(rng, 2), 1e-9));
  EXPECT_NEAR(q[0], 0.5, 1e-12);
  EXPECT_NEAR(q[1], 0.5, 1e-12);

  const PureState plus(Ket({kInvSqrt2, kInvSqrt2}));
  const PureState minus(Ket({kInvSqrt2, -kInvSqrt2}));
  const Povm pm({HermitianMatrix(plus.Projector()),
                 HermitianMatrix(minus.Projector())},
                {0, 1});
  const auto r = PovmProbabilities(pm, DensityMatrix::BasisState(2, 0));
  EXPECT_NEAR(r[0], 0.5, 1e-12);
  EXPECT_NEAR(r[1], 0.5, 1e-12);
}

TEST(Povm, RejectsIncompleteOrNonPsd) {
  EXPECT_QDPA_ERROR(Povm({HermitianMatrix(Diag({1, 0}))}, {0}),
                    ErrorCode::kValidation);
  EXPECT_QDPA_ERROR(Povm({HermitianMatrix(Diag({1.5, 1})),
                          HermitianMatrix(Diag({-0.5, 0}))},
                         {0, 1}),
                    ErrorCode::kValidation);
}

TEST(IsPsd, Examples) {
  EXPECT_TRUE(IsPsd(HermitianMatrix::Identity(3)));
  EXPECT_FALSE(IsPsd(HermitianMatrix(Diag({1, -0.5})), 1e-10));
  ComplexVector omega = ComplexVector::Zero(4);
  omega(0) = 1;
  omega(3) = 1;
  const HermitianMatrix bell(omega * omega.adjoint());
  EXPECT_TRUE(IsPsd(bell));
  const RealVector ev = bell.Eigenvalues();
  EXPECT_NEAR(ev(3), 2.0, 1e-12);
  EXPECT_NEAR(ev(0), 0.0, 1e-12);
}

TEST(OperatorNorm, Examples) {
  EXPECT_NEAR(OperatorNorm(ComplexMatrix::Identity(3, 3)), 1.0, 1e-15);
  EXPECT_NEAR(OperatorNorm(Diag({0.75, 0.75, 0.75})), 0.75, 1e-15);
  ComplexMatrix nil(2, 2);
  nil << 0, 1, 0, 0;
  EXPECT_NEAR(OperatorNorm(nil), 1.0, 1e-15);
  EXPECT_NEAR(MaxRowSumNorm(nil), 1.0, 1e-15);
  ComplexMatrix ones(2, 2);
  ones << 1, 1, 1, 1;
  // Singular values via A^dagger A eigenvalues {0, 4}.
  EXPECT_NEAR(OperatorNorm(ones), 2.0, 1e-12);
  EXPECT_NEAR(MaxRowSumNorm(ones), 2.0, 1e-15);
}

TEST(MaxGeneralizedEigenvalue, MatchesProjectorRatio) {
  const HermitianMatrix a(DensityMatrix::BasisState(2, 0).matrix());
  const HermitianMatrix b(Diag({0.5, 0.5}));
  EXPECT_NEAR(MaxGeneralizedEigenvalue(a, b), 2.0, 1e-12);
  EXPECT_NEAR(MaxGeneralizedEigenvalue(b, b), 1.0, 1e-12);
  const HermitianMatrix c(DensityMatrix::BasisState(2, 1).matrix());
  EXPECT_TRUE(std::isinf(MaxGeneralizedEigenvalue(a, c)));
}

TEST(Pauli, Algebra) {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_TRUE((pauli::Get(k) * pauli::Get(k)).isApprox(i2));
  }
  EXPECT_TRUE((pauli::X() * pauli::Y()).isApprox(Complex(0, 1) * pauli::Z()));
  EXPECT_QDPA_ERROR(pauli::Get(4), ErrorCode::kValidation);
}

TEST(Bloch, RoundTrip) {
  const Eigen::Vector3d r(0.1, -0.2, 0.3);
  EXPECT_TRUE(BlochVector(BlochState(r).matrix()).isApprox(r, 1e-14));
  EXPECT_QDPA_ERROR(BlochState(Eigen::Vector3d(1, 1, 0)),
                    ErrorCode::kValidation);
}

TEST(Kron, Dimensions) {
  const ComplexMatrix k = Kron(pauli::X(), ComplexMatrix::Identity(3, 3));
  EXPECT_EQ(k.rows(), 6);
  EXPECT_EQ(k(0, 3), Complex(1, 0));
  EXPECT_EQ(k(3, 0), Complex(1, 0));
  EXPECT_EQ(k(0, 0), Complex(0, 0));
}

}  // namespace
}  // namespace qdpamp
