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

#include "channels.hpp"
#include "test_util.hpp"

namespace qdpamp {
namespace {

using testing::Diag;

ComplexMatrix Mat(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

double MaxDiff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Bloch images of (I +- sigma_k)/2, read off independently of the library.
Eigen::Matrix3d TransferOracle(const KrausChannel& ch) {
  Eigen::Matrix3d t;
  for (int k = 1; k <= 3; ++k) {
    const ComplexMatrix plus = (pauli::I() + pauli::Get(k)) / 2.0;
    const ComplexMatrix minus = (pauli::I() - pauli::Get(k)) / 2.0;
    const ComplexMatrix diff =
        ApplyToOperator(ch, plus) - ApplyToOperator(ch, minus);
    for (int j = 1; j <= 3; ++j) {
      t(j - 1, k - 1) = (pauli::Get(j) * diff).trace().real() / 2.0;
    }
  }
  return t;
}

TEST(BuildChannel, DepolarizingZeroIsIdentity) {
  const KrausChannel ch = Depolarizing(0.0, 2);
  ASSERT_EQ(ch.kraus_ops().size(), 1u);
  EXPECT_EQ(MaxDiff(ch.kraus_ops()[0], ComplexMatrix::Identity(2, 2)), 0.0);
}

TEST(BuildChannel, RangeAndDimensionErrors) {
  EXPECT_QDPA_ERROR(Depolarizing(1.5, 2), ErrorCode::kValidation);
  EXPECT_QDPA_ERROR(Depolarizing(0.5, 9), ErrorCode::kUnsupported);
  EXPECT_QDPA_ERROR(GeneralizedAmplitudeDamping(0.5, -0.1),
                    ErrorCode::kValidation);
  EXPECT_QDPA_ERROR(PhaseDamping(std::nan("")), ErrorCode::kValidation);
}

TEST(BuildChannel, CompletenessOnGrid) {
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j <= 10; ++j) {
      const double p = i / 10.0, g = j / 10.0;
      for (const KrausChannel& ch :
           {GeneralizedAmplitudeDamping(p, g), PhaseDamping(g),
            PhaseAmplitudeDamping(p, g, 1 - p), Depolarizing(p, 2),
            Depolarizing(p, 3)}) {
        EXPECT_LE(MaxDiff(KrausCompleteness(ch.kraus_ops()),
                          ComplexMatrix::Identity(ch.dim_in(), ch.dim_in())),
                  1e-12);
        EXPECT_TRUE(ch.trace_preserving());
      }
    }
  }
}

TEST(BuildChannel, PrintedPhaseDampingFailsValidation) {
  const double lambda = 0.3;
  const std::vector<ComplexMatrix> printed = {
      Mat(1, 0, 0, std::sqrt(lambda)), Mat(0, 0, 0, std::sqrt(lambda))};
  EXPECT_LE(MaxDiff(KrausCompleteness(printed), Diag({1, 2 * lambda})), 1e-15);
  EXPECT_QDPA_ERROR(ValidateKraus(printed, true), ErrorCode::kValidation);
}

TEST(BuildChannel, SubnormalizedOperationIsNotTracePreserving) {
  const KrausChannel half({Diag({std::sqrt(0.5), std::sqrt(0.5)})});
  EXPECT_FALSE(half.trace_preserving());
  EXPECT_QDPA_ERROR(Apply(half, DensityMatrix::BasisState(2, 0)),
                    ErrorCode::kPrecondition);
  EXPECT_QDPA_ERROR(KrausChannel({Diag({2, 0})}), ErrorCode::kValidation);
}

TEST(Apply, Examples) {
  std::mt19937_64 rng(1);
  const DensityMatrix rho(testing::RandomDensity(rng, 2), 1e-9);
  EXPECT_LE(MaxDiff(Apply(KrausChannel::Identity(2), rho).matrix(),
                    rho.matrix()),
            1e-15);
  EXPECT_LE(MaxDiff(Apply(Depolarizing(1.0, 2), rho).matrix(),
                    Diag({0.5, 0.5})),
            1e-12);
  EXPECT_LE(MaxDiff(Apply(Depolarizing(0.5, 2), DensityMatrix::BasisState(2, 0))
                        .matrix(),
                    Diag({0.75, 0.25})),
            1e-12);
}

TEST(Apply, DepolarizingMatchesAffineFormInAllDimensions) {
  std::mt19937_64 rng(2);
  for (int dim = 2; dim <= 8; ++dim) {
    for (double p : {0.0, 0.3, 1.0}) {
      const ComplexMatrix rho = testing::RandomDensity(rng, dim);
      const ComplexMatrix expected =
          p * ComplexMatrix::Identity(dim, dim) / double(dim) + (1 - p) * rho;
      EXPECT_LE(MaxDiff(ApplyToOperator(Depolarizing(p, dim), rho), expected),
                1e-12)
          << "dim " << dim << " p " << p;
      EXPECT_LE(MaxDiff(DepolarizingAffine(p, rho), expected), 1e-15);
    }
  }
}

TEST(Compose, IdentityAndConstant) {
  std::mt19937_64 rng(4);
  const KrausChannel gad = GeneralizedAmplitudeDamping(0.3, 0.6);
  const KrausChannel with_id = Compose(KrausChannel::Identity(2), gad);
  const KrausChannel constant = Compose(Depolarizing(1.0, 2), gad);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix rho = testing::RandomDensity(rng, 2);
    EXPECT_LE(MaxDiff(ApplyToOperator(with_id, rho), ApplyToOperator(gad, rho)),
              1e-14);
    EXPECT_LE(MaxDiff(ApplyToOperator(constant, rho), Diag({0.5, 0.5})),
              1e-14);
  }
  EXPECT_QDPA_ERROR(Compose(Depolarizing(0.5, 3), gad), ErrorCode::kValidation);
}

TEST(Compose, GadAfterPdMatchesPad) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const double p = u(rng), g = u(rng), l = u(rng);
    const KrausChannel composed =
        Compose(GeneralizedAmplitudeDamping(p, g), PhaseDamping(l));
    const KrausChannel pad = PhaseAmplitudeDamping(p, g, l);
    const ComplexMatrix rho = testing::RandomDensity(rng, 2);
    EXPECT_LE(MaxDiff(ApplyToOperator(composed, rho), ApplyToOperator(pad, rho)),
              1e-10);
  }
}

TEST(BlochRep, Depolarizing) {
  for (double p : {0.0, 0.25, 0.6, 1.0}) {
    const BlochRep rep = ComputeBlochRep(Depolarizing(p, 2));
    EXPECT_TRUE(rep.transfer.isApprox((1 - p) * Eigen::Matrix3d::Identity(),
                                      1e-12) ||
                p == 1.0);
    EXPECT_LE(rep.transfer.cwiseAbs().maxCoeff() - (1 - p), 1e-12);
    EXPECT_LE(rep.shift.norm(), 1e-12);
    EXPECT_TRUE(rep.unital);
  }
}

TEST(BlochRep, UnitaryIsRotation) {
  const double th = 0.7;
  const ComplexMatrix u =
      std::cos(th / 2) * pauli::I() - Complex(0, 1) * std::sin(th / 2) * pauli::Z();
  const BlochRep rep = ComputeBlochRep(KrausChannel({u}));
  EXPECT_NEAR((rep.transfer.transpose() * rep.transfer -
               Eigen::Matrix3d::Identity())
                  .norm(),
              0.0, 1e-12);
  EXPECT_NEAR(OperatorNorm(rep.transfer.cast<Complex>()), 1.0, 1e-12);
  EXPECT_LE(rep.shift.norm(), 1e-12);
}

TEST(BlochRep, GadMatchesOracle) {
  for (double g : {0.0, 0.3, 0.9}) {
    const KrausChannel ch = GeneralizedAmplitudeDamping(1.0, g);
    const BlochRep rep = ComputeBlochRep(ch);
    Eigen::Matrix3d expected = Eigen::Matrix3d::Zero();
    expected.diagonal() << std::sqrt(1 - g), std::sqrt(1 - g), 1 - g;
    EXPECT_LE((rep.transfer - expected).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((rep.transfer - TransferOracle(ch)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(rep.shift(2), g, 1e-12);
    EXPECT_EQ(rep.unital, g == 0.0);
  }
  EXPECT_QDPA_ERROR(ComputeBlochRep(Depolarizing(0.5, 3)),
                    ErrorCode::kUnsupported);
}

TEST(Choi, Examples) {
  const RealVector id = Choi(KrausChannel::Identity(2)).Eigenvalues();
  EXPECT_NEAR(id(3), 2.0, 1e-12);
  EXPECT_NEAR(id(0), 0.0, 1e-12);
  EXPECT_LE(MaxDiff(Choi(Depolarizing(1.0, 2)).matrix(),
                    ComplexMatrix::Identity(4, 4) / 2.0),
            1e-12);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    EXPECT_TRUE(
        IsPsd(Choi(PhaseAmplitudeDamping(u(rng), u(rng), u(rng))), 1e-10));
  }
}

TEST(Dobrushin, Examples) {
  EXPECT_NEAR(EstimateDobrushin(KrausChannel::Identity(2)).value, 1.0, 1e-12);
  EXPECT_NEAR(EstimateDobrushin(Depolarizing(1.0, 2)).value, 0.0, 1e-12);
  const DobrushinEstimate quarter = EstimateDobrushin(Depolarizing(0.25, 2));
  EXPECT_NEAR(quarter.value, 0.75, 1e-3);
  EXPECT_EQ(quarter.method, "unital-transfer-norm");
  const DobrushinEstimate searched = SearchDobrushin(Depolarizing(0.25, 2));
  EXPECT_NEAR(searched.value, 0.75, 1e-3);
  EXPECT_EQ(searched.method, "orthogonal-pair-search");
}

TEST(Dobrushin, NonUnitalQubitMatchesTransferNorm) {
  // For any qubit channel the output trace distance is |T (r - s)| / 2.
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 10; ++trial) {
    const KrausChannel ch = PhaseAmplitudeDamping(u(rng), u(rng), u(rng));
    const double expected = OperatorNorm(TransferOracle(ch).cast<Complex>());
    const DobrushinEstimate est = EstimateDobrushin(ch);
    EXPECT_EQ(est.method, "orthogonal-pair-search");
    EXPECT_NEAR(est.value, expected, 1e-6);
    EXPECT_LE(est.value, expected + 1e-12);
  }
}

TEST(Dobrushin, QutritDepolarizing) {
  DobrushinSearch search;
  search.seed = 3;
  EXPECT_NEAR(EstimateDobrushin(Depolarizing(0.4, 3), search).value, 0.6, 1e-3);
  EXPECT_QDPA_ERROR(EstimateDobrushin(Depolarizing(0.4, 5)),
                    ErrorCode::kUnsupported);
}

TEST(Doeblin, Examples) {
  const HermitianMatrix half(Diag({0.5, 0.5}));
  EXPECT_TRUE(DoeblinCheck(Depolarizing(1.0, 2), 1.0, half).holds);
  EXPECT_FALSE(DoeblinCheck(KrausChannel::Identity(2), 0.1, half).holds);
  const HermitianMatrix skew(Diag({0.9, 0.0}));
  EXPECT_FALSE(DoeblinCheck(KrausChannel::Identity(2), 0.3, skew).holds);
  EXPECT_TRUE(
      DoeblinCheck(GeneralizedAmplitudeDamping(0.2, 0.4), 0.0, skew).holds);
  EXPECT_TRUE(DoeblinCheck(Depolarizing(0.5, 2), 0.5, half).holds);
  EXPECT_FALSE(DoeblinCheck(Depolarizing(0.5, 2), 0.51, half).holds);
  EXPECT_QDPA_ERROR(DoeblinCheck(Depolarizing(0.5, 2), 0.5,
                                 HermitianMatrix(Diag({1, -0.2}))),
                    ErrorCode::kValidation);
}

TEST(Doeblin, ImpliedContraction) {
  EXPECT_DOUBLE_EQ(DoeblinToDobrushin(0.3), 0.7);
  EXPECT_DOUBLE_EQ(DoeblinToDobrushin(0.5, 0.5), 0.75);
}

}  // namespace
}  // namespace qdpamp
