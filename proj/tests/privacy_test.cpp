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

#include "privacy.hpp"
#include "test_util.hpp"

namespace qdpamp {
namespace {

const double kLn2 = std::log(2.0);
const double kLn3 = std::log(3.0);

TEST(EncodingAdpDelta, Examples) {
  EXPECT_EQ(EncodingAdpDelta(1.0).delta, 0.0);
  EXPECT_EQ(EncodingAdpDelta(0.0).delta, 1.0);
  EXPECT_EQ(EncodingAdpDelta(0.75).delta, 0.5);
  EXPECT_EQ(EncodingAdpDelta(0.75).epsilon, 0.0);
  EXPECT_QDPA_ERROR(EncodingAdpDelta(1.2), ErrorCode::kValidation);
}

TEST(QuantumToClassical, Examples) {
  const DpParams ok = QuantumToClassical(QdpParams::Make(0.5, 1, 0), 0.75);
  EXPECT_EQ(ok.epsilon, 1.0);
  EXPECT_EQ(ok.delta, 0.0);
  const DpParams same = QuantumToClassical(QdpParams::Make(0, 0.3, 0.01), 1.0);
  EXPECT_EQ(same.epsilon, 0.3);
  EXPECT_EQ(same.delta, 0.01);
  EXPECT_QDPA_ERROR(QuantumToClassical(QdpParams::Make(0.3, 1, 0), 0.75),
                    ErrorCode::kInsufficientNeighborhood);
}

TEST(Alg1LaplaceScale, Examples) {
  EXPECT_EQ(Alg1LaplaceScale(0.0, 0.0, 1.0), 1.0);
  EXPECT_EQ(Alg1LaplaceScale(1.0, 0.0, 1.0), 0.0);
  EXPECT_NEAR(Alg1LaplaceScale(0.75, 0.1, 2.0), 0.3, 1e-15);
  EXPECT_QDPA_ERROR(Alg1LaplaceScale(0.5, 0.1, 0.0), ErrorCode::kValidation);
}

TEST(Alg1GaussianSigma2, Examples) {
  EXPECT_EQ(Alg1GaussianSigma2(1.0, 0.0, 1.0, 0.05), 0.0);
  EXPECT_NEAR(Alg1GaussianSigma2(0.75, 0.0, 1.0, 0.05),
              2 * std::log(25.0) * 0.25, 1e-14);
  EXPECT_NEAR(Alg1GaussianSigma2(0.75, 0.0, 1.0, 0.05), 1.60944, 1e-5);
  for (double eps : {0.5, 1.5, 3.0}) {
    EXPECT_NEAR(Alg1GaussianSigma2(0.4, 0.2, eps, 0.01),
                Alg1GaussianSigma2(0.4, 0.2, 1.0, 0.01) / (eps * eps), 1e-12);
  }
  EXPECT_QDPA_ERROR(Alg1GaussianSigma2(0.5, 0.1, 1.0, 0.0),
                    ErrorCode::kValidation);
}

TEST(Alg1FailureProb, Examples) {
  EXPECT_EQ(Alg1FailureProb(10, 0.0).printed, 1.0);
  EXPECT_EQ(Alg1FailureProb(10, 0.0).conservative, 1.0);
  const FailureProbability f = Alg1FailureProb(100, 0.3);
  EXPECT_NEAR(f.printed, 4 * std::exp(-9.0), 1e-15);
  EXPECT_NEAR(f.printed, 4.93e-4, 1e-6);
  EXPECT_NEAR(f.conservative, 4 * std::exp(-4.5), 1e-15);
  double prev = 1.0;
  for (int m = 10; m <= 1000; m *= 10) {
    const double v = Alg1FailureProb(m, 0.3).conservative;
    EXPECT_LE(v, prev);
    prev = v;
  }
  EXPECT_NEAR(Alg1DeviationProb(100, 0.3).conservative, 2 * std::exp(-4.5),
              1e-15);
}

TEST(SubsampleAmplify, Examples) {
  const DpParams a = SubsampleAmplify({kLn3, 0}, 0.25, 2);
  EXPECT_NEAR(a.epsilon, kLn2, 1e-15);
  EXPECT_EQ(a.delta, 0.0);
  for (int n : {4, 10, 50}) {
    const DpParams u = SubsampleAmplify({1.0, 0}, 1.0 / n, 2);
    EXPECT_NEAR(u.epsilon, std::log(1 + (2.0 / n) * (std::exp(1.0) - 1)), 1e-14);
  }
  const DpParams zero = SubsampleAmplify({0, 0}, 0.5, 1);
  EXPECT_EQ(zero.epsilon, 0.0);
  EXPECT_EQ(zero.delta, 0.0);
  EXPECT_QDPA_ERROR(SubsampleAmplify({1, 0}, 0.6, 2), ErrorCode::kPrecondition);
  EXPECT_EQ(SubsampleAmplify({kInfiniteEpsilon, 0}, 0.5, 1).epsilon,
            kInfiniteEpsilon);
}

TEST(SubsampleAmplify, MonotoneAndNeverLarger) {
  for (double eps : {0.1, 0.5, 1.0, 2.0}) {
    for (double gamma : {0.05, 0.1, 0.2}) {
      for (int m = 1; m <= 4; ++m) {
        const DpParams a = SubsampleAmplify({eps, 0.1}, gamma, m);
        EXPECT_LE(a.epsilon, eps);
        EXPECT_LE(a.delta, 0.1);
        EXPECT_LT(a.epsilon, SubsampleAmplify({eps + 0.1, 0.1}, gamma, m).epsilon);
        EXPECT_LT(a.epsilon,
                  SubsampleAmplify({eps, 0.1}, gamma + 0.01, m).epsilon);
        EXPECT_LT(a.epsilon, SubsampleAmplify({eps, 0.1}, gamma, m + 1).epsilon);
      }
    }
  }
}

TEST(SubsampleAdp, Examples) {
  const DpParams a = SubsampleAdp(0.25, 2);
  EXPECT_EQ(a.epsilon, 0.0);
  EXPECT_EQ(a.delta, 0.5);
}

TEST(QppAmplify, Examples) {
  const EpsilonCurve curve = [](double d) { return std::log1p(2 * d); };
  EXPECT_EQ(QppAmplify(curve, 1.0, 0.7).epsilon, curve(0.7));
  EXPECT_EQ(QppAmplify(curve, 0.0, 0.7).epsilon, 0.0);
  const QdpParams q = QppAmplify(curve, 0.5, 1.0);
  EXPECT_EQ(q.tau, 1.0);
  EXPECT_NEAR(q.epsilon, kLn2, 1e-15);
  EXPECT_EQ(q.delta, 0.0);
}

TEST(EpsDepolarizing, Examples) {
  EXPECT_EQ(EpsDepolarizing(1.0, 0.7, 2), 0.0);
  EXPECT_EQ(EpsDepolarizing(0.3, 0.0, 2), 0.0);
  EXPECT_NEAR(EpsDepolarizing(0.5, 1.0, 2), kLn3, 1e-15);
  EXPECT_EQ(EpsDepolarizing(0.0, 0.5, 2), kInfiniteEpsilon);
}

TEST(EpsPad, Examples) {
  EXPECT_EQ(EpsPad(1.0, 0.3, 0.8), 0.0);
  EXPECT_NEAR(EpsPad(0.75, 0.0, 1.0), kLn3, 1e-15);
  EXPECT_EQ(EpsPad(0.4, 0.4, 0.0), 0.0);
  EXPECT_EQ(EpsPad(0.0, 0.0, 0.5), kInfiniteEpsilon);
}

TEST(EpsUnitalDobrushin, Examples) {
  EXPECT_EQ(EpsUnitalDobrushin(0.0, 0.5), 0.0);
  EXPECT_EQ(EpsUnitalDobrushin(0.5, 0.0), 0.0);
  EXPECT_NEAR(EpsUnitalDobrushin(0.5, 1.0), kLn2, 1e-15);
}

TEST(EpsPadDep, Examples) {
  EXPECT_EQ(EpsPadDep(1.0, 0.3, 0.3, 1.0), 0.0);
  EXPECT_EQ(EpsPadDep(0.0, 0.3, 0.2, 0.9), EpsPad(0.3, 0.2, 0.9));
  EXPECT_NEAR(EpsPadDep(0.5, 0.75, 0.0, 1.0), 0.5 * kLn3, 1e-15);
  EXPECT_NEAR(EpsPadDep(0.5, 0.75, 0.0, 1.0), 0.54931, 1e-5);
  EXPECT_EQ(EpsPadDep(0.5, 0.0, 0.0, 1.0), kInfiniteEpsilon);
}

TEST(EpsCurves, ZeroAtZeroAndMonotone) {
  const double grid[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  for (double p : grid) {
    for (double g : grid) {
      for (double l : grid) {
        EXPECT_EQ(EpsDepolarizing(p, 0, 2), 0.0);
        EXPECT_EQ(EpsPad(g, l, 0), 0.0);
        EXPECT_EQ(EpsPadDep(p, g, l, 0), 0.0);
        EXPECT_EQ(EpsUnitalDobrushin(g, 0), 0.0);
        EXPECT_LE(EpsPadDep(p, g, l, 0.5), EpsPad(g, l, 0.5));
        EXPECT_LT(EpsPadDep(p, g, l, 0.5), EpsPad(g, l, 0.5) - 1e-12);
        for (double d = 0; d < 1; d += 0.125) {
          EXPECT_LE(EpsDepolarizing(p, d, 2), EpsDepolarizing(p, d + 0.125, 2));
          EXPECT_LE(EpsPad(g, l, d), EpsPad(g, l, d + 0.125));
          EXPECT_LE(EpsPadDep(p, g, l, d), EpsPadDep(p, g, l, d + 0.125));
          EXPECT_LE(EpsUnitalDobrushin(g, d), EpsUnitalDobrushin(g, d + 0.125));
        }
      }
    }
  }
}

// The multiplicative and contraction forms are different functions.
TEST(EpsPadDep, DiffersFromContractionForm) {
  const double p = 0.5, g = 0.3, l = 0.3, d = 1.0;
  const double contraction = QppAmplify(PadCurve(g, l), 1 - p, d).epsilon;
  EXPECT_GT(std::abs(contraction - EpsPadDep(p, g, l, d)), 1e-3);
  EXPECT_NEAR(contraction, EpsPad(g, l, (1 - p) * d), 1e-15);
}

TEST(DpParams, Validation) {
  EXPECT_QDPA_ERROR(DpParams::Make(-1, 0), ErrorCode::kValidation);
  EXPECT_QDPA_ERROR(DpParams::Make(1, 1.5), ErrorCode::kValidation);
  EXPECT_NO_THROW(DpParams::Make(kInfiniteEpsilon, 0));
  EXPECT_QDPA_ERROR(QdpParams::Make(1.2, 1, 0), ErrorCode::kValidation);
}

}  // namespace
}  // namespace qdpamp
