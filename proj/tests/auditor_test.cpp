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

#include "auditor.hpp"
#include "channels.hpp"
#include "encodings.hpp"
#include "model.hpp"
#include "privacy.hpp"
#include "test_util.hpp"

namespace qdpamp {
namespace {

// Direct sum over outcomes, kept separate from the implementation.
double HockeyStickOracle(const std::vector<double>& p,
                         const std::vector<double>& q, double eps) {
  double s = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    const double d = p[i] - std::exp(eps) * q[i];
    if (d > 0) s += d;
  }
  return s;
}

TEST(HockeyStick, Examples) {
  EXPECT_NEAR(HockeyStick({0.75, 0.25}, {0.25, 0.75}, 0.0), 0.5, 1e-15);
  EXPECT_NEAR(HockeyStick({0.75, 0.25}, {0.25, 0.75}, std::log(3.0)), 0.0,
              1e-15);
  EXPECT_EQ(HockeyStick({1, 0}, {0, 1}, 5.0), 1.0);
  EXPECT_EQ(HockeyStick({0.3, 0.7}, {0.3, 0.7}, 0.0), 0.0);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> p(5), q(5);
    double sp = 0, sq = 0;
    for (int i = 0; i < 5; ++i) {
      sp += p[i] = u(rng);
      sq += q[i] = u(rng);
    }
    for (int i = 0; i < 5; ++i) {
      p[i] /= sp;
      q[i] /= sq;
    }
    const double eps = 2 * u(rng);
    EXPECT_NEAR(HockeyStick(p, q, eps), HockeyStickOracle(p, q, eps), 1e-14);
  }
}

TEST(AuditClassical, RandomizedResponse) {
  const MechanismModel rr = RandomizedResponseTupleModel(1, std::log(3.0));
  const AuditReport ok = AuditClassical(rr, DpParams::Make(std::log(3.0), 0));
  EXPECT_NEAR(ok.eps_hat, std::log(3.0), 1e-12);
  EXPECT_LE(ok.delta_hat, 1e-12);
  EXPECT_TRUE(ok.satisfied);
  const AuditReport bad = AuditClassical(rr, DpParams::Make(1.0, 0));
  EXPECT_FALSE(bad.satisfied);
  ASSERT_TRUE(bad.classical_witness.has_value());
  EXPECT_NEAR(WitnessEpsilon(rr, *bad.classical_witness), std::log(3.0),
              1e-12);
  EXPECT_NEAR(bad.delta_hat, 0.75 - std::exp(1.0) * 0.25, 1e-12);
}

TEST(AuditClassical, ConstantAndDeterministic) {
  const AuditReport c =
      AuditClassical(ConstantTupleModel(2, 3), DpParams::Make(0, 0));
  EXPECT_EQ(c.eps_hat, 0.0);
  EXPECT_TRUE(c.satisfied);

  MechanismModel det;
  det.inputs = {"0", "1"};
  det.outcomes = {"0", "1"};
  det.dist = {{1, 0}, {0, 1}};
  det.neighbor_pairs = {{0, 1}};
  const AuditReport d = AuditClassical(det, DpParams::Make(10, 0));
  EXPECT_TRUE(std::isinf(d.eps_hat));
  EXPECT_NEAR(d.delta_hat, 1.0, 1e-15);
  EXPECT_FALSE(d.satisfied);
  EXPECT_TRUE(AuditClassical(det, DpParams::Make(0, 1)).satisfied);
}

TEST(AuditClassical, EncodingLemmaHolds) {
  // Neighbours differ by a sign; the Hadamard-basis measurement separates
  // them as far as the trace distance allows.
  const std::vector<Dataset> xs = {Dataset::Amplitude({0.6, 0.8}),
                                   Dataset::Amplitude({0.6, -0.8})};
  const double s = 1 / std::sqrt(2.0);
  ComplexMatrix plus(2, 2), minus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  minus << 0.5, -0.5, -0.5, 0.5;
  const Povm povm({HermitianMatrix(plus), HermitianMatrix(minus)}, {0, 1});
  const EncodingSpec spec{EncodingKind::kAmplitude, 0};
  const MechanismModel model = MeasurementModel(xs, spec, povm);
  ASSERT_EQ(model.neighbor_pairs.size(), 1u);
  EXPECT_NEAR(model.dist[0][0], std::pow((0.6 + 0.8) * s, 2), 1e-14);
  const double kappa = Kernel(xs[0], xs[1], spec);
  EXPECT_NEAR(kappa, 0.0784, 1e-14);
  const DpParams bound = EncodingAdpDelta(kappa);
  const AuditReport r = AuditClassical(model, bound);
  EXPECT_TRUE(r.satisfied);
  EXPECT_LE(r.delta_hat, bound.delta + 1e-12);
  EXPECT_NEAR(r.delta_hat, 0.96, 1e-12);
}

TEST(MeasurementRatio, MatchesGeneralizedEigenvalue) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix a(testing::RandomDensity(rng, 2));
    const DensityMatrix b(testing::RandomDensity(rng, 2));
    const double exact = MaxGeneralizedEigenvalue(HermitianMatrix(a.matrix()), HermitianMatrix(b.matrix()));
    const MeasurementRatio r = WorstCaseMeasurementRatio(a, b);
    EXPECT_LE(r.ratio, exact * (1 + 1e-9));
    EXPECT_GE(r.ratio, exact * (1 - 1e-6));
  }
}

TEST(MeasurementRatio, IdenticalAndOrthogonal) {
  const DensityMatrix mixed = DensityMatrix::MaximallyMixed(2);
  EXPECT_NEAR(WorstCaseMeasurementRatio(mixed, mixed).ratio, 1.0, 1e-12);
  const auto inf = WorstCaseMeasurementRatio(DensityMatrix::BasisState(2, 0),
                                             DensityMatrix::BasisState(2, 1));
  EXPECT_TRUE(std::isinf(inf.ratio));
}

TEST(AuditChannelQdp, FullyDepolarizingIsPerfectlyPrivate) {
  const KrausChannel ch = Depolarizing(1.0, 2);
  const AuditReport r = AuditChannelQdp(ch, 1.0, 0.0);
  EXPECT_NEAR(r.eps_hat, 0.0, 1e-9);
  EXPECT_TRUE(r.satisfied);
}

TEST(AuditChannelQdp, DepolarizingClaimHolds) {
  const KrausChannel ch = Depolarizing(0.5, 2);
  const double claim = EpsDepolarizing(0.5, 0.5, 2);
  EXPECT_NEAR(claim, std::log(2.0), 1e-12);
  QdpAuditSearch search;
  search.seed = 1;
  const AuditReport r = AuditChannelQdp(ch, 0.5, claim, search);
  EXPECT_TRUE(r.satisfied);
  EXPECT_LE(r.eps_hat, claim + 1e-9);
  EXPECT_GE(r.eps_hat, claim - 1e-6);
  ASSERT_TRUE(r.quantum_witness.has_value());
  EXPECT_LE(r.quantum_witness->trace_distance, 0.5 + 1e-9);
  EXPECT_NEAR(std::log(WitnessRatio(ch, *r.quantum_witness)), r.eps_hat,
              1e-12);
}

TEST(AuditChannelQdp, IdentityViolatesAnyFiniteClaim) {
  const KrausChannel ch = BuildChannel(ChannelSpec{channel_kind::Identity{2}});
  const AuditReport r = AuditChannelQdp(ch, 0.5, 5.0);
  EXPECT_FALSE(r.satisfied);
  EXPECT_TRUE(std::isinf(r.eps_hat));
  ASSERT_TRUE(r.quantum_witness.has_value());
  EXPECT_LE(r.quantum_witness->trace_distance, 0.5 + 1e-9);
  EXPECT_TRUE(std::isinf(WitnessRatio(ch, *r.quantum_witness)));
}

TEST(AuditChannelQdp, RejectsNonQubit) {
  EXPECT_QDPA_ERROR(AuditChannelQdp(Depolarizing(0.5, 3), 0.5, 1.0),
                    ErrorCode::kUnsupported);
  EXPECT_QDPA_ERROR(AuditChannelQdp(Depolarizing(0.5, 2), 1.5, 1.0),
                    ErrorCode::kValidation);
}

TEST(AuditSubsampling, RandomizedResponseBase) {
  const Dataset x = Dataset::Amplitude({0.6, 0.8});
  const MechanismModel base = RandomizedResponseTupleModel(1, std::log(3.0));
  const SubsamplingAudit a =
      AuditSubsamplingTheorem(x, base, 1, DpParams::Make(std::log(3.0), 0));
  EXPECT_NEAR(a.gamma, 0.64, 1e-15);
  EXPECT_NEAR(a.bound.epsilon,
              std::log(1 + 0.64 * (3.0 - 1)), 1e-12);
  EXPECT_TRUE(a.report.satisfied);
  EXPECT_LE(a.report.eps_hat, a.bound.epsilon + 1e-12);
}

}  // namespace
}  // namespace qdpamp
