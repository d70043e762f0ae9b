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
#include <numbers>

#include "mechanisms.hpp"
#include "model.hpp"
#include "random.hpp"
#include "test_util.hpp"

namespace qdpamp {
namespace {

struct Moments {
  double mean = 0;
  double var = 0;
  double fourth = 0;  // central fourth moment
};

Moments Sample(const NoiseSpec& spec, int draws, std::uint64_t seed) {
  RandomStream s(seed);
  std::vector<double> xs(draws);
  double sum = 0;
  for (auto& x : xs) sum += x = SampleNoise(spec, s);
  Moments m;
  m.mean = sum / draws;
  for (double x : xs) {
    const double d = x - m.mean;
    m.var += d * d;
    m.fourth += d * d * d * d;
  }
  m.var /= draws;
  m.fourth /= draws;
  return m;
}

TEST(RandomStream, DeterministicAndSplittable) {
  RandomStream a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.NextU64();
    EXPECT_EQ(x, b.NextU64());
    EXPECT_NE(x, c.NextU64());
  }
  const RandomStream root(7);
  RandomStream s1 = root.Split(1), s1b = root.Split(1), s2 = root.Split(2);
  EXPECT_EQ(s1.NextU64(), s1b.NextU64());
  EXPECT_NE(root.Split(1).NextU64(), s2.NextU64());
  RandomStream u(1);
  for (int i = 0; i < 10000; ++i) {
    const double v = u.NextUniform();
    ASSERT_GT(v, 0.0);
    ASSERT_LT(v, 1.0);
  }
}

TEST(SampleNoise, DegenerateIsZero) {
  RandomStream s(1);
  EXPECT_EQ(SampleNoise(NoiseSpec::Laplace(0), s), 0.0);
  EXPECT_EQ(SampleNoise(NoiseSpec::Gaussian(0), s), 0.0);
  EXPECT_EQ(SampleNoise(NoiseSpec::None(), s), 0.0);
  EXPECT_EQ(s.counter(), 0u);
}

TEST(SampleNoise, LaplaceMoments) {
  const double b = 1.7;
  const int n = 1000000;
  const Moments m = Sample(NoiseSpec::Laplace(b), n, 11);
  // Var = 2 b^2; the fourth central moment of Laplace(b) is 24 b^4.
  const double var = 2 * b * b;
  EXPECT_LE(std::abs(m.mean), 3 * std::sqrt(var / n));
  EXPECT_LE(std::abs(m.var - var), 3 * std::sqrt((24 * std::pow(b, 4) - var * var) / n));
}

TEST(SampleNoise, GaussianMoments) {
  const double s2 = 6.4378;
  const int n = 1000000;
  const Moments m = Sample(NoiseSpec::Gaussian(s2), n, 12);
  EXPECT_LE(std::abs(m.mean), 3 * std::sqrt(s2 / n));
  EXPECT_LE(std::abs(m.var - s2), 3 * std::sqrt(2 * s2 * s2 / n));
}

TEST(Laplace, WorstCaseRatioIsExpEpsilon) {
  for (double eps : {0.1, 0.5, 1.0, 2.0}) {
    for (double sens : {0.5, 1.0, 3.0}) {
      EXPECT_DOUBLE_EQ(LaplaceWorstCaseRatio(sens / eps, sens), std::exp(eps));
    }
  }
  // Cross-check against the density itself at a tail point.
  EXPECT_NEAR(LaplaceDensity(-3.0, 1.0) / LaplaceDensity(-3.0 - 1.0, 1.0),
              std::exp(1.0), 1e-12);
  EXPECT_EQ(LaplaceWorstCaseRatio(1.0, 0.0), 1.0);
}

TEST(GaussianVariance, Formula) {
  EXPECT_NEAR(GaussianVariance(1.0, 1.0, 0.05), 2 * std::log(25.0), 1e-14);
  EXPECT_NEAR(GaussianVariance(1.0, 1.0, 0.05), 6.4378, 1e-4);
  EXPECT_QDPA_ERROR(GaussianVariance(1.0, 1.0, 0.0), ErrorCode::kValidation);
}

TEST(NoisyQuery, ZeroSensitivityUnchanged) {
  RandomStream s(3);
  EXPECT_EQ(NoisyQuery(4.25, 0.0, {1.0, 0.0}, QueryNoise::kLaplace, s), 4.25);
  EXPECT_QDPA_ERROR(NoisyQuery(1.0, 1.0, {1.0, 0.1}, QueryNoise::kLaplace, s),
                    ErrorCode::kValidation);
  EXPECT_QDPA_ERROR(NoisyQuery(1.0, 1.0, {1.0, 0.0}, QueryNoise::kGaussian, s),
                    ErrorCode::kValidation);
}

TEST(RandomizedResponse, Probabilities) {
  EXPECT_EQ(RandomizedResponseProbabilities(0, 0).keep, 0.5);
  EXPECT_NEAR(RandomizedResponseProbabilities(std::log(3.0), 0).keep, 0.75, 1e-15);
  const auto p = RandomizedResponseProbabilities(0.7, 0.1);
  EXPECT_EQ(p.keep + p.flip, 1.0);
  RandomStream s(5);
  const std::vector<int> bits = {0, 1, 1, 0, 1};
  EXPECT_EQ(RandomizedResponse(bits, kInfiniteEpsilon, 0, s), bits);
  EXPECT_QDPA_ERROR(RandomizedResponseProbabilities(0.0, 1.5),
                    ErrorCode::kValidation);
}

TEST(L2Sample, DeterministicAndBornRule) {
  RandomStream s(9);
  for (int idx : L2Sample(Dataset::Amplitude({1, 0, 0}), 50, s)) {
    EXPECT_EQ(idx, 0);
  }
  const int m = 100000;
  const auto draws = L2Sample(Dataset::Amplitude({0.6, 0.8}), m, s);
  double ones = 0;
  for (int idx : draws) ones += idx == 1;
  EXPECT_LE(std::abs(ones / m - 0.64), 3 * std::sqrt(0.64 * 0.36 / m));

  const auto uniform = L2Sample(Dataset::Amplitude({0.5, 0.5, 0.5, 0.5}), m, s);
  std::vector<double> freq(4, 0);
  for (int idx : uniform) freq[idx] += 1.0 / m;
  for (double f : freq) {
    EXPECT_LE(std::abs(f - 0.25), 3 * std::sqrt(0.25 * 0.75 / m));
  }
  EXPECT_QDPA_ERROR(L2Sample(Dataset::Rotation({0.1}), 1, s),
                    ErrorCode::kValidation);
}

TEST(RunAlg1, ExactAcceptanceGivesOne) {
  const Dataset x = Dataset::Amplitude({1, 0});
  const BinaryPovm povm = BinaryPovm::BasisProjector(2, 0);
  RandomStream s(2);
  for (int m : {1, 7, 100}) {
    EXPECT_EQ(RunAlg1(x, EncodingSpec::For(x), povm, m, NoiseSpec::None(), s),
              1.0);
  }
  EXPECT_QDPA_ERROR(
      RunAlg1(x, EncodingSpec::For(x), povm, 0, NoiseSpec::None(), s),
      ErrorCode::kValidation);
  EXPECT_QDPA_ERROR(RunAlg1(Dataset::Amplitude({1, 0, 0}),
                            {EncodingKind::kAmplitude, 0}, povm, 1,
                            NoiseSpec::None(), s),
                    ErrorCode::kValidation);
}

TEST(RunAlg1, TrivialPovmConcentrates) {
  const ComplexMatrix half = ComplexMatrix::Identity(2, 2) / 2.0;
  const BinaryPovm povm(Povm({HermitianMatrix(half), HermitianMatrix(half)},
                             {1, 0}));
  const Dataset x = Dataset::Amplitude({0.6, 0.8});
  RandomStream s(4);
  const double o =
      RunAlg1(x, EncodingSpec::For(x), povm, 10000, NoiseSpec::None(), s);
  EXPECT_LE(std::abs(o - 0.5), 3 * 0.5 / 100);
}

TEST(RunAlg1, LaplaceNoiseIsUnbiased) {
  const Dataset x = Dataset::Amplitude({0.6, 0.8});
  const BinaryPovm povm = BinaryPovm::BasisProjector(2, 1);
  const RandomStream root(6);
  const int reps = 10000;
  const double b = 0.4;
  const int m = 20;
  double sum = 0;
  for (int i = 0; i < reps; ++i) {
    RandomStream s = root.Split(i);
    sum += RunAlg1(x, EncodingSpec::For(x), povm, m, NoiseSpec::Laplace(b), s);
  }
  const double se = std::sqrt((0.64 * 0.36 / m + 2 * b * b) / reps);
  EXPECT_LE(std::abs(sum / reps - 0.64), 3 * se);
}

TEST(BinaryPovm, LabelsAreExplicit) {
  const ComplexMatrix e0 = testing::Diag({1, 0}), e1 = testing::Diag({0, 1});
  const BinaryPovm swapped(
      Povm({HermitianMatrix(e0), HermitianMatrix(e1)}, {0, 1}));
  EXPECT_EQ(swapped.accept().matrix(), e1);
  EXPECT_QDPA_ERROR(
      BinaryPovm(Povm({HermitianMatrix(e0), HermitianMatrix(e1)}, {1, 2})),
      ErrorCode::kValidation);
}

TEST(SubsampledModel, UniformMarginal) {
  // Base: output the sampled value itself.
  MechanismModel ident;
  ident.inputs = {"0", "1"};
  ident.outcomes = {"0", "1"};
  ident.dist = {{1, 0}, {0, 1}};
  const double s = 1 / std::sqrt(2.0);
  const MechanismModel sub =
      SubsampledModel(Dataset::Amplitude({s, s}), ident, 1);
  const int idx = sub.InputIndex("0,1");
  EXPECT_NEAR(sub.dist[idx][0], 0.5, 1e-15);
  EXPECT_NEAR(sub.dist[idx][1], 0.5, 1e-15);
}

TEST(SubsampledModel, PointMassSamplesFirstEntry) {
  const MechanismModel rr = RandomizedResponseTupleModel(1, std::log(3.0));
  const MechanismModel sub =
      SubsampledModel(Dataset::Amplitude({1, 0, 0}), rr, 1);
  for (size_t i = 0; i < sub.inputs.size(); ++i) {
    const int first = ParseTupleId(sub.inputs[i])[0];
    EXPECT_EQ(sub.dist[i], rr.dist[rr.InputIndex(std::to_string(first))]);
  }
}

TEST(SubsampledModel, TupleWeights) {
  // Base reveals the sampled tuple; inputs (0,1) make it reveal the indices.
  MechanismModel reveal;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      reveal.inputs.push_back(TupleId({a, b}));
      reveal.outcomes.push_back(TupleId({a, b}));
    }
  }
  reveal.dist.assign(4, std::vector<double>(4, 0.0));
  for (int i = 0; i < 4; ++i) reveal.dist[i][i] = 1.0;
  const MechanismModel sub =
      SubsampledModel(Dataset::Amplitude({0.6, 0.8}), reveal, 2);
  const auto& row = sub.dist[sub.InputIndex("0,1")];
  const double expected[] = {0.1296, 0.2304, 0.2304, 0.4096};
  double total = 0;
  for (int o = 0; o < 4; ++o) {
    EXPECT_NEAR(row[o], expected[o], 1e-15);
    total += row[o];
  }
  EXPECT_NEAR(total, 1.0, 1e-15);
}

TEST(SubsampledModel, BudgetAndShape) {
  const MechanismModel rr = RandomizedResponseTupleModel(2, 1.0);
  std::vector<Complex> big(1024, Complex(1 / 32.0, 0));
  EXPECT_QDPA_ERROR(SubsampledModel(Dataset::Amplitude(big), rr, 2),
                    ErrorCode::kResource);
  EXPECT_QDPA_ERROR(SubsampledModel(Dataset::Amplitude({0.6, 0.8}), rr, 1),
                    ErrorCode::kValidation);
}

TEST(MechanismModel, Validation) {
  MechanismModel bad;
  bad.inputs = {"a"};
  bad.outcomes = {"x", "y"};
  bad.dist = {{0.5, 0.6}};
  EXPECT_QDPA_ERROR(bad.Validate(), ErrorCode::kValidation);
  EXPECT_EQ(ParseTupleId("3,0,12"), (std::vector<int>{3, 0, 12}));
  EXPECT_EQ(TupleId({1, 0}), "1,0");
}

}  // namespace
}  // namespace qdpamp
