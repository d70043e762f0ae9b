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

// Randomized mechanisms. Every sampler draws from an explicit RandomStream;
// there is no hidden global state.

#pragma once

#include <cstdint>
#include <vector>

#include "encodings.hpp"
#include "linalg.hpp"
#include "model.hpp"
#include "privacy.hpp"
#include "random.hpp"

namespace qdpamp {

enum class NoiseKind { kNone, kLaplace, kGaussian };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::kNone;
  // Laplace scale b, or Gaussian variance sigma^2.
  double parameter = 0;

  static NoiseSpec None() { return {}; }
  static NoiseSpec Laplace(double scale);
  static NoiseSpec Gaussian(double variance);
};

// One draw. Laplace uses one uniform (inverse CDF), Gaussian two
// (Box-Muller, cosine branch). Degenerate parameters return exactly 0 without
// consuming randomness.
double SampleNoise(const NoiseSpec& spec, RandomStream& stream);

// Density of Laplace(b) at x.
double LaplaceDensity(double x, double scale);
// sup_z p(z - f) / p(z - f') over |f - f'| <= sensitivity, evaluated from the
// density on both tails.
double LaplaceWorstCaseRatio(double scale, double sensitivity);

// 2 ln(1.25/delta) sensitivity^2 / eps^2.
double GaussianVariance(double sensitivity, double eps, double delta);

enum class QueryNoise { kLaplace, kGaussian };

double NoisyQuery(double value, double sensitivity, const DpParams& dp,
                  QueryNoise kind, RandomStream& stream);

struct ResponseProbabilities {
  double keep = 0.5;
  double flip = 0.5;
};

// keep = (e^eps + delta)/(1 + e^eps), flip = 1 - keep.
ResponseProbabilities RandomizedResponseProbabilities(double eps,
                                                      double delta);

std::vector<int> RandomizedResponse(const std::vector<int>& bits, double eps,
                                    double delta, RandomStream& stream);

// m independent Born-rule draws of an index i (zero based) with probability
// |x_i|^2.
std::vector<int> L2Sample(const Dataset& x, int m, RandomStream& stream);

// Two-outcome POVM whose outcome labels are exactly {0, 1}.
class BinaryPovm {
 public:
  explicit BinaryPovm(Povm povm);

  // Computational-basis projector |index><index| labelled 1, complement 0.
  static BinaryPovm BasisProjector(int dim, int index);

  const Povm& povm() const { return povm_; }
  // Element carrying label 1.
  const HermitianMatrix& accept() const;
  int dim() const { return povm_.dim(); }

  // Tr(E_1 |psi><psi|), clamped into [0, 1].
  double AcceptProbability(const PureState& psi) const;

 private:
  Povm povm_;
  int accept_index_ = 0;
};

// Measures the encoded state m times (fresh preparation each round) and
// returns the sample mean plus one noise draw.
double RunAlg1(const Dataset& x, const EncodingSpec& spec,
               const BinaryPovm& povm, int m, const NoiseSpec& noise,
               RandomStream& stream);

inline constexpr std::uint64_t kEnumerationBudget = 1000000;

// Exact outcome distribution of base o l2-sampling. The weights come from the
// amplitude dataset x; the subsampled model's inputs are every assignment of
// base-domain values to the n rows (neighbours differ in one row), and the
// base model's inputs must be all m-tuples of those values.
MechanismModel SubsampledModel(const Dataset& x, const MechanismModel& base,
                               int m);

}  // namespace qdpamp
