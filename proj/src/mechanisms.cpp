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

#include "mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "error.hpp"

namespace qdpamp {

NoiseSpec NoiseSpec::Laplace(double scale) {
  Require(std::isfinite(scale) && scale >= 0.0, "laplace scale must be >= 0");
  return {NoiseKind::kLaplace, scale};
}

NoiseSpec NoiseSpec::Gaussian(double variance) {
  Require(std::isfinite(variance) && variance >= 0.0,
          "gaussian variance must be >= 0");
  return {NoiseKind::kGaussian, variance};
}

double SampleNoise(const NoiseSpec& spec, RandomStream& stream) {
  switch (spec.kind) {
    case NoiseKind::kNone: return 0.0;
    case NoiseKind::kLaplace: {
      if (spec.parameter == 0.0) return 0.0;
      const double u = stream.NextUniform();
      // Mirror-image branches keep the sampler exactly symmetric.
      return u < 0.5 ? spec.parameter * std::log(2.0 * u)
                     : -spec.parameter * std::log(2.0 * (1.0 - u));
    }
    case NoiseKind::kGaussian: {
      if (spec.parameter == 0.0) return 0.0;
      const double u1 = stream.NextUniform();
      const double u2 = stream.NextUniform();
      return std::sqrt(spec.parameter) * std::sqrt(-2.0 * std::log(u1)) *
             std::cos(2.0 * std::numbers::pi * u2);
    }
  }
  return 0.0;
}

double LaplaceDensity(double x, double scale) {
  Require(scale > 0.0, "laplace density needs scale > 0");
  return std::exp(-std::abs(x) / scale) / (2.0 * scale);
}

double LaplaceWorstCaseRatio(double scale, double sensitivity) {
  Require(sensitivity >= 0.0, "sensitivity must be >= 0");
  if (sensitivity == 0.0) return 1.0;
  // The log-ratio is piecewise linear in z with its maximum on the outer
  // tails; evaluate it there and at the kinks.
  double worst = 0.0;
  for (double z : {-sensitivity, 0.0, sensitivity, 2.0 * sensitivity}) {
    const double log_ratio =
        (std::abs(z - sensitivity) - std::abs(z)) / scale;
    worst = std::max(worst, log_ratio);
  }
  return std::exp(worst);
}

double GaussianVariance(double sensitivity, double eps, double delta) {
  Require(sensitivity >= 0.0, "sensitivity must be >= 0");
  Require(eps > 0.0, "epsilon must be > 0");
  Require(delta > 0.0 && delta < 1.0, "delta must be in (0, 1)");
  return 2.0 * std::log(1.25 / delta) * sensitivity * sensitivity /
         (eps * eps);
}

double NoisyQuery(double value, double sensitivity, const DpParams& dp,
                  QueryNoise kind, RandomStream& stream) {
  Require(sensitivity >= 0.0, "sensitivity must be >= 0");
  if (kind == QueryNoise::kLaplace) {
    Require(dp.delta == 0.0, "laplace mechanism needs delta = 0");
    Require(dp.epsilon > 0.0, "laplace mechanism needs epsilon > 0");
  } else {
    Require(dp.delta > 0.0 && dp.delta < 1.0,
            "gaussian mechanism needs delta in (0, 1)");
    Require(dp.epsilon > 0.0, "gaussian mechanism needs epsilon > 0");
  }
  if (sensitivity == 0.0) return value;
  if (IsInfiniteEpsilon(dp.epsilon)) return value;
  const NoiseSpec spec =
      kind == QueryNoise::kLaplace
          ? NoiseSpec::Laplace(sensitivity / dp.epsilon)
          : NoiseSpec::Gaussian(
                GaussianVariance(sensitivity, dp.epsilon, dp.delta));
  return value + SampleNoise(spec, stream);
}

ResponseProbabilities RandomizedResponseProbabilities(double eps,
                                                      double delta) {
  Require(!std::isnan(eps) && eps >= 0.0, "epsilon must be >= 0");
  Require(delta >= 0.0 && delta <= 1.0, "delta outside [0, 1]");
  if (IsInfiniteEpsilon(eps)) return {1.0, 0.0};
  const double e = std::exp(eps);
  const double keep = (e + delta) / (1.0 + e);
  Require(keep >= 0.0 && keep <= 1.0, "keep probability outside [0, 1]");
  return {keep, 1.0 - keep};
}

std::vector<int> RandomizedResponse(const std::vector<int>& bits, double eps,
                                    double delta, RandomStream& stream) {
  const auto probs = RandomizedResponseProbabilities(eps, delta);
  std::vector<int> out;
  out.reserve(bits.size());
  for (int b : bits) {
    Require(b == 0 || b == 1, "randomized response input must be bits");
    out.push_back(stream.NextUniform() < probs.keep ? b : 1 - b);
  }
  return out;
}

std::vector<int> L2Sample(const Dataset& x, int m, RandomStream& stream) {
  Require(x.mode() == EncodingKind::kAmplitude,
          "l2 sampling needs an amplitude dataset");
  Require(m >= 1, "m must be >= 1");
  std::vector<double> cdf;
  cdf.reserve(x.size());
  double acc = 0;
  int last_nonzero = 0;
  for (int i = 0; i < x.size(); ++i) {
    const double w = std::norm(x.amplitudes()[i]);
    if (w > 0) last_nonzero = i;
    acc += w;
    cdf.push_back(acc);
  }
  std::vector<int> out;
  out.reserve(m);
  for (int k = 0; k < m; ++k) {
    const double u = stream.NextUniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    int idx = static_cast<int>(it - cdf.begin());
    out.push_back(std::min(idx, last_nonzero));
  }
  return out;
}

BinaryPovm::BinaryPovm(Povm povm) : povm_(std::move(povm)) {
  Require(povm_.elements.size() == 2, "binary POVM needs exactly two elements");
  const auto& l = povm_.outcome_labels;
  Require((l[0] == 0 && l[1] == 1) || (l[0] == 1 && l[1] == 0),
          "binary POVM labels must be {0, 1}");
  accept_index_ = l[0] == 1 ? 0 : 1;
}

BinaryPovm BinaryPovm::BasisProjector(int dim, int index) {
  Require(index >= 0 && index < dim, "projector index out of range");
  ComplexMatrix e1 = ComplexMatrix::Zero(dim, dim);
  e1(index, index) = 1.0;
  const ComplexMatrix e0 = ComplexMatrix::Identity(dim, dim) - e1;
  return BinaryPovm(Povm({HermitianMatrix(e1), HermitianMatrix(e0)}, {1, 0}));
}

const HermitianMatrix& BinaryPovm::accept() const {
  return povm_.elements[accept_index_];
}

double BinaryPovm::AcceptProbability(const PureState& psi) const {
  Require(psi.dim() == dim(), "POVM dimension differs from encoded state");
  const auto& v = psi.amplitudes();
  const double p = v.dot(accept().matrix() * v).real();
  Require(p >= -tol::kInvariant && p <= 1.0 + tol::kInvariant,
          "acceptance probability outside [0, 1]");
  return std::clamp(p, 0.0, 1.0);
}

double RunAlg1(const Dataset& x, const EncodingSpec& spec,
               const BinaryPovm& povm, int m, const NoiseSpec& noise,
               RandomStream& stream) {
  Require(m >= 1, "m must be >= 1");
  const PureState psi = Encode(x, spec);
  const double p1 = povm.AcceptProbability(psi);
  long ones = 0;
  for (int i = 0; i < m; ++i) ones += stream.NextUniform() < p1 ? 1 : 0;
  const double mu = static_cast<double>(ones) / m;
  return mu + SampleNoise(noise, stream);
}

MechanismModel SubsampledModel(const Dataset& x, const MechanismModel& base,
                               int m) {
  Require(x.mode() == EncodingKind::kAmplitude,
          "subsampled model needs an amplitude dataset");
  Require(m >= 1, "m must be >= 1");
  base.Validate(1e-9);
  const int n = x.size();

  // Base tuples -> row index; infer the value domain.
  std::map<std::vector<int>, int> base_row;
  int domain = 0;
  for (size_t i = 0; i < base.inputs.size(); ++i) {
    auto t = ParseTupleId(base.inputs[i]);
    Require(static_cast<int>(t.size()) == m,
            "base model input '" + base.inputs[i] + "' is not an m-tuple");
    for (int v : t) domain = std::max(domain, v + 1);
    base_row.emplace(std::move(t), static_cast<int>(i));
  }

  double index_tuples = std::pow(double(n), m);
  double assignments = std::pow(double(domain), n);
  if (index_tuples > kEnumerationBudget || assignments > kEnumerationBudget ||
      index_tuples * assignments * base.outcomes.size() > 1e9) {
    Fail(ErrorCode::kResource, "subsampled model exceeds enumeration budget");
  }
  double base_tuples = std::pow(double(domain), m);
  Require(static_cast<double>(base_row.size()) == base_tuples,
          "base model must cover every m-tuple of values");

  std::vector<double> weight(n);
  double total = 0;
  for (int i = 0; i < n; ++i) total += weight[i] = std::norm(x.amplitudes()[i]);
  for (double& w : weight) w /= total;

  // Index tuples with their Born-rule weight.
  std::vector<std::vector<int>> idx_tuples;
  std::vector<double> idx_weights;
  {
    std::vector<int> cur(m, 0);
    while (true) {
      double w = 1.0;
      for (int k : cur) w *= weight[k];
      if (w > 0) {
        idx_tuples.push_back(cur);
        idx_weights.push_back(w);
      }
      int k = m - 1;
      while (k >= 0 && ++cur[k] == n) cur[k--] = 0;
      if (k < 0) break;
    }
  }

  MechanismModel out;
  out.outcomes = base.outcomes;
  std::vector<std::vector<int>> assigns;
  {
    std::vector<int> cur(n, 0);
    while (true) {
      assigns.push_back(cur);
      int k = n - 1;
      while (k >= 0 && ++cur[k] == domain) cur[k--] = 0;
      if (k < 0) break;
    }
  }
  const size_t n_out = base.outcomes.size();
  std::vector<int> values(m);
  for (const auto& a : assigns) {
    out.inputs.push_back(TupleId(a));
    std::vector<double> row(n_out, 0.0);
    for (size_t t = 0; t < idx_tuples.size(); ++t) {
      for (int k = 0; k < m; ++k) values[k] = a[idx_tuples[t][k]];
      const auto& b = base.dist[base_row.at(values)];
      for (size_t o = 0; o < n_out; ++o) row[o] += idx_weights[t] * b[o];
    }
    out.dist.push_back(std::move(row));
  }
  for (size_t i = 0; i < assigns.size(); ++i) {
    for (size_t j = i + 1; j < assigns.size(); ++j) {
      int diff = 0;
      for (int k = 0; k < n; ++k) diff += assigns[i][k] != assigns[j][k];
      if (diff == 1) out.neighbor_pairs.emplace_back(int(i), int(j));
    }
  }
  return out;
}

}  // namespace qdpamp
