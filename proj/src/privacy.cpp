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

#include "privacy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"

namespace qdpamp {

namespace {

constexpr double kSlack = 1e-12;

void RequireUnit(double v, const char* name) {
  Require(std::isfinite(v) && v >= 0.0 && v <= 1.0,
          std::string(name) + " outside [0, 1]");
}

void RequireNonNegative(double v, const char* name) {
  Require(!std::isnan(v) && v >= 0.0, std::string(name) + " must be >= 0");
}

}  // namespace

DpParams DpParams::Make(double epsilon, double delta) {
  RequireNonNegative(epsilon, "epsilon");
  RequireUnit(delta, "delta");
  return {epsilon, delta};
}

QdpParams QdpParams::Make(double tau, double epsilon, double delta) {
  RequireUnit(tau, "tau");
  RequireNonNegative(epsilon, "epsilon");
  RequireUnit(delta, "delta");
  return {tau, epsilon, delta};
}

DpParams EncodingAdpDelta(double kappa_hat) {
  RequireUnit(kappa_hat, "kappa_hat");
  return {0.0, std::sqrt(1.0 - kappa_hat)};
}

DpParams QuantumToClassical(const QdpParams& q, double kappa_hat) {
  RequireUnit(kappa_hat, "kappa_hat");
  const double needed = std::sqrt(1.0 - kappa_hat);
  if (q.tau < needed - kSlack) {
    Fail(ErrorCode::kInsufficientNeighborhood,
         "QDP neighbourhood tau = " + std::to_string(q.tau) +
             " is smaller than sqrt(1 - kappa_hat) = " +
             std::to_string(needed));
  }
  return {q.epsilon, q.delta};
}

double Alg1LaplaceScale(double kappa_hat, double t, double eps) {
  RequireUnit(kappa_hat, "kappa_hat");
  RequireNonNegative(t, "t");
  Require(eps > 0.0, "epsilon must be > 0");
  return (std::sqrt(1.0 - kappa_hat) + t) / eps;
}

double Alg1GaussianSigma2(double kappa_hat, double t, double eps,
                          double delta) {
  RequireUnit(kappa_hat, "kappa_hat");
  RequireNonNegative(t, "t");
  Require(eps > 0.0, "epsilon must be > 0");
  Require(delta > 0.0 && delta < 1.25, "delta must be in (0, 1.25)");
  const double sens = std::sqrt(1.0 - kappa_hat) + t;
  return 2.0 * std::log(1.25 / delta) * sens * sens / (eps * eps);
}

FailureProbability Alg1FailureProb(int m, double t) {
  Require(m >= 1, "m must be >= 1");
  RequireNonNegative(t, "t");
  const double mt2 = m * t * t;
  return {std::min(1.0, 4.0 * std::exp(-mt2)),
          std::min(1.0, 4.0 * std::exp(-mt2 / 2.0))};
}

FailureProbability Alg1DeviationProb(int m, double t) {
  Require(m >= 1, "m must be >= 1");
  RequireNonNegative(t, "t");
  const double mt2 = m * t * t;
  return {std::min(1.0, 2.0 * std::exp(-mt2)),
          std::min(1.0, 2.0 * std::exp(-mt2 / 2.0))};
}

DpParams SubsampleAmplify(const DpParams& base, double gamma, int m) {
  RequireNonNegative(base.epsilon, "epsilon");
  RequireUnit(base.delta, "delta");
  Require(gamma > 0.0 && gamma <= 1.0, "Gamma must be in (0, 1]");
  Require(m >= 1, "m must be >= 1");
  const double p = gamma * m;
  if (p > 1.0 + kSlack) {
    Fail(ErrorCode::kPrecondition,
         "m * Gamma = " + std::to_string(p) +
             " exceeds 1; the subsampling bound degenerates");
  }
  const double q = std::min(p, 1.0);
  const double eps = IsInfiniteEpsilon(base.epsilon)
                         ? kInfiniteEpsilon
                         : std::log1p(std::expm1(base.epsilon) * q);
  return {std::min(eps, base.epsilon), base.delta * q};
}

DpParams SubsampleAdp(double gamma, int m) {
  Require(gamma > 0.0 && gamma <= 1.0, "Gamma must be in (0, 1]");
  Require(m >= 1, "m must be >= 1");
  const double p = gamma * m;
  if (p > 1.0 + kSlack) {
    Fail(ErrorCode::kPrecondition,
         "m * Gamma exceeds 1; the sampling delta is vacuous");
  }
  return {0.0, std::min(p, 1.0)};
}

QdpParams QppAmplify(const EpsilonCurve& curve, double gamma, double tau) {
  Require(static_cast<bool>(curve), "epsilon curve is empty");
  RequireUnit(gamma, "gamma");
  RequireUnit(tau, "tau");
  const double eps = curve(gamma * tau);
  RequireNonNegative(eps, "curve value");
  return {tau, eps, 0.0};
}

double EpsDepolarizing(double p, double d, int dim) {
  RequireUnit(p, "p");
  RequireUnit(d, "d");
  Require(dim >= 2, "dimension must be >= 2");
  if (d == 0.0) return 0.0;
  if (p == 0.0) return kInfiniteEpsilon;
  return std::log1p((1.0 - p) / p * d * dim);
}

double EpsPad(double gamma, double lambda, double d) {
  RequireUnit(gamma, "gamma");
  RequireUnit(lambda, "lambda");
  RequireUnit(d, "d");
  if (d == 0.0) return 0.0;
  const double s = std::sqrt(1.0 - gamma) * std::sqrt(1.0 - lambda);
  if (s >= 1.0) return kInfiniteEpsilon;
  return std::log1p(2.0 * d * s / (1.0 - s));
}

double EpsUnitalDobrushin(double gamma, double d) {
  RequireUnit(gamma, "gamma");
  RequireUnit(d, "d");
  return std::log1p(2.0 * d * gamma);
}

double EpsPadDep(double p, double gamma, double lambda, double d) {
  RequireUnit(p, "p");
  const double pad = EpsPad(gamma, lambda, d);
  if (p == 1.0 || pad == 0.0) return 0.0;
  return (1.0 - p) * pad;
}

EpsilonCurve DepolarizingCurve(double p, int dim) {
  return [p, dim](double d) { return EpsDepolarizing(p, d, dim); };
}

EpsilonCurve PadCurve(double gamma, double lambda) {
  return [gamma, lambda](double d) { return EpsPad(gamma, lambda, d); };
}

}  // namespace qdpamp
