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

// Closed-form privacy parameters and amplification rules.
//
// An infinite epsilon is a legal result (e.g. an identity channel offers no
// privacy); it is represented by +infinity and serialized as "inf".

#pragma once

#include <functional>
#include <limits>

namespace qdpamp {

inline constexpr double kInfiniteEpsilon =
    std::numeric_limits<double>::infinity();

inline bool IsInfiniteEpsilon(double eps) { return eps == kInfiniteEpsilon; }

struct DpParams {
  double epsilon = 0;
  double delta = 0;

  // Validating constructor: epsilon >= 0 (may be infinite), delta in [0, 1].
  static DpParams Make(double epsilon, double delta);
};

struct QdpParams {
  double tau = 0;
  double epsilon = 0;
  double delta = 0;

  static QdpParams Make(double tau, double epsilon, double delta);
};

// Maps a trace-distance bound to the epsilon guaranteed at that distance.
using EpsilonCurve = std::function<double(double)>;

// Any algorithm reading only the encoded state is (0, sqrt(1 - kappa_hat)).
DpParams EncodingAdpDelta(double kappa_hat);

// A QDP guarantee at tau >= sqrt(1 - kappa_hat) transfers unchanged to the
// classical dataset. Throws kInsufficientNeighborhood otherwise.
DpParams QuantumToClassical(const QdpParams& q, double kappa_hat);

// Laplace scale (sqrt(1 - kappa_hat) + t) / eps for the measure-then-add-noise
// pipeline.
double Alg1LaplaceScale(double kappa_hat, double t, double eps);

// 2 ln(1.25/delta) (sqrt(1 - kappa_hat) + t)^2 / eps^2.
double Alg1GaussianSigma2(double kappa_hat, double t, double eps,
                          double delta);

struct FailureProbability {
  // min(1, 4 exp(-m t^2)), the constant as originally stated.
  double printed = 1;
  // min(1, 4 exp(-m t^2 / 2)), standard Hoeffding for deviation t/2 on [0,1]
  // variables. This is the one reports lead with.
  double conservative = 1;
};

// Both means (x and its neighbour) within t/2 of their expectations.
FailureProbability Alg1FailureProb(int m, double t);

// A single mean within t/2: half of each two-mean bound, capped at 1.
FailureProbability Alg1DeviationProb(int m, double t);

// l2 (quantum-inspired) subsampling of m indices from an amplitude vector
// with Gamma = max |x_j|^2: (ln(1 + (e^eps - 1) Gamma m), delta Gamma m).
// Requires m Gamma <= 1.
DpParams SubsampleAmplify(const DpParams& base, double gamma, int m);

// Sampling alone, with no assumption on the downstream algorithm:
// (0, Gamma m).
DpParams SubsampleAdp(double gamma, int m);

// A gamma-Dobrushin pre-channel shrinks the neighbourhood: (tau, eps(gamma
// tau), 0).
QdpParams QppAmplify(const EpsilonCurve& curve, double gamma, double tau);

// ln(1 + ((1 - p)/p) d D).
double EpsDepolarizing(double p, double d, int dim);

// ln(1 + 2 d s / (1 - s)) with s = sqrt(1 - gamma) sqrt(1 - lambda).
double EpsPad(double gamma, double lambda, double d);

// ln(1 + 2 d gamma) for unital gamma-Dobrushin qubit channels.
double EpsUnitalDobrushin(double gamma, double d);

// (1 - p) EpsPad(gamma, lambda, d) for PAD composed with depolarizing(p).
double EpsPadDep(double p, double gamma, double lambda, double d);

EpsilonCurve DepolarizingCurve(double p, int dim);
EpsilonCurve PadCurve(double gamma, double lambda);

}  // namespace qdpamp
