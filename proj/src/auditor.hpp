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

// Empirical checks of privacy claims.
//
// Classical audits are exact: they enumerate every neighbour pair and outcome
// of a finite model. Channel audits search over state pairs and measurement
// projectors, so they are one-sided: a reported violation comes with a witness
// that reproduces it, but a clean audit only says the search found nothing.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "channels.hpp"
#include "encodings.hpp"
#include "linalg.hpp"
#include "model.hpp"
#include "privacy.hpp"

namespace qdpamp {

// sum_o max(P(o) - e^eps Q(o), 0): the smallest delta making the pair
// (eps, delta)-indistinguishable in the P -> Q direction. For infinite eps
// only outcomes with Q(o) = 0 count.
double HockeyStick(const std::vector<double>& p, const std::vector<double>& q,
                   double eps);

struct ClassicalWitness {
  std::string input;
  std::string neighbor;
  std::string outcome;
  double p = 0;  // Pr[A(input) = outcome]
  double q = 0;  // Pr[A(neighbor) = outcome]
};

struct QuantumWitness {
  ComplexMatrix rho;
  ComplexMatrix sigma;
  ComplexMatrix projector;
  double accept_rho = 0;    // Tr[P Phi(rho)]
  double accept_sigma = 0;  // Tr[P Phi(sigma)]
  double trace_distance = 0;
};

struct AuditSearchInfo {
  int azimuth = 0;
  int polar = 0;
  int pairs = 0;
  long evaluations = 0;
  std::uint64_t seed = 0;
};

struct AuditReport {
  double eps_hat = 0;
  // Smallest delta at the claimed epsilon (classical: exact over all pairs;
  // channel: evaluated at the witness).
  double delta_hat = 0;
  DpParams claimed;
  bool satisfied = true;
  std::optional<ClassicalWitness> classical_witness;
  std::optional<QuantumWitness> quantum_witness;
  std::optional<AuditSearchInfo> search;
  // One-sided audits cannot certify tightness.
  bool one_sided = false;
};

AuditReport AuditClassical(const MechanismModel& model,
                           const DpParams& claimed);

// Recomputes ln(p/q) from a classical witness.
double WitnessEpsilon(const MechanismModel& model, const ClassicalWitness& w);

struct RatioSearch {
  int azimuth = 64;
  int polar = 32;
  int refine_iters = 20;
  // Random directions for d = 3, 4.
  int samples = 4096;
  std::uint64_t seed = 0;
};

struct MeasurementRatio {
  double ratio = 1;  // may be infinite
  ComplexVector direction;  // rank-1 projector |v><v|; empty means identity
  long evaluations = 0;
};

// sup over projectors P of Tr[P a] / Tr[P b], searched over rank-1
// projectors (plus the identity) for d <= 4.
MeasurementRatio WorstCaseMeasurementRatio(const DensityMatrix& a,
                                           const DensityMatrix& b,
                                           const RatioSearch& search = {});

struct QdpAuditSearch {
  RatioSearch projector;
  // Direction count for generated state pairs.
  int pairs = 96;
  // Local hill-climbing steps on the best pairs.
  int pair_refine_iters = 120;
  int refined_pairs = 3;
  std::uint64_t seed = 0;
};

// Searches state pairs with trace distance <= tau for the largest
// measurement likelihood ratio after the channel. Qubit channels only.
AuditReport AuditChannelQdp(const KrausChannel& channel, double tau,
                            double claimed_eps,
                            const QdpAuditSearch& search = {});

// Recomputes the likelihood ratio of a quantum witness through the channel.
double WitnessRatio(const KrausChannel& channel, const QuantumWitness& w);

struct SubsamplingAudit {
  DpParams bound;  // subsample_amplify(base_claim, Gamma, m)
  double gamma = 0;
  AuditReport report;
};

// Builds base o l2-sampling exactly and audits it against the amplified
// bound derived from base_claim.
SubsamplingAudit AuditSubsamplingTheorem(const Dataset& x,
                                         const MechanismModel& base, int m,
                                         const DpParams& base_claim);

// Mechanism that encodes each dataset and measures it with a fixed POVM.
// Inputs are the given datasets (ids "x0", "x1", ...); neighbours are the
// pairs differing in exactly one entry.
MechanismModel MeasurementModel(const std::vector<Dataset>& datasets,
                                const EncodingSpec& spec, const Povm& povm);

}  // namespace qdpamp
