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

// Kraus-form quantum operations, the named single-qubit noise channels, and
// their contraction properties (Dobrushin coefficient, Doeblin condition).

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "linalg.hpp"

namespace qdpamp {

// rho -> sum_i B_i rho B_i^dagger with sum_i B_i^dagger B_i <= I.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> ops,
                        double tol = tol::kInvariant);

  static KrausChannel Identity(int dim);

  int dim_in() const { return static_cast<int>(ops_.front().cols()); }
  int dim_out() const { return static_cast<int>(ops_.front().rows()); }
  const std::vector<ComplexMatrix>& kraus_ops() const { return ops_; }
  bool trace_preserving() const { return trace_preserving_; }

 private:
  std::vector<ComplexMatrix> ops_;
  bool trace_preserving_ = false;
};

// sum_i B_i^dagger B_i.
ComplexMatrix KrausCompleteness(const std::vector<ComplexMatrix>& ops);

// Throws a validation error unless the operators form a quantum operation
// (completeness <= I); with require_trace_preserving, equality is enforced.
void ValidateKraus(const std::vector<ComplexMatrix>& ops,
                   bool require_trace_preserving,
                   double tol = tol::kInvariant);

struct ChannelSpec;

namespace channel_kind {
struct Identity {
  int dim = 2;
};
struct Depolarizing {
  double p = 0;
  int dim = 2;
};
struct GeneralizedAmplitudeDamping {
  double p = 0;
  double gamma = 0;
};
struct PhaseDamping {
  double lambda = 0;
};
// GAD(p, gamma) applied after PD(lambda).
struct PhaseAmplitudeDamping {
  double p = 0;
  double gamma = 0;
  double lambda = 0;
};
struct RawKraus {
  std::vector<ComplexMatrix> ops;
};
// outer after inner.
struct Compose {
  std::shared_ptr<const ChannelSpec> outer;
  std::shared_ptr<const ChannelSpec> inner;
};
}  // namespace channel_kind

struct ChannelSpec {
  using Kind = std::variant<channel_kind::Identity, channel_kind::Depolarizing,
                            channel_kind::GeneralizedAmplitudeDamping,
                            channel_kind::PhaseDamping,
                            channel_kind::PhaseAmplitudeDamping,
                            channel_kind::RawKraus, channel_kind::Compose>;
  Kind kind;

  static ChannelSpec MakeCompose(ChannelSpec outer, ChannelSpec inner);
};

inline constexpr int kMaxDepolarizingDim = 8;

KrausChannel BuildChannel(const ChannelSpec& spec);

// Individual constructors behind BuildChannel.
KrausChannel Depolarizing(double p, int dim = 2);
KrausChannel GeneralizedAmplitudeDamping(double p, double gamma);
// Trace-preserving phase damping: E0 = diag(1, sqrt(1 - lambda)),
// E1 = diag(0, sqrt(lambda)).
KrausChannel PhaseDamping(double lambda);
KrausChannel PhaseAmplitudeDamping(double p, double gamma, double lambda);

// p Tr(rho) I/D + (1 - p) rho evaluated directly, without Kraus operators.
ComplexMatrix DepolarizingAffine(double p, const ComplexMatrix& rho);

// Linear action on an arbitrary operator.
ComplexMatrix ApplyToOperator(const KrausChannel& channel,
                              const ComplexMatrix& x);

// Action on a state; the channel must be trace preserving.
DensityMatrix Apply(const KrausChannel& channel, const DensityMatrix& rho);

// outer o inner, Kraus set {A_j B_i}.
KrausChannel Compose(const KrausChannel& outer, const KrausChannel& inner);

// Affine action of a qubit channel on Bloch vectors: r -> T r + t.
struct BlochRep {
  Eigen::Matrix3d transfer;
  Eigen::Vector3d shift;
  bool unital = false;

  Eigen::Vector3d Map(const Eigen::Vector3d& r) const {
    return transfer * r + shift;
  }
};

BlochRep ComputeBlochRep(const KrausChannel& channel,
                         double tol = tol::kInvariant);

// sum_ij |i><j| (x) Phi(|i><j|), input factor first.
HermitianMatrix Choi(const KrausChannel& channel);

struct DobrushinSearch {
  int azimuth = 64;
  int polar = 32;
  int refine_iters = 20;
  // Extra random mixed-state pairs checked as a sanity bound.
  bool full_search = false;
  int random_pairs = 4096;
  std::uint64_t seed = 0;
};

struct DobrushinEstimate {
  double value = 0;
  // "unital-transfer-norm" or "orthogonal-pair-search".
  std::string method;
  int evaluations = 0;
};

// Worst-case trace distance contraction. Unital qubit channels use the
// operator norm of the transfer matrix; everything else (d <= 4) searches
// orthogonal pure-state pairs.
DobrushinEstimate EstimateDobrushin(const KrausChannel& channel,
                                    const DobrushinSearch& search = {});

// Always runs the pair search, even when the shortcut applies.
DobrushinEstimate SearchDobrushin(const KrausChannel& channel,
                                  const DobrushinSearch& search = {});

struct DoeblinResult {
  bool holds = false;
  // Smallest eigenvalue of Choi(T) - gamma * (I (x) Y).
  double min_eigenvalue = 0;
};

// Whether T - gamma T' is completely positive for T'(X) = Tr[X] Y.
DoeblinResult DoeblinCheck(const KrausChannel& channel, double gamma,
                           const HermitianMatrix& y,
                           double tol = tol::kInvariant);

// Contraction implied by a Doeblin minorization: 1 - gamma Tr(Y), which is
// 1 - gamma for normalized Y.
double DoeblinToDobrushin(double gamma, double trace_y = 1.0);

}  // namespace qdpamp
