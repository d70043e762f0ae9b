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

#include "channels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "error.hpp"
#include "random.hpp"

namespace qdpamp {

namespace {

void RequireUnitInterval(double v, const char* name) {
  Require(std::isfinite(v) && v >= 0.0 && v <= 1.0,
          std::string("channel parameter ") + name + " outside [0, 1]");
}

ComplexMatrix Mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

// Heisenberg-Weyl displacement X^a Z^b on C^D.
ComplexMatrix Weyl(int dim, int a, int b) {
  ComplexMatrix x = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix z = ComplexMatrix::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) {
    x((j + 1) % dim, j) = 1.0;
    z(j, j) = std::polar(1.0, 2 * std::numbers::pi * j / dim);
  }
  ComplexMatrix out = ComplexMatrix::Identity(dim, dim);
  for (int i = 0; i < a; ++i) out = x * out;
  for (int i = 0; i < b; ++i) out = out * z;
  return out;
}

ComplexVector RandomUnitVector(int dim, RandomStream& rng) {
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) {
    // Box-Muller pairs give isotropic complex Gaussians.
    const double r = std::sqrt(-2.0 * std::log(rng.NextUniform()));
    const double th = 2 * std::numbers::pi * rng.NextUniform();
    v(i) = Complex(r * std::cos(th), r * std::sin(th));
  }
  return v / v.norm();
}

ComplexMatrix RandomDensity(int dim, RandomStream& rng) {
  ComplexMatrix g(dim, dim);
  for (int c = 0; c < dim; ++c) g.col(c) = RandomUnitVector(dim, rng);
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

double OutputDistance(const KrausChannel& ch, const ComplexMatrix& a,
                      const ComplexMatrix& b) {
  return TraceNorm(HermitianMatrix(ApplyToOperator(ch, a - b), 1e-9));
}

Eigen::Vector3d SphericalDirection(double polar, double azimuth) {
  return {std::sin(polar) * std::cos(azimuth),
          std::sin(polar) * std::sin(azimuth), std::cos(polar)};
}

// Golden-section maximization of a unimodal-ish function on [lo, hi].
std::pair<double, double> GoldenMax(const std::function<double(double)>& f,
                                    double lo, double hi, int iters,
                                    int& evaluations) {
  const double g = (std::sqrt(5.0) - 1) / 2;
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  evaluations += 2;
  for (int i = 0; i < iters; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
    ++evaluations;
  }
  return fc >= fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

DobrushinEstimate SearchQubit(const KrausChannel& ch,
                              const DobrushinSearch& s) {
  DobrushinEstimate est{0.0, "orthogonal-pair-search", 0};
  auto f = [&](double polar, double azimuth) {
    const Eigen::Vector3d n = SphericalDirection(polar, azimuth);
    ++est.evaluations;
    return OutputDistance(ch, BlochState(n).matrix(),
                          BlochState(-n).matrix());
  };
  const int na = std::max(1, s.azimuth);
  const int np = std::max(2, s.polar);
  const double dpolar = std::numbers::pi / (np - 1);
  const double dazim = 2 * std::numbers::pi / na;
  double best_p = 0, best_a = 0, best = -1;
  for (int ip = 0; ip < np; ++ip) {
    for (int ia = 0; ia < na; ++ia) {
      const double p = ip * dpolar, a = ia * dazim;
      const double v = f(p, a);
      if (v > best) {
        best = v;
        best_p = p;
        best_a = a;
      }
    }
  }
  // Alternate golden-section line searches inside the best cell.
  double half_p = dpolar, half_a = dazim;
  for (int it = 0; it < s.refine_iters; ++it) {
    auto [p, vp] = GoldenMax([&](double x) { return f(x, best_a); },
                             best_p - half_p, best_p + half_p, 12,
                             est.evaluations);
    if (vp > best) {
      best = vp;
      best_p = p;
    }
    auto [a, va] = GoldenMax([&](double x) { return f(best_p, x); },
                             best_a - half_a, best_a + half_a, 12,
                             est.evaluations);
    if (va > best) {
      best = va;
      best_a = a;
    }
    half_p *= 0.5;
    half_a *= 0.5;
  }
  est.value = best;
  return est;
}

DobrushinEstimate SearchGeneral(const KrausChannel& ch,
                                const DobrushinSearch& s) {
  DobrushinEstimate est{0.0, "orthogonal-pair-search", 0};
  const int d = ch.dim_in();
  RandomStream rng = RandomStream(s.seed).Split(0xD0B5);
  auto value = [&](const ComplexVector& psi, const ComplexVector& phi) {
    ++est.evaluations;
    return OutputDistance(ch, psi * psi.adjoint(), phi * phi.adjoint());
  };
  auto orthogonalize = [](const ComplexVector& psi, ComplexVector phi) {
    phi -= psi * psi.dot(phi);
    return ComplexVector(phi / phi.norm());
  };
  ComplexVector best_psi, best_phi;
  double best = -1;
  // Computational-basis pairs first, then random orthogonal pairs.
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      ComplexVector a = ComplexVector::Zero(d), b = ComplexVector::Zero(d);
      a(i) = 1;
      b(j) = 1;
      const double v = value(a, b);
      if (v > best) {
        best = v;
        best_psi = a;
        best_phi = b;
      }
    }
  }
  const int samples = std::max(1, s.azimuth * s.polar);
  for (int k = 0; k < samples; ++k) {
    ComplexVector a = RandomUnitVector(d, rng);
    ComplexVector b = orthogonalize(a, RandomUnitVector(d, rng));
    const double v = value(a, b);
    if (v > best) {
      best = v;
      best_psi = a;
      best_phi = b;
    }
  }
  double step = 0.2;
  for (int it = 0; it < s.refine_iters; ++it) {
    for (int trial = 0; trial < 24; ++trial) {
      ComplexVector a = best_psi + step * RandomUnitVector(d, rng);
      a /= a.norm();
      ComplexVector b =
          orthogonalize(a, best_phi + step * RandomUnitVector(d, rng));
      const double v = value(a, b);
      if (v > best) {
        best = v;
        best_psi = a;
        best_phi = b;
      }
    }
    step *= 0.6;
  }
  est.value = best;
  return est;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops, double tol)
    : ops_(std::move(ops)) {
  ValidateKraus(ops_, false, tol);
  const auto completeness = KrausCompleteness(ops_);
  trace_preserving_ =
      (completeness - ComplexMatrix::Identity(dim_in(), dim_in()))
          .cwiseAbs()
          .maxCoeff() <= tol;
}

KrausChannel KrausChannel::Identity(int dim) {
  Require(dim >= 1, "identity channel needs dim >= 1");
  return KrausChannel({ComplexMatrix::Identity(dim, dim)});
}

ComplexMatrix KrausCompleteness(const std::vector<ComplexMatrix>& ops) {
  Require(!ops.empty(), "kraus set is empty");
  ComplexMatrix sum = ComplexMatrix::Zero(ops.front().cols(), ops.front().cols());
  for (const auto& b : ops) sum += b.adjoint() * b;
  return sum;
}

void ValidateKraus(const std::vector<ComplexMatrix>& ops,
                   bool require_trace_preserving, double tol) {
  Require(!ops.empty(), "kraus set is empty");
  const auto rows = ops.front().rows(), cols = ops.front().cols();
  Require(rows > 0 && cols > 0, "kraus operators must be non-empty");
  for (const auto& b : ops) {
    Require(b.rows() == rows && b.cols() == cols,
            "kraus operators have inconsistent shapes");
    Require(b.allFinite(), "kraus operator has non-finite entries");
  }
  const ComplexMatrix c = KrausCompleteness(ops);
  const ComplexMatrix id = ComplexMatrix::Identity(cols, cols);
  Require(IsPsd(HermitianMatrix(id - c, 1e-9), tol),
          "kraus completeness sum exceeds the identity");
  if (require_trace_preserving) {
    Require((c - id).cwiseAbs().maxCoeff() <= tol,
            "kraus operators are not trace preserving");
  }
}

ChannelSpec ChannelSpec::MakeCompose(ChannelSpec outer, ChannelSpec inner) {
  return ChannelSpec{channel_kind::Compose{
      std::make_shared<const ChannelSpec>(std::move(outer)),
      std::make_shared<const ChannelSpec>(std::move(inner))}};
}

KrausChannel Depolarizing(double p, int dim) {
  RequireUnitInterval(p, "p");
  Require(dim >= 2, "depolarizing dimension must be >= 2");
  if (dim > kMaxDepolarizingDim) {
    Fail(ErrorCode::kUnsupported,
         "depolarizing channel supports dim <= " +
             std::to_string(kMaxDepolarizingDim));
  }
  if (p == 0.0) return KrausChannel::Identity(dim);
  std::vector<ComplexMatrix> ops;
  if (dim == 2) {
    ops.push_back(std::sqrt(1 - 0.75 * p) * pauli::I());
    for (int k = 1; k <= 3; ++k) ops.push_back(std::sqrt(p / 4) * pauli::Get(k));
  } else {
    // Twirling over the D^2 Weyl operators yields Tr(rho) I/D.
    const double d2 = double(dim) * dim;
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) {
        const double w = (a == 0 && b == 0) ? 1 - p + p / d2 : p / d2;
        ops.push_back(std::sqrt(w) * Weyl(dim, a, b));
      }
    }
  }
  return KrausChannel(std::move(ops));
}

KrausChannel GeneralizedAmplitudeDamping(double p, double gamma) {
  RequireUnitInterval(p, "p");
  RequireUnitInterval(gamma, "gamma");
  const double sp = std::sqrt(p), sq = std::sqrt(1 - p);
  const double sg = std::sqrt(gamma), sr = std::sqrt(1 - gamma);
  return KrausChannel({sp * Mat2(1, 0, 0, sr), sp * Mat2(0, sg, 0, 0),
                       sq * Mat2(sr, 0, 0, 1), sq * Mat2(0, 0, sg, 0)});
}

KrausChannel PhaseDamping(double lambda) {
  RequireUnitInterval(lambda, "lambda");
  return KrausChannel({Mat2(1, 0, 0, std::sqrt(1 - lambda)),
                       Mat2(0, 0, 0, std::sqrt(lambda))});
}

KrausChannel PhaseAmplitudeDamping(double p, double gamma, double lambda) {
  RequireUnitInterval(p, "p");
  RequireUnitInterval(gamma, "gamma");
  RequireUnitInterval(lambda, "lambda");
  // Products of the GAD and PD operators written out; the eighth product
  // vanishes identically.
  const double sp = std::sqrt(p), sq = std::sqrt(1 - p);
  const double sg = std::sqrt(gamma), sr = std::sqrt(1 - gamma);
  const double sl = std::sqrt(lambda), sk = std::sqrt(1 - lambda);
  return KrausChannel({sp * Mat2(1, 0, 0, sr * sk), sp * Mat2(0, 0, 0, sr * sl),
                       sp * Mat2(0, sg * sk, 0, 0), sp * Mat2(0, sg * sl, 0, 0),
                       sq * Mat2(sr, 0, 0, sk), sq * Mat2(0, 0, 0, sl),
                       sq * Mat2(0, 0, sg, 0)});
}

KrausChannel BuildChannel(const ChannelSpec& spec) {
  return std::visit(
      [](const auto& k) -> KrausChannel {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, channel_kind::Identity>) {
          return KrausChannel::Identity(k.dim);
        } else if constexpr (std::is_same_v<T, channel_kind::Depolarizing>) {
          return Depolarizing(k.p, k.dim);
        } else if constexpr (std::is_same_v<
                                 T, channel_kind::GeneralizedAmplitudeDamping>) {
          return GeneralizedAmplitudeDamping(k.p, k.gamma);
        } else if constexpr (std::is_same_v<T, channel_kind::PhaseDamping>) {
          return PhaseDamping(k.lambda);
        } else if constexpr (std::is_same_v<
                                 T, channel_kind::PhaseAmplitudeDamping>) {
          return PhaseAmplitudeDamping(k.p, k.gamma, k.lambda);
        } else if constexpr (std::is_same_v<T, channel_kind::RawKraus>) {
          return KrausChannel(k.ops);
        } else {
          Require(k.outer && k.inner, "compose needs outer and inner channels");
          return Compose(BuildChannel(*k.outer), BuildChannel(*k.inner));
        }
      },
      spec.kind);
}

ComplexMatrix DepolarizingAffine(double p, const ComplexMatrix& rho) {
  RequireUnitInterval(p, "p");
  const auto d = rho.rows();
  return p * rho.trace() * ComplexMatrix::Identity(d, d) / double(d) +
         (1 - p) * rho;
}

ComplexMatrix ApplyToOperator(const KrausChannel& channel,
                              const ComplexMatrix& x) {
  Require(x.rows() == channel.dim_in() && x.cols() == channel.dim_in(),
          "operator dimension does not match channel input");
  ComplexMatrix out = ComplexMatrix::Zero(channel.dim_out(), channel.dim_out());
  for (const auto& b : channel.kraus_ops()) out += b * x * b.adjoint();
  return out;
}

DensityMatrix Apply(const KrausChannel& channel, const DensityMatrix& rho) {
  Require(rho.dim() == channel.dim_in(),
          "state dimension does not match channel input");
  if (!channel.trace_preserving()) {
    Fail(ErrorCode::kPrecondition,
         "apply to a state needs a trace-preserving channel");
  }
  return DensityMatrix(ApplyToOperator(channel, rho.matrix()));
}

KrausChannel Compose(const KrausChannel& outer, const KrausChannel& inner) {
  Require(inner.dim_out() == outer.dim_in(),
          "compose: inner output dimension differs from outer input");
  std::vector<ComplexMatrix> ops;
  ops.reserve(outer.kraus_ops().size() * inner.kraus_ops().size());
  for (const auto& a : outer.kraus_ops()) {
    for (const auto& b : inner.kraus_ops()) ops.push_back(a * b);
  }
  return KrausChannel(std::move(ops));
}

BlochRep ComputeBlochRep(const KrausChannel& channel, double tol) {
  if (channel.dim_in() != 2 || channel.dim_out() != 2) {
    Fail(ErrorCode::kUnsupported, "bloch representation needs a qubit channel");
  }
  BlochRep rep;
  const ComplexMatrix image_of_identity = ApplyToOperator(channel, pauli::I());
  for (int j = 0; j < 3; ++j) {
    const ComplexMatrix sj = pauli::Get(j + 1);
    rep.shift(j) = 0.5 * (sj * image_of_identity).trace().real();
    for (int k = 0; k < 3; ++k) {
      const ComplexMatrix image = ApplyToOperator(channel, pauli::Get(k + 1));
      rep.transfer(j, k) = 0.5 * (sj * image).trace().real();
    }
  }
  rep.unital = rep.shift.norm() <= tol &&
               (image_of_identity - pauli::I()).cwiseAbs().maxCoeff() <= tol;

  if (channel.trace_preserving()) {
    // The affine model must reproduce the channel on the six axis states.
    for (int k = 0; k < 3; ++k) {
      for (double sgn : {1.0, -1.0}) {
        Eigen::Vector3d r = Eigen::Vector3d::Zero();
        r(k) = sgn;
        const Eigen::Vector3d direct =
            BlochVector(ApplyToOperator(channel, BlochState(r).matrix()));
        if ((direct - rep.Map(r)).norm() > tol) {
          Fail(ErrorCode::kValidation,
               "bloch reconstruction does not match the channel");
        }
      }
    }
  }
  return rep;
}

HermitianMatrix Choi(const KrausChannel& channel) {
  const int din = channel.dim_in(), dout = channel.dim_out();
  ComplexMatrix c = ComplexMatrix::Zero(din * dout, din * dout);
  for (int i = 0; i < din; ++i) {
    for (int j = 0; j < din; ++j) {
      ComplexMatrix eij = ComplexMatrix::Zero(din, din);
      eij(i, j) = 1.0;
      c.block(i * dout, j * dout, dout, dout) = ApplyToOperator(channel, eij);
    }
  }
  return HermitianMatrix(c, 1e-9);
}

DobrushinEstimate SearchDobrushin(const KrausChannel& channel,
                                  const DobrushinSearch& search) {
  if (channel.dim_in() > 4) {
    Fail(ErrorCode::kUnsupported, "dobrushin search supports dim <= 4");
  }
  if (!channel.trace_preserving()) {
    Fail(ErrorCode::kPrecondition,
         "dobrushin estimate needs a trace-preserving channel");
  }
  if (channel.dim_in() == 1) return {0.0, "orthogonal-pair-search", 0};
  DobrushinEstimate est = channel.dim_in() == 2 ? SearchQubit(channel, search)
                                                : SearchGeneral(channel, search);
  if (search.full_search) {
    RandomStream rng = RandomStream(search.seed).Split(0xF011);
    const int d = channel.dim_in();
    for (int k = 0; k < search.random_pairs; ++k) {
      const ComplexMatrix a = RandomDensity(d, rng), b = RandomDensity(d, rng);
      const double in = TraceNorm(HermitianMatrix(a - b, 1e-9));
      if (in < 1e-6) continue;
      est.value = std::max(est.value, OutputDistance(channel, a, b) / in);
      ++est.evaluations;
    }
  }
  est.value = std::clamp(est.value, 0.0, 1.0);
  return est;
}

DobrushinEstimate EstimateDobrushin(const KrausChannel& channel,
                                    const DobrushinSearch& search) {
  if (channel.dim_in() == 2 && channel.dim_out() == 2 &&
      channel.trace_preserving()) {
    const BlochRep rep = ComputeBlochRep(channel);
    if (rep.unital) {
      return {std::clamp(OperatorNorm(rep.transfer.cast<Complex>()), 0.0, 1.0),
              "unital-transfer-norm", 0};
    }
  }
  return SearchDobrushin(channel, search);
}

DoeblinResult DoeblinCheck(const KrausChannel& channel, double gamma,
                           const HermitianMatrix& y, double tol) {
  Require(gamma >= 0.0 && gamma <= 1.0, "doeblin gamma outside [0, 1]");
  Require(y.dim() == channel.dim_out(),
          "doeblin Y dimension differs from channel output");
  Require(IsPsd(y, tol), "doeblin Y is not positive semidefinite");
  Require(y.matrix().trace().real() <= 1.0 + tol, "doeblin Y has trace > 1");
  const HermitianMatrix choi = Choi(channel);
  const ComplexMatrix minorant =
      gamma *
      Kron(ComplexMatrix::Identity(channel.dim_in(), channel.dim_in()),
           y.matrix());
  const double min_eig =
      HermitianMatrix(choi.matrix() - minorant, 1e-9).MinEigenvalue();
  return {min_eig >= -tol, min_eig};
}

double DoeblinToDobrushin(double gamma, double trace_y) {
  Require(gamma >= 0.0 && gamma <= 1.0, "doeblin gamma outside [0, 1]");
  return 1.0 - gamma * trace_y;
}

}  // namespace qdpamp
