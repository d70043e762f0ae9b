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

#include "auditor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "error.hpp"
#include "mechanisms.hpp"
#include "random.hpp"

namespace qdpamp {

namespace {

constexpr double kZeroDenominator = 1e-14;
constexpr double kPositiveNumerator = 1e-10;
constexpr double kInf = std::numeric_limits<double>::infinity();

void ValidateDistribution(const std::vector<double>& v) {
  double sum = 0;
  for (double x : v) {
    Require(std::isfinite(x) && x >= -1e-12, "invalid probability entry");
    sum += x;
  }
  Require(std::abs(sum - 1.0) <= 1e-9, "probability vector does not sum to 1");
}

// Likelihood ratio num/den with the conventions used by every search below:
// a vanishing denominator is infinite when the numerator is positive and
// uninformative (0) when both vanish.
double Ratio(double num, double den) {
  if (den <= kZeroDenominator) return num > kPositiveNumerator ? kInf : 0.0;
  return num / den;
}

Eigen::Vector3d Direction(double polar, double azimuth) {
  return {std::sin(polar) * std::cos(azimuth),
          std::sin(polar) * std::sin(azimuth), std::cos(polar)};
}

ComplexVector QubitKet(const Eigen::Vector3d& n) {
  const double polar = std::acos(std::clamp(n.z() / n.norm(), -1.0, 1.0));
  const double azimuth = std::atan2(n.y(), n.x());
  ComplexVector v(2);
  v << std::cos(polar / 2), std::polar(std::sin(polar / 2), azimuth);
  return v;
}

Eigen::Vector3d RandomDirection(RandomStream& rng) {
  const double z = 2.0 * rng.NextUniform() - 1.0;
  const double phi = 2.0 * std::numbers::pi * rng.NextUniform();
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

Eigen::Vector3d RandomGaussian3(RandomStream& rng) {
  Eigen::Vector3d g;
  for (int k = 0; k < 3; ++k) {
    g(k) = std::sqrt(-2.0 * std::log(rng.NextUniform())) *
           std::cos(2.0 * std::numbers::pi * rng.NextUniform());
  }
  return g;
}

Eigen::Vector3d ClipToBall(Eigen::Vector3d r) {
  const double n = r.norm();
  return n > 1.0 ? Eigen::Vector3d(r / n) : r;
}

struct QubitRatio {
  double ratio = 1.0;
  std::optional<Eigen::Vector3d> direction;  // empty: identity projector
  long evaluations = 0;
};

// Projector search on output Bloch vectors a (numerator) and b.
QubitRatio SearchQubitRatio(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                            const RatioSearch& s) {
  QubitRatio best;  // identity: ratio 1
  auto eval = [&](const Eigen::Vector3d& n) {
    ++best.evaluations;
    return Ratio(0.5 * (1.0 + n.dot(a)), 0.5 * (1.0 + n.dot(b)));
  };
  auto offer = [&](const Eigen::Vector3d& n) {
    const double r = eval(n);
    if (r > best.ratio) {
      best.ratio = r;
      best.direction = n;
    }
    return r;
  };

  const int np = std::max(2, s.polar), na = std::max(1, s.azimuth);
  const double dpolar = std::numbers::pi / (np - 1);
  const double dazim = 2.0 * std::numbers::pi / na;
  double best_p = 0, best_a = 0, grid_best = -1;
  for (int ip = 0; ip < np; ++ip) {
    for (int ia = 0; ia < na; ++ia) {
      const double p = ip * dpolar, az = ia * dazim;
      const double r = offer(Direction(p, az));
      if (r > grid_best) {
        grid_best = r;
        best_p = p;
        best_a = az;
      }
      if (std::isinf(best.ratio)) return best;
    }
  }
  // Eigen-directions of the denominator state.
  if (b.norm() > 1e-12) {
    offer(-b.normalized());
    offer(b.normalized());
    if (std::isinf(best.ratio)) return best;
  }
  // Alternate golden-section line searches around the best grid cell.
  const double g = (std::sqrt(5.0) - 1) / 2;
  double half_p = dpolar, half_a = dazim;
  for (int it = 0; it < s.refine_iters; ++it) {
    for (int axis = 0; axis < 2; ++axis) {
      const double center = axis == 0 ? best_p : best_a;
      const double half = axis == 0 ? half_p : half_a;
      auto f = [&](double x) {
        const Eigen::Vector3d n =
            axis == 0 ? Direction(x, best_a) : Direction(best_p, x);
        return offer(n);
      };
      double lo = center - half, hi = center + half;
      double c = hi - g * (hi - lo), d = lo + g * (hi - lo);
      double fc = f(c), fd = f(d);
      for (int k = 0; k < 12; ++k) {
        if (fc >= fd) {
          hi = d;
          d = c;
          fd = fc;
          c = hi - g * (hi - lo);
          fc = f(c);
        } else {
          lo = c;
          c = d;
          fc = fd;
          d = lo + g * (hi - lo);
          fd = f(d);
        }
      }
      const double x = fc >= fd ? c : d;
      if (std::max(fc, fd) >= grid_best) {
        grid_best = std::max(fc, fd);
        (axis == 0 ? best_p : best_a) = x;
      }
      if (std::isinf(best.ratio)) return best;
    }
    half_p *= 0.5;
    half_a *= 0.5;
  }
  return best;
}

ComplexVector RandomKet(int dim, RandomStream& rng) {
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) {
    const double r = std::sqrt(-2.0 * std::log(rng.NextUniform()));
    const double th = 2 * std::numbers::pi * rng.NextUniform();
    v(i) = std::polar(r, th);
  }
  return v / v.norm();
}

MeasurementRatio SearchGeneralRatio(const DensityMatrix& a,
                                    const DensityMatrix& b,
                                    const RatioSearch& s) {
  MeasurementRatio best;
  const int d = a.dim();
  auto offer = [&](const ComplexVector& v) {
    ++best.evaluations;
    const double r = Ratio(v.dot(a.matrix() * v).real(),
                           v.dot(b.matrix() * v).real());
    if (r > best.ratio) {
      best.ratio = r;
      best.direction = v;
    }
  };
  for (int i = 0; i < d; ++i) {
    ComplexVector e = ComplexVector::Zero(d);
    e(i) = 1.0;
    offer(e);
  }
  for (const auto* m : {&b, &a}) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m->matrix());
    for (int i = 0; i < d; ++i) offer(es.eigenvectors().col(i));
  }
  RandomStream rng = RandomStream(s.seed).Split(0xAA71);
  for (int k = 0; k < s.samples && !std::isinf(best.ratio); ++k) {
    offer(RandomKet(d, rng));
  }
  double step = 0.2;
  for (int it = 0; it < s.refine_iters && !std::isinf(best.ratio) &&
                   best.direction.size() > 0;
       ++it) {
    for (int trial = 0; trial < 24; ++trial) {
      ComplexVector v = best.direction + step * RandomKet(d, rng);
      offer(v / v.norm());
    }
    step *= 0.6;
  }
  return best;
}

struct PairCandidate {
  Eigen::Vector3d rho;
  Eigen::Vector3d sigma;
  double ratio = 0;
};

// Deterministic direction set: the six axis points, then a Fibonacci sphere.
std::vector<Eigen::Vector3d> PairDirections(int count) {
  std::vector<Eigen::Vector3d> dirs = {{0, 0, 1}, {0, 0, -1}, {1, 0, 0},
                                       {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    dirs.push_back({r * std::cos(golden * i), r * std::sin(golden * i), z});
  }
  return dirs;
}

}  // namespace

double HockeyStick(const std::vector<double>& p, const std::vector<double>& q,
                   double eps) {
  Require(p.size() == q.size() && !p.empty(),
          "hockey-stick needs equal-length, non-empty vectors");
  Require(!std::isnan(eps) && eps >= 0.0, "epsilon must be >= 0");
  ValidateDistribution(p);
  ValidateDistribution(q);
  double total = 0;
  if (IsInfiniteEpsilon(eps)) {
    for (size_t o = 0; o < p.size(); ++o) {
      if (q[o] <= 0.0) total += std::max(p[o], 0.0);
    }
  } else {
    const double scale = std::exp(eps);
    for (size_t o = 0; o < p.size(); ++o) {
      total += std::max(p[o] - scale * q[o], 0.0);
    }
  }
  return std::clamp(total, 0.0, 1.0);
}

AuditReport AuditClassical(const MechanismModel& model,
                           const DpParams& claimed) {
  model.Validate();
  AuditReport report;
  report.claimed = claimed;
  double best_log = -kInf;
  for (const auto& [i, j] : model.neighbor_pairs) {
    for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
      const auto& p = model.dist[a];
      const auto& q = model.dist[b];
      for (size_t o = 0; o < p.size(); ++o) {
        if (p[o] <= 0.0) continue;
        const double lr = q[o] <= 0.0 ? kInf : std::log(p[o] / q[o]);
        if (lr > best_log) {
          best_log = lr;
          report.classical_witness = ClassicalWitness{
              model.inputs[a], model.inputs[b], model.outcomes[o], p[o], q[o]};
        }
      }
      report.delta_hat =
          std::max(report.delta_hat, HockeyStick(p, q, claimed.epsilon));
    }
  }
  report.eps_hat = std::max(0.0, best_log);
  report.satisfied = report.delta_hat <= claimed.delta + 1e-12;
  return report;
}

double WitnessEpsilon(const MechanismModel& model, const ClassicalWitness& w) {
  const int a = model.InputIndex(w.input);
  const int b = model.InputIndex(w.neighbor);
  const auto it =
      std::find(model.outcomes.begin(), model.outcomes.end(), w.outcome);
  Require(it != model.outcomes.end(), "witness outcome not in model");
  const size_t o = static_cast<size_t>(it - model.outcomes.begin());
  const double p = model.dist[a][o], q = model.dist[b][o];
  if (q <= 0.0) return p > 0.0 ? kInf : 0.0;
  return std::max(0.0, std::log(p / q));
}

MeasurementRatio WorstCaseMeasurementRatio(const DensityMatrix& a,
                                           const DensityMatrix& b,
                                           const RatioSearch& search) {
  Require(a.dim() == b.dim(), "measurement ratio needs equal dimensions");
  if (a.dim() > 4) {
    Fail(ErrorCode::kUnsupported, "measurement ratio search supports d <= 4");
  }
  if (a.dim() == 2) {
    const QubitRatio q =
        SearchQubitRatio(BlochVector(a.matrix()), BlochVector(b.matrix()),
                         search);
    MeasurementRatio out;
    out.ratio = q.ratio;
    out.evaluations = q.evaluations;
    if (q.direction) out.direction = QubitKet(*q.direction);
    return out;
  }
  return SearchGeneralRatio(a, b, search);
}

double WitnessRatio(const KrausChannel& channel, const QuantumWitness& w) {
  const ComplexMatrix out_rho = ApplyToOperator(channel, w.rho);
  const ComplexMatrix out_sigma = ApplyToOperator(channel, w.sigma);
  const double num = (w.projector * out_rho).trace().real();
  const double den = (w.projector * out_sigma).trace().real();
  return Ratio(num, den);
}

AuditReport AuditChannelQdp(const KrausChannel& channel, double tau,
                            double claimed_eps,
                            const QdpAuditSearch& search) {
  Require(tau >= 0.0 && tau <= 1.0, "tau outside [0, 1]");
  Require(!std::isnan(claimed_eps) && claimed_eps >= 0.0,
          "claimed epsilon must be >= 0");
  if (channel.dim_in() != 2 || channel.dim_out() != 2) {
    Fail(ErrorCode::kUnsupported, "channel QDP audit supports qubits only");
  }
  if (!channel.trace_preserving()) {
    Fail(ErrorCode::kPrecondition, "channel QDP audit needs a channel");
  }
  const BlochRep rep = ComputeBlochRep(channel);
  RandomStream rng = RandomStream(search.seed).Split(0x9D9);
  long evaluations = 0;

  // Coarse projector search for screening pairs.
  RatioSearch coarse = search.projector;
  coarse.azimuth = std::max(8, search.projector.azimuth / 4);
  coarse.polar = std::max(4, search.projector.polar / 4);
  coarse.refine_iters = std::max(4, search.projector.refine_iters / 2);

  auto score = [&](const Eigen::Vector3d& r, const Eigen::Vector3d& s,
                   const RatioSearch& rs) {
    const QubitRatio q = SearchQubitRatio(rep.Map(r), rep.Map(s), rs);
    evaluations += q.evaluations;
    return q;
  };

  const double max_gap = 2.0 * tau;  // Bloch distance = 2 * trace distance
  std::vector<PairCandidate> pool;
  auto consider = [&](const Eigen::Vector3d& r, const Eigen::Vector3d& s) {
    if ((r - s).norm() > max_gap + 1e-12) return;
    if (r.norm() > 1.0 + 1e-12 || s.norm() > 1.0 + 1e-12) return;
    pool.push_back({r, s, score(r, s, coarse).ratio});
  };
  // Both orders of every pair.
  auto consider_both = [&](const Eigen::Vector3d& r, const Eigen::Vector3d& s) {
    consider(r, s);
    consider(s, r);
  };

  const auto dirs = PairDirections(search.pairs);
  for (const auto& u : dirs) {
    // Antipodal pure pair contracted symmetrically onto the tau boundary.
    consider_both(tau * u, -tau * u);
    // One endpoint pure, the other moved toward the antipode.
    consider_both(u, (1.0 - 2.0 * tau) * u);
    // A random pure partner.
    const Eigen::Vector3d v = RandomDirection(rng);
    const double gap = (v - u).norm();
    if (gap > 1e-9) {
      const Eigen::Vector3d step = (v - u) / gap;
      if (gap >= max_gap) {
        consider_both(u, u + max_gap * step);
        const Eigen::Vector3d mid = 0.5 * (u + v);
        consider_both(mid + tau * step, mid - tau * step);
      } else {
        consider_both(u, v);
      }
    }
    // Random interior pair.
    const Eigen::Vector3d s = ClipToBall(RandomGaussian3(rng) * 0.6);
    const Eigen::Vector3d w = RandomDirection(rng);
    const Eigen::Vector3d r = ClipToBall(s + max_gap * rng.NextUniform() * w);
    consider_both(r, s);
  }
  Require(!pool.empty(), "no admissible state pairs were generated");

  // Stable order keeps the earliest candidate among ties.
  std::stable_sort(pool.begin(), pool.end(),
                   [](const auto& x, const auto& y) { return x.ratio > y.ratio; });
  const int keep = std::min<int>(search.refined_pairs, pool.size());
  PairCandidate best = pool.front();
  for (int k = 0; k < keep; ++k) {
    PairCandidate cur = pool[k];
    double step = 0.1;
    for (int it = 0; it < search.pair_refine_iters && !std::isinf(cur.ratio);
         ++it) {
      Eigen::Vector3d s = ClipToBall(cur.sigma + step * RandomGaussian3(rng));
      Eigen::Vector3d r = ClipToBall(cur.rho + step * RandomGaussian3(rng));
      const double gap = (r - s).norm();
      if (gap > max_gap) r = s + (r - s) * (max_gap / gap);
      const double ratio = score(r, s, coarse).ratio;
      if (ratio > cur.ratio) cur = {r, s, ratio};
      step *= 0.98;
    }
    if (cur.ratio > best.ratio) best = cur;
  }

  // Full-resolution projector search on the winning pair.
  const QubitRatio final_ratio = score(best.rho, best.sigma, search.projector);

  AuditReport report;
  report.claimed = {claimed_eps, 0.0};
  report.one_sided = true;
  QuantumWitness w;
  w.rho = BlochState(best.rho).matrix();
  w.sigma = BlochState(best.sigma).matrix();
  if (final_ratio.direction) {
    const ComplexVector v = QubitKet(*final_ratio.direction);
    w.projector = v * v.adjoint();
  } else {
    w.projector = ComplexMatrix::Identity(2, 2);
  }
  w.accept_rho =
      (w.projector * ApplyToOperator(channel, w.rho)).trace().real();
  w.accept_sigma =
      (w.projector * ApplyToOperator(channel, w.sigma)).trace().real();
  w.trace_distance = TraceDistance(DensityMatrix(w.rho), DensityMatrix(w.sigma));

  const double ratio = WitnessRatio(channel, w);
  report.eps_hat = ratio >= 1.0 ? std::log(ratio) : 0.0;
  if (IsInfiniteEpsilon(claimed_eps)) {
    report.delta_hat = w.accept_sigma <= kZeroDenominator ? w.accept_rho : 0.0;
  } else {
    report.delta_hat = std::clamp(
        w.accept_rho - std::exp(claimed_eps) * w.accept_sigma, 0.0, 1.0);
  }
  report.satisfied = report.eps_hat <= claimed_eps + 1e-6;
  report.quantum_witness = std::move(w);
  report.search = AuditSearchInfo{search.projector.azimuth,
                                  search.projector.polar,
                                  static_cast<int>(pool.size()), evaluations,
                                  search.seed};
  return report;
}

SubsamplingAudit AuditSubsamplingTheorem(const Dataset& x,
                                         const MechanismModel& base, int m,
                                         const DpParams& base_claim) {
  SubsamplingAudit out;
  out.gamma = Gamma(x);
  out.bound = SubsampleAmplify(base_claim, out.gamma, m);
  const MechanismModel composed = SubsampledModel(x, base, m);
  out.report = AuditClassical(composed, out.bound);
  return out;
}

MechanismModel MeasurementModel(const std::vector<Dataset>& datasets,
                                const EncodingSpec& spec, const Povm& povm) {
  Require(!datasets.empty(), "measurement model needs datasets");
  MechanismModel model;
  for (size_t k = 0; k < povm.outcome_labels.size(); ++k) {
    model.outcomes.push_back(std::to_string(povm.outcome_labels[k]));
  }
  for (size_t i = 0; i < datasets.size(); ++i) {
    model.inputs.push_back("x" + std::to_string(i));
    const PureState psi = Encode(datasets[i], spec);
    std::vector<double> row;
    double sum = 0;
    for (const auto& e : povm.elements) {
      Require(e.dim() == psi.dim(), "POVM dimension differs from encoding");
      const double p = std::clamp(
          psi.amplitudes().dot(e.matrix() * psi.amplitudes()).real(), 0.0, 1.0);
      row.push_back(p);
      sum += p;
    }
    for (double& p : row) p /= sum;
    model.dist.push_back(std::move(row));
  }
  for (size_t i = 0; i < datasets.size(); ++i) {
    for (size_t j = i + 1; j < datasets.size(); ++j) {
      if (AreNeighbors(datasets[i], datasets[j])) {
        model.neighbor_pairs.emplace_back(int(i), int(j));
      }
    }
  }
  return model;
}

}  // namespace qdpamp
