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

#include "qdpamp/qdpamp.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>

#include "auditor.hpp"
#include "channels.hpp"
#include "encodings.hpp"
#include "error.hpp"
#include "json_io.hpp"
#include "linalg.hpp"
#include "mechanisms.hpp"
#include "model.hpp"
#include "privacy.hpp"
#include "random.hpp"

struct qdpa_dataset {
  qdpamp::Dataset value;
};

struct qdpa_channel {
  qdpamp::KrausChannel channel;
  qdpamp::ChannelSpec spec;
};

struct qdpa_povm {
  qdpamp::BinaryPovm value;
};

struct qdpa_stream {
  qdpamp::RandomStream value;
};

struct qdpa_model {
  qdpamp::MechanismModel value;
};

struct qdpa_report {
  qdpamp::AuditReport report;
  std::optional<qdpamp::MechanismModel> model;
  std::optional<qdpamp::KrausChannel> channel;
};

namespace {

using namespace qdpamp;

thread_local std::string g_last_error;

struct NullArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

qdpa_status ToStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kValidation:
      return QDPA_ERR_VALIDATION;
    case ErrorCode::kPrecondition:
      return QDPA_ERR_PRECONDITION;
    case ErrorCode::kInsufficientNeighborhood:
      return QDPA_ERR_INSUFFICIENT_NEIGHBORHOOD;
    case ErrorCode::kUnsupported:
      return QDPA_ERR_UNSUPPORTED;
    case ErrorCode::kResource:
      return QDPA_ERR_RESOURCE;
  }
  return QDPA_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <typename F>
qdpa_status Guard(F&& body) {
  g_last_error.clear();
  try {
    body();
    return QDPA_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return ToStatus(e.code());
  } catch (const NullArgument& e) {
    g_last_error = e.what();
    return QDPA_ERR_NULL_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return QDPA_ERR_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QDPA_ERR_INTERNAL;
  }
}

void NotNull(const void* p, const char* what) {
  if (p == nullptr) {
    throw NullArgument(std::string("null argument: ") + what);
  }
}

char* CopyString(const std::string& s) {
  char* out = new char[s.size() + 1];
  s.copy(out, s.size());
  out[s.size()] = '\0';
  return out;
}

ComplexMatrix ReadMatrix(const double* data, size_t rows, size_t cols) {
  ComplexMatrix m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) {
      const size_t k = 2 * (r * cols + c);
      m(r, c) = Complex(data[k], data[k + 1]);
    }
  }
  return m;
}

void WriteMatrix(const ComplexMatrix& m, double* out) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const size_t k = 2 * (r * m.cols() + c);
      out[k] = m(r, c).real();
      out[k + 1] = m(r, c).imag();
    }
  }
}

ComplexVector ReadVector(const double* data, size_t n) {
  ComplexVector v(n);
  for (size_t i = 0; i < n; ++i) v(i) = Complex(data[2 * i], data[2 * i + 1]);
  return v;
}

NoiseSpec ToNoise(qdpa_noise kind, double parameter) {
  switch (kind) {
    case QDPA_NOISE_NONE:
      return NoiseSpec::None();
    case QDPA_NOISE_LAPLACE:
      return NoiseSpec::Laplace(parameter);
    case QDPA_NOISE_GAUSSIAN:
      return NoiseSpec::Gaussian(parameter);
  }
  Fail(ErrorCode::kValidation, "unknown noise kind");
}

EncodingKind ToKind(qdpa_encoding kind) {
  switch (kind) {
    case QDPA_ENCODING_BASIS:
      return EncodingKind::kBasis;
    case QDPA_ENCODING_AMPLITUDE:
      return EncodingKind::kAmplitude;
    case QDPA_ENCODING_ROTATION:
      return EncodingKind::kRotation;
  }
  Fail(ErrorCode::kValidation, "unknown encoding");
}

qdpa_dp_params FromDp(const DpParams& dp) { return {dp.epsilon, dp.delta}; }

RatioSearch ToRatioSearch(const qdpa_qdp_search& s) {
  RatioSearch r;
  r.azimuth = s.azimuth;
  r.polar = s.polar;
  r.refine_iters = s.refine_iters;
  r.seed = s.seed;
  return r;
}

// Shared encoding for a dataset pair; basis widths widen to the larger one.
EncodingSpec PairSpec(const Dataset& x, const Dataset& y) {
  EncodingSpec spec = EncodingSpec::For(x);
  spec.bit_width = std::max(spec.bit_width, y.bit_width());
  return spec;
}

}  // namespace

extern "C" {

const char* qdpa_version(void) { return "1.0.0"; }

const char* qdpa_last_error(void) { return g_last_error.c_str(); }

const char* qdpa_status_name(qdpa_status status) {
  switch (status) {
    case QDPA_OK:
      return "ok";
    case QDPA_ERR_VALIDATION:
      return "validation_error";
    case QDPA_ERR_PRECONDITION:
      return "precondition_error";
    case QDPA_ERR_INSUFFICIENT_NEIGHBORHOOD:
      return "insufficient_neighborhood";
    case QDPA_ERR_UNSUPPORTED:
      return "unsupported";
    case QDPA_ERR_RESOURCE:
      return "resource_limit";
    case QDPA_ERR_NULL_ARGUMENT:
      return "null_argument";
    case QDPA_ERR_INTERNAL:
      return "internal_error";
  }
  return "unknown";
}

void qdpa_string_free(char* s) { delete[] s; }

// ---- linear algebra ----

qdpa_status qdpa_trace_distance(const double* a, const double* b, size_t dim,
                                double* out) {
  return Guard([&] {
    NotNull(a, "a");
    NotNull(b, "b");
    NotNull(out, "out");
    *out = TraceNorm(HermitianMatrix(ReadMatrix(a, dim, dim), tol::kInvariant) -
                     HermitianMatrix(ReadMatrix(b, dim, dim), tol::kInvariant));
  });
}

qdpa_status qdpa_pure_trace_distance(const double* psi, const double* phi,
                                     size_t dim, double* out) {
  return Guard([&] {
    NotNull(psi, "psi");
    NotNull(phi, "phi");
    NotNull(out, "out");
    const PureState a(ReadVector(psi, dim));
    const PureState b(ReadVector(phi, dim));
    *out = std::sqrt(std::max(0.0, 1.0 - std::norm(a.Overlap(b))));
  });
}

// ---- encodings ----

qdpa_status qdpa_dataset_from_json(const char* json, qdpa_dataset** out) {
  return Guard([&] {
    NotNull(json, "json");
    NotNull(out, "out");
    *out = new qdpa_dataset{json_io::ParseDataset(json_io::ParseText(json))};
  });
}

qdpa_status qdpa_dataset_to_json(const qdpa_dataset* x, char** out) {
  return Guard([&] {
    NotNull(x, "x");
    NotNull(out, "out");
    *out = CopyString(json_io::ToJson(x->value).dump());
  });
}

void qdpa_dataset_free(qdpa_dataset* x) { delete x; }

qdpa_status qdpa_dataset_info(const qdpa_dataset* x, qdpa_encoding* mode,
                              int* size, int* bit_width) {
  return Guard([&] {
    NotNull(x, "x");
    if (mode != nullptr) {
      switch (x->value.mode()) {
        case EncodingKind::kBasis:
          *mode = QDPA_ENCODING_BASIS;
          break;
        case EncodingKind::kAmplitude:
          *mode = QDPA_ENCODING_AMPLITUDE;
          break;
        case EncodingKind::kRotation:
          *mode = QDPA_ENCODING_ROTATION;
          break;
      }
    }
    if (size != nullptr) *size = x->value.size();
    if (bit_width != nullptr) *bit_width = x->value.bit_width();
  });
}

qdpa_status qdpa_encode(const qdpa_dataset* x, double* amplitudes,
                        size_t capacity, size_t* dim) {
  return Guard([&] {
    NotNull(x, "x");
    NotNull(dim, "dim");
    const PureState psi = Encode(x->value, EncodingSpec::For(x->value));
    *dim = static_cast<size_t>(psi.dim());
    if (capacity < *dim) {
      Fail(ErrorCode::kResource, "amplitude buffer too small");
    }
    NotNull(amplitudes, "amplitudes");
    WriteMatrix(psi.amplitudes(), amplitudes);
  });
}

qdpa_status qdpa_kernel(const qdpa_dataset* x, const qdpa_dataset* x_prime,
                        double* out) {
  return Guard([&] {
    NotNull(x, "x");
    NotNull(x_prime, "x_prime");
    NotNull(out, "out");
    *out = Kernel(x->value, x_prime->value, PairSpec(x->value, x_prime->value));
  });
}

qdpa_status qdpa_encoded_trace_distance(const qdpa_dataset* x,
                                        const qdpa_dataset* x_prime,
                                        double* out) {
  return Guard([&] {
    NotNull(x, "x");
    NotNull(x_prime, "x_prime");
    NotNull(out, "out");
    const EncodingSpec spec = PairSpec(x->value, x_prime->value);
    *out = TraceDistance(DensityMatrix(Encode(x->value, spec)),
                         DensityMatrix(Encode(x_prime->value, spec)));
  });
}

qdpa_status qdpa_are_neighbors(const qdpa_dataset* x,
                               const qdpa_dataset* x_prime, int* out) {
  return Guard([&] {
    NotNull(x, "x");
    NotNull(x_prime, "x_prime");
    NotNull(out, "out");
    *out = AreNeighbors(x->value, x_prime->value) ? 1 : 0;
  });
}

qdpa_status qdpa_gamma(const qdpa_dataset* x, double* out) {
  return Guard([&] {
    NotNull(x, "x");
    NotNull(out, "out");
    *out = Gamma(x->value);
  });
}

qdpa_status qdpa_min_adjacent_kernel(qdpa_encoding kind, int n, double gamma,
                                     double* out) {
  return Guard([&] {
    NotNull(out, "out");
    std::optional<double> g;
    if (!std::isnan(gamma)) g = gamma;
    *out = MinAdjacentKernel(ToKind(kind), n, g);
  });
}

// ---- privacy calculus ----

qdpa_status qdpa_encoding_adp_delta(double kappa_hat, qdpa_dp_params* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = FromDp(EncodingAdpDelta(kappa_hat));
  });
}

qdpa_status qdpa_quantum_to_classical(double tau, double epsilon, double delta,
                                      double kappa_hat, qdpa_dp_params* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = FromDp(
        QuantumToClassical(QdpParams::Make(tau, epsilon, delta), kappa_hat));
  });
}

qdpa_status qdpa_alg1_laplace_scale(double kappa_hat, double t, double epsilon,
                                    double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = Alg1LaplaceScale(kappa_hat, t, epsilon);
  });
}

qdpa_status qdpa_alg1_gaussian_sigma2(double kappa_hat, double t,
                                      double epsilon, double delta,
                                      double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = Alg1GaussianSigma2(kappa_hat, t, epsilon, delta);
  });
}

qdpa_status qdpa_alg1_failure_prob(int m, double t, double* printed,
                                   double* conservative) {
  return Guard([&] {
    const FailureProbability f = Alg1FailureProb(m, t);
    if (printed != nullptr) *printed = f.printed;
    if (conservative != nullptr) *conservative = f.conservative;
  });
}

qdpa_status qdpa_alg1_deviation_prob(int m, double t, double* printed,
                                     double* conservative) {
  return Guard([&] {
    const FailureProbability f = Alg1DeviationProb(m, t);
    if (printed != nullptr) *printed = f.printed;
    if (conservative != nullptr) *conservative = f.conservative;
  });
}

qdpa_status qdpa_subsample_amplify(qdpa_dp_params base, double gamma, int m,
                                   qdpa_dp_params* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = FromDp(
        SubsampleAmplify(DpParams::Make(base.epsilon, base.delta), gamma, m));
  });
}

qdpa_status qdpa_subsample_adp(double gamma, int m, qdpa_dp_params* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = FromDp(SubsampleAdp(gamma, m));
  });
}

qdpa_status qdpa_qpp_amplify(qdpa_eps_curve curve, void* user, double gamma,
                             double tau, double* epsilon) {
  return Guard([&] {
    NotNull(reinterpret_cast<const void*>(curve), "curve");
    NotNull(epsilon, "epsilon");
    *epsilon =
        QppAmplify([&](double d) { return curve(d, user); }, gamma, tau)
            .epsilon;
  });
}

qdpa_status qdpa_eps_depolarizing(double p, double d, int dim, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = EpsDepolarizing(p, d, dim);
  });
}

qdpa_status qdpa_eps_pad(double gamma, double lambda, double d, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = EpsPad(gamma, lambda, d);
  });
}

qdpa_status qdpa_eps_unital_dobrushin(double gamma, double d, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = EpsUnitalDobrushin(gamma, d);
  });
}

qdpa_status qdpa_eps_pad_dep(double p, double gamma, double lambda, double d,
                             double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = EpsPadDep(p, gamma, lambda, d);
  });
}

// ---- channels ----

qdpa_status qdpa_channel_from_json(const char* json, double tol,
                                   qdpa_channel** out) {
  return Guard([&] {
    NotNull(json, "json");
    NotNull(out, "out");
    // Accept bare shorthand words as well as JSON documents.
    const std::string text(json);
    json_io::Json j = (!text.empty() && text.front() != '{' &&
                       text.front() != '"' && text.front() != '[')
                          ? json_io::Json(text)
                          : json_io::ParseText(text);
    ChannelSpec spec = json_io::ParseChannelSpec(j);
    KrausChannel ch = BuildChannel(spec);
    if (tol > 0) {
      ValidateKraus(ch.kraus_ops(), ch.trace_preserving(), tol);
    }
    *out = new qdpa_channel{std::move(ch), std::move(spec)};
  });
}

qdpa_status qdpa_channel_to_json(const qdpa_channel* ch, char** out) {
  return Guard([&] {
    NotNull(ch, "ch");
    NotNull(out, "out");
    *out = CopyString(json_io::ToJson(ch->spec).dump());
  });
}

void qdpa_channel_free(qdpa_channel* ch) { delete ch; }

qdpa_status qdpa_channel_compose(const qdpa_channel* outer,
                                 const qdpa_channel* inner,
                                 qdpa_channel** out) {
  return Guard([&] {
    NotNull(outer, "outer");
    NotNull(inner, "inner");
    NotNull(out, "out");
    *out = new qdpa_channel{Compose(outer->channel, inner->channel),
                            ChannelSpec::MakeCompose(outer->spec, inner->spec)};
  });
}

qdpa_status qdpa_channel_info(const qdpa_channel* ch, int* dim_in,
                              int* dim_out, int* trace_preserving,
                              int* kraus_count) {
  return Guard([&] {
    NotNull(ch, "ch");
    if (dim_in != nullptr) *dim_in = ch->channel.dim_in();
    if (dim_out != nullptr) *dim_out = ch->channel.dim_out();
    if (trace_preserving != nullptr) {
      *trace_preserving = ch->channel.trace_preserving() ? 1 : 0;
    }
    if (kraus_count != nullptr) {
      *kraus_count = static_cast<int>(ch->channel.kraus_ops().size());
    }
  });
}

qdpa_status qdpa_channel_kraus(const qdpa_channel* ch, int k, double* out) {
  return Guard([&] {
    NotNull(ch, "ch");
    NotNull(out, "out");
    const auto& ops = ch->channel.kraus_ops();
    Require(k >= 0 && k < static_cast<int>(ops.size()),
            "Kraus index out of range");
    WriteMatrix(ops[k], out);
  });
}

qdpa_status qdpa_channel_apply(const qdpa_channel* ch, const double* rho,
                               double* out) {
  return Guard([&] {
    NotNull(ch, "ch");
    NotNull(rho, "rho");
    NotNull(out, "out");
    const int d = ch->channel.dim_in();
    const DensityMatrix in(ReadMatrix(rho, d, d));
    WriteMatrix(Apply(ch->channel, in).matrix(), out);
  });
}

qdpa_status qdpa_channel_bloch(const qdpa_channel* ch, double transfer[9],
                               double shift[3], int* unital) {
  return Guard([&] {
    NotNull(ch, "ch");
    const BlochRep rep = ComputeBlochRep(ch->channel);
    if (transfer != nullptr) {
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) transfer[3 * r + c] = rep.transfer(r, c);
      }
    }
    if (shift != nullptr) {
      for (int i = 0; i < 3; ++i) shift[i] = rep.shift(i);
    }
    if (unital != nullptr) *unital = rep.unital ? 1 : 0;
  });
}

void qdpa_dobrushin_search_default(qdpa_dobrushin_search* search) {
  if (search == nullptr) return;
  const DobrushinSearch d;
  *search = {d.azimuth,      d.polar, d.refine_iters, d.full_search ? 1 : 0,
             d.random_pairs, d.seed};
}

qdpa_status qdpa_channel_dobrushin(const qdpa_channel* ch,
                                   const qdpa_dobrushin_search* search,
                                   int force_search, double* value,
                                   const char** method, int* evaluations) {
  return Guard([&] {
    NotNull(ch, "ch");
    NotNull(value, "value");
    DobrushinSearch s;
    if (search != nullptr) {
      s.azimuth = search->azimuth;
      s.polar = search->polar;
      s.refine_iters = search->refine_iters;
      s.full_search = search->full_search != 0;
      s.random_pairs = search->random_pairs;
      s.seed = search->seed;
    }
    const DobrushinEstimate est = force_search
                                      ? SearchDobrushin(ch->channel, s)
                                      : EstimateDobrushin(ch->channel, s);
    *value = est.value;
    if (method != nullptr) {
      *method = est.method == "unital-transfer-norm" ? "unital-transfer-norm"
                                                     : "orthogonal-pair-search";
    }
    if (evaluations != nullptr) *evaluations = est.evaluations;
  });
}

qdpa_status qdpa_channel_doeblin_check(const qdpa_channel* ch, double gamma,
                                       const double* y, double tol,
                                       int* holds, double* min_eigenvalue) {
  return Guard([&] {
    NotNull(ch, "ch");
    const int d = ch->channel.dim_out();
    const HermitianMatrix ym =
        y == nullptr ? HermitianMatrix(ComplexMatrix::Identity(d, d) / double(d))
                     : HermitianMatrix(ReadMatrix(y, d, d), tol::kInvariant);
    const DoeblinResult r =
        DoeblinCheck(ch->channel, gamma, ym, tol > 0 ? tol : tol::kInvariant);
    if (holds != nullptr) *holds = r.holds ? 1 : 0;
    if (min_eigenvalue != nullptr) *min_eigenvalue = r.min_eigenvalue;
  });
}

qdpa_status qdpa_doeblin_to_dobrushin(double gamma, double trace_y,
                                      double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = DoeblinToDobrushin(gamma, trace_y);
  });
}

// ---- mechanisms ----

qdpa_status qdpa_stream_create(uint64_t seed, qdpa_stream** out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = new qdpa_stream{RandomStream(seed)};
  });
}

qdpa_status qdpa_stream_split(const qdpa_stream* parent, uint64_t stream_id,
                              qdpa_stream** out) {
  return Guard([&] {
    NotNull(parent, "parent");
    NotNull(out, "out");
    *out = new qdpa_stream{parent->value.Split(stream_id)};
  });
}

void qdpa_stream_free(qdpa_stream* s) { delete s; }

qdpa_status qdpa_stream_uniform(qdpa_stream* s, double* out) {
  return Guard([&] {
    NotNull(s, "s");
    NotNull(out, "out");
    *out = s->value.NextUniform();
  });
}

qdpa_status qdpa_sample_noise(qdpa_noise kind, double parameter,
                              qdpa_stream* s, double* out) {
  return Guard([&] {
    NotNull(s, "s");
    NotNull(out, "out");
    *out = SampleNoise(ToNoise(kind, parameter), s->value);
  });
}

qdpa_status qdpa_laplace_worst_case_ratio(double scale, double sensitivity,
                                          double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = LaplaceWorstCaseRatio(scale, sensitivity);
  });
}

qdpa_status qdpa_gaussian_variance(double sensitivity, double epsilon,
                                   double delta, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = GaussianVariance(sensitivity, epsilon, delta);
  });
}

qdpa_status qdpa_randomized_response(const int* bits, size_t n, double epsilon,
                                     double delta, qdpa_stream* s, int* out) {
  return Guard([&] {
    NotNull(s, "s");
    if (n > 0) {
      NotNull(bits, "bits");
      NotNull(out, "out");
    }
    const std::vector<int> in(bits, bits + n);
    const std::vector<int> res = RandomizedResponse(in, epsilon, delta, s->value);
    std::copy(res.begin(), res.end(), out);
  });
}

qdpa_status qdpa_l2_sample(const qdpa_dataset* x, int m, qdpa_stream* s,
                           int* out) {
  return Guard([&] {
    NotNull(x, "x");
    NotNull(s, "s");
    NotNull(out, "out");
    const std::vector<int> idx = L2Sample(x->value, m, s->value);
    std::copy(idx.begin(), idx.end(), out);
  });
}

qdpa_status qdpa_povm_from_json(const char* json, qdpa_povm** out) {
  return Guard([&] {
    NotNull(json, "json");
    NotNull(out, "out");
    *out = new qdpa_povm{
        BinaryPovm(json_io::ParsePovm(json_io::ParseText(json)))};
  });
}

qdpa_status qdpa_povm_basis_projector(int dim, int index, qdpa_povm** out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = new qdpa_povm{BinaryPovm::BasisProjector(dim, index)};
  });
}

void qdpa_povm_free(qdpa_povm* povm) { delete povm; }

qdpa_status qdpa_povm_accept_probability(const qdpa_povm* povm,
                                         const qdpa_dataset* x, double* out) {
  return Guard([&] {
    NotNull(povm, "povm");
    NotNull(x, "x");
    NotNull(out, "out");
    *out = povm->value.AcceptProbability(
        Encode(x->value, EncodingSpec::For(x->value)));
  });
}

qdpa_status qdpa_run_alg1(const qdpa_dataset* x, const qdpa_povm* povm, int m,
                          qdpa_noise noise, double parameter, qdpa_stream* s,
                          double* out) {
  return Guard([&] {
    NotNull(x, "x");
    NotNull(povm, "povm");
    NotNull(s, "s");
    NotNull(out, "out");
    *out = RunAlg1(x->value, EncodingSpec::For(x->value), povm->value, m,
                   ToNoise(noise, parameter), s->value);
  });
}

// ---- auditor ----

qdpa_status qdpa_model_from_json(const char* json, qdpa_model** out) {
  return Guard([&] {
    NotNull(json, "json");
    NotNull(out, "out");
    *out = new qdpa_model{json_io::ParseModel(json_io::ParseText(json))};
  });
}

qdpa_status qdpa_model_to_json(const qdpa_model* model, char** out) {
  return Guard([&] {
    NotNull(model, "model");
    NotNull(out, "out");
    *out = CopyString(json_io::ToJson(model->value).dump());
  });
}

void qdpa_model_free(qdpa_model* model) { delete model; }

qdpa_status qdpa_model_randomized_response(int m, double epsilon, double delta,
                                           qdpa_model** out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = new qdpa_model{RandomizedResponseTupleModel(m, epsilon, delta)};
  });
}

qdpa_status qdpa_model_subsampled(const qdpa_dataset* x,
                                  const qdpa_model* base, int m,
                                  qdpa_model** out) {
  return Guard([&] {
    NotNull(x, "x");
    NotNull(base, "base");
    NotNull(out, "out");
    *out = new qdpa_model{SubsampledModel(x->value, base->value, m)};
  });
}

qdpa_status qdpa_hockey_stick(const double* p, const double* q, size_t n,
                              double epsilon, double* out) {
  return Guard([&] {
    NotNull(p, "p");
    NotNull(q, "q");
    NotNull(out, "out");
    *out = HockeyStick(std::vector<double>(p, p + n),
                       std::vector<double>(q, q + n), epsilon);
  });
}

qdpa_status qdpa_audit_classical(const qdpa_model* model,
                                 qdpa_dp_params claimed, qdpa_report** out) {
  return Guard([&] {
    NotNull(model, "model");
    NotNull(out, "out");
    AuditReport r = AuditClassical(
        model->value, DpParams::Make(claimed.epsilon, claimed.delta));
    *out = new qdpa_report{std::move(r), model->value, std::nullopt};
  });
}

qdpa_status qdpa_audit_subsampling(const qdpa_dataset* x,
                                   const qdpa_model* base, int m,
                                   qdpa_dp_params base_claim,
                                   qdpa_dp_params* bound, qdpa_report** out) {
  return Guard([&] {
    NotNull(x, "x");
    NotNull(base, "base");
    NotNull(out, "out");
    SubsamplingAudit a = AuditSubsamplingTheorem(
        x->value, base->value, m,
        DpParams::Make(base_claim.epsilon, base_claim.delta));
    if (bound != nullptr) *bound = FromDp(a.bound);
    *out = new qdpa_report{std::move(a.report),
                           SubsampledModel(x->value, base->value, m),
                           std::nullopt};
  });
}

void qdpa_qdp_search_default(qdpa_qdp_search* search) {
  if (search == nullptr) return;
  const QdpAuditSearch d;
  *search = {d.projector.azimuth,   d.projector.polar, d.projector.refine_iters,
             d.pairs,               d.pair_refine_iters, d.refined_pairs,
             d.seed};
}

qdpa_status qdpa_audit_channel_qdp(const qdpa_channel* ch, double tau,
                                   double claimed_epsilon,
                                   const qdpa_qdp_search* search,
                                   qdpa_report** out) {
  return Guard([&] {
    NotNull(ch, "ch");
    NotNull(out, "out");
    QdpAuditSearch s;
    if (search != nullptr) {
      s.projector = ToRatioSearch(*search);
      s.pairs = search->pairs;
      s.pair_refine_iters = search->pair_refine_iters;
      s.refined_pairs = search->refined_pairs;
      s.seed = search->seed;
    }
    AuditReport r = AuditChannelQdp(ch->channel, tau, claimed_epsilon, s);
    *out = new qdpa_report{std::move(r), std::nullopt, ch->channel};
  });
}

qdpa_status qdpa_measurement_ratio(const double* a, const double* b,
                                   size_t dim, const qdpa_qdp_search* search,
                                   double* ratio) {
  return Guard([&] {
    NotNull(a, "a");
    NotNull(b, "b");
    NotNull(ratio, "ratio");
    RatioSearch s;
    if (search != nullptr) s = ToRatioSearch(*search);
    *ratio = WorstCaseMeasurementRatio(DensityMatrix(ReadMatrix(a, dim, dim)),
                                       DensityMatrix(ReadMatrix(b, dim, dim)),
                                       s)
                 .ratio;
  });
}

qdpa_status qdpa_max_generalized_eigenvalue(const double* a, const double* b,
                                            size_t dim, double* out) {
  return Guard([&] {
    NotNull(a, "a");
    NotNull(b, "b");
    NotNull(out, "out");
    *out = MaxGeneralizedEigenvalue(
        HermitianMatrix(ReadMatrix(a, dim, dim), tol::kInvariant),
        HermitianMatrix(ReadMatrix(b, dim, dim), tol::kInvariant));
  });
}

qdpa_status qdpa_report_summary(const qdpa_report* report, double* eps_hat,
                                double* delta_hat, int* satisfied) {
  return Guard([&] {
    NotNull(report, "report");
    if (eps_hat != nullptr) *eps_hat = report->report.eps_hat;
    if (delta_hat != nullptr) *delta_hat = report->report.delta_hat;
    if (satisfied != nullptr) *satisfied = report->report.satisfied ? 1 : 0;
  });
}

qdpa_status qdpa_report_recheck(const qdpa_report* report, double* value) {
  return Guard([&] {
    NotNull(report, "report");
    NotNull(value, "value");
    const AuditReport& r = report->report;
    if (r.classical_witness && report->model) {
      *value = WitnessEpsilon(*report->model, *r.classical_witness);
    } else if (r.quantum_witness && report->channel) {
      *value = std::log(WitnessRatio(*report->channel, *r.quantum_witness));
    } else {
      Fail(ErrorCode::kPrecondition, "report carries no witness");
    }
  });
}

qdpa_status qdpa_report_to_json(const qdpa_report* report, char** out) {
  return Guard([&] {
    NotNull(report, "report");
    NotNull(out, "out");
    *out = CopyString(json_io::ToJson(report->report).dump());
  });
}

void qdpa_report_free(qdpa_report* report) { delete report; }

}  // extern "C"
