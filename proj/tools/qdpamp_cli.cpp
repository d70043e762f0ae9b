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

// Command-line front end. Links only the C interface.

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "emit.hpp"
#include "qdpamp/qdpamp.h"

namespace qdpamp_cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitViolation = 2;
constexpr int kExitUnsupported = 3;

// A failing library call or a CLI-level validation failure.
struct Failure {
  qdpa_status status;
  std::string message;
};

void Check(qdpa_status status) {
  if (status != QDPA_OK) throw Failure{status, qdpa_last_error()};
}

[[noreturn]] void Invalid(const std::string& message) {
  throw Failure{QDPA_ERR_VALIDATION, message};
}

int ExitCodeFor(qdpa_status status) {
  switch (status) {
    case QDPA_OK:
      return kExitOk;
    case QDPA_ERR_UNSUPPORTED:
    case QDPA_ERR_RESOURCE:
      return kExitUnsupported;
    default:
      return kExitValidation;
  }
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Channel = std::unique_ptr<qdpa_channel, Deleter<qdpa_channel, qdpa_channel_free>>;
using Dataset = std::unique_ptr<qdpa_dataset, Deleter<qdpa_dataset, qdpa_dataset_free>>;
using Povm = std::unique_ptr<qdpa_povm, Deleter<qdpa_povm, qdpa_povm_free>>;
using Stream = std::unique_ptr<qdpa_stream, Deleter<qdpa_stream, qdpa_stream_free>>;
using Model = std::unique_ptr<qdpa_model, Deleter<qdpa_model, qdpa_model_free>>;
using Report = std::unique_ptr<qdpa_report, Deleter<qdpa_report, qdpa_report_free>>;

std::string TakeString(char* s) {
  std::string out(s);
  qdpa_string_free(s);
  return out;
}

// "@path" reads a file; anything else is the literal argument.
std::string ReadArgument(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) Invalid("cannot read file '" + arg.substr(1) + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    Invalid(std::string("malformed JSON: ") + e.what());
  }
}

Json Eps(double eps) {
  if (std::isinf(eps)) return "inf";
  return eps;
}

Json DpJson(const qdpa_dp_params& dp) {
  return {{"epsilon", Eps(dp.epsilon)}, {"delta", dp.delta}};
}

Channel LoadChannel(const std::string& arg, double tol) {
  qdpa_channel* ch = nullptr;
  Check(qdpa_channel_from_json(ReadArgument(arg).c_str(), tol, &ch));
  return Channel(ch);
}

Json ChannelJson(const qdpa_channel* ch) {
  char* s = nullptr;
  Check(qdpa_channel_to_json(ch, &s));
  return ParseJson(TakeString(s));
}

Dataset LoadDataset(const std::string& arg) {
  qdpa_dataset* x = nullptr;
  Check(qdpa_dataset_from_json(ReadArgument(arg).c_str(), &x));
  return Dataset(x);
}

Json DatasetJson(const qdpa_dataset* x) {
  char* s = nullptr;
  Check(qdpa_dataset_to_json(x, &s));
  return ParseJson(TakeString(s));
}

Json ReportJson(const qdpa_report* r) {
  char* s = nullptr;
  Check(qdpa_report_to_json(r, &s));
  return ParseJson(TakeString(s));
}

qdpa_encoding ParseEncoding(const std::string& name) {
  if (name == "basis") return QDPA_ENCODING_BASIS;
  if (name == "amplitude") return QDPA_ENCODING_AMPLITUDE;
  if (name == "rotation") return QDPA_ENCODING_ROTATION;
  Invalid("unknown encoding '" + name + "'");
}

const char* EncodingName(qdpa_encoding e) {
  switch (e) {
    case QDPA_ENCODING_BASIS:
      return "basis";
    case QDPA_ENCODING_AMPLITUDE:
      return "amplitude";
    case QDPA_ENCODING_ROTATION:
      return "rotation";
  }
  return "unknown";
}

const char* KappaFormula(qdpa_encoding e) {
  switch (e) {
    case QDPA_ENCODING_BASIS:
      return "1-1/n";
    case QDPA_ENCODING_AMPLITUDE:
      return "1-Gamma";
    case QDPA_ENCODING_ROTATION:
      return "0";
  }
  return "";
}

// "AxP" or "A" (then P = A / 2).
std::pair<int, int> ParseGrid(const std::string& grid) {
  int a = 0;
  int p = 0;
  char x = 0;
  std::istringstream in(grid);
  in >> a;
  if (!in) Invalid("--grid must look like 64x32");
  if (in >> x) {
    if (x != 'x' || !(in >> p)) Invalid("--grid must look like 64x32");
  } else {
    p = a / 2;
  }
  if (a < 1 || p < 1) Invalid("--grid sizes must be positive");
  return {a, p};
}

struct Options {
  std::string format = "json";
  double tol = 0;
  std::vector<std::string> datasets;
  std::string channel;
  std::string encoding;
  std::string povm;
  std::string model;
  std::string noise = "none";
  std::string grid;
  std::string y;
  std::string method = "auto";
  std::optional<int> n;
  std::optional<int> m;
  std::optional<double> t;
  std::optional<double> eps;
  std::optional<double> delta;
  std::optional<double> tau;
  std::optional<double> gamma;
  std::optional<double> claimed_eps;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
};

template <typename T>
T Need(const std::optional<T>& v, const char* flag) {
  if (!v) Invalid(std::string("missing required flag ") + flag);
  return *v;
}

std::uint64_t NeedSeed(const Options& o) {
  if (!o.seed) Invalid("--seed is required for randomized commands");
  return *o.seed;
}

// Dataset-derived minimum adjacent kernel.
struct Kappa {
  double value;
  qdpa_encoding encoding;
  int n;
  std::optional<double> gamma;
};

Kappa KappaFor(const Options& o) {
  if (!o.datasets.empty()) {
    Dataset x = LoadDataset(o.datasets.front());
    Kappa k{};
    Check(qdpa_dataset_info(x.get(), &k.encoding, &k.n, nullptr));
    if (!o.encoding.empty() && ParseEncoding(o.encoding) != k.encoding) {
      Invalid("--encoding does not match the dataset mode");
    }
    double g = NAN;
    if (k.encoding == QDPA_ENCODING_AMPLITUDE) {
      Check(qdpa_gamma(x.get(), &g));
      k.gamma = g;
    }
    Check(qdpa_min_adjacent_kernel(k.encoding, k.n, g, &k.value));
    return k;
  }
  if (o.encoding.empty()) Invalid("give --dataset or --encoding with --n");
  Kappa k{};
  k.encoding = ParseEncoding(o.encoding);
  k.n = Need(o.n, "--n");
  double g = NAN;
  if (k.encoding == QDPA_ENCODING_AMPLITUDE) {
    g = Need(o.gamma, "--gamma (amplitude encoding without a dataset)");
    k.gamma = g;
  }
  Check(qdpa_min_adjacent_kernel(k.encoding, k.n, g, &k.value));
  return k;
}

Json KappaJson(const Kappa& k) {
  Json j = {{"value", k.value},
            {"formula", KappaFormula(k.encoding)},
            {"encoding", EncodingName(k.encoding)},
            {"n", k.n}};
  if (k.gamma) j["gamma"] = *k.gamma;
  if (k.encoding == QDPA_ENCODING_BASIS) {
    // Squared overlap of distinct-entry neighbours, for comparison.
    j["distinct_neighbor_kernel"] = {{"value", k.value * k.value},
                                     {"formula", "(1-1/n)^2"}};
  }
  return j;
}

// ---- encode-kernel ----

Json RunEncodeKernel(const Options& o) {
  Json out;
  if (o.datasets.empty()) {
    out["min_adjacent_kernel"] = KappaJson(KappaFor(o));
    return out;
  }
  if (o.datasets.size() > 2) Invalid("encode-kernel takes at most two datasets");
  Dataset x = LoadDataset(o.datasets[0]);
  size_t dim = 0;
  qdpa_encode(x.get(), nullptr, 0, &dim);
  if (dim == 0) Check(qdpa_encode(x.get(), nullptr, 0, &dim));
  std::vector<double> amps(2 * dim);
  Check(qdpa_encode(x.get(), amps.data(), dim, &dim));
  Json state = Json::array();
  for (size_t i = 0; i < dim; ++i) {
    state.push_back(Json::array({amps[2 * i], amps[2 * i + 1]}));
  }
  out["dataset"] = DatasetJson(x.get());
  out["dim"] = dim;
  out["state"] = std::move(state);
  Options single = o;
  single.datasets.resize(1);
  out["min_adjacent_kernel"] = KappaJson(KappaFor(single));
  if (o.datasets.size() == 2) {
    Dataset y = LoadDataset(o.datasets[1]);
    double kernel = 0;
    double distance = 0;
    int neighbors = 0;
    Check(qdpa_kernel(x.get(), y.get(), &kernel));
    Check(qdpa_encoded_trace_distance(x.get(), y.get(), &distance));
    Check(qdpa_are_neighbors(x.get(), y.get(), &neighbors));
    out["other"] = DatasetJson(y.get());
    out["kernel"] = {{"value", kernel}, {"formula", "|<phi(x)|phi(x')>|^2"}};
    out["trace_distance"] = {
        {"value", distance},
        {"pure_state_identity", std::sqrt(std::max(0.0, 1.0 - kernel))},
        {"formula", "sqrt(1-kernel)"}};
    out["neighbors"] = neighbors != 0;
  }
  return out;
}

// ---- amplify-encoding ----

Json RunAmplifyEncoding(const Options& o) {
  const Kappa k = KappaFor(o);
  Json out;
  out["min_adjacent_kernel"] = KappaJson(k);
  qdpa_dp_params adp{};
  Check(qdpa_encoding_adp_delta(k.value, &adp));
  out["encoding_dp"] = DpJson(adp);
  out["encoding_dp"]["formula"] = "(0, sqrt(1-kappa_hat))";
  out["required_tau"] = std::sqrt(std::max(0.0, 1.0 - k.value));
  if (o.eps) {
    const double tau = Need(o.tau, "--tau");
    const double delta = o.delta.value_or(0.0);
    qdpa_dp_params classical{};
    Check(qdpa_quantum_to_classical(tau, *o.eps, delta, k.value, &classical));
    out["classical_dp"] = DpJson(classical);
    out["classical_dp"]["rule"] = "QDP at tau >= sqrt(1-kappa_hat) carries over";
    out["qdp"] = {{"tau", tau}, {"epsilon", Eps(*o.eps)}, {"delta", delta}};
    if (o.t) {
      double b = 0;
      Check(qdpa_alg1_laplace_scale(k.value, *o.t, *o.eps, &b));
      out["laplace_scale"] = {{"value", b},
                              {"formula", "(sqrt(1-kappa_hat)+t)/eps"},
                              {"t", *o.t}};
      if (delta > 0) {
        double s2 = 0;
        Check(qdpa_alg1_gaussian_sigma2(k.value, *o.t, *o.eps, delta, &s2));
        out["gaussian_sigma2"] = {
            {"value", s2},
            {"formula", "2 ln(1.25/delta) (sqrt(1-kappa_hat)+t)^2 / eps^2"},
            {"t", *o.t}};
      }
    }
  }
  return out;
}

// ---- amplify-sampling ----

Json RunAmplifySampling(const Options& o) {
  if (o.datasets.size() != 1) Invalid("amplify-sampling needs one --dataset");
  Dataset x = LoadDataset(o.datasets[0]);
  const int m = Need(o.m, "--m");
  double gamma = 0;
  Check(qdpa_gamma(x.get(), &gamma));
  Json out;
  out["gamma"] = {{"value", gamma}, {"formula", "max_i |x_i|^2"}};
  out["m"] = m;
  out["inclusion_bound"] = gamma * m;
  qdpa_dp_params adp{};
  Check(qdpa_subsample_adp(gamma, m, &adp));
  out["sampling_only"] = DpJson(adp);
  out["sampling_only"]["formula"] = "(0, Gamma m)";
  if (o.eps) {
    const qdpa_dp_params base{*o.eps, o.delta.value_or(0.0)};
    qdpa_dp_params amp{};
    Check(qdpa_subsample_amplify(base, gamma, m, &amp));
    out["base"] = DpJson(base);
    out["amplified"] = DpJson(amp);
    out["amplified"]["formula"] =
        "(ln(1+(e^eps-1) Gamma m), delta Gamma m)";
  }
  return out;
}

// ---- closed-form channel epsilon ----

struct ClosedForm {
  double epsilon;
  std::string formula;
  std::string source;
  Json extra = Json::object();
};

double PadCurve(double d, void* user) {
  const auto* gl = static_cast<const std::pair<double, double>*>(user);
  double out = 0;
  if (qdpa_eps_pad(gl->first, gl->second, d, &out) != QDPA_OK) return NAN;
  return out;
}

ClosedForm ClosedFormEpsilon(const qdpa_channel* ch, const Json& spec,
                             double tau) {
  const std::string kind = spec.at("kind").get<std::string>();
  ClosedForm cf{};
  if (kind == "identity") {
    cf.epsilon = tau > 0 ? std::numeric_limits<double>::infinity() : 0.0;
    cf.formula = "identity channel";
    cf.source = "no contraction";
    return cf;
  }
  if (kind == "depolarizing") {
    const double p = spec.at("p").get<double>();
    const int dim = spec.at("dim").get<int>();
    Check(qdpa_eps_depolarizing(p, tau, dim, &cf.epsilon));
    cf.formula = "ln(1+((1-p)/p) tau D)";
    cf.source = "depolarizing closed form";
    if (dim == 2) {
      double e = 0;
      Check(qdpa_eps_unital_dobrushin(1.0 - p, tau, &e));
      cf.extra["unital_dobrushin"] = {
          {"epsilon", Eps(e)}, {"gamma", 1.0 - p}, {"formula", "ln(1+2 tau gamma)"}};
    }
    return cf;
  }
  if (kind == "pad") {
    Check(qdpa_eps_pad(spec.at("gamma").get<double>(),
                       spec.at("lambda").get<double>(), tau, &cf.epsilon));
    cf.formula = "ln(1+2 tau s/(1-s)), s = sqrt(1-gamma) sqrt(1-lambda)";
    cf.source = "phase-amplitude damping closed form";
    return cf;
  }
  if (kind == "compose") {
    const Json& outer = spec.at("outer");
    const Json& inner = spec.at("inner");
    const bool dep_last = outer.at("kind") == "depolarizing" &&
                          inner.at("kind") == "pad";
    const bool dep_first = outer.at("kind") == "pad" &&
                           inner.at("kind") == "depolarizing";
    if (dep_last || dep_first) {
      const Json& dep = dep_last ? outer : inner;
      const Json& pad = dep_last ? inner : outer;
      if (dep.at("dim") == 2) {
        const double p = dep.at("p").get<double>();
        std::pair<double, double> gl{pad.at("gamma").get<double>(),
                                     pad.at("lambda").get<double>()};
        Check(qdpa_eps_pad_dep(p, gl.first, gl.second, tau, &cf.epsilon));
        cf.formula =
            "(1-p) ln(1+2 tau s/(1-s)), s = sqrt(1-gamma) sqrt(1-lambda)";
        cf.source = dep_last ? "depolarizing after phase-amplitude damping"
                             : "phase-amplitude damping after depolarizing";
        double qpp = 0;
        Check(qdpa_qpp_amplify(&PadCurve, &gl, 1.0 - p, tau, &qpp));
        cf.extra["contraction_form"] = {{"epsilon", Eps(qpp)},
                                        {"formula", "eps_pad((1-p) tau)"}};
        return cf;
      }
    }
  }
  int unital = 0;
  Check(qdpa_channel_bloch(ch, nullptr, nullptr, &unital));
  if (!unital) {
    throw Failure{QDPA_ERR_UNSUPPORTED,
                  "no closed-form epsilon for this non-unital channel"};
  }
  double gamma = 0;
  const char* method = nullptr;
  Check(qdpa_channel_dobrushin(ch, nullptr, 0, &gamma, &method, nullptr));
  Check(qdpa_eps_unital_dobrushin(gamma, tau, &cf.epsilon));
  cf.formula = "ln(1+2 tau gamma)";
  cf.source = "unital Dobrushin bound";
  cf.extra["dobrushin"] = {{"value", gamma}, {"method", method}};
  return cf;
}

Json RunChannelEps(const Options& o) {
  if (o.channel.empty()) Invalid("missing required flag --channel");
  Channel ch = LoadChannel(o.channel, o.tol);
  const double tau = Need(o.tau, "--tau");
  const Json spec = ChannelJson(ch.get());
  const ClosedForm cf = ClosedFormEpsilon(ch.get(), spec, tau);
  Json out = cf.extra;
  out["channel"] = spec;
  out["tau"] = tau;
  out["epsilon"] = Eps(cf.epsilon);
  out["delta"] = 0;
  out["formula"] = cf.formula;
  out["source"] = cf.source;
  return out;
}

// ---- dobrushin ----

Json RunDobrushin(const Options& o) {
  if (o.channel.empty()) Invalid("missing required flag --channel");
  Channel ch = LoadChannel(o.channel, o.tol);
  int dim = 0;
  Check(qdpa_channel_info(ch.get(), &dim, nullptr, nullptr, nullptr));
  qdpa_dobrushin_search search{};
  qdpa_dobrushin_search_default(&search);
  if (!o.grid.empty()) {
    std::tie(search.azimuth, search.polar) = ParseGrid(o.grid);
  }
  if (o.trials) {
    search.full_search = 1;
    search.random_pairs = *o.trials;
  }
  if (dim > 2 || o.trials) search.seed = NeedSeed(o);
  if (o.method != "auto" && o.method != "search") {
    Invalid("--method must be auto or search");
  }
  double value = 0;
  const char* method = nullptr;
  int evaluations = 0;
  Check(qdpa_channel_dobrushin(ch.get(), &search, o.method == "search", &value,
                               &method, &evaluations));
  Json out;
  out["channel"] = ChannelJson(ch.get());
  out["dobrushin"] = value;
  out["method"] = method;
  out["search"] = {{"grid", Json::array({search.azimuth, search.polar})},
                   {"refine_iters", search.refine_iters},
                   {"random_pairs", search.full_search ? search.random_pairs : 0},
                   {"evaluations", evaluations},
                   {"seed", search.seed}};
  if (std::string(method) == "unital-transfer-norm") {
    out["formula"] = "largest singular value of the Bloch transfer matrix";
  } else {
    out["formula"] = "max over orthogonal pure pairs of output trace distance";
  }
  return out;
}

// ---- doeblin-check ----

Json RunDoeblinCheck(const Options& o) {
  if (o.channel.empty()) Invalid("missing required flag --channel");
  Channel ch = LoadChannel(o.channel, o.tol);
  const double gamma = Need(o.gamma, "--gamma");
  int dim = 0;
  Check(qdpa_channel_info(ch.get(), nullptr, &dim, nullptr, nullptr));
  std::vector<double> y;
  double trace_y = 1.0;
  if (!o.y.empty()) {
    const Json yj = ParseJson(ReadArgument(o.y));
    if (!yj.is_array() || static_cast<int>(yj.size()) != dim) {
      Invalid("--y must be a dim x dim matrix");
    }
    trace_y = 0;
    for (int r = 0; r < dim; ++r) {
      if (!yj[r].is_array() || static_cast<int>(yj[r].size()) != dim) {
        Invalid("--y must be a dim x dim matrix");
      }
      for (int c = 0; c < dim; ++c) {
        const Json& e = yj[r][c];
        const double re = e.is_array() ? e.at(0).get<double>() : e.get<double>();
        const double im = e.is_array() ? e.at(1).get<double>() : 0.0;
        y.push_back(re);
        y.push_back(im);
        if (r == c) trace_y += re;
      }
    }
  }
  int holds = 0;
  double min_eig = 0;
  Check(qdpa_channel_doeblin_check(ch.get(), gamma, y.empty() ? nullptr : y.data(),
                                   o.tol, &holds, &min_eig));
  Json out;
  out["channel"] = ChannelJson(ch.get());
  out["gamma"] = gamma;
  out["y"] = o.y.empty() ? Json("I/d") : ParseJson(ReadArgument(o.y));
  out["holds"] = holds != 0;
  out["min_eigenvalue"] = min_eig;
  out["test"] = "Choi(T) - gamma (I (x) Y) is positive semidefinite";
  if (holds) {
    double bound = 0;
    Check(qdpa_doeblin_to_dobrushin(gamma, trace_y, &bound));
    out["implied_dobrushin"] = {{"value", bound},
                                {"formula", "1 - gamma Tr(Y)"}};
  }
  return out;
}

// ---- simulate-alg1 ----

Json RunSimulateAlg1(const Options& o) {
  if (o.datasets.size() != 1) Invalid("simulate-alg1 needs one --dataset");
  Dataset x = LoadDataset(o.datasets[0]);
  const int m = Need(o.m, "--m");
  const double t = Need(o.t, "--t");
  const int trials = o.trials.value_or(1);
  if (trials < 1) Invalid("--trials must be positive");
  const std::uint64_t seed = NeedSeed(o);

  size_t dim = 0;
  qdpa_encode(x.get(), nullptr, 0, &dim);
  qdpa_povm* raw = nullptr;
  if (o.povm.empty()) {
    Check(qdpa_povm_basis_projector(static_cast<int>(dim), 0, &raw));
  } else {
    Check(qdpa_povm_from_json(ReadArgument(o.povm).c_str(), &raw));
  }
  Povm povm(raw);

  Json out;
  qdpa_noise noise = QDPA_NOISE_NONE;
  double parameter = 0;
  if (o.noise != "none") {
    const Kappa k = KappaFor(o);
    const double eps = Need(o.eps, "--eps");
    out["min_adjacent_kernel"] = KappaJson(k);
    if (o.noise == "laplace") {
      noise = QDPA_NOISE_LAPLACE;
      Check(qdpa_alg1_laplace_scale(k.value, t, eps, &parameter));
      out["noise"] = {{"kind", "laplace"},
                      {"scale", parameter},
                      {"formula", "(sqrt(1-kappa_hat)+t)/eps"}};
    } else if (o.noise == "gaussian") {
      noise = QDPA_NOISE_GAUSSIAN;
      const double delta = Need(o.delta, "--delta");
      Check(qdpa_alg1_gaussian_sigma2(k.value, t, eps, delta, &parameter));
      out["noise"] = {{"kind", "gaussian"},
                      {"variance", parameter},
                      {"formula",
                       "2 ln(1.25/delta) (sqrt(1-kappa_hat)+t)^2 / eps^2"}};
    } else {
      Invalid("--noise must be none, laplace or gaussian");
    }
  } else {
    out["noise"] = {{"kind", "none"}};
  }

  double target = 0;
  Check(qdpa_povm_accept_probability(povm.get(), x.get(), &target));
  qdpa_stream* root_raw = nullptr;
  Check(qdpa_stream_create(seed, &root_raw));
  Stream root(root_raw);
  long failures = 0;
  double sum = 0;
  double first = 0;
  for (int i = 0; i < trials; ++i) {
    qdpa_stream* s = nullptr;
    Check(qdpa_stream_split(root.get(), static_cast<std::uint64_t>(i), &s));
    Stream stream(s);
    double value = 0;
    Check(qdpa_run_alg1(x.get(), povm.get(), m, noise, parameter, stream.get(),
                        &value));
    if (i == 0) first = value;
    sum += value;
    if (std::fabs(value - target) >= t / 2) ++failures;
  }
  const double rate = static_cast<double>(failures) / trials;
  double printed = 0;
  double conservative = 0;
  Check(qdpa_alg1_deviation_prob(m, t, &printed, &conservative));
  double pair_printed = 0;
  double pair_conservative = 0;
  Check(qdpa_alg1_failure_prob(m, t, &pair_printed, &pair_conservative));
  out["dataset"] = DatasetJson(x.get());
  out["m"] = m;
  out["t"] = t;
  out["seed"] = seed;
  out["trials"] = trials;
  out["accept_probability"] = target;
  out["first_output"] = first;
  out["mean_output"] = sum / trials;
  out["deviation"] = {
      {"event", "|O - Tr(E1 rho)| >= t/2"},
      {"rate", rate},
      {"standard_error", std::sqrt(rate * (1 - rate) / trials)},
      {"bound_printed", {{"value", printed}, {"formula", "2 exp(-m t^2)"}}},
      {"bound_conservative",
       {{"value", conservative}, {"formula", "2 exp(-m t^2/2)"}}}};
  out["neighbour_pair_failure"] = {
      {"printed", {{"value", pair_printed}, {"formula", "4 exp(-m t^2)"}}},
      {"conservative",
       {{"value", pair_conservative}, {"formula", "4 exp(-m t^2/2)"}}}};
  return out;
}

// ---- audits ----

int ViolationExit(const Json& report) {
  return report.at("satisfied").get<bool>() ? kExitOk : kExitViolation;
}

Json RunAuditDp(const Options& o, int& exit_code) {
  Json out;
  if (!o.model.empty()) {
    qdpa_model* raw = nullptr;
    Check(qdpa_model_from_json(ReadArgument(o.model).c_str(), &raw));
    Model model(raw);
    const qdpa_dp_params claim{Need(o.eps, "--eps"), o.delta.value_or(0.0)};
    qdpa_report* rr = nullptr;
    Check(qdpa_audit_classical(model.get(), claim, &rr));
    Report report(rr);
    out["mode"] = "model";
    out["report"] = ReportJson(report.get());
  } else {
    if (o.datasets.size() != 1) Invalid("audit-dp needs --model or --dataset");
    Dataset x = LoadDataset(o.datasets[0]);
    const int m = Need(o.m, "--m");
    const qdpa_dp_params base_claim{Need(o.eps, "--eps"),
                                    o.delta.value_or(0.0)};
    qdpa_model* raw = nullptr;
    Check(qdpa_model_randomized_response(m, base_claim.epsilon,
                                         base_claim.delta, &raw));
    Model base(raw);
    qdpa_dp_params bound{};
    qdpa_report* rr = nullptr;
    Check(qdpa_audit_subsampling(x.get(), base.get(), m, base_claim, &bound,
                                 &rr));
    Report report(rr);
    double gamma = 0;
    Check(qdpa_gamma(x.get(), &gamma));
    out["mode"] = "l2-subsampling";
    out["dataset"] = DatasetJson(x.get());
    out["m"] = m;
    out["base"] = {{"mechanism", "randomized response per sampled bit"},
                   {"epsilon", Eps(base_claim.epsilon)},
                   {"delta", base_claim.delta}};
    out["gamma"] = gamma;
    out["bound"] = DpJson(bound);
    out["bound"]["formula"] = "(ln(1+(e^eps-1) Gamma m), delta Gamma m)";
    out["report"] = ReportJson(report.get());
  }
  exit_code = ViolationExit(out["report"]);
  return out;
}

Json RunAuditQdp(const Options& o, int& exit_code) {
  if (o.channel.empty()) Invalid("missing required flag --channel");
  Channel ch = LoadChannel(o.channel, o.tol);
  const double tau = Need(o.tau, "--tau");
  const std::uint64_t seed = NeedSeed(o);
  const Json spec = ChannelJson(ch.get());
  Json out;
  double claimed = 0;
  if (o.claimed_eps) {
    claimed = *o.claimed_eps;
    out["claim"] = {{"epsilon", Eps(claimed)}, {"source", "--claimed-eps"}};
  } else {
    const ClosedForm cf = ClosedFormEpsilon(ch.get(), spec, tau);
    claimed = cf.epsilon;
    out["claim"] = {{"epsilon", Eps(claimed)},
                    {"formula", cf.formula},
                    {"source", cf.source}};
  }
  qdpa_qdp_search search{};
  qdpa_qdp_search_default(&search);
  search.seed = seed;
  if (!o.grid.empty()) std::tie(search.azimuth, search.polar) = ParseGrid(o.grid);
  if (o.trials) search.pairs = *o.trials;
  qdpa_report* rr = nullptr;
  Check(qdpa_audit_channel_qdp(ch.get(), tau, claimed, &search, &rr));
  Report report(rr);
  double recheck = 0;
  Check(qdpa_report_recheck(report.get(), &recheck));
  out["channel"] = spec;
  out["tau"] = tau;
  out["report"] = ReportJson(report.get());
  out["witness_log_ratio"] = Eps(recheck);
  exit_code = ViolationExit(out["report"]);
  return out;
}

struct Emitter {
  std::string format;

  void operator()(const Json& payload) const {
    if (format == "csv") {
      std::cout << EmitCsv(payload);
    } else {
      std::cout << EmitJson(payload) << "\n";
    }
  }
};

std::string StatusWord(int exit_code) {
  switch (exit_code) {
    case kExitOk:
      return "ok";
    case kExitViolation:
      return "violation";
    case kExitUnsupported:
      return "unsupported";
    default:
      return "error";
  }
}

}  // namespace

int Main(int argc, char** argv) {
  CLI::App app{"Quantum differential privacy calculators, simulations and "
               "audits"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--tol", o.tol,
                    "Tolerance override for input validation");
  };
  auto add_channel = [&](CLI::App* sub) {
    sub->add_option("--channel", o.channel,
                    "Channel JSON, @file, or the word identity");
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "64-bit seed (decimal)");
  };

  CLI::App* encode = app.add_subcommand(
      "encode-kernel", "Encode datasets; kernels and trace distances.");
  encode->footer(
      "Provenance: Section 3 encodings (basis, amplitude, rotation); kernel "
      "equation; Table 1 minimum adjacent kernels; pure-state distance "
      "identity of Section 2.");
  encode->add_option("--dataset", o.datasets, "Dataset JSON or @file (1 or 2)");
  encode->add_option("--encoding", o.encoding, "basis|amplitude|rotation");
  encode->add_option("--n", o.n, "Dataset length when no dataset is given");
  encode->add_option("--gamma", o.gamma, "Gamma for amplitude without dataset");
  add_format(encode);

  CLI::App* amp_enc = app.add_subcommand(
      "amplify-encoding",
      "Classical DP from encodings: approximate DP and QDP transfer.");
  amp_enc->footer(
      "Provenance: Lemma on approximate DP by quantum encoding; Lemma on "
      "quantum-to-classical DP; theorems on encoding plus Laplace and "
      "encoding plus Gaussian noise (Algorithm 1).");
  amp_enc->add_option("--dataset", o.datasets, "Dataset JSON or @file");
  amp_enc->add_option("--encoding", o.encoding, "basis|amplitude|rotation");
  amp_enc->add_option("--n", o.n, "Dataset length");
  amp_enc->add_option("--gamma", o.gamma, "Gamma for amplitude without dataset");
  amp_enc->add_option("--tau", o.tau, "QDP trace-distance level");
  amp_enc->add_option("--eps", o.eps, "QDP epsilon");
  amp_enc->add_option("--delta", o.delta, "QDP delta");
  amp_enc->add_option("--t", o.t, "Concentration slack t of Algorithm 1");
  add_format(amp_enc);

  CLI::App* amp_samp = app.add_subcommand(
      "amplify-sampling", "Privacy amplification by l2-norm sampling.");
  amp_samp->footer(
      "Provenance: Section 4 theorem on DP amplification by quantum-inspired "
      "sampling and its corollary (0, Gamma m)-DP.");
  amp_samp->add_option("--dataset", o.datasets, "Amplitude dataset JSON or @file");
  amp_samp->add_option("--m", o.m, "Number of samples");
  amp_samp->add_option("--eps", o.eps, "Base mechanism epsilon");
  amp_samp->add_option("--delta", o.delta, "Base mechanism delta");
  add_format(amp_samp);

  CLI::App* ch_eps = app.add_subcommand(
      "channel-eps", "Closed-form QDP epsilon of a noise channel.");
  ch_eps->footer(
      "Provenance: Table 2 and Section 5 (depolarizing, phase-amplitude "
      "damping); Theorem 6 (unital channels via Dobrushin coefficient); "
      "Theorem 7 (depolarizing composed with phase-amplitude damping); qpp "
      "contraction theorem.");
  add_channel(ch_eps);
  ch_eps->add_option("--tau", o.tau, "Trace-distance level d");
  add_format(ch_eps);

  CLI::App* dob = app.add_subcommand(
      "dobrushin", "Dobrushin (trace-distance contraction) coefficient.");
  dob->footer(
      "Provenance: Definition 1.1 (Dobrushin coefficient); Lemma 6.1 (unital "
      "qubit channels are ||T||-Dobrushin).");
  add_channel(dob);
  dob->add_option("--grid", o.grid, "Search grid AxP (default 64x32)");
  dob->add_option("--trials", o.trials, "Extra random mixed-state pairs");
  dob->add_option("--method", o.method, "auto|search");
  add_seed(dob);
  add_format(dob);

  CLI::App* doe = app.add_subcommand(
      "doeblin-check", "Doeblin minorization test via the Choi matrix.");
  doe->footer(
      "Provenance: Definition 1.2 (Doeblin condition) and its implied "
      "Dobrushin contraction.");
  add_channel(doe);
  doe->add_option("--gamma", o.gamma, "Doeblin weight");
  doe->add_option("--y", o.y, "Output state Y as a JSON matrix or @file");
  add_format(doe);

  CLI::App* sim = app.add_subcommand(
      "simulate-alg1", "Monte-Carlo run of the encode-measure-average mechanism.");
  sim->footer(
      "Provenance: Algorithm 1; theorems on encoding plus Laplace and "
      "Gaussian noise; Chernoff-Hoeffding step of their proofs.");
  sim->add_option("--dataset", o.datasets, "Dataset JSON or @file");
  sim->add_option("--povm", o.povm, "Binary POVM JSON or @file (default |0><0|)");
  sim->add_option("--m", o.m, "Measurements per run");
  sim->add_option("--t", o.t, "Deviation parameter t");
  sim->add_option("--trials", o.trials, "Independent runs");
  sim->add_option("--noise", o.noise, "none|laplace|gaussian");
  sim->add_option("--eps", o.eps, "Target epsilon for noise calibration");
  sim->add_option("--delta", o.delta, "Target delta (Gaussian)");
  add_seed(sim);
  add_format(sim);

  CLI::App* adp = app.add_subcommand(
      "audit-dp", "Exact DP audit of a finite mechanism.");
  adp->footer(
      "Provenance: Section 2 definition of (eps, delta)-DP over all outcome "
      "subsets; Section 4 amplification theorem checked end to end.");
  adp->add_option("--model", o.model, "Mechanism model JSON or @file");
  adp->add_option("--dataset", o.datasets, "Amplitude dataset for l2-sampling");
  adp->add_option("--m", o.m, "Samples (l2-sampling mode)");
  adp->add_option("--eps", o.eps, "Claimed (or base) epsilon");
  adp->add_option("--delta", o.delta, "Claimed (or base) delta");
  add_format(adp);

  CLI::App* aq = app.add_subcommand(
      "audit-qdp", "Search for QDP violations of a qubit channel.");
  aq->footer(
      "Provenance: Section 2 definition of (tau, eps, delta)-QDP; Theorem 6 "
      "proof's measurement ratio; Table 2 and Theorem 7 closed forms as "
      "default claims.");
  add_channel(aq);
  aq->add_option("--tau", o.tau, "Trace-distance level");
  aq->add_option("--claimed-eps", o.claimed_eps,
                 "Claimed epsilon (default: closed form)");
  aq->add_option("--grid", o.grid, "Projector grid AxP (default 64x32)");
  aq->add_option("--trials", o.trials, "Generated state-pair directions");
  add_seed(aq);
  add_format(aq);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    Emitter{"json"}({{"status", "error"},
                     {"error", "usage_error"},
                     {"message", e.what()}});
    return kExitValidation;
  }

  const Emitter emit{o.format};
  int exit_code = kExitOk;
  try {
    Json payload;
    if (*encode) payload = RunEncodeKernel(o);
    if (*amp_enc) payload = RunAmplifyEncoding(o);
    if (*amp_samp) payload = RunAmplifySampling(o);
    if (*ch_eps) payload = RunChannelEps(o);
    if (*dob) payload = RunDobrushin(o);
    if (*doe) payload = RunDoeblinCheck(o);
    if (*sim) payload = RunSimulateAlg1(o);
    if (*adp) payload = RunAuditDp(o, exit_code);
    if (*aq) payload = RunAuditQdp(o, exit_code);
    payload["command"] = app.get_subcommands().front()->get_name();
    payload["status"] = StatusWord(exit_code);
    emit(payload);
    if (exit_code == kExitViolation) {
      std::cerr << "audit found a violation of the claimed guarantee\n";
    }
    return exit_code;
  } catch (const Failure& f) {
    exit_code = ExitCodeFor(f.status);
    std::cerr << qdpa_status_name(f.status) << ": " << f.message << "\n";
    emit({{"status", StatusWord(exit_code)},
          {"error", qdpa_status_name(f.status)},
          {"message", f.message}});
    return exit_code;
  } catch (const Json::exception& e) {
    std::cerr << "validation_error: " << e.what() << "\n";
    emit({{"status", "error"},
          {"error", "validation_error"},
          {"message", e.what()}});
    return kExitValidation;
  }
}

}  // namespace qdpamp_cli

int main(int argc, char** argv) { return qdpamp_cli::Main(argc, argv); }
