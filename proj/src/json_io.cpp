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

#include "json_io.hpp"

#include <cmath>

#include "error.hpp"

namespace qdpamp::json_io {

namespace {

double Number(const Json& j, const char* what) {
  Require(j.is_number(), std::string(what) + " must be a number");
  return j.get<double>();
}

double Field(const Json& j, const char* key) {
  Require(j.contains(key), std::string("missing field '") + key + "'");
  return Number(j.at(key), key);
}

int IntField(const Json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  Require(j.at(key).is_number_integer(),
          std::string("field '") + key + "' must be an integer");
  return j.at(key).get<int>();
}

}  // namespace

Json ParseText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    Fail(ErrorCode::kValidation, std::string("malformed JSON: ") + e.what());
  }
}

Complex ParseComplex(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  Require(j.is_array() && j.size() == 2 && j[0].is_number() &&
              j[1].is_number(),
          "complex number must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json ToJson(Complex c) { return Json::array({c.real(), c.imag()}); }

ComplexMatrix ParseMatrix(const Json& j) {
  Require(j.is_array() && !j.empty(), "matrix must be a non-empty array of rows");
  const size_t rows = j.size();
  Require(j[0].is_array() && !j[0].empty(), "matrix rows must be arrays");
  const size_t cols = j[0].size();
  ComplexMatrix m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    Require(j[r].is_array() && j[r].size() == cols, "ragged matrix rows");
    for (size_t c = 0; c < cols; ++c) m(r, c) = ParseComplex(j[r][c]);
  }
  return m;
}

Json ToJson(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(ToJson(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

double ParseEpsilon(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return kInfiniteEpsilon;
  const double eps = Number(j, "epsilon");
  Require(eps >= 0.0, "epsilon must be >= 0");
  return eps;
}

Json EpsilonToJson(double eps) {
  if (IsInfiniteEpsilon(eps)) return "inf";
  return eps;
}

Dataset ParseDataset(const Json& j) {
  Require(j.is_object(), "dataset must be a JSON object");
  Require(j.contains("mode") && j["mode"].is_string(),
          "dataset needs a string 'mode'");
  Require(j.contains("values") && j["values"].is_array(),
          "dataset needs a 'values' array");
  const EncodingKind mode = ParseEncodingKind(j["mode"].get<std::string>());
  const Json& values = j["values"];
  switch (mode) {
    case EncodingKind::kAmplitude: {
      std::vector<Complex> v;
      for (const auto& e : values) v.push_back(ParseComplex(e));
      return Dataset::Amplitude(std::move(v));
    }
    case EncodingKind::kBasis: {
      std::vector<std::uint64_t> v;
      int inferred = 1;
      for (const auto& e : values) {
        if (e.is_string()) {
          // Bitstring form, e.g. "0101".
          const auto s = e.get<std::string>();
          Require(!s.empty() && s.size() <= 63 &&
                      s.find_first_not_of("01") == std::string::npos,
                  "basis bitstring must contain only 0 and 1");
          v.push_back(std::stoull(s, nullptr, 2));
          inferred = std::max<int>(inferred, s.size());
        } else {
          Require(e.is_number_unsigned() || (e.is_number_integer() &&
                                             e.get<long long>() >= 0),
                  "basis entries must be nonnegative integers");
          v.push_back(e.get<std::uint64_t>());
        }
      }
      int width = IntField(j, "bit_width", 0);
      if (width == 0) {
        std::uint64_t max = 0;
        for (auto x : v) max = std::max(max, x);
        while (inferred < 63 && (max >> inferred) != 0) ++inferred;
        width = inferred;
      }
      return Dataset::Basis(std::move(v), width);
    }
    case EncodingKind::kRotation: {
      std::vector<double> v;
      for (const auto& e : values) v.push_back(Number(e, "rotation angle"));
      return Dataset::Rotation(std::move(v));
    }
  }
  Fail(ErrorCode::kValidation, "unknown dataset mode");
}

Json ToJson(const Dataset& x) {
  Json j;
  j["mode"] = std::string(ToString(x.mode()));
  Json values = Json::array();
  switch (x.mode()) {
    case EncodingKind::kAmplitude:
      for (const auto& c : x.amplitudes()) values.push_back(ToJson(c));
      break;
    case EncodingKind::kBasis:
      for (auto b : x.bitstrings()) values.push_back(b);
      j["bit_width"] = x.bit_width();
      break;
    case EncodingKind::kRotation:
      for (double a : x.angles()) values.push_back(a);
      break;
  }
  j["values"] = std::move(values);
  return j;
}

ChannelSpec ParseChannelSpec(const Json& j) {
  if (j.is_string()) {
    // Shorthand names.
    const auto name = j.get<std::string>();
    if (name == "identity") return {channel_kind::Identity{2}};
    Fail(ErrorCode::kValidation, "unknown channel shorthand '" + name + "'");
  }
  Require(j.is_object() && j.contains("kind") && j["kind"].is_string(),
          "channel needs a string 'kind'");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "identity") {
    return {channel_kind::Identity{IntField(j, "dim", 2)}};
  }
  if (kind == "depolarizing") {
    return {channel_kind::Depolarizing{Field(j, "p"), IntField(j, "dim", 2)}};
  }
  if (kind == "gad") {
    return {channel_kind::GeneralizedAmplitudeDamping{Field(j, "p"),
                                                      Field(j, "gamma")}};
  }
  if (kind == "pd") {
    return {channel_kind::PhaseDamping{Field(j, "lambda")}};
  }
  if (kind == "pad") {
    return {channel_kind::PhaseAmplitudeDamping{
        Field(j, "p"), Field(j, "gamma"), Field(j, "lambda")}};
  }
  if (kind == "compose") {
    Require(j.contains("outer") && j.contains("inner"),
            "compose needs 'outer' and 'inner'");
    return ChannelSpec::MakeCompose(ParseChannelSpec(j["outer"]),
                                    ParseChannelSpec(j["inner"]));
  }
  if (kind == "kraus") {
    Require(j.contains("ops") && j["ops"].is_array() && !j["ops"].empty(),
            "kraus channel needs a non-empty 'ops' array");
    channel_kind::RawKraus raw;
    for (const auto& op : j["ops"]) raw.ops.push_back(ParseMatrix(op));
    if (j.contains("dim")) {
      const int dim = IntField(j, "dim", 0);
      for (const auto& op : raw.ops) {
        Require(op.cols() == dim, "kraus operator width differs from 'dim'");
      }
    }
    return {std::move(raw)};
  }
  Fail(ErrorCode::kValidation, "unknown channel kind '" + kind + "'");
}

Json ToJson(const ChannelSpec& spec) {
  return std::visit(
      [](const auto& k) -> Json {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, channel_kind::Identity>) {
          return {{"kind", "identity"}, {"dim", k.dim}};
        } else if constexpr (std::is_same_v<T, channel_kind::Depolarizing>) {
          return {{"kind", "depolarizing"}, {"p", k.p}, {"dim", k.dim}};
        } else if constexpr (std::is_same_v<
                                 T, channel_kind::GeneralizedAmplitudeDamping>) {
          return {{"kind", "gad"}, {"p", k.p}, {"gamma", k.gamma}};
        } else if constexpr (std::is_same_v<T, channel_kind::PhaseDamping>) {
          return {{"kind", "pd"}, {"lambda", k.lambda}};
        } else if constexpr (std::is_same_v<
                                 T, channel_kind::PhaseAmplitudeDamping>) {
          return {{"kind", "pad"},
                  {"p", k.p},
                  {"gamma", k.gamma},
                  {"lambda", k.lambda}};
        } else if constexpr (std::is_same_v<T, channel_kind::RawKraus>) {
          Json ops = Json::array();
          for (const auto& op : k.ops) ops.push_back(ToJson(op));
          return {{"kind", "kraus"},
                  {"dim", static_cast<int>(k.ops.front().cols())},
                  {"ops", ops}};
        } else {
          return {{"kind", "compose"},
                  {"outer", ToJson(*k.outer)},
                  {"inner", ToJson(*k.inner)}};
        }
      },
      spec.kind);
}

Povm ParsePovm(const Json& j) {
  Require(j.is_object() && j.contains("elements") && j["elements"].is_array(),
          "POVM needs an 'elements' array");
  std::vector<HermitianMatrix> elems;
  for (const auto& e : j["elements"]) {
    elems.emplace_back(ParseMatrix(e), 1e-10);
  }
  std::vector<int> labels;
  if (j.contains("labels")) {
    Require(j["labels"].is_array(), "'labels' must be an array");
    for (const auto& l : j["labels"]) {
      Require(l.is_number_integer(), "POVM labels must be integers");
      labels.push_back(l.get<int>());
    }
  } else {
    for (size_t i = 0; i < elems.size(); ++i) labels.push_back(int(i));
  }
  return Povm(std::move(elems), std::move(labels));
}

MechanismModel ParseModel(const Json& j) {
  Require(j.is_object(), "mechanism model must be an object");
  for (const char* key : {"inputs", "outcomes", "dist"}) {
    Require(j.contains(key) && j[key].is_array(),
            std::string("mechanism model needs array '") + key + "'");
  }
  MechanismModel model;
  for (const auto& i : j["inputs"]) {
    model.inputs.push_back(i.is_string() ? i.get<std::string>() : i.dump());
  }
  for (const auto& o : j["outcomes"]) {
    model.outcomes.push_back(o.is_string() ? o.get<std::string>() : o.dump());
  }
  for (const auto& row : j["dist"]) {
    Require(row.is_array(), "distribution rows must be arrays");
    std::vector<double> r;
    for (const auto& p : row) r.push_back(Number(p, "probability"));
    model.dist.push_back(std::move(r));
  }
  if (j.contains("neighbors")) {
    for (const auto& pair : j["neighbors"]) {
      Require(pair.is_array() && pair.size() == 2,
              "neighbor entries must be pairs");
      auto index = [&](const Json& e) {
        if (e.is_number_integer()) return e.get<int>();
        Require(e.is_string(), "neighbor endpoints must be ids or indices");
        return model.InputIndex(e.get<std::string>());
      };
      model.neighbor_pairs.emplace_back(index(pair[0]), index(pair[1]));
    }
  }
  model.Validate(1e-9);
  return model;
}

Json ToJson(const MechanismModel& model) {
  Json neighbors = Json::array();
  for (const auto& [a, b] : model.neighbor_pairs) {
    neighbors.push_back(Json::array({a, b}));
  }
  return {{"inputs", model.inputs},
          {"outcomes", model.outcomes},
          {"dist", model.dist},
          {"neighbors", neighbors}};
}

Json ToJson(const DpParams& dp) {
  return {{"epsilon", EpsilonToJson(dp.epsilon)}, {"delta", dp.delta}};
}

Json ToJson(const AuditReport& report) {
  Json j;
  j["eps_hat"] = EpsilonToJson(report.eps_hat);
  j["delta_hat"] = report.delta_hat;
  j["satisfied"] = report.satisfied;
  j["claimed"] = ToJson(report.claimed);
  j["one_sided"] = report.one_sided;
  Json witness = Json::object();
  if (report.classical_witness) {
    const auto& w = *report.classical_witness;
    witness = {{"input", w.input},
               {"neighbor", w.neighbor},
               {"outcome", w.outcome},
               {"p", w.p},
               {"q", w.q}};
  } else if (report.quantum_witness) {
    const auto& w = *report.quantum_witness;
    witness = {{"rho", ToJson(w.rho)},
               {"sigma", ToJson(w.sigma)},
               {"projector", ToJson(w.projector)},
               {"accept_rho", w.accept_rho},
               {"accept_sigma", w.accept_sigma},
               {"trace_distance", w.trace_distance}};
  }
  j["witness"] = std::move(witness);
  if (report.search) {
    const auto& s = *report.search;
    j["search"] = {{"grid", Json::array({s.azimuth, s.polar})},
                   {"pairs", s.pairs},
                   {"evaluations", s.evaluations},
                   {"seed", s.seed}};
  } else {
    j["search"] = {{"exhaustive", true}};
  }
  return j;
}

}  // namespace qdpamp::json_io
