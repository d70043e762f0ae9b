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

#include "model.hpp"

#include <cmath>
#include <sstream>

#include "error.hpp"
#include "mechanisms.hpp"

namespace qdpamp {

namespace {

// Enumerates all tuples of the given length over [0, domain) in
// lexicographic order.
std::vector<std::vector<int>> AllTuples(int length, int domain) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(length, 0);
  while (true) {
    out.push_back(cur);
    int k = length - 1;
    while (k >= 0 && ++cur[k] == domain) cur[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

std::vector<std::pair<int, int>> HammingOnePairs(
    const std::vector<std::vector<int>>& tuples) {
  std::vector<std::pair<int, int>> pairs;
  for (size_t a = 0; a < tuples.size(); ++a) {
    for (size_t b = a + 1; b < tuples.size(); ++b) {
      int diff = 0;
      for (size_t k = 0; k < tuples[a].size(); ++k) {
        diff += tuples[a][k] != tuples[b][k];
      }
      if (diff == 1) pairs.emplace_back(int(a), int(b));
    }
  }
  return pairs;
}

}  // namespace

int MechanismModel::InputIndex(const std::string& id) const {
  for (size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i] == id) return static_cast<int>(i);
  }
  Fail(ErrorCode::kValidation, "unknown mechanism input '" + id + "'");
}

void MechanismModel::Validate(double tol) const {
  Require(!inputs.empty(), "mechanism model has no inputs");
  Require(!outcomes.empty(), "mechanism model has no outcomes");
  Require(dist.size() == inputs.size(),
          "mechanism model needs one distribution per input");
  for (const auto& row : dist) {
    Require(row.size() == outcomes.size(),
            "distribution length differs from outcome count");
    double sum = 0;
    for (double p : row) {
      Require(std::isfinite(p) && p >= 0.0, "negative or non-finite probability");
      sum += p;
    }
    Require(std::abs(sum - 1.0) <= tol, "distribution does not sum to 1");
  }
  for (const auto& [a, b] : neighbor_pairs) {
    Require(a >= 0 && b >= 0 && a < int(inputs.size()) &&
                b < int(inputs.size()),
            "neighbor pair index out of range");
  }
}

std::string TupleId(const std::vector<int>& values) {
  std::ostringstream os;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  return os.str();
}

std::vector<int> ParseTupleId(const std::string& id) {
  std::vector<int> out;
  std::stringstream ss(id);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      const int v = std::stoi(item, &used);
      Require(used == item.size() && v >= 0, "bad tuple entry '" + item + "'");
      out.push_back(v);
    } catch (const std::logic_error&) {
      Fail(ErrorCode::kValidation, "bad tuple identifier '" + id + "'");
    }
  }
  Require(!out.empty(), "empty tuple identifier");
  return out;
}

MechanismModel RandomizedResponseTupleModel(int m, double epsilon,
                                            double delta) {
  Require(m >= 1 && m <= 12, "randomized response model needs 1 <= m <= 12");
  const auto probs = RandomizedResponseProbabilities(epsilon, delta);
  const auto tuples = AllTuples(m, 2);
  MechanismModel model;
  for (const auto& t : tuples) {
    model.inputs.push_back(TupleId(t));
    model.outcomes.push_back(TupleId(t));
  }
  for (const auto& in : tuples) {
    std::vector<double> row;
    row.reserve(tuples.size());
    for (const auto& out : tuples) {
      double p = 1.0;
      for (int k = 0; k < m; ++k) p *= in[k] == out[k] ? probs.keep : probs.flip;
      row.push_back(p);
    }
    model.dist.push_back(std::move(row));
  }
  model.neighbor_pairs = HammingOnePairs(tuples);
  return model;
}

MechanismModel ConstantTupleModel(int m, int domain_size) {
  Require(m >= 1 && domain_size >= 1, "constant model needs m, domain >= 1");
  const auto tuples = AllTuples(m, domain_size);
  MechanismModel model;
  for (const auto& t : tuples) model.inputs.push_back(TupleId(t));
  model.outcomes = {"c"};
  model.dist.assign(tuples.size(), std::vector<double>{1.0});
  model.neighbor_pairs = HammingOnePairs(tuples);
  return model;
}

}  // namespace qdpamp
