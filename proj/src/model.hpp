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

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qdpamp {

// A finite mechanism given by its exact outcome distribution on every input.
struct MechanismModel {
  std::vector<std::string> inputs;
  std::vector<std::string> outcomes;
  // dist[i][o] = Pr[A(inputs[i]) = outcomes[o]].
  std::vector<std::vector<double>> dist;
  // Index pairs into `inputs`; the audit checks both directions.
  std::vector<std::pair<int, int>> neighbor_pairs;

  int InputIndex(const std::string& id) const;
  // Throws on shape errors or distributions not summing to 1 within tol.
  void Validate(double tol = 1e-12) const;
};

// Per-position randomized response on m-bit tuples. Inputs and outcomes are
// comma-separated bit tuples, neighbours differ in one position.
MechanismModel RandomizedResponseTupleModel(int m, double epsilon,
                                            double delta = 0.0);

// Same output distribution on every input.
MechanismModel ConstantTupleModel(int m, int domain_size);

// Comma-joined tuple identifier, e.g. {0, 1, 1} -> "0,1,1".
std::string TupleId(const std::vector<int>& values);
std::vector<int> ParseTupleId(const std::string& id);

}  // namespace qdpamp
