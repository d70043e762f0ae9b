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

// Classical-to-quantum feature maps and the kernels they induce.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "linalg.hpp"

namespace qdpamp {

enum class EncodingKind { kBasis, kAmplitude, kRotation };

std::string_view ToString(EncodingKind kind);
EncodingKind ParseEncodingKind(std::string_view name);

// A classical dataset x = (x_1, ..., x_n). Which payload is populated depends
// on the mode; the factories enforce the per-mode invariants.
class Dataset {
 public:
  static Dataset Amplitude(std::vector<Complex> values,
                           double tol = tol::kInvariant);
  static Dataset Basis(std::vector<std::uint64_t> values, int bit_width);
  static Dataset Rotation(std::vector<double> angles);

  EncodingKind mode() const { return mode_; }
  int size() const;
  int bit_width() const { return bit_width_; }

  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  const std::vector<std::uint64_t>& bitstrings() const { return bitstrings_; }
  const std::vector<double>& angles() const { return angles_; }

 private:
  explicit Dataset(EncodingKind mode) : mode_(mode) {}

  EncodingKind mode_;
  int bit_width_ = 0;
  std::vector<Complex> amplitudes_;
  std::vector<std::uint64_t> bitstrings_;
  std::vector<double> angles_;
};

struct EncodingSpec {
  EncodingKind kind = EncodingKind::kAmplitude;
  int bit_width = 0;  // basis mode only

  static EncodingSpec For(const Dataset& x) { return {x.mode(), x.bit_width()}; }
};

inline constexpr int kMaxBasisBits = 20;
inline constexpr int kMaxRotationEntries = 20;

PureState Encode(const Dataset& x, const EncodingSpec& spec);

// |<phi(x)|phi(x')>|^2, clamped into [0, 1].
double Kernel(const Dataset& x, const Dataset& x_prime,
              const EncodingSpec& spec);

// Closed-form minimum adjacent kernel per encoding: basis 1 - 1/n,
// amplitude 1 - gamma, rotation 0. The basis value assumes distinct entries.
double MinAdjacentKernel(EncodingKind kind, int n,
                         std::optional<double> gamma = std::nullopt);

// max_j |x_j|^2 for amplitude datasets.
double Gamma(const Dataset& x);

// True iff x and x' differ in exactly one entry.
bool AreNeighbors(const Dataset& x, const Dataset& x_prime,
                  double tol = tol::kEntryEquality);

}  // namespace qdpamp
