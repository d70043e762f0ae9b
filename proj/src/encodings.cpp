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

#include "encodings.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "error.hpp"

namespace qdpamp {

std::string_view ToString(EncodingKind kind) {
  switch (kind) {
    case EncodingKind::kBasis: return "basis";
    case EncodingKind::kAmplitude: return "amplitude";
    case EncodingKind::kRotation: return "rotation";
  }
  return "unknown";
}

EncodingKind ParseEncodingKind(std::string_view name) {
  if (name == "basis") return EncodingKind::kBasis;
  if (name == "amplitude") return EncodingKind::kAmplitude;
  if (name == "rotation") return EncodingKind::kRotation;
  Fail(ErrorCode::kValidation,
       "unknown encoding '" + std::string(name) +
           "' (expected basis, amplitude or rotation)");
}

Dataset Dataset::Amplitude(std::vector<Complex> values, double tol) {
  Require(!values.empty(), "amplitude dataset is empty");
  double norm2 = 0;
  for (const auto& v : values) norm2 += std::norm(v);
  Require(std::abs(norm2 - 1.0) <= tol,
          "amplitude dataset is not normalized (sum |x_i|^2 = " +
              std::to_string(norm2) + ")");
  Dataset d(EncodingKind::kAmplitude);
  d.amplitudes_ = std::move(values);
  return d;
}

Dataset Dataset::Basis(std::vector<std::uint64_t> values, int bit_width) {
  Require(!values.empty(), "basis dataset is empty");
  Require(bit_width >= 1, "basis dataset needs bit_width >= 1");
  if (bit_width > kMaxBasisBits) {
    Fail(ErrorCode::kUnsupported, "basis bit_width above " +
                                      std::to_string(kMaxBasisBits));
  }
  for (auto v : values) {
    Require(v < (std::uint64_t{1} << bit_width),
            "basis entry " + std::to_string(v) + " exceeds " +
                std::to_string(bit_width) + " bits");
  }
  Dataset d(EncodingKind::kBasis);
  d.bit_width_ = bit_width;
  d.bitstrings_ = std::move(values);
  return d;
}

Dataset Dataset::Rotation(std::vector<double> angles) {
  Require(!angles.empty(), "rotation dataset is empty");
  for (double a : angles) {
    Require(std::isfinite(a) && a >= 0.0 && a <= 2 * std::numbers::pi,
            "rotation angle outside [0, 2pi]");
  }
  Dataset d(EncodingKind::kRotation);
  d.angles_ = std::move(angles);
  return d;
}

int Dataset::size() const {
  switch (mode_) {
    case EncodingKind::kBasis: return static_cast<int>(bitstrings_.size());
    case EncodingKind::kAmplitude: return static_cast<int>(amplitudes_.size());
    case EncodingKind::kRotation: return static_cast<int>(angles_.size());
  }
  return 0;
}

PureState Encode(const Dataset& x, const EncodingSpec& spec) {
  Require(x.mode() == spec.kind, "dataset mode '" +
                                     std::string(ToString(x.mode())) +
                                     "' does not match encoding '" +
                                     std::string(ToString(spec.kind)) + "'");
  switch (spec.kind) {
    case EncodingKind::kAmplitude: {
      ComplexVector v(x.size());
      for (int i = 0; i < x.size(); ++i) v(i) = x.amplitudes()[i];
      // Re-normalize away the validation slack so downstream invariants hold
      // at full precision.
      v /= v.norm();
      return PureState(std::move(v));
    }
    case EncodingKind::kBasis: {
      const int b = spec.bit_width > 0 ? spec.bit_width : x.bit_width();
      Require(b >= 1 && b <= kMaxBasisBits, "invalid basis bit_width");
      const std::uint64_t dim = std::uint64_t{1} << b;
      ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
      const double weight = 1.0 / std::sqrt(static_cast<double>(x.size()));
      for (auto entry : x.bitstrings()) {
        Require(entry < dim, "basis entry exceeds the encoding bit_width");
        v(static_cast<Eigen::Index>(entry)) += weight;
      }
      // Duplicate entries merge their amplitude, so renormalize.
      v /= v.norm();
      return PureState(std::move(v));
    }
    case EncodingKind::kRotation: {
      const int n = x.size();
      if (n > kMaxRotationEntries) {
        Fail(ErrorCode::kUnsupported, "rotation encoding above " +
                                          std::to_string(kMaxRotationEntries) +
                                          " entries");
      }
      const Eigen::Index dim = Eigen::Index{1} << n;
      ComplexVector v(dim);
      // Bit k of the index (q_1 most significant) selects cos for q_k = 1 and
      // sin for q_k = 0.
      for (Eigen::Index idx = 0; idx < dim; ++idx) {
        double amp = 1.0;
        for (int k = 0; k < n; ++k) {
          const bool q = (idx >> (n - 1 - k)) & 1;
          amp *= q ? std::cos(x.angles()[k]) : std::sin(x.angles()[k]);
        }
        v(idx) = amp;
      }
      return PureState(std::move(v));
    }
  }
  Fail(ErrorCode::kValidation, "unknown encoding kind");
}

double Kernel(const Dataset& x, const Dataset& x_prime,
              const EncodingSpec& spec) {
  Require(x.mode() == x_prime.mode(), "kernel arguments have different modes");
  Require(x.size() == x_prime.size(),
          "kernel arguments have different lengths");
  const PureState a = Encode(x, spec);
  const PureState b = Encode(x_prime, spec);
  Require(a.dim() == b.dim(), "encoded states have different dimensions");
  return std::clamp(std::norm(a.Overlap(b)), 0.0, 1.0);
}

double MinAdjacentKernel(EncodingKind kind, int n,
                         std::optional<double> gamma) {
  Require(n >= 1, "minimum adjacent kernel needs n >= 1");
  switch (kind) {
    case EncodingKind::kBasis: return 1.0 - 1.0 / n;
    case EncodingKind::kAmplitude:
      Require(gamma.has_value(),
              "amplitude minimum adjacent kernel needs gamma");
      Require(*gamma >= 0.0 && *gamma <= 1.0, "gamma outside [0, 1]");
      return 1.0 - *gamma;
    case EncodingKind::kRotation: return 0.0;
  }
  Fail(ErrorCode::kValidation, "unknown encoding kind");
}

double Gamma(const Dataset& x) {
  Require(x.mode() == EncodingKind::kAmplitude,
          "gamma is defined for amplitude datasets only");
  Require(x.size() > 0, "gamma of an empty dataset");
  double best = 0.0;
  for (const auto& v : x.amplitudes()) best = std::max(best, std::norm(v));
  return best;
}

bool AreNeighbors(const Dataset& x, const Dataset& x_prime, double tol) {
  Require(x.mode() == x_prime.mode(), "neighbor test on different modes");
  Require(x.size() == x_prime.size(), "neighbor test on different lengths");
  int differing = 0;
  for (int i = 0; i < x.size(); ++i) {
    bool same = true;
    switch (x.mode()) {
      case EncodingKind::kAmplitude:
        same = std::abs(x.amplitudes()[i] - x_prime.amplitudes()[i]) <= tol;
        break;
      case EncodingKind::kBasis:
        same = x.bitstrings()[i] == x_prime.bitstrings()[i];
        break;
      case EncodingKind::kRotation:
        same = std::abs(x.angles()[i] - x_prime.angles()[i]) <= tol;
        break;
    }
    if (!same) ++differing;
  }
  return differing == 1;
}

}  // namespace qdpamp
