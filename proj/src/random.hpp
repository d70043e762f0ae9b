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

#include <cstdint>

namespace qdpamp {

// Counter-based pseudo-random stream. Draw k of a stream keyed by `key` is a
// pure function of (key, k), so substreams derived by Split() are independent
// of the order in which they are consumed.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : key_(Mix(seed ^ kSeedSalt)) {}

  std::uint64_t NextU64() { return Mix(key_ ^ Mix(counter_++ + kGolden)); }

  // Uniform on the open interval (0, 1) with 53 bits of resolution.
  double NextUniform() {
    return (static_cast<double>(NextU64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Independent child stream; does not advance this stream.
  RandomStream Split(std::uint64_t stream_id) const {
    RandomStream child(0);
    child.key_ = Mix(key_ + Mix(stream_id + kGolden) + kSplitSalt);
    return child;
  }

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  static constexpr std::uint64_t kSeedSalt = 0x243f6a8885a308d3ULL;
  static constexpr std::uint64_t kSplitSalt = 0x13198a2e03707344ULL;

  // SplitMix64 finalizer.
  static std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace qdpamp
