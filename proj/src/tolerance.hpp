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

namespace qdpamp::tol {

// Default tolerances. Every routine taking a tolerance argument defaults to
// one of these.
inline constexpr double kHermitian = 1e-12;
inline constexpr double kInvariant = 1e-10;
inline constexpr double kIdentity = 1e-9;
inline constexpr double kEntryEquality = 1e-12;

}  // namespace qdpamp::tol
