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

// Canonical text output for CLI payloads.

#pragma once

#include <json.hpp>
#include <string>

namespace qdpamp_cli {

using Json = nlohmann::json;

// 12 significant digits with trailing zeros kept; integral values below
// 1e15 print as integers; non-finite values print as null.
std::string FormatNumber(double v);

// Compact JSON with sorted keys and FormatNumber for every number.
std::string EmitJson(const Json& j);

// Two rows: dotted key paths, then values.
std::string EmitCsv(const Json& j);

}  // namespace qdpamp_cli
