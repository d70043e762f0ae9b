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

// JSON schemas for datasets, channels, POVMs, mechanism models and audit
// reports. Complex numbers are [re, im]; matrices are arrays of rows; an
// infinite epsilon is the string "inf".

#pragma once

#include <json.hpp>

#include "auditor.hpp"
#include "channels.hpp"
#include "encodings.hpp"
#include "linalg.hpp"
#include "mechanisms.hpp"
#include "model.hpp"
#include "privacy.hpp"

namespace qdpamp::json_io {

using Json = nlohmann::json;

// Parses text; throws a validation error on malformed JSON.
Json ParseText(const std::string& text);

Complex ParseComplex(const Json& j);
Json ToJson(Complex c);

ComplexMatrix ParseMatrix(const Json& j);
Json ToJson(const ComplexMatrix& m);

// Numbers, or the string "inf" for the infinite sentinel.
double ParseEpsilon(const Json& j);
Json EpsilonToJson(double eps);

Dataset ParseDataset(const Json& j);
Json ToJson(const Dataset& x);

ChannelSpec ParseChannelSpec(const Json& j);
Json ToJson(const ChannelSpec& spec);

Povm ParsePovm(const Json& j);

MechanismModel ParseModel(const Json& j);
Json ToJson(const MechanismModel& model);

Json ToJson(const DpParams& dp);
Json ToJson(const AuditReport& report);

}  // namespace qdpamp::json_io
