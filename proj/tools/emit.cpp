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

#include "emit.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <utility>
#include <vector>

namespace qdpamp_cli {

namespace {

void Write(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      // nlohmann::json objects are std::map backed, so iteration is sorted.
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        Write(value, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ',';
        Write(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      out += FormatNumber(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

void Flatten(const Json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& cells) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      Flatten(value, prefix.empty() ? key : prefix + "." + key, cells);
    }
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) {
      Flatten(j[i], prefix + "." + std::to_string(i), cells);
    }
  } else if (j.is_string()) {
    cells.emplace_back(prefix, j.get<std::string>());
  } else {
    cells.emplace_back(prefix, EmitJson(j));
  }
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string FormatNumber(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return "0";
  char buf[64];
  if (std::fabs(v) < 1e15 && v == std::trunc(v)) {
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
  }
  // The exponent after rounding to 12 significant digits.
  std::snprintf(buf, sizeof buf, "%.11e", v);
  const int exponent = std::atoi(std::strchr(buf, 'e') + 1);
  if (exponent >= -5 && exponent < 12) {
    std::snprintf(buf, sizeof buf, "%.*f", 11 - exponent, v);
  }
  return buf;
}

std::string EmitJson(const Json& j) {
  std::string out;
  Write(j, out);
  return out;
}

std::string EmitCsv(const Json& j) {
  std::vector<std::pair<std::string, std::string>> cells;
  Flatten(j, "", cells);
  std::string header;
  std::string row;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) {
      header += ',';
      row += ',';
    }
    header += CsvField(cells[i].first);
    row += CsvField(cells[i].second);
  }
  return header + "\n" + row + "\n";
}

}  // namespace qdpamp_cli
