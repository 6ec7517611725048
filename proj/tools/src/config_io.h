// Copyright 2026 The qfsm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef QFSM_TOOLS_CONFIG_IO_H
#define QFSM_TOOLS_CONFIG_IO_H

#include <string>
#include <string_view>

#include "json.hpp"

#include "qfsm/config.h"

namespace qfsm::cli {

using Json = nlohmann::ordered_json;

/// Strict JSON config reader. Every key is optional and defaults to the SimulationConfig default;
/// unknown keys, wrong types and invariant violations are all collected into a single ConfigError.
/// Malformed JSON raises ConfigError as well.
SimulationConfig parse_config(std::string_view text);

/// Emits every field, so parse_config(serialize_config(c)) == c.
Json config_to_json(const SimulationConfig& cfg);
std::string serialize_config(const SimulationConfig& cfg);

/// Reads a file and parses it. Throws IoError when the file cannot be read.
SimulationConfig load_config(const std::string& path);

const char* format_name(OutputFormat format);
/// "csv" or "json"; throws ConfigError otherwise.
OutputFormat parse_format(std::string_view name);

}  // namespace qfsm::cli

#endif  // QFSM_TOOLS_CONFIG_IO_H
