// Copyright 2026 The lpn-opacity Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

// Command layer shared by the lpn-opacity tool and the Python module.
//
// Exit codes: 0 opaque, 1 not opaque, 2 input or assumption error (parse
// errors, dangling references, cyclic unobservable subnet, A1 violation),
// 3 state or token cap exceeded.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "opacity/document.hh"
#include "opacity/reachability.hh"
#include "opacity/verdict.hh"

namespace opacity {

enum class ExitCode : int {
  kOpaque = 0,
  kNotOpaque = 1,
  kInputError = 2,
  kBoundExceeded = 3,
};

// Command-line overrides; unset fields fall back to the document options.
struct RunSettings {
  Property property = Property::infinite();
  std::optional<std::size_t> depth;
  std::optional<std::size_t> max_states;
  std::optional<int> max_token;
};

struct CommandResult {
  int exit_code = 0;
  nlohmann::ordered_json report;
  std::string text;
};

BoundConfig bound_config(const NetDocument& doc, const RunSettings& settings);

CommandResult cmd_check(const NetDocument& doc, const RunSettings& settings);
CommandResult cmd_oracle(const NetDocument& doc, const RunSettings& settings);

enum class Artifact { kRg, kBrg, kObserver, kEstimator, kTw, kKtw };

std::optional<Artifact> parse_artifact(std::string_view name);

struct ExportResult {
  int exit_code = 0;
  std::string dot;
  std::string error;
};

// kKtw uses settings.property.k as K.
ExportResult cmd_export(const NetDocument& doc, Artifact artifact, const RunSettings& settings);

// Report for failures that happen before a command runs (unreadable file,
// parse errors).
CommandResult error_result(std::string_view command, ExitCode code, std::string_view kind,
                           const std::string& message);

// Maps the library's exception types onto exit codes.
CommandResult result_from_exception(std::string_view command, const std::exception& e);

}  // namespace opacity
