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

// JSON net documents.
//
//   {
//     "schema_version": "1",
//     "places": [{"id": "p1", "initial_tokens": 1}, ...],
//     "transitions": [
//       {"id": "t1", "label": null, "pre": {"p1": 1}, "post": {"p2": 1}}, ...
//     ],
//     "secret": [{"p3": 1}, {"p5": 1}],
//     "options": {"max_states": 100000, "max_token": 3, "depth": 10}
//   }
//
// A null label marks an unobservable transition. Secret markings list the
// non-zero places only. "secret" and "options" (and every option) may be
// omitted; any other unknown key is an error.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opacity/basis.hh"
#include "opacity/net.hh"

namespace opacity {

inline constexpr std::string_view kSchemaVersion = "1";

struct NetDocument {
  struct Place {
    std::string id;
    int initial_tokens = 0;
    bool operator==(const Place&) const = default;
  };
  struct Transition {
    std::string id;
    std::optional<std::string> label;
    std::map<std::string, int> pre;
    std::map<std::string, int> post;
    bool operator==(const Transition&) const = default;
  };
  struct Options {
    std::optional<std::size_t> max_states;
    std::optional<int> max_token;
    std::optional<std::size_t> depth;
    bool operator==(const Options&) const = default;
  };

  std::string schema_version{kSchemaVersion};
  std::vector<Place> places;
  std::vector<Transition> transitions;
  std::vector<std::map<std::string, int>> secret;
  Options options;

  bool operator==(const NetDocument&) const = default;
};

// Strict parse. Throws ParseError (syntax, types, unknown or missing fields,
// empty labels) carrying the line for syntax errors and a field path
// otherwise.
NetDocument parse_net_file(std::string_view text);

std::string serialize(const NetDocument& doc);

struct Model {
  LabeledPetriNet lpn;
  Secret secret;
};

// Resolves ids. Throws SemanticError for duplicate ids or references to
// undeclared places. The alphabet lists labels in order of first use.
Model to_model(const NetDocument& doc);

NetDocument from_model(const LabeledPetriNet& lpn, const Secret& secret);

}  // namespace opacity
