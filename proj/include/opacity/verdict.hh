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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "opacity/reachability.hh"

namespace opacity {

struct Property {
  enum class Kind { kInfinite, kKStep, kCurrentState };
  Kind kind = Kind::kInfinite;
  std::size_t k = 0;  // meaningful for kKStep; 0 for kCurrentState

  static Property infinite() { return {Kind::kInfinite, 0}; }
  static Property k_step(std::size_t k) { return {Kind::kKStep, k}; }
  static Property current_state() { return {Kind::kCurrentState, 0}; }

  bool bounded() const { return kind != Kind::kInfinite; }
  std::string name() const;

  bool operator==(const Property&) const = default;
};

// Index pair into the observer (first) and the initial-state estimator
// (second).
struct TwState {
  std::size_t first = 0;
  std::size_t second = 0;

  auto operator<=>(const TwState&) const = default;
};

struct Violation {
  // Set for verdicts read off a two-way observer.
  std::optional<TwState> state;
  // Markings certainly visited: q(1) ∩ q(2) for two-way observers, S(w) for
  // the definition-level oracle.
  MarkingSet markings;
  // Oracle verdicts: the observation w and a suffix generated from S(w) that
  // no non-secret consistent marking generates.
  Word prefix;
  Word suffix;
};

struct OpacityVerdict {
  bool opaque = true;
  Property property;
  std::vector<Violation> violations;
  // Bounded-depth verdicts ("opaque" only certified up to this many events).
  std::optional<std::size_t> certified_depth;
};

}  // namespace opacity
