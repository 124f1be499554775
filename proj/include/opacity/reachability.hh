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
#include <set>

#include "opacity/lts.hh"
#include "opacity/net.hh"

namespace opacity {

using MarkingSet = std::set<Marking>;

// Operational stand-in for boundedness: exploration fails with BoundExceeded
// once either cap is crossed.
struct BoundConfig {
  std::size_t max_states = 100000;
  std::optional<int> max_token;
};

// Breadth-first reachability graph. States are numbered in discovery order,
// successors of a marking are expanded in transition declaration order.
// Unobservable firings become kEpsilon edges; every edge records its
// transition.
Lts build_rg(const LabeledPetriNet& lpn, const BoundConfig& cfg = {});

MarkingSet unobservable_reach(const LabeledPetriNet& lpn, const Marking& m,
                              const BoundConfig& cfg = {});

// Markings reachable from the initial one by a firing sequence observed as w.
MarkingSet consistent_markings(const LabeledPetriNet& lpn, const Lts& rg, const Word& w);

// Observation words of length <= depth generated from any of `sources`.
std::set<Word> language_upto(const Lts& lts, const StateSet& sources, std::size_t depth);

// Throws BoundExceeded if m breaks the token cap.
void check_token_bound(const Marking& m, const BoundConfig& cfg);

StateSet to_state_set(const Lts& lts, const MarkingSet& markings);
MarkingSet to_marking_set(const Lts& lts, const StateSet& states);

}  // namespace opacity
