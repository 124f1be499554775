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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opacity/lts.hh"

namespace opacity {

using DfaState = std::size_t;

/// Deterministic automaton produced by subset construction.
///
/// Each state is a canonical (sorted) set of states of the underlying Lts.
/// State 0 is the initial state; the remaining states are numbered in
/// breadth-first discovery order with events visited in alphabet order, so
/// numbering is reproducible. Transitions exist only towards non-empty sets.
class Dfa {
 public:
  const std::vector<std::string>& events() const { return events_; }
  std::size_t state_count() const { return states_.size(); }
  const StateSet& state(DfaState q) const { return states_.at(q); }
  const std::vector<StateSet>& states() const { return states_; }
  DfaState initial() const { return 0; }

  std::optional<DfaState> successor(DfaState q, EventId e) const;
  std::optional<DfaState> find(const StateSet& set) const;
  std::size_t transition_count() const;

 private:
  friend Dfa observer(const Lts& lts, const StateSet& init);

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::string> events_;
  std::vector<StateSet> states_;
  std::map<StateSet, DfaState> index_;
  // delta_[q][e], kNone when undefined.
  std::vector<std::vector<std::size_t>> delta_;
};

// Same states, every edge turned around, every state initial.
Lts reverse(const Lts& lts);

// Subset construction from the epsilon closure of `init`. Throws EmptyInitial.
Dfa observer(const Lts& lts, const StateSet& init);

std::optional<DfaState> run_state(const Dfa& dfa, const std::vector<EventId>& word);

// State-set reached by w, or nullopt when some step is undefined (including
// labels outside the alphabet).
std::optional<StateSet> run(const Dfa& dfa, const Word& w);

}  // namespace opacity
