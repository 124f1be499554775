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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "opacity/net.hh"

namespace opacity {

using StateId = std::size_t;

// Sorted, duplicate-free list of state indices.
using StateSet = std::vector<StateId>;

struct LtsEdge {
  StateId source;
  EventId event;  // kEpsilon for silent edges
  StateId target;
  // Net transition that produced the edge, when there is one.
  std::optional<TransitionIndex> transition;

  bool operator==(const LtsEdge&) const = default;
};

/// Labeled transition system whose states carry marking payloads.
///
/// Serves as the reachability graph, the basis reachability graph and their
/// reversals. Payloads are unique; `add_state` returns the existing index for
/// a payload seen before. States keep their insertion order.
class Lts {
 public:
  explicit Lts(std::vector<std::string> events = {}) : events_(std::move(events)) {}

  // Returns the state index and whether it was newly inserted.
  std::pair<StateId, bool> add_state(const Marking& payload);
  std::size_t add_edge(const LtsEdge& edge);
  void add_initial(StateId s);

  const std::vector<std::string>& events() const { return events_; }
  std::optional<EventId> event_index(std::string_view label) const;

  std::size_t state_count() const { return payloads_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Marking& payload(StateId s) const { return payloads_.at(s); }
  const std::vector<Marking>& payloads() const { return payloads_; }
  std::optional<StateId> find(const Marking& payload) const;

  std::span<const LtsEdge> edges() const { return edges_; }
  const LtsEdge& edge(std::size_t i) const { return edges_.at(i); }
  // Edge indices leaving s, in insertion order.
  const std::vector<std::size_t>& out_edges(StateId s) const { return out_.at(s); }
  std::optional<std::size_t> find_edge(StateId source, EventId event, StateId target) const;

  const StateSet& initial() const { return initial_; }

 private:
  std::vector<std::string> events_;
  std::vector<Marking> payloads_;
  std::map<Marking, StateId> index_;
  std::vector<LtsEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  StateSet initial_;
};

StateSet epsilon_closure(const Lts& lts, StateSet states);

// States reached from `states` by one edge labeled `event` (no closure).
StateSet step(const Lts& lts, const StateSet& states, EventId event);

// Maps a word onto event indices; nullopt if some label is not an event.
std::optional<std::vector<EventId>> encode_word(const std::vector<std::string>& events,
                                                const Word& w);

}  // namespace opacity
