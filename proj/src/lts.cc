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

#include "opacity/lts.hh"

#include <algorithm>
#include <stdexcept>

namespace opacity {

std::pair<StateId, bool> Lts::add_state(const Marking& payload) {
  auto [it, inserted] = index_.try_emplace(payload, payloads_.size());
  if (inserted) {
    payloads_.push_back(payload);
    out_.emplace_back();
  }
  return {it->second, inserted};
}

std::size_t Lts::add_edge(const LtsEdge& edge) {
  if (edge.source >= state_count() || edge.target >= state_count())
    throw std::out_of_range("edge endpoint is not a state");
  if (edge.event != kEpsilon &&
      (edge.event < 0 || static_cast<std::size_t>(edge.event) >= events_.size()))
    throw std::out_of_range("edge label is not an event");
  edges_.push_back(edge);
  out_[edge.source].push_back(edges_.size() - 1);
  return edges_.size() - 1;
}

void Lts::add_initial(StateId s) {
  if (s >= state_count()) throw std::out_of_range("initial state is not a state");
  auto it = std::lower_bound(initial_.begin(), initial_.end(), s);
  if (it == initial_.end() || *it != s) initial_.insert(it, s);
}

std::optional<EventId> Lts::event_index(std::string_view label) const {
  auto it = std::find(events_.begin(), events_.end(), label);
  if (it == events_.end()) return std::nullopt;
  return static_cast<EventId>(it - events_.begin());
}

std::optional<StateId> Lts::find(const Marking& payload) const {
  auto it = index_.find(payload);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Lts::find_edge(StateId source, EventId event, StateId target) const {
  for (std::size_t i : out_.at(source)) {
    const LtsEdge& e = edges_[i];
    if (e.event == event && e.target == target) return i;
  }
  return std::nullopt;
}

StateSet epsilon_closure(const Lts& lts, StateSet states) {
  std::vector<bool> seen(lts.state_count(), false);
  std::vector<StateId> stack;
  for (StateId s : states) {
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (std::size_t i : lts.out_edges(s)) {
      const LtsEdge& e = lts.edge(i);
      if (e.event == kEpsilon && !seen[e.target]) {
        seen[e.target] = true;
        stack.push_back(e.target);
      }
    }
  }
  StateSet out;
  for (StateId s = 0; s < seen.size(); ++s)
    if (seen[s]) out.push_back(s);
  return out;
}

StateSet step(const Lts& lts, const StateSet& states, EventId event) {
  StateSet out;
  for (StateId s : states)
    for (std::size_t i : lts.out_edges(s)) {
      const LtsEdge& e = lts.edge(i);
      if (e.event == event) out.push_back(e.target);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::vector<EventId>> encode_word(const std::vector<std::string>& events,
                                                const Word& w) {
  std::vector<EventId> out;
  out.reserve(w.size());
  for (const auto& label : w) {
    auto it = std::find(events.begin(), events.end(), label);
    if (it == events.end()) return std::nullopt;
    out.push_back(static_cast<EventId>(it - events.begin()));
  }
  return out;
}

}  // namespace opacity
