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

#include "opacity/reachability.hh"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "opacity/errors.hh"

namespace opacity {

void check_token_bound(const Marking& m, const BoundConfig& cfg) {
  if (cfg.max_token && m.max_tokens() > *cfg.max_token)
    throw BoundExceeded("a marking holds " + std::to_string(m.max_tokens()) +
                        " tokens in one place, above the cap of " +
                        std::to_string(*cfg.max_token));
}

namespace {

void check_state_bound(std::size_t states, const BoundConfig& cfg, const char* what) {
  if (states > cfg.max_states)
    throw BoundExceeded(std::string(what) + " exceeded the cap of " +
                        std::to_string(cfg.max_states) + " states");
}

}  // namespace

Lts build_rg(const LabeledPetriNet& lpn, const BoundConfig& cfg) {
  require_valid(lpn);
  const PetriNet& net = lpn.net;
  Lts rg(lpn.alphabet);
  check_token_bound(lpn.initial, cfg);
  rg.add_initial(rg.add_state(lpn.initial).first);
  check_state_bound(rg.state_count(), cfg, "reachability graph");

  // Insertion order is BFS order, so the state index doubles as the queue.
  for (StateId s = 0; s < rg.state_count(); ++s) {
    const Marking current = rg.payload(s);
    for (TransitionIndex t = 0; t < net.transition_count(); ++t) {
      if (!enabled(net, current, t)) continue;
      Marking next = fire(net, current, t);
      check_token_bound(next, cfg);
      auto [target, inserted] = rg.add_state(next);
      if (inserted) check_state_bound(rg.state_count(), cfg, "reachability graph");
      rg.add_edge({s, lpn.labeling[t], target, t});
    }
  }
  return rg;
}

MarkingSet unobservable_reach(const LabeledPetriNet& lpn, const Marking& m,
                              const BoundConfig& cfg) {
  require_valid(lpn);
  const std::vector<TransitionIndex> silent = lpn.unobservable_transitions();
  MarkingSet seen{m};
  std::deque<Marking> queue{m};
  while (!queue.empty()) {
    Marking current = std::move(queue.front());
    queue.pop_front();
    for (TransitionIndex t : silent) {
      if (!enabled(lpn.net, current, t)) continue;
      Marking next = fire(lpn.net, current, t);
      check_token_bound(next, cfg);
      if (seen.insert(next).second) {
        check_state_bound(seen.size(), cfg, "unobservable reach");
        queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

MarkingSet consistent_markings(const LabeledPetriNet& lpn, const Lts& rg, const Word& w) {
  auto encoded = encode_word(lpn.alphabet, w);
  if (!encoded) return {};
  auto start = rg.find(lpn.initial);
  if (!start) return {};
  StateSet current = epsilon_closure(rg, {*start});
  for (EventId e : *encoded) {
    current = epsilon_closure(rg, step(rg, current, e));
    if (current.empty()) return {};
  }
  return to_marking_set(rg, current);
}

std::set<Word> language_upto(const Lts& lts, const StateSet& sources, std::size_t depth) {
  std::set<Word> words{Word{}};
  if (sources.empty()) return {};
  std::map<Word, StateSet> frontier{{Word{}, epsilon_closure(lts, sources)}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::map<Word, StateSet> next;
    for (const auto& [word, states] : frontier) {
      for (EventId e = 0; e < static_cast<EventId>(lts.events().size()); ++e) {
        StateSet reached = epsilon_closure(lts, step(lts, states, e));
        if (reached.empty()) continue;
        Word longer = word;
        longer.push_back(lts.events()[static_cast<std::size_t>(e)]);
        words.insert(longer);
        next.emplace(std::move(longer), std::move(reached));
      }
    }
    frontier = std::move(next);
  }
  return words;
}

StateSet to_state_set(const Lts& lts, const MarkingSet& markings) {
  StateSet out;
  for (const auto& m : markings)
    if (auto s = lts.find(m)) out.push_back(*s);
  std::sort(out.begin(), out.end());
  return out;
}

MarkingSet to_marking_set(const Lts& lts, const StateSet& states) {
  MarkingSet out;
  for (StateId s : states) out.insert(lts.payload(s));
  return out;
}

}  // namespace opacity
