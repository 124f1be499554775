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

#include "opacity/oracle.hh"

#include <deque>
#include <set>
#include <stdexcept>
#include <utility>

#include "opacity/automata.hh"
#include "opacity/errors.hh"
#include "opacity/reachability.hh"

namespace opacity {

SecretPartition secret_partition(const LabeledPetriNet& lpn, const Lts& rg, const Secret& s,
                                 const Word& w) {
  SecretPartition out;
  for (const Marking& m : consistent_markings(lpn, rg, w))
    (s.contains(m) ? out.secret_consistent : out.nonsecret_consistent).insert(m);
  return out;
}

std::optional<Word> find_uncontained_word(const Lts& lts, const StateSet& included,
                                          const StateSet& container, std::size_t depth) {
  if (included.empty()) return std::nullopt;
  struct Node {
    StateSet inner;
    StateSet outer;
    Word word;
  };
  Node start{epsilon_closure(lts, included), epsilon_closure(lts, container), {}};
  if (start.outer.empty()) return Word{};

  std::set<std::pair<StateSet, StateSet>> seen{{start.inner, start.outer}};
  std::deque<Node> queue{std::move(start)};
  const auto events = static_cast<EventId>(lts.events().size());
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (node.word.size() >= depth) continue;
    for (EventId e = 0; e < events; ++e) {
      StateSet inner = epsilon_closure(lts, step(lts, node.inner, e));
      if (inner.empty()) continue;
      StateSet outer = epsilon_closure(lts, step(lts, node.outer, e));
      Word word = node.word;
      word.push_back(lts.events()[static_cast<std::size_t>(e)]);
      if (outer.empty()) return word;
      if (seen.emplace(inner, outer).second)
        queue.push_back({std::move(inner), std::move(outer), std::move(word)});
    }
  }
  return std::nullopt;
}

namespace {

// Walks the observer of `lts` breadth-first up to `depth` events; for every
// reached estimate, splits it by `is_secret` and looks for a suffix of
// length <= suffix_bound generated only by the secret part.
template <typename IsSecret>
OpacityVerdict bounded_containment(const Lts& lts, IsSecret is_secret, Property property,
                                   std::size_t depth, std::size_t suffix_bound) {
  OpacityVerdict verdict;
  verdict.property = property;
  verdict.certified_depth = depth;

  const Dfa obs = observer(lts, lts.initial());
  std::vector<std::optional<Word>> prefix(obs.state_count());
  prefix[obs.initial()] = Word{};
  std::deque<DfaState> queue{obs.initial()};
  while (!queue.empty()) {
    DfaState q = queue.front();
    queue.pop_front();
    const Word& w = *prefix[q];

    StateSet secret, other;
    for (StateId s : obs.state(q)) (is_secret(s) ? secret : other).push_back(s);
    if (auto suffix = find_uncontained_word(lts, secret, other, suffix_bound)) {
      Violation v;
      v.markings = to_marking_set(lts, secret);
      v.prefix = w;
      v.suffix = std::move(*suffix);
      verdict.violations.push_back(std::move(v));
    }

    if (w.size() >= depth) continue;
    for (EventId e = 0; e < static_cast<EventId>(obs.events().size()); ++e) {
      auto next = obs.successor(q, e);
      if (!next || prefix[*next]) continue;
      Word longer = w;
      longer.push_back(obs.events()[static_cast<std::size_t>(e)]);
      prefix[*next] = std::move(longer);
      queue.push_back(*next);
    }
  }
  verdict.opaque = verdict.violations.empty();
  return verdict;
}

std::size_t suffix_bound(const Property& property, std::size_t depth) {
  switch (property.kind) {
    case Property::Kind::kInfinite: return depth;
    case Property::Kind::kKStep: return property.k;
    case Property::Kind::kCurrentState: return 0;
  }
  return depth;
}

}  // namespace

OpacityVerdict brute_force(const LabeledPetriNet& lpn, const Secret& s, const Property& property,
                           std::size_t depth, const BoundConfig& cfg) {
  const std::size_t bound = suffix_bound(property, depth);
  if (property.bounded() && depth < bound)
    throw std::invalid_argument("oracle depth must be at least K");
  const Lts rg = build_rg(lpn, cfg);
  return bounded_containment(
      rg, [&](StateId st) { return s.contains(rg.payload(st)); }, property, depth, bound);
}

OpacityVerdict brute_force_infinite_step(const LabeledPetriNet& lpn, const Secret& s,
                                         std::size_t depth, const BoundConfig& cfg) {
  return brute_force(lpn, s, Property::infinite(), depth, cfg);
}

OpacityVerdict brute_force_k_step(const LabeledPetriNet& lpn, const Secret& s, std::size_t k,
                                  std::size_t depth, const BoundConfig& cfg) {
  return brute_force(lpn, s, Property::k_step(k), depth, cfg);
}

OpacityVerdict containment_check_brg(const LabeledPetriNet& lpn, const Brg& brg, const Secret& s,
                                     const Property& property, std::size_t depth,
                                     const BoundConfig& cfg) {
  const A1Report a1 = check_assumption_a1(lpn, brg, s, cfg);
  if (!a1.holds())
    throw A1NotVerified("assumption A1 fails; the basis reachability graph cannot decide opacity");
  const std::size_t bound = suffix_bound(property, depth);
  if (property.bounded() && depth < bound)
    throw std::invalid_argument("oracle depth must be at least K");
  const Lts& graph = brg.graph;
  return bounded_containment(
      graph, [&](StateId st) { return s.contains(graph.payload(st)); }, property, depth, bound);
}

std::size_t default_oracle_depth(const Lts& rg, const Property& property) {
  return rg.state_count() + (property.kind == Property::Kind::kKStep ? property.k : 0);
}

}  // namespace opacity
