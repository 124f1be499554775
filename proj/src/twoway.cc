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

#include "opacity/twoway.hh"

#include <algorithm>
#include <deque>
#include <iterator>
#include <stdexcept>

#include "opacity/errors.hh"

namespace opacity {

std::optional<std::size_t> TwObserver::find(const TwState& q) const {
  auto it = index_.find(q);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> TwObserver::successor(std::size_t i, TaggedEvent e) const {
  for (std::size_t k : out_.at(i))
    if (edges_[k].event == e) return edges_[k].target;
  return std::nullopt;
}

std::size_t TwObserver::estimator_edge_count() const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [](const TwEdge& e) {
    return e.event.side == TaggedEvent::Side::kEstimator;
  }));
}

StateSet TwObserver::intersection(std::size_t i) const {
  const TwState& q = states_.at(i);
  const StateSet& a = observer_.state(q.first);
  const StateSet& b = estimator_.state(q.second);
  StateSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t TwObserver::intern(const TwState& q, bool& inserted) {
  auto [it, fresh] = index_.try_emplace(q, states_.size());
  inserted = fresh;
  if (fresh) {
    states_.push_back(q);
    out_.emplace_back();
  }
  return it->second;
}

void TwObserver::add_edge(std::size_t source, TaggedEvent e, std::size_t target) {
  edges_.push_back({source, e, target});
  out_[source].push_back(edges_.size() - 1);
}

TwObserver build_two_way(const Dfa& bo, const Dfa& be, std::optional<std::size_t> estimator_depth) {
  if (bo.events() != be.events())
    throw std::invalid_argument("observer and estimator use different alphabets");
  TwObserver tw;
  tw.observer_ = bo;
  tw.estimator_ = be;
  tw.mode_ = estimator_depth ? TwObserver::Mode::kKReduced : TwObserver::Mode::kInfinite;
  tw.k_ = estimator_depth.value_or(0);
  const auto events = static_cast<EventId>(bo.events().size());

  bool inserted = false;
  tw.intern({bo.initial(), be.initial()}, inserted);

  // Phase 1: estimator moves, observer component stays at the initial state.
  // Breadth-first, so the recorded depth is the shortest estimator word.
  std::deque<std::pair<std::size_t, std::size_t>> fresh{{0, 0}};
  while (!fresh.empty()) {
    auto [i, depth] = fresh.front();
    fresh.pop_front();
    if (estimator_depth && depth >= *estimator_depth) continue;
    for (EventId e = 0; e < events; ++e) {
      const TwState q = tw.states_[i];
      auto next = be.successor(q.second, e);
      if (!next) continue;
      std::size_t j = tw.intern({q.first, *next}, inserted);
      tw.add_edge(i, {TaggedEvent::Side::kEstimator, e}, j);
      if (inserted) fresh.emplace_back(j, depth + 1);
    }
  }

  // Phase 2: observer moves from every state, including those it discovers.
  for (std::size_t i = 0; i < tw.states_.size(); ++i) {
    for (EventId e = 0; e < events; ++e) {
      const TwState q = tw.states_[i];
      auto next = bo.successor(q.first, e);
      if (!next) continue;
      std::size_t j = tw.intern({*next, q.second}, inserted);
      tw.add_edge(i, {TaggedEvent::Side::kObserver, e}, j);
    }
  }
  return tw;
}

namespace {

OpacityVerdict check(const TwObserver& tw, const Brg& brg, const BasisPartition& labeling,
                     Property property) {
  if (!labeling.a1_verified)
    throw A1NotVerified("secret labeling was not attested against assumption A1");
  if (labeling.is_secret.size() != brg.graph.state_count())
    throw std::invalid_argument("secret labeling does not match the basis reachability graph");
  OpacityVerdict verdict;
  verdict.property = property;
  for (std::size_t i = 0; i < tw.state_count(); ++i) {
    StateSet common = tw.intersection(i);
    if (common.empty()) continue;
    bool all_secret = std::all_of(common.begin(), common.end(),
                                  [&](StateId s) { return labeling.is_secret[s]; });
    if (!all_secret) continue;
    Violation v;
    v.state = tw.state(i);
    v.markings = to_marking_set(brg.graph, common);
    verdict.violations.push_back(std::move(v));
  }
  verdict.opaque = verdict.violations.empty();
  return verdict;
}

}  // namespace

OpacityVerdict check_infinite_step(const TwObserver& tw, const Brg& brg,
                                   const BasisPartition& labeling) {
  if (tw.mode() != TwObserver::Mode::kInfinite)
    throw std::invalid_argument("infinite-step check needs the modified two-way observer");
  return check(tw, brg, labeling, Property::infinite());
}

OpacityVerdict check_k_step(const TwObserver& tw, const Brg& brg, const BasisPartition& labeling) {
  if (tw.mode() != TwObserver::Mode::kKReduced)
    throw std::invalid_argument("K-step check needs a K-reduced two-way observer");
  return check(tw, brg, labeling, Property::k_step(tw.k()));
}

std::vector<Witness> extract_witness(const OpacityVerdict& verdict, const TwObserver& tw) {
  if (verdict.opaque || verdict.violations.empty())
    throw NoViolation("the verdict is opaque; there is nothing to witness");

  // Breadth-first parent tree from the initial state.
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_edge(tw.state_count(), kUnseen);
  std::vector<bool> seen(tw.state_count(), false);
  std::deque<std::size_t> queue{tw.initial()};
  seen[tw.initial()] = true;
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t k : tw.out_edges(i)) {
      std::size_t j = tw.edges()[k].target;
      if (seen[j]) continue;
      seen[j] = true;
      parent_edge[j] = k;
      queue.push_back(j);
    }
  }

  const auto& events = tw.observer().events();
  std::vector<Witness> out;
  for (const Violation& v : verdict.violations) {
    if (!v.state) continue;
    auto target = tw.find(*v.state);
    if (!target || !seen[*target])
      throw std::invalid_argument("violation state is not part of this two-way observer");
    Witness w;
    w.state = *v.state;
    for (std::size_t i = *target; i != tw.initial();) {
      const TwEdge& e = tw.edges()[parent_edge[i]];
      w.path.push_back(e.event);
      i = e.source;
    }
    std::reverse(w.path.begin(), w.path.end());
    for (const TaggedEvent& e : w.path) {
      const std::string& label = events[static_cast<std::size_t>(e.event)];
      (e.side == TaggedEvent::Side::kObserver ? w.observer_word : w.estimator_word).push_back(label);
    }
    w.revealed_suffix.assign(w.estimator_word.rbegin(), w.estimator_word.rend());
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace opacity
