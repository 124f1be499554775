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

// Two-way observers over a basis reachability graph.
//
// A two-way state pairs an observer state X̂ (basis markings consistent with
// an observation u) with an estimator state X̄ (basis markings from which the
// reverse of an estimator word v can be generated). Their intersection holds
// the markings the system may have been in after u given that reverse(v) was
// observed next; if it is non-empty and entirely secret, the secret leaks.
//
// The modified construction runs in two phases: estimator moves (λ,e) from
// the initial state with the observer component pinned to X̂_0, then observer
// moves (e,λ) from every state gathered so far. The K-reduced variant limits
// the first phase to estimator words of length at most K.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opacity/automata.hh"
#include "opacity/basis.hh"
#include "opacity/verdict.hh"

namespace opacity {

struct TaggedEvent {
  enum class Side {
    kObserver,   // (e, λ): advances the first component
    kEstimator,  // (λ, e): advances the second component
  };
  Side side;
  EventId event;

  auto operator<=>(const TaggedEvent&) const = default;
};

struct TwEdge {
  std::size_t source;
  TaggedEvent event;
  std::size_t target;
};

class TwObserver {
 public:
  enum class Mode { kInfinite, kKReduced };

  const Dfa& observer() const { return observer_; }
  const Dfa& estimator() const { return estimator_; }
  Mode mode() const { return mode_; }
  // The bound K of a K-reduced observer.
  std::size_t k() const { return k_; }

  std::size_t state_count() const { return states_.size(); }
  const TwState& state(std::size_t i) const { return states_.at(i); }
  const std::vector<TwState>& states() const { return states_; }
  std::optional<std::size_t> find(const TwState& q) const;
  std::size_t initial() const { return 0; }

  const std::vector<TwEdge>& edges() const { return edges_; }
  const std::vector<std::size_t>& out_edges(std::size_t i) const { return out_.at(i); }
  std::optional<std::size_t> successor(std::size_t i, TaggedEvent e) const;
  // Number of (λ,e) edges, all added by the first phase.
  std::size_t estimator_edge_count() const;

  // q(1) ∩ q(2), as BRG state indices.
  StateSet intersection(std::size_t i) const;

 private:
  friend TwObserver build_two_way(const Dfa&, const Dfa&, std::optional<std::size_t>);

  std::size_t intern(const TwState& q, bool& inserted);
  void add_edge(std::size_t source, TaggedEvent e, std::size_t target);

  Dfa observer_;
  Dfa estimator_;
  Mode mode_ = Mode::kInfinite;
  std::size_t k_ = 0;
  std::vector<TwState> states_;
  std::map<TwState, std::size_t> index_;
  std::vector<TwEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;
};

// estimator_depth = nullopt builds the modified two-way observer, otherwise
// the K-reduced one with K = *estimator_depth.
TwObserver build_two_way(const Dfa& bo, const Dfa& be, std::optional<std::size_t> estimator_depth);

inline TwObserver build_modified_tw(const Dfa& bo, const Dfa& be) {
  return build_two_way(bo, be, std::nullopt);
}

inline TwObserver build_k_reduced_tw(const Dfa& bo, const Dfa& be, std::size_t k) {
  return build_two_way(bo, be, k);
}

// A violation is a state whose intersection is non-empty and entirely
// secret. Both checks throw A1NotVerified unless the labeling was attested,
// and std::invalid_argument when the observer has the wrong mode.
OpacityVerdict check_infinite_step(const TwObserver& tw, const Brg& brg,
                                   const BasisPartition& labeling);
OpacityVerdict check_k_step(const TwObserver& tw, const Brg& brg, const BasisPartition& labeling);

struct Witness {
  TwState state;
  std::vector<TaggedEvent> path;
  Word observer_word;   // u: the observation that reveals the secret
  Word estimator_word;  // v: read by the estimator
  Word revealed_suffix;  // reverse(v): what is observed after u
};

// Shortest tagged path from the initial state to every violating state.
// Throws NoViolation for opaque verdicts.
std::vector<Witness> extract_witness(const OpacityVerdict& verdict, const TwObserver& tw);

}  // namespace opacity
