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

// Place/transition nets, markings, firing semantics and labeling.

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace opacity {

using TransitionIndex = std::size_t;
using PlaceIndex = std::size_t;

// Index into a label alphabet. kEpsilon marks unobservable transitions and
// silent edges.
using EventId = int;
inline constexpr EventId kEpsilon = -1;

// An observation: a sequence of labels.
using Word = std::vector<std::string>;

// Token count per place. Entries are never negative.
class Marking {
 public:
  Marking() = default;
  explicit Marking(std::vector<int> tokens);
  static Marking zero(std::size_t places) { return Marking(std::vector<int>(places, 0)); }

  std::size_t size() const { return tokens_.size(); }
  int operator[](PlaceIndex p) const { return tokens_[p]; }
  const std::vector<int>& tokens() const { return tokens_; }
  int max_tokens() const;

  auto operator<=>(const Marking&) const = default;
  bool operator==(const Marking&) const = default;

 private:
  std::vector<int> tokens_;
};

struct MarkingHash {
  std::size_t operator()(const Marking& m) const noexcept;
};

// Occurrence count per transition (or per transition of a subset, e.g. the
// unobservable ones for e-vectors).
class ParikhVector {
 public:
  ParikhVector() = default;
  explicit ParikhVector(std::size_t n) : counts_(n, 0) {}
  explicit ParikhVector(std::vector<int> counts);

  std::size_t size() const { return counts_.size(); }
  int operator[](std::size_t i) const { return counts_[i]; }
  void increment(std::size_t i) { ++counts_[i]; }
  const std::vector<int>& counts() const { return counts_; }
  int total() const;

  // Componentwise <=.
  bool dominated_by(const ParikhVector& other) const;

  friend ParikhVector operator+(const ParikhVector& a, const ParikhVector& b);
  auto operator<=>(const ParikhVector&) const = default;
  bool operator==(const ParikhVector&) const = default;

 private:
  std::vector<int> counts_;
};

// Dense net structure. pre and post are indexed [place][transition].
// Construct freely, then check with validate_net before use.
struct PetriNet {
  std::vector<std::string> places;
  std::vector<std::string> transitions;
  std::vector<std::vector<int>> pre;
  std::vector<std::vector<int>> post;

  std::size_t place_count() const { return places.size(); }
  std::size_t transition_count() const { return transitions.size(); }
  int incidence(PlaceIndex p, TransitionIndex t) const { return post[p][t] - pre[p][t]; }
  std::vector<std::vector<int>> incidence_matrix() const;

  std::optional<PlaceIndex> place_index(std::string_view id) const;
  std::optional<TransitionIndex> transition_index(std::string_view id) const;

  // Throws UnknownTransition.
  TransitionIndex require_transition(std::string_view id) const;
};

struct LabeledPetriNet {
  PetriNet net;
  Marking initial;
  std::vector<std::string> alphabet;
  // labeling[t] indexes alphabet, or is kEpsilon.
  std::vector<EventId> labeling;

  bool is_observable(TransitionIndex t) const { return labeling.at(t) != kEpsilon; }
  std::vector<TransitionIndex> observable_transitions() const;
  std::vector<TransitionIndex> unobservable_transitions() const;
  std::optional<EventId> event_index(std::string_view label) const;
  const std::string& label_name(EventId e) const { return alphabet.at(static_cast<std::size_t>(e)); }
};

struct ValidationIssue {
  enum class Kind {
    kDimensionMismatch,
    kNegativeWeight,
    kDuplicateId,
    kMarkingSize,
    kNegativeTokens,
    kLabelingSize,
    kUnknownLabel,
  };
  Kind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  // Labels of the alphabet that no transition carries.
  std::vector<std::string> warnings;

  bool ok() const { return issues.empty(); }
  bool has(ValidationIssue::Kind kind) const;
};

ValidationReport validate_net(const LabeledPetriNet& lpn);

// Throws InvalidNet listing the issues of validate_net, if any.
void require_valid(const LabeledPetriNet& lpn);

bool enabled(const PetriNet& net, const Marking& m, TransitionIndex t);
Marking fire(const PetriNet& net, const Marking& m, TransitionIndex t);
Marking fire_sequence(const PetriNet& net, const Marking& m, std::span<const TransitionIndex> seq);

ParikhVector parikh(std::span<const TransitionIndex> seq, std::size_t n);

Word observe(const LabeledPetriNet& lpn, std::span<const TransitionIndex> seq);

// The net restricted to its unobservable transitions.
struct SubnetView {
  const LabeledPetriNet* parent = nullptr;
  std::vector<TransitionIndex> kept;
  // [place][position in kept]
  std::vector<std::vector<int>> incidence_u;
};

SubnetView unobservable_subnet(const LabeledPetriNet& lpn);

// Topological sort over the bipartite place/transition graph of the view.
bool is_acyclic(const SubnetView& sub);

}  // namespace opacity
