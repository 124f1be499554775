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

// Definition-level opacity checks on the reachability graph.
//
// A system is infinite-step opaque when, for every observation w, every
// suffix generated from a secret marking consistent with w is also generated
// from some non-secret marking consistent with w; K-step opacity asks the
// same for suffixes of length at most K. These checks evaluate that language
// containment directly, bounded in the length of w (and of the suffix for the
// infinite case). A "not opaque" verdict is definitive; an "opaque" verdict is
// certified only up to OpacityVerdict::certified_depth.

#pragma once

#include <cstddef>
#include <optional>

#include "opacity/basis.hh"
#include "opacity/lts.hh"
#include "opacity/verdict.hh"

namespace opacity {

struct SecretPartition {
  MarkingSet secret_consistent;     // S(w)
  MarkingSet nonsecret_consistent;  // consistent with w, not secret
};

SecretPartition secret_partition(const LabeledPetriNet& lpn, const Lts& rg, const Secret& s,
                                 const Word& w);

// Shortest word of length <= depth generated from `included` but not from
// `container`, if any. Words are compared after erasing silent edges.
std::optional<Word> find_uncontained_word(const Lts& lts, const StateSet& included,
                                          const StateSet& container, std::size_t depth);

OpacityVerdict brute_force_infinite_step(const LabeledPetriNet& lpn, const Secret& s,
                                         std::size_t depth, const BoundConfig& cfg = {});

// Requires depth >= k.
OpacityVerdict brute_force_k_step(const LabeledPetriNet& lpn, const Secret& s, std::size_t k,
                                  std::size_t depth, const BoundConfig& cfg = {});

// Dispatches on the property; current-state is K = 0.
OpacityVerdict brute_force(const LabeledPetriNet& lpn, const Secret& s, const Property& property,
                           std::size_t depth, const BoundConfig& cfg = {});

// The same bounded containment evaluated on the BRG with secret basis sets.
// Throws A1NotVerified when the secret breaks assumption A1.
OpacityVerdict containment_check_brg(const LabeledPetriNet& lpn, const Brg& brg, const Secret& s,
                                     const Property& property, std::size_t depth,
                                     const BoundConfig& cfg = {});

// Reachability-graph size plus K: the default bound on observation length.
std::size_t default_oracle_depth(const Lts& rg, const Property& property);

}  // namespace opacity
