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

// Basis markings and the basis reachability graph (BRG).
//
// A basis marking is the initial marking, or a marking reached from a basis
// marking by firing a minimal explanation (a componentwise-minimal multiset
// of unobservable transitions) followed by the observable transition it
// enables. Every reachable marking lies in the unobservable reach of some
// basis marking, which is what makes the BRG a compact substitute for the
// reachability graph. All operations here require the unobservable subnet to
// be acyclic and throw CyclicUnobservableSubnet otherwise.

#pragma once

#include <utility>
#include <vector>

#include "opacity/lts.hh"
#include "opacity/net.hh"
#include "opacity/reachability.hh"

namespace opacity {

// An unobservable firing sequence after which some observable transition is
// enabled. `e_vector` is indexed by position in unobservable_transitions().
struct Explanation {
  ParikhVector e_vector;
  std::vector<TransitionIndex> witness;

  bool operator==(const Explanation&) const = default;
};

// All explanations of t at m, one witness per distinct e-vector, sorted by
// e-vector.
std::vector<Explanation> explanations(const LabeledPetriNet& lpn, const Marking& m,
                                      TransitionIndex t, const BoundConfig& cfg = {});

// Explanations whose e-vector is minimal under componentwise order.
std::vector<Explanation> minimal_explanations(const LabeledPetriNet& lpn, const Marking& m,
                                              TransitionIndex t, const BoundConfig& cfg = {});

MarkingSet basis_successors(const LabeledPetriNet& lpn, const Marking& m, TransitionIndex t,
                            const BoundConfig& cfg = {});

struct EdgeOrigin {
  TransitionIndex transition;
  ParikhVector e_vector;
  std::vector<TransitionIndex> witness;
};

struct Brg {
  // States are basis markings; one edge per (source, label, target).
  Lts graph;
  // origins[i] justifies graph.edge(i); several (t, y_u) pairs may share an
  // edge.
  std::vector<std::vector<EdgeOrigin>> origins;
};

Brg build_brg(const LabeledPetriNet& lpn, const BoundConfig& cfg = {});

struct Secret {
  MarkingSet members;

  bool contains(const Marking& m) const { return members.count(m) != 0; }
};

struct A1Violation {
  Marking basis_marking;
  Marking escaped;  // in the unobservable reach of basis_marking, not secret
};

struct A1Report {
  std::vector<A1Violation> violations;

  bool holds() const { return violations.empty(); }
};

// Checks that every secret basis marking keeps its unobservable reach inside
// the secret.
A1Report check_assumption_a1(const LabeledPetriNet& lpn, const Brg& brg, const Secret& s,
                             const BoundConfig& cfg = {});

// Splits the basis markings into secret and non-secret ones. `is_secret` is
// the same labeling indexed by BRG state. Verdict checks refuse a partition
// whose a1_verified flag was not set through attest_a1.
struct BasisPartition {
  MarkingSet secret;
  MarkingSet nonsecret;
  std::vector<bool> is_secret;
  bool a1_verified = false;
};

BasisPartition secret_basis_partition(const Brg& brg, const Secret& s);

// Marks the partition as gated by a passing A1 report; throws A1NotVerified
// when the report lists violations.
void attest_a1(BasisPartition& partition, const A1Report& report);

// Throws CyclicUnobservableSubnet unless the unobservable subnet is acyclic.
void require_acyclic_unobservable(const LabeledPetriNet& lpn);

}  // namespace opacity
