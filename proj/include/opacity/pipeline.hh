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

#include <vector>

#include "opacity/automata.hh"
#include "opacity/basis.hh"
#include "opacity/twoway.hh"
#include "opacity/verdict.hh"

namespace opacity {

// Everything built while deciding one property.
struct Analysis {
  Brg brg;
  A1Report a1;
  BasisPartition labeling;
  Dfa observer;   // of the BRG from the initial marking
  Dfa estimator;  // of the reversed BRG from all basis markings
  TwObserver tw;  // modified, or K-reduced for bounded properties
  OpacityVerdict verdict;
  std::vector<Witness> witnesses;
};

// validate -> acyclicity gate -> BRG -> A1 gate -> observers -> two-way
// observer -> verdict. Throws InvalidNet, CyclicUnobservableSubnet,
// A1NotVerified (message lists the offending markings) or BoundExceeded.
Analysis analyze(const LabeledPetriNet& lpn, const Secret& secret, const Property& property,
                 const BoundConfig& cfg = {});

}  // namespace opacity
