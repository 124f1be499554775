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

#include <string>

#include "opacity/lts.hh"
#include "opacity/net.hh"
#include "opacity/reachability.hh"

namespace opacity {

// Weighted sum of places: "p3", "2p1+p4", or "0" for the empty marking.
std::string format_marking(const PetriNet& net, const Marking& m);

// Dense count vector: "[1,0,0]".
std::string format_vector(const Marking& m);

// Labels concatenated, separated by spaces when some label is longer than
// one character; "ε" for the empty word.
std::string format_word(const Word& w);

// "{p1, p3}" using format_marking for each member, in state order.
std::string format_state_set(const PetriNet& net, const Lts& lts, const StateSet& states);
std::string format_marking_set(const PetriNet& net, const MarkingSet& markings);

}  // namespace opacity
