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

// Graphviz renderings. Output depends only on the inputs, never on addresses
// or hash order.

#pragma once

#include <string>
#include <string_view>

#include "opacity/automata.hh"
#include "opacity/basis.hh"
#include "opacity/lts.hh"
#include "opacity/twoway.hh"

namespace opacity {

std::string dot_quote(std::string_view s);

std::string lts_to_dot(const Lts& lts, const PetriNet& net, std::string_view name);

// `underlying` is the Lts whose states the Dfa's sets refer to.
std::string dfa_to_dot(const Dfa& dfa, const Lts& underlying, const PetriNet& net,
                       std::string_view name);

// States with a non-empty, all-secret intersection are filled when a
// labeling is given.
std::string tw_to_dot(const TwObserver& tw, const Lts& brg, const PetriNet& net,
                      std::string_view name, const BasisPartition* labeling = nullptr);

}  // namespace opacity
