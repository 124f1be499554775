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

#include "opacity/format.hh"

#include <algorithm>

#include "opacity/verdict.hh"

namespace opacity {

std::string Property::name() const {
  switch (kind) {
    case Kind::kInfinite: return "infinite-step";
    case Kind::kKStep: return std::to_string(k) + "-step";
    case Kind::kCurrentState: return "current-state";
  }
  return "unknown";
}

std::string format_marking(const PetriNet& net, const Marking& m) {
  std::string out;
  for (PlaceIndex p = 0; p < m.size(); ++p) {
    if (m[p] == 0) continue;
    if (!out.empty()) out += "+";
    if (m[p] != 1) out += std::to_string(m[p]);
    out += p < net.places.size() ? net.places[p] : "#" + std::to_string(p);
  }
  return out.empty() ? "0" : out;
}

std::string format_vector(const Marking& m) {
  std::string out = "[";
  for (std::size_t p = 0; p < m.size(); ++p) {
    if (p) out += ",";
    out += std::to_string(m[p]);
  }
  return out + "]";
}

std::string format_word(const Word& w) {
  if (w.empty()) return "ε";
  const bool spaced =
      std::any_of(w.begin(), w.end(), [](const std::string& l) { return l.size() != 1; });
  std::string out;
  for (const auto& label : w) {
    if (spaced && !out.empty()) out += " ";
    out += label;
  }
  return out;
}

std::string format_state_set(const PetriNet& net, const Lts& lts, const StateSet& states) {
  std::string out = "{";
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i) out += ", ";
    out += format_marking(net, lts.payload(states[i]));
  }
  return out + "}";
}

std::string format_marking_set(const PetriNet& net, const MarkingSet& markings) {
  std::string out = "{";
  bool first = true;
  for (const Marking& m : markings) {
    if (!first) out += ", ";
    first = false;
    out += format_marking(net, m);
  }
  return out + "}";
}

}  // namespace opacity
