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

#include "opacity/dot.hh"

#include <algorithm>
#include <sstream>

#include "opacity/format.hh"

namespace opacity {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

namespace {

const char* const kPrelude = "  rankdir=LR;\n  node [shape=ellipse, fontname=\"Helvetica\"];\n";

std::string event_label(const std::vector<std::string>& events, EventId e) {
  return e == kEpsilon ? std::string("ε") : events[static_cast<std::size_t>(e)];
}

void start_arrow(std::ostringstream& os, const std::string& node, std::size_t i) {
  os << "  start" << i << " [shape=point];\n  start" << i << " -> " << node << ";\n";
}

}  // namespace

std::string lts_to_dot(const Lts& lts, const PetriNet& net, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << dot_quote(name) << " {\n" << kPrelude;
  for (StateId s = 0; s < lts.state_count(); ++s)
    os << "  s" << s << " [label=" << dot_quote(format_marking(net, lts.payload(s))) << "];\n";
  std::size_t arrows = 0;
  // A reversed graph has every state initial; drawing the arrows adds noise.
  if (lts.initial().size() < lts.state_count() || lts.state_count() == 1)
    for (StateId s : lts.initial()) start_arrow(os, "s" + std::to_string(s), arrows++);
  for (const LtsEdge& e : lts.edges()) {
    std::string label = event_label(lts.events(), e.event);
    if (e.transition && *e.transition < net.transitions.size())
      label += " (" + net.transitions[*e.transition] + ")";
    os << "  s" << e.source << " -> s" << e.target << " [label=" << dot_quote(label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string dfa_to_dot(const Dfa& dfa, const Lts& underlying, const PetriNet& net,
                       std::string_view name) {
  std::ostringstream os;
  os << "digraph " << dot_quote(name) << " {\n" << kPrelude;
  for (DfaState q = 0; q < dfa.state_count(); ++q)
    os << "  q" << q << " [shape=box, label="
       << dot_quote(format_state_set(net, underlying, dfa.state(q))) << "];\n";
  start_arrow(os, "q0", 0);
  for (DfaState q = 0; q < dfa.state_count(); ++q)
    for (EventId e = 0; e < static_cast<EventId>(dfa.events().size()); ++e)
      if (auto next = dfa.successor(q, e))
        os << "  q" << q << " -> q" << *next << " [label=" << dot_quote(event_label(dfa.events(), e))
           << "];\n";
  os << "}\n";
  return os.str();
}

std::string tw_to_dot(const TwObserver& tw, const Lts& brg, const PetriNet& net,
                      std::string_view name, const BasisPartition* labeling) {
  std::ostringstream os;
  os << "digraph " << dot_quote(name) << " {\n" << kPrelude;
  for (std::size_t i = 0; i < tw.state_count(); ++i) {
    const TwState& q = tw.state(i);
    std::string label = "(" + format_state_set(net, brg, tw.observer().state(q.first)) + ", " +
                        format_state_set(net, brg, tw.estimator().state(q.second)) + ")";
    os << "  w" << i << " [shape=box, label=" << dot_quote(label);
    if (labeling) {
      StateSet common = tw.intersection(i);
      bool leaks = !common.empty() && std::all_of(common.begin(), common.end(), [&](StateId s) {
        return s < labeling->is_secret.size() && labeling->is_secret[s];
      });
      if (leaks) os << ", style=filled, fillcolor=\"#f4a6a6\", peripheries=2";
    }
    os << "];\n";
  }
  start_arrow(os, "w0", 0);
  const auto& events = tw.observer().events();
  for (const TwEdge& e : tw.edges()) {
    const std::string label = event_label(events, e.event.event);
    const std::string tagged = e.event.side == TaggedEvent::Side::kObserver
                                   ? "(" + label + ",λ)"
                                   : "(λ," + label + ")";
    os << "  w" << e.source << " -> w" << e.target << " [label=" << dot_quote(tagged) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace opacity
