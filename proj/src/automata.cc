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

#include "opacity/automata.hh"

#include "opacity/errors.hh"

namespace opacity {

std::optional<DfaState> Dfa::successor(DfaState q, EventId e) const {
  if (e < 0 || static_cast<std::size_t>(e) >= events_.size()) return std::nullopt;
  std::size_t next = delta_.at(q)[static_cast<std::size_t>(e)];
  if (next == kNone) return std::nullopt;
  return next;
}

std::optional<DfaState> Dfa::find(const StateSet& set) const {
  auto it = index_.find(set);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Dfa::transition_count() const {
  std::size_t n = 0;
  for (const auto& row : delta_)
    for (std::size_t next : row)
      if (next != kNone) ++n;
  return n;
}

Lts reverse(const Lts& lts) {
  Lts out(lts.events());
  for (const Marking& m : lts.payloads()) out.add_state(m);
  for (const LtsEdge& e : lts.edges()) out.add_edge({e.target, e.event, e.source, e.transition});
  for (StateId s = 0; s < out.state_count(); ++s) out.add_initial(s);
  return out;
}

Dfa observer(const Lts& lts, const StateSet& init) {
  if (init.empty()) throw EmptyInitial("observer needs a non-empty initial set");
  Dfa dfa;
  dfa.events_ = lts.events();
  const std::size_t alphabet = dfa.events_.size();

  auto intern = [&dfa, alphabet](StateSet set) {
    auto [it, inserted] = dfa.index_.try_emplace(set, dfa.states_.size());
    if (inserted) {
      dfa.states_.push_back(std::move(set));
      dfa.delta_.emplace_back(alphabet, Dfa::kNone);
    }
    return it->second;
  };

  intern(epsilon_closure(lts, init));
  for (DfaState q = 0; q < dfa.states_.size(); ++q) {
    for (std::size_t e = 0; e < alphabet; ++e) {
      StateSet next = epsilon_closure(lts, step(lts, dfa.states_[q], static_cast<EventId>(e)));
      if (next.empty()) continue;
      DfaState target = intern(std::move(next));
      dfa.delta_[q][e] = target;
    }
  }
  return dfa;
}

std::optional<DfaState> run_state(const Dfa& dfa, const std::vector<EventId>& word) {
  DfaState q = dfa.initial();
  for (EventId e : word) {
    auto next = dfa.successor(q, e);
    if (!next) return std::nullopt;
    q = *next;
  }
  return q;
}

std::optional<StateSet> run(const Dfa& dfa, const Word& w) {
  auto encoded = encode_word(dfa.events(), w);
  if (!encoded) return std::nullopt;
  auto q = run_state(dfa, *encoded);
  if (!q) return std::nullopt;
  return dfa.state(*q);
}

}  // namespace opacity
