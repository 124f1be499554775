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

#include "opacity/basis.hh"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "opacity/errors.hh"

namespace opacity {

void require_acyclic_unobservable(const LabeledPetriNet& lpn) {
  require_valid(lpn);
  if (!is_acyclic(unobservable_subnet(lpn)))
    throw CyclicUnobservableSubnet("the unobservable subnet contains a directed cycle");
}

namespace {

struct Partial {
  Marking marking;
  std::vector<TransitionIndex> witness;
};

// Shared state for repeated explanation queries on one validated net.
class ExplanationSearch {
 public:
  ExplanationSearch(const LabeledPetriNet& lpn, const BoundConfig& cfg)
      : lpn_(lpn), cfg_(cfg), silent_(lpn.unobservable_transitions()) {}

  void check_target(TransitionIndex t) const {
    if (t >= lpn_.net.transition_count())
      throw UnknownTransition("transition index " + std::to_string(t) + " out of range");
    if (!lpn_.is_observable(t))
      throw std::invalid_argument("transition " + lpn_.net.transitions[t] +
                                  " is unobservable; explanations are defined for observable "
                                  "transitions only");
  }

  // Every distinct e-vector reachable from m by unobservable firings.
  std::map<ParikhVector, Partial> all_vectors(const Marking& m) const {
    std::map<ParikhVector, Partial> seen;
    std::vector<ParikhVector> frontier{ParikhVector(silent_.size())};
    seen.emplace(frontier.front(), Partial{m, {}});
    while (!frontier.empty()) {
      std::vector<ParikhVector> next;
      for (const auto& y : frontier) {
        const Partial current = seen.at(y);
        for (std::size_t j = 0; j < silent_.size(); ++j) {
          Partial extended = extend(current, j);
          if (extended.witness.empty()) continue;
          ParikhVector ny = y;
          ny.increment(j);
          if (seen.emplace(ny, std::move(extended)).second) {
            bound(seen.size());
            next.push_back(std::move(ny));
          }
        }
      }
      frontier = std::move(next);
    }
    return seen;
  }

  // Level-by-level search by total e-vector length. A vector of length L can
  // only be dominated by shorter vectors, so anything dominating an
  // explanation found on an earlier level is pruned along with its
  // extensions, and an explanation is never extended.
  std::vector<Explanation> minimal(const Marking& m, TransitionIndex t) const {
    std::vector<Explanation> found;
    std::map<ParikhVector, Partial> level;
    level.emplace(ParikhVector(silent_.size()), Partial{m, {}});
    std::size_t explored = 1;
    while (!level.empty()) {
      std::vector<Explanation> found_here;
      std::map<ParikhVector, Partial> next;
      for (const auto& [y, partial] : level) {
        bool dominated = std::any_of(found.begin(), found.end(), [&](const Explanation& e) {
          return e.e_vector.dominated_by(y);
        });
        if (dominated) continue;
        if (enabled(lpn_.net, partial.marking, t)) {
          found_here.push_back({y, partial.witness});
          continue;
        }
        for (std::size_t j = 0; j < silent_.size(); ++j) {
          Partial extended = extend(partial, j);
          if (extended.witness.empty()) continue;
          ParikhVector ny = y;
          ny.increment(j);
          if (next.emplace(std::move(ny), std::move(extended)).second) bound(++explored);
        }
      }
      found.insert(found.end(), found_here.begin(), found_here.end());
      level = std::move(next);
    }
    std::sort(found.begin(), found.end(),
              [](const Explanation& a, const Explanation& b) { return a.e_vector < b.e_vector; });
    return found;
  }

  Marking successor(const Marking& m, TransitionIndex t, const ParikhVector& y) const {
    std::vector<int> tokens = m.tokens();
    for (PlaceIndex p = 0; p < tokens.size(); ++p) {
      tokens[p] += lpn_.net.incidence(p, t);
      for (std::size_t j = 0; j < silent_.size(); ++j)
        tokens[p] += lpn_.net.incidence(p, silent_[j]) * y[j];
    }
    Marking out(std::move(tokens));
    check_token_bound(out, cfg_);
    return out;
  }

 private:
  // Fires the j-th unobservable transition; an empty witness means it is not
  // enabled.
  Partial extend(const Partial& from, std::size_t j) const {
    TransitionIndex u = silent_[j];
    if (!enabled(lpn_.net, from.marking, u)) return {};
    Partial out{fire(lpn_.net, from.marking, u), from.witness};
    out.witness.push_back(u);
    check_token_bound(out.marking, cfg_);
    return out;
  }

  void bound(std::size_t explored) const {
    if (explored > cfg_.max_states)
      throw BoundExceeded("explanation search exceeded the cap of " +
                          std::to_string(cfg_.max_states) + " e-vectors");
  }

  const LabeledPetriNet& lpn_;
  const BoundConfig& cfg_;
  std::vector<TransitionIndex> silent_;
};

}  // namespace

std::vector<Explanation> explanations(const LabeledPetriNet& lpn, const Marking& m,
                                      TransitionIndex t, const BoundConfig& cfg) {
  require_acyclic_unobservable(lpn);
  ExplanationSearch search(lpn, cfg);
  search.check_target(t);
  std::vector<Explanation> out;
  for (auto& [y, partial] : search.all_vectors(m))
    if (enabled(lpn.net, partial.marking, t)) out.push_back({y, partial.witness});
  return out;
}

std::vector<Explanation> minimal_explanations(const LabeledPetriNet& lpn, const Marking& m,
                                              TransitionIndex t, const BoundConfig& cfg) {
  require_acyclic_unobservable(lpn);
  ExplanationSearch search(lpn, cfg);
  search.check_target(t);
  return search.minimal(m, t);
}

MarkingSet basis_successors(const LabeledPetriNet& lpn, const Marking& m, TransitionIndex t,
                            const BoundConfig& cfg) {
  require_acyclic_unobservable(lpn);
  ExplanationSearch search(lpn, cfg);
  search.check_target(t);
  MarkingSet out;
  for (const auto& e : search.minimal(m, t)) out.insert(search.successor(m, t, e.e_vector));
  return out;
}

Brg build_brg(const LabeledPetriNet& lpn, const BoundConfig& cfg) {
  require_acyclic_unobservable(lpn);
  ExplanationSearch search(lpn, cfg);
  const std::vector<TransitionIndex> observable = lpn.observable_transitions();

  Brg brg{Lts(lpn.alphabet), {}};
  check_token_bound(lpn.initial, cfg);
  brg.graph.add_initial(brg.graph.add_state(lpn.initial).first);

  for (StateId s = 0; s < brg.graph.state_count(); ++s) {
    const Marking current = brg.graph.payload(s);
    for (TransitionIndex t : observable) {
      for (const auto& e : search.minimal(current, t)) {
        Marking next = search.successor(current, t, e.e_vector);
        auto [target, inserted] = brg.graph.add_state(next);
        if (inserted && brg.graph.state_count() > cfg.max_states)
          throw BoundExceeded("basis reachability graph exceeded the cap of " +
                              std::to_string(cfg.max_states) + " states");
        const EventId label = lpn.labeling[t];
        auto edge = brg.graph.find_edge(s, label, target);
        if (!edge) {
          edge = brg.graph.add_edge({s, label, target, t});
          brg.origins.emplace_back();
        }
        brg.origins[*edge].push_back({t, e.e_vector, e.witness});
      }
    }
  }
  return brg;
}

A1Report check_assumption_a1(const LabeledPetriNet& lpn, const Brg& brg, const Secret& s,
                             const BoundConfig& cfg) {
  A1Report report;
  for (const Marking& mb : brg.graph.payloads()) {
    if (!s.contains(mb)) continue;
    for (const Marking& m : unobservable_reach(lpn, mb, cfg))
      if (!s.contains(m)) report.violations.push_back({mb, m});
  }
  return report;
}

BasisPartition secret_basis_partition(const Brg& brg, const Secret& s) {
  BasisPartition out;
  out.is_secret.reserve(brg.graph.state_count());
  for (const Marking& mb : brg.graph.payloads()) {
    const bool secret = s.contains(mb);
    out.is_secret.push_back(secret);
    (secret ? out.secret : out.nonsecret).insert(mb);
  }
  return out;
}

void attest_a1(BasisPartition& partition, const A1Report& report) {
  if (!report.holds())
    throw A1NotVerified("assumption A1 fails: " + std::to_string(report.violations.size()) +
                        " secret basis marking(s) reach non-secret markings unobservably");
  partition.a1_verified = true;
}

}  // namespace opacity
