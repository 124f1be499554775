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

#include "opacity/net.hh"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "opacity/errors.hh"

namespace opacity {

Marking::Marking(std::vector<int> tokens) : tokens_(std::move(tokens)) {
  if (std::any_of(tokens_.begin(), tokens_.end(), [](int v) { return v < 0; }))
    throw std::invalid_argument("marking has a negative token count");
}

int Marking::max_tokens() const {
  return tokens_.empty() ? 0 : *std::max_element(tokens_.begin(), tokens_.end());
}

std::size_t MarkingHash::operator()(const Marking& m) const noexcept {
  std::size_t h = m.size();
  for (int v : m.tokens()) h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

ParikhVector::ParikhVector(std::vector<int> counts) : counts_(std::move(counts)) {
  if (std::any_of(counts_.begin(), counts_.end(), [](int v) { return v < 0; }))
    throw std::invalid_argument("Parikh vector has a negative count");
}

int ParikhVector::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

bool ParikhVector::dominated_by(const ParikhVector& other) const {
  if (size() != other.size()) throw std::invalid_argument("Parikh vector size mismatch");
  for (std::size_t i = 0; i < size(); ++i)
    if (counts_[i] > other.counts_[i]) return false;
  return true;
}

ParikhVector operator+(const ParikhVector& a, const ParikhVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Parikh vector size mismatch");
  std::vector<int> sum(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
  return ParikhVector(std::move(sum));
}

std::vector<std::vector<int>> PetriNet::incidence_matrix() const {
  std::vector<std::vector<int>> c(place_count(), std::vector<int>(transition_count(), 0));
  for (PlaceIndex p = 0; p < place_count(); ++p)
    for (TransitionIndex t = 0; t < transition_count(); ++t) c[p][t] = incidence(p, t);
  return c;
}

std::optional<PlaceIndex> PetriNet::place_index(std::string_view id) const {
  auto it = std::find(places.begin(), places.end(), id);
  if (it == places.end()) return std::nullopt;
  return static_cast<PlaceIndex>(it - places.begin());
}

std::optional<TransitionIndex> PetriNet::transition_index(std::string_view id) const {
  auto it = std::find(transitions.begin(), transitions.end(), id);
  if (it == transitions.end()) return std::nullopt;
  return static_cast<TransitionIndex>(it - transitions.begin());
}

TransitionIndex PetriNet::require_transition(std::string_view id) const {
  if (auto t = transition_index(id)) return *t;
  throw UnknownTransition("unknown transition '" + std::string(id) + "'");
}

std::vector<TransitionIndex> LabeledPetriNet::observable_transitions() const {
  std::vector<TransitionIndex> out;
  for (TransitionIndex t = 0; t < labeling.size(); ++t)
    if (labeling[t] != kEpsilon) out.push_back(t);
  return out;
}

std::vector<TransitionIndex> LabeledPetriNet::unobservable_transitions() const {
  std::vector<TransitionIndex> out;
  for (TransitionIndex t = 0; t < labeling.size(); ++t)
    if (labeling[t] == kEpsilon) out.push_back(t);
  return out;
}

std::optional<EventId> LabeledPetriNet::event_index(std::string_view label) const {
  auto it = std::find(alphabet.begin(), alphabet.end(), label);
  if (it == alphabet.end()) return std::nullopt;
  return static_cast<EventId>(it - alphabet.begin());
}

bool ValidationReport::has(ValidationIssue::Kind kind) const {
  return std::any_of(issues.begin(), issues.end(),
                     [kind](const ValidationIssue& i) { return i.kind == kind; });
}

namespace {

void check_matrix(const PetriNet& net, const std::vector<std::vector<int>>& matrix,
                  std::string_view name, ValidationReport& report) {
  using Kind = ValidationIssue::Kind;
  if (matrix.size() != net.place_count()) {
    std::ostringstream os;
    os << name << " has " << matrix.size() << " rows, expected " << net.place_count()
       << " (one per place)";
    report.issues.push_back({Kind::kDimensionMismatch, os.str()});
    return;
  }
  for (PlaceIndex p = 0; p < matrix.size(); ++p) {
    if (matrix[p].size() != net.transition_count()) {
      std::ostringstream os;
      os << name << " row " << p << " has " << matrix[p].size() << " columns, expected "
         << net.transition_count();
      report.issues.push_back({Kind::kDimensionMismatch, os.str()});
      continue;
    }
    for (TransitionIndex t = 0; t < matrix[p].size(); ++t) {
      if (matrix[p][t] < 0) {
        std::ostringstream os;
        os << name << "(" << net.places[p] << "," << net.transitions[t] << ") is negative";
        report.issues.push_back({Kind::kNegativeWeight, os.str()});
      }
    }
  }
}

void check_unique(const std::vector<std::string>& ids, std::string_view what,
                  ValidationReport& report) {
  std::set<std::string> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second)
      report.issues.push_back({ValidationIssue::Kind::kDuplicateId,
                               "duplicate " + std::string(what) + " id '" + id + "'"});
  }
}

}  // namespace

ValidationReport validate_net(const LabeledPetriNet& lpn) {
  using Kind = ValidationIssue::Kind;
  ValidationReport report;
  const PetriNet& net = lpn.net;
  check_unique(net.places, "place", report);
  check_unique(net.transitions, "transition", report);
  check_unique(lpn.alphabet, "label", report);
  check_matrix(net, net.pre, "pre", report);
  check_matrix(net, net.post, "post", report);

  if (lpn.initial.size() != net.place_count()) {
    report.issues.push_back({Kind::kMarkingSize, "initial marking has " +
                                                     std::to_string(lpn.initial.size()) +
                                                     " entries, expected " +
                                                     std::to_string(net.place_count())});
  }
  if (lpn.labeling.size() != net.transition_count()) {
    report.issues.push_back({Kind::kLabelingSize, "labeling has " +
                                                      std::to_string(lpn.labeling.size()) +
                                                      " entries, expected " +
                                                      std::to_string(net.transition_count())});
  }
  std::vector<bool> used(lpn.alphabet.size(), false);
  for (TransitionIndex t = 0; t < lpn.labeling.size(); ++t) {
    EventId e = lpn.labeling[t];
    if (e == kEpsilon) continue;
    if (e < 0 || static_cast<std::size_t>(e) >= lpn.alphabet.size()) {
      report.issues.push_back({Kind::kUnknownLabel, "transition " + std::to_string(t) +
                                                        " carries label index " +
                                                        std::to_string(e) +
                                                        " outside the alphabet"});
      continue;
    }
    used[static_cast<std::size_t>(e)] = true;
  }
  for (std::size_t e = 0; e < used.size(); ++e)
    if (!used[e]) report.warnings.push_back("label '" + lpn.alphabet[e] + "' labels no transition");
  return report;
}

void require_valid(const LabeledPetriNet& lpn) {
  ValidationReport report = validate_net(lpn);
  if (report.ok()) return;
  std::string what = "invalid net:";
  for (const auto& issue : report.issues) what += "\n  " + issue.message;
  throw InvalidNet(what);
}

namespace {

void check_arguments(const PetriNet& net, const Marking& m, TransitionIndex t) {
  if (t >= net.transition_count())
    throw UnknownTransition("transition index " + std::to_string(t) + " out of range");
  if (m.size() != net.place_count())
    throw std::invalid_argument("marking size does not match the net");
}

}  // namespace

bool enabled(const PetriNet& net, const Marking& m, TransitionIndex t) {
  check_arguments(net, m, t);
  for (PlaceIndex p = 0; p < net.place_count(); ++p)
    if (m[p] < net.pre[p][t]) return false;
  return true;
}

Marking fire(const PetriNet& net, const Marking& m, TransitionIndex t) {
  if (!enabled(net, m, t))
    throw NotEnabled("transition " + net.transitions[t] + " is not enabled", 0);
  std::vector<int> next = m.tokens();
  for (PlaceIndex p = 0; p < net.place_count(); ++p) next[p] += net.incidence(p, t);
  return Marking(std::move(next));
}

Marking fire_sequence(const PetriNet& net, const Marking& m, std::span<const TransitionIndex> seq) {
  Marking current = m;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!enabled(net, current, seq[i]))
      throw NotEnabled("transition " + net.transitions[seq[i]] + " is not enabled at step " +
                           std::to_string(i),
                       i);
    current = fire(net, current, seq[i]);
  }
  return current;
}

ParikhVector parikh(std::span<const TransitionIndex> seq, std::size_t n) {
  ParikhVector y(n);
  for (TransitionIndex t : seq) {
    if (t >= n) throw UnknownTransition("transition index " + std::to_string(t) + " out of range");
    y.increment(t);
  }
  return y;
}

Word observe(const LabeledPetriNet& lpn, std::span<const TransitionIndex> seq) {
  Word w;
  for (TransitionIndex t : seq) {
    EventId e = lpn.labeling.at(t);
    if (e != kEpsilon) w.push_back(lpn.label_name(e));
  }
  return w;
}

SubnetView unobservable_subnet(const LabeledPetriNet& lpn) {
  SubnetView view;
  view.parent = &lpn;
  view.kept = lpn.unobservable_transitions();
  view.incidence_u.assign(lpn.net.place_count(), std::vector<int>(view.kept.size(), 0));
  for (PlaceIndex p = 0; p < lpn.net.place_count(); ++p)
    for (std::size_t j = 0; j < view.kept.size(); ++j)
      view.incidence_u[p][j] = lpn.net.incidence(p, view.kept[j]);
  return view;
}

bool is_acyclic(const SubnetView& sub) {
  if (sub.kept.empty()) return true;
  const PetriNet& net = sub.parent->net;
  // Nodes: places [0, m), kept transitions [m, m + k).
  const std::size_t m = net.place_count();
  const std::size_t nodes = m + sub.kept.size();
  std::vector<std::vector<std::size_t>> succ(nodes);
  std::vector<std::size_t> indegree(nodes, 0);
  for (std::size_t j = 0; j < sub.kept.size(); ++j) {
    TransitionIndex t = sub.kept[j];
    for (PlaceIndex p = 0; p < m; ++p) {
      if (net.pre[p][t] > 0) {
        succ[p].push_back(m + j);
        ++indegree[m + j];
      }
      if (net.post[p][t] > 0) {
        succ[m + j].push_back(p);
        ++indegree[p];
      }
    }
  }
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < nodes; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t sorted = 0;
  while (!ready.empty()) {
    std::size_t v = ready.front();
    ready.pop_front();
    ++sorted;
    for (std::size_t w : succ[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  return sorted == nodes;
}

}  // namespace opacity
