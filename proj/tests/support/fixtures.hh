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

// Shared test nets: the seven-place running example and a generator of small
// random bounded nets.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opacity/basis.hh"
#include "opacity/net.hh"
#include "opacity/reachability.hh"

namespace opacity::testing {

// p1..p7; t1:p1->p2 (ε), t2:p2->p3 (a), t3:p2->p4 (a), t4:p3->p5 (ε),
// t5:p4->p6 (ε), t6:p5->p7 (a), t7:p6->p7 (b), t8:p7->p7 (a).
LabeledPetriNet fixture_f();

// M_i: one token in p_{i+1}.
Marking fm(int i);

// {M2, M4}.
Secret fixture_secret();

Secret secret_of(std::initializer_list<int> indices);

// Net builder for hand-written cases: transitions are given as
// (id, label or "" for ε, pre, post) over places named by index.
struct ArcSpec {
  std::string id;
  std::string label;
  std::vector<std::pair<int, int>> pre;   // (place, weight)
  std::vector<std::pair<int, int>> post;
};
LabeledPetriNet make_net(int places, const std::vector<ArcSpec>& transitions,
                         std::vector<int> initial);

struct RandomParams {
  int max_places = 6;
  int max_transitions = 8;
  int max_weight = 2;
  int token_bound = 3;
  double epsilon_probability = 0.35;
  double secret_probability = 0.3;
  // Nets with fewer reachable markings are redrawn.
  int min_states = 4;
  std::vector<std::string> alphabet{"a", "b", "c"};
};

struct Instance {
  std::uint64_t seed = 0;
  LabeledPetriNet lpn;
  Secret secret;
};

inline const BoundConfig kRandomBounds{2000, 3};

// Bounded (token bound 3), acyclic unobservable subnet, secret closed under
// A1. Deterministic in the seed.
Instance random_instance(std::uint64_t seed, const RandomParams& params = {});

// Human-readable dump for failure logs.
std::string describe(const Instance& inst);

}  // namespace opacity::testing
