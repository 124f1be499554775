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

#include "support/fixtures.hh"

#include <algorithm>
#include <numeric>
#include <random>

#include "opacity/document.hh"
#include "opacity/errors.hh"
#include "opacity/format.hh"

namespace opacity::testing {

LabeledPetriNet make_net(int places, const std::vector<ArcSpec>& transitions,
                         std::vector<int> initial) {
  LabeledPetriNet lpn;
  const auto m = static_cast<std::size_t>(places);
  const std::size_t n = transitions.size();
  for (std::size_t p = 0; p < m; ++p) lpn.net.places.push_back("p" + std::to_string(p + 1));
  lpn.net.pre.assign(m, std::vector<int>(n, 0));
  lpn.net.post.assign(m, std::vector<int>(n, 0));
  for (std::size_t t = 0; t < n; ++t) {
    const ArcSpec& spec = transitions[t];
    lpn.net.transitions.push_back(spec.id);
    for (auto [p, w] : spec.pre) lpn.net.pre[static_cast<std::size_t>(p)][t] = w;
    for (auto [p, w] : spec.post) lpn.net.post[static_cast<std::size_t>(p)][t] = w;
    if (spec.label.empty()) {
      lpn.labeling.push_back(kEpsilon);
      continue;
    }
    auto e = lpn.event_index(spec.label);
    if (!e) {
      lpn.alphabet.push_back(spec.label);
      e = static_cast<EventId>(lpn.alphabet.size() - 1);
    }
    lpn.labeling.push_back(*e);
  }
  lpn.initial = Marking(std::move(initial));
  return lpn;
}

LabeledPetriNet fixture_f() {
  return make_net(7,
                  {{"t1", "", {{0, 1}}, {{1, 1}}},
                   {"t2", "a", {{1, 1}}, {{2, 1}}},
                   {"t3", "a", {{1, 1}}, {{3, 1}}},
                   {"t4", "", {{2, 1}}, {{4, 1}}},
                   {"t5", "", {{3, 1}}, {{5, 1}}},
                   {"t6", "a", {{4, 1}}, {{6, 1}}},
                   {"t7", "b", {{5, 1}}, {{6, 1}}},
                   {"t8", "a", {{6, 1}}, {{6, 1}}}},
                  {1, 0, 0, 0, 0, 0, 0});
}

Marking fm(int i) {
  std::vector<int> tokens(7, 0);
  tokens[static_cast<std::size_t>(i)] = 1;
  return Marking(std::move(tokens));
}

Secret secret_of(std::initializer_list<int> indices) {
  Secret s;
  for (int i : indices) s.members.insert(fm(i));
  return s;
}

Secret fixture_secret() { return secret_of({2, 4}); }

namespace {

std::optional<Instance> attempt(std::mt19937_64& rng, const RandomParams& params) {
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto coin = [&rng](double p) { return std::bernoulli_distribution(p)(rng); };
  auto weight = [&] { return coin(0.25) ? params.max_weight : 1; };

  const int m = uniform(2, params.max_places);
  const int n = uniform(2, params.max_transitions);
  // Unobservable arcs only go from lower to higher rank, so the unobservable
  // subnet cannot have a cycle.
  std::vector<int> rank(static_cast<std::size_t>(m));
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);

  std::vector<ArcSpec> specs;
  for (int t = 0; t < n; ++t) {
    ArcSpec spec;
    spec.id = "t" + std::to_string(t + 1);
    const bool silent = coin(params.epsilon_probability);
    if (!silent)
      spec.label = params.alphabet[static_cast<std::size_t>(
          uniform(0, static_cast<int>(params.alphabet.size()) - 1))];
    const int split = silent ? uniform(0, m - 2) : m - 1;
    std::vector<int> low, high;
    for (int p = 0; p < m; ++p) {
      if (!silent || rank[static_cast<std::size_t>(p)] <= split) low.push_back(p);
      if (!silent || rank[static_cast<std::size_t>(p)] > split) high.push_back(p);
    }
    std::shuffle(low.begin(), low.end(), rng);
    std::shuffle(high.begin(), high.end(), rng);
    const int pre_count = std::min<int>(uniform(1, 2), static_cast<int>(low.size()));
    const int post_count = std::min<int>(coin(0.15) ? 0 : uniform(1, 2), static_cast<int>(high.size()));
    for (int i = 0; i < pre_count; ++i)
      spec.pre.push_back({low[static_cast<std::size_t>(i)], weight()});
    for (int i = 0; i < post_count; ++i)
      spec.post.push_back({high[static_cast<std::size_t>(i)], weight()});
    specs.push_back(std::move(spec));
  }

  std::vector<int> initial(static_cast<std::size_t>(m), 0);
  const int tokens = uniform(1, 4);
  for (int i = 0; i < tokens; ++i) {
    int& slot = initial[static_cast<std::size_t>(uniform(0, m - 1))];
    if (slot < params.token_bound) ++slot;
  }

  Instance inst;
  inst.lpn = make_net(m, specs, std::move(initial));
  const BoundConfig cfg{kRandomBounds.max_states, params.token_bound};
  try {
    const Lts rg = build_rg(inst.lpn, cfg);
    if (rg.state_count() < static_cast<std::size_t>(params.min_states)) return std::nullopt;
    const Brg brg = build_brg(inst.lpn, cfg);
    for (const Marking& mk : rg.payloads())
      if (coin(params.secret_probability)) inst.secret.members.insert(mk);
    // Close under A1: a secret basis marking drags its unobservable reach in.
    for (bool changed = true; changed;) {
      changed = false;
      for (const Marking& b : brg.graph.payloads()) {
        if (!inst.secret.contains(b)) continue;
        for (const Marking& r : unobservable_reach(inst.lpn, b, cfg))
          changed |= inst.secret.members.insert(r).second;
      }
    }
  } catch (const BoundExceeded&) {
    return std::nullopt;
  }
  return inst;
}

}  // namespace

Instance random_instance(std::uint64_t seed, const RandomParams& params) {
  std::mt19937_64 rng(seed);
  for (;;) {
    if (auto inst = attempt(rng, params)) {
      inst->seed = seed;
      return std::move(*inst);
    }
  }
}

std::string describe(const Instance& inst) {
  std::string out = "seed " + std::to_string(inst.seed) + "\n";
  out += serialize(from_model(inst.lpn, inst.secret));
  return out;
}

}  // namespace opacity::testing
