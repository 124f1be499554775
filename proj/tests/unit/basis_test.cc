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

#include <doctest.h>

#include "opacity/basis.hh"
#include "opacity/errors.hh"
#include "support/fixtures.hh"
#include "support/reference.hh"

using namespace opacity;
using opacity::testing::fixture_f;
using opacity::testing::fm;
using opacity::testing::kRandomBounds;

namespace {

// e-vectors of F are indexed by (t1, t4, t5).
ParikhVector ev(int t1, int t4, int t5) { return ParikhVector({t1, t4, t5}); }

std::set<ParikhVector> vectors(const std::vector<Explanation>& xs) {
  std::set<ParikhVector> out;
  for (const auto& x : xs) out.insert(x.e_vector);
  return out;
}

}  // namespace

TEST_SUITE("basis") {

TEST_CASE("explanations on the fixture") {
  const LabeledPetriNet f = fixture_f();
  CHECK(vectors(explanations(f, fm(0), 1)) == std::set{ev(1, 0, 0)});
  CHECK(vectors(explanations(f, fm(6), 7)) == std::set{ev(0, 0, 0)});
  CHECK(explanations(f, fm(0), 5).empty());
  CHECK(vectors(minimal_explanations(f, fm(0), 1)) == std::set{ev(1, 0, 0)});
  CHECK(vectors(minimal_explanations(f, fm(2), 5)) == std::set{ev(0, 1, 0)});
  CHECK(vectors(minimal_explanations(f, fm(6), 7)) == std::set{ev(0, 0, 0)});
  CHECK_THROWS_AS(explanations(f, fm(0), 0), std::invalid_argument);
  CHECK_THROWS_AS(explanations(f, fm(0), 12), UnknownTransition);

  for (const auto& x : explanations(f, fm(0), 2)) {
    CHECK(x.witness == std::vector<TransitionIndex>{0});
    CHECK(enabled(f.net, fire_sequence(f.net, fm(0), x.witness), 2));
  }
}

TEST_CASE("minimal explanations drop dominated vectors") {
  // t is enabled at once, or after u which also feeds it: only the zero
  // vector is minimal.
  const LabeledPetriNet g = opacity::testing::make_net(
      2, {{"u", "", {{0, 1}}, {{1, 1}}}, {"t", "a", {{0, 1}}, {}}}, {2, 0});
  CHECK(vectors(explanations(g, g.initial, 1)) == std::set{ParikhVector(std::vector<int>{0}), ParikhVector(std::vector<int>{1})});
  CHECK(vectors(minimal_explanations(g, g.initial, 1)) == std::set{ParikhVector(std::vector<int>{0})});
}

TEST_CASE("basis successors") {
  const LabeledPetriNet f = fixture_f();
  CHECK(basis_successors(f, fm(0), 1) == MarkingSet{fm(2)});
  CHECK(basis_successors(f, fm(0), 2) == MarkingSet{fm(3)});
  CHECK(basis_successors(f, fm(6), 7) == MarkingSet{fm(6)});
  CHECK(basis_successors(f, fm(0), 5).empty());
}

TEST_CASE("basis reachability graph of the fixture") {
  const LabeledPetriNet f = fixture_f();
  const Brg brg = build_brg(f);
  const Lts& g = brg.graph;
  REQUIRE(g.state_count() == 4);
  CHECK(g.payload(0) == fm(0));
  CHECK(g.initial() == StateSet{0});
  CHECK(std::set<Marking>(g.payloads().begin(), g.payloads().end()) ==
        std::set<Marking>{fm(0), fm(2), fm(3), fm(6)});
  CHECK(g.edge_count() == 5);
  const EventId a = *g.event_index("a");
  const EventId b = *g.event_index("b");
  auto id = [&g](int i) { return *g.find(fm(i)); };
  CHECK(g.find_edge(id(0), a, id(2)));
  CHECK(g.find_edge(id(0), a, id(3)));
  CHECK(g.find_edge(id(2), a, id(6)));
  CHECK(g.find_edge(id(3), b, id(6)));
  CHECK(g.find_edge(id(6), a, id(6)));
  REQUIRE(brg.origins.size() == g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    REQUIRE_FALSE(brg.origins[i].empty());
    for (const EdgeOrigin& o : brg.origins[i]) {
      std::vector<TransitionIndex> seq = o.witness;
      seq.push_back(o.transition);
      const Marking src = g.payload(g.edge(i).source);
      CHECK(fire_sequence(f.net, src, seq) == g.payload(g.edge(i).target));
      CHECK(observe(f, seq) == Word{g.events()[static_cast<std::size_t>(g.edge(i).event)]});
    }
  }
}

TEST_CASE("nets without observable transitions") {
  const LabeledPetriNet g = opacity::testing::make_net(2, {{"u", "", {{0, 1}}, {{1, 1}}}}, {1, 0});
  const Brg brg = build_brg(g);
  CHECK(brg.graph.state_count() == 1);
  CHECK(brg.graph.edge_count() == 0);
}

TEST_CASE("cyclic unobservable subnets are rejected") {
  const LabeledPetriNet ring = opacity::testing::make_net(
      2, {{"u", "", {{0, 1}}, {{1, 1}}}, {"v", "", {{1, 1}}, {{0, 1}}}, {"t", "a", {{0, 1}}, {}}},
      {1, 0});
  CHECK_THROWS_AS(build_brg(ring), CyclicUnobservableSubnet);
  CHECK_THROWS_AS(explanations(ring, ring.initial, 2), CyclicUnobservableSubnet);
  CHECK_THROWS_AS(require_acyclic_unobservable(ring), CyclicUnobservableSubnet);
}

TEST_CASE("assumption A1") {
  const LabeledPetriNet f = fixture_f();
  const Brg brg = build_brg(f);
  CHECK(check_assumption_a1(f, brg, opacity::testing::fixture_secret()).holds());
  CHECK(check_assumption_a1(f, brg, Secret{}).holds());
  const A1Report bad = check_assumption_a1(f, brg, opacity::testing::secret_of({2}));
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].basis_marking == fm(2));
  CHECK(bad.violations[0].escaped == fm(4));

  BasisPartition part = secret_basis_partition(brg, opacity::testing::secret_of({2}));
  CHECK_THROWS_AS(attest_a1(part, bad), A1NotVerified);
  CHECK_FALSE(part.a1_verified);
}

TEST_CASE("secret partition of basis markings") {
  const LabeledPetriNet f = fixture_f();
  const Brg brg = build_brg(f);
  const BasisPartition p = secret_basis_partition(brg, opacity::testing::fixture_secret());
  CHECK(p.secret == MarkingSet{fm(2)});
  CHECK(p.nonsecret == MarkingSet{fm(0), fm(3), fm(6)});
  REQUIRE(p.is_secret.size() == 4);
  CHECK(p.is_secret[*brg.graph.find(fm(2))]);
  CHECK_FALSE(p.a1_verified);

  CHECK(secret_basis_partition(brg, Secret{}).secret.empty());
  Secret all;
  for (int i = 0; i < 7; ++i) all.members.insert(fm(i));
  const BasisPartition full = secret_basis_partition(brg, all);
  CHECK(full.nonsecret.empty());
  CHECK(full.secret.size() == 4);
}

TEST_CASE("explanations match exhaustive enumeration on random nets") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto inst = opacity::testing::random_instance(seed);
    const LabeledPetriNet& lpn = inst.lpn;
    const Brg brg = build_brg(lpn, kRandomBounds);
    CAPTURE(seed);
    for (const Marking& m : brg.graph.payloads()) {
      for (TransitionIndex t : lpn.observable_transitions()) {
        const auto all = opacity::testing::reference_explanations(lpn, m, t);
        CHECK(vectors(explanations(lpn, m, t, kRandomBounds)) == all);
        const auto minimal = minimal_explanations(lpn, m, t, kRandomBounds);
        CHECK(vectors(minimal) == opacity::testing::minimal_elements(all));
        for (std::size_t i = 0; i < minimal.size(); ++i) {
          for (std::size_t j = 0; j < minimal.size(); ++j)
            if (i != j) CHECK_FALSE(minimal[i].e_vector.dominated_by(minimal[j].e_vector));
          CHECK(parikh(minimal[i].witness, lpn.net.transition_count()).total() ==
                minimal[i].e_vector.total());
        }
      }
    }
  }
}

TEST_CASE("basis markings are reachable and the languages agree") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto inst = opacity::testing::random_instance(seed);
    const Lts rg = build_rg(inst.lpn, kRandomBounds);
    const Brg brg = build_brg(inst.lpn, kRandomBounds);
    CAPTURE(seed);
    for (const Marking& b : brg.graph.payloads()) CHECK(rg.find(b).has_value());
    CHECK(language_upto(rg, rg.initial(), 4) == language_upto(brg.graph, brg.graph.initial(), 4));
  }
}

}  // TEST_SUITE
