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

#include <random>

#include "opacity/errors.hh"
#include "opacity/net.hh"
#include "support/fixtures.hh"

using namespace opacity;
using opacity::testing::fixture_f;
using opacity::testing::fm;
using Seq = std::vector<TransitionIndex>;

TEST_SUITE("net") {

TEST_CASE("fixture validates cleanly") {
  const LabeledPetriNet f = fixture_f();
  const ValidationReport r = validate_net(f);
  CHECK(r.ok());
  CHECK(r.warnings.empty());
  CHECK(f.net.place_count() == 7);
  CHECK(f.net.transition_count() == 8);
}

TEST_CASE("validation reports structural problems") {
  LabeledPetriNet f = fixture_f();
  SUBCASE("short pre matrix") {
    LabeledPetriNet g = opacity::testing::make_net(4, {{"t1", "a", {{0, 1}}, {}}}, {1, 0, 0, 0});
    g.net.pre.pop_back();
    CHECK(validate_net(g).has(ValidationIssue::Kind::kDimensionMismatch));
    CHECK_THROWS_AS(require_valid(g), InvalidNet);
  }
  SUBCASE("duplicate transition id") {
    f.net.transitions[1] = "t1";
    CHECK(validate_net(f).has(ValidationIssue::Kind::kDuplicateId));
  }
  SUBCASE("negative weight") {
    f.net.post[2][1] = -1;
    CHECK(validate_net(f).has(ValidationIssue::Kind::kNegativeWeight));
  }
  SUBCASE("labeling size") {
    f.labeling.pop_back();
    CHECK(validate_net(f).has(ValidationIssue::Kind::kLabelingSize));
  }
  SUBCASE("unknown label") {
    f.labeling[1] = 7;
    CHECK(validate_net(f).has(ValidationIssue::Kind::kUnknownLabel));
  }
  SUBCASE("initial marking size") {
    f.initial = Marking::zero(3);
    CHECK(validate_net(f).has(ValidationIssue::Kind::kMarkingSize));
  }
  SUBCASE("unused label is a warning") {
    f.alphabet.push_back("z");
    const ValidationReport r = validate_net(f);
    CHECK(r.ok());
    REQUIRE(r.warnings.size() == 1);
  }
}

TEST_CASE("markings reject negative counts") {
  CHECK_THROWS_AS(Marking({1, -1}), std::invalid_argument);
  CHECK(Marking({0, 2, 1}).max_tokens() == 2);
}

TEST_CASE("enabling") {
  const LabeledPetriNet f = fixture_f();
  CHECK(enabled(f.net, fm(0), 0));
  CHECK_FALSE(enabled(f.net, fm(0), 1));
  CHECK_THROWS_AS(enabled(f.net, fm(0), 8), UnknownTransition);
  CHECK_THROWS_AS(f.net.require_transition("t9"), UnknownTransition);

  const LabeledPetriNet g = opacity::testing::make_net(2, {{"src", "a", {}, {{0, 1}}}}, {0, 0});
  CHECK(enabled(g.net, Marking::zero(2), 0));
}

TEST_CASE("firing") {
  const LabeledPetriNet f = fixture_f();
  CHECK(fire(f.net, fm(0), 0) == fm(1));
  CHECK(fire(f.net, fm(6), 7) == fm(6));
  CHECK_THROWS_AS(fire(f.net, fm(0), 1), NotEnabled);
}

TEST_CASE("firing sequences") {
  const LabeledPetriNet f = fixture_f();
  CHECK(fire_sequence(f.net, fm(0), Seq{0, 1}) == fm(2));
  CHECK(fire_sequence(f.net, fm(3), Seq{}) == fm(3));
  try {
    fire_sequence(f.net, fm(0), Seq{0, 3});
    FAIL("expected NotEnabled");
  } catch (const NotEnabled& e) {
    CHECK(e.prefix_length() == 1);
  }
}

TEST_CASE("Parikh vectors") {
  CHECK(parikh(Seq{0, 1, 0}, 8) == ParikhVector({2, 1, 0, 0, 0, 0, 0, 0}));
  CHECK(parikh(Seq{}, 3) == ParikhVector(3));
  const ParikhVector y = parikh(Seq{3, 5}, 8);
  CHECK(y[3] == 1);
  CHECK(y[5] == 1);
  CHECK(y.total() == 2);
  CHECK(ParikhVector({1, 0}).dominated_by(ParikhVector({1, 2})));
  CHECK_FALSE(ParikhVector({1, 3}).dominated_by(ParikhVector({1, 2})));
  CHECK_THROWS_AS(parikh(Seq{9}, 8), UnknownTransition);
}

TEST_CASE("observation erases silent transitions") {
  const LabeledPetriNet f = fixture_f();
  CHECK(observe(f, Seq{0, 1}) == Word{"a"});
  CHECK(observe(f, Seq{0, 2}) == Word{"a"});
  CHECK(observe(f, Seq{3, 5}) == Word{"a"});
  CHECK(observe(f, Seq{4, 6}) == Word{"b"});
  CHECK(observe(f, Seq{0, 3, 4}).empty());
}

TEST_CASE("unobservable subnet") {
  const LabeledPetriNet f = fixture_f();
  const SubnetView sub = unobservable_subnet(f);
  CHECK(sub.kept == Seq{0, 3, 4});
  REQUIRE(sub.incidence_u.size() == 7);
  for (PlaceIndex p = 0; p < 7; ++p) {
    REQUIRE(sub.incidence_u[p].size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(sub.incidence_u[p][i] == f.net.incidence(p, sub.kept[i]));
  }
  CHECK(is_acyclic(sub));

  const LabeledPetriNet all_observable =
      opacity::testing::make_net(1, {{"t", "a", {{0, 1}}, {{0, 1}}}}, {1});
  CHECK(unobservable_subnet(all_observable).kept.empty());
  CHECK(is_acyclic(unobservable_subnet(all_observable)));

  const LabeledPetriNet loop = opacity::testing::make_net(1, {{"t", "", {{0, 1}}, {{0, 1}}}}, {1});
  CHECK_FALSE(is_acyclic(unobservable_subnet(loop)));

  // A cycle through two places and two silent transitions.
  const LabeledPetriNet ring = opacity::testing::make_net(
      2, {{"u", "", {{0, 1}}, {{1, 1}}}, {"v", "", {{1, 1}}, {{0, 1}}}}, {1, 0});
  CHECK_FALSE(is_acyclic(unobservable_subnet(ring)));
}

TEST_CASE("state equation and concatenation laws on random sequences") {
  const LabeledPetriNet f = fixture_f();
  const auto c = f.net.incidence_matrix();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Marking m = fm(0);
    Seq seq;
    for (int step = 0; step < 6; ++step) {
      Seq choices;
      for (TransitionIndex t = 0; t < 8; ++t)
        if (enabled(f.net, m, t)) choices.push_back(t);
      if (choices.empty()) break;
      TransitionIndex t = choices[rng() % choices.size()];
      const Marking next = fire(f.net, m, t);
      for (PlaceIndex p = 0; p < 7; ++p)
        CHECK(next[p] == m[p] + f.net.post[p][t] - f.net.pre[p][t]);
      m = next;
      seq.push_back(t);
    }
    const ParikhVector y = parikh(seq, 8);
    const Marking end = fire_sequence(f.net, fm(0), seq);
    for (PlaceIndex p = 0; p < 7; ++p) {
      int expected = fm(0)[p];
      for (TransitionIndex t = 0; t < 8; ++t) expected += c[p][t] * y[t];
      CHECK(end[p] == expected);
    }
    const std::size_t cut = seq.empty() ? 0 : rng() % (seq.size() + 1);
    const Seq head(seq.begin(), seq.begin() + static_cast<long>(cut));
    const Seq tail(seq.begin() + static_cast<long>(cut), seq.end());
    CHECK(parikh(head, 8) + parikh(tail, 8) == y);
    Word joined = observe(f, head);
    const Word rest = observe(f, tail);
    joined.insert(joined.end(), rest.begin(), rest.end());
    CHECK(joined == observe(f, seq));
  }
}

}  // TEST_SUITE
