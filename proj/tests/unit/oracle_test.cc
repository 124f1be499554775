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
#include "opacity/oracle.hh"
#include "support/fixtures.hh"
#include "support/reference.hh"

using namespace opacity;
using opacity::testing::fixture_f;
using opacity::testing::fixture_secret;
using opacity::testing::fm;

namespace {

MarkingSet ms(std::initializer_list<int> indices) {
  MarkingSet out;
  for (int i : indices) out.insert(fm(i));
  return out;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("secret partition") {
  const LabeledPetriNet f = fixture_f();
  const Lts rg = build_rg(f);
  const SecretPartition p = secret_partition(f, rg, fixture_secret(), {"a"});
  CHECK(p.secret_consistent == ms({2, 4}));
  CHECK(p.nonsecret_consistent == ms({3, 5}));
  const SecretPartition none = secret_partition(f, rg, fixture_secret(), {"b"});
  CHECK(none.secret_consistent.empty());
  CHECK(none.nonsecret_consistent.empty());
  CHECK(secret_partition(f, rg, Secret{}, {"a"}).secret_consistent.empty());
}

TEST_CASE("uncontained words") {
  const LabeledPetriNet f = fixture_f();
  const Lts rg = build_rg(f);
  // From M2 "a" is possible; from M3 only "b".
  const auto w = find_uncontained_word(rg, {2}, {3}, 3);
  REQUIRE(w);
  CHECK(*w == Word{"a"});
  CHECK_FALSE(find_uncontained_word(rg, {4}, {2}, 3));
  CHECK_FALSE(find_uncontained_word(rg, {2}, {2}, 3));
  CHECK(find_uncontained_word(rg, {2}, {}, 3) == Word{});
}

TEST_CASE("brute force on the fixture") {
  const LabeledPetriNet f = fixture_f();
  const OpacityVerdict inf = brute_force_infinite_step(f, fixture_secret(), 3);
  CHECK_FALSE(inf.opaque);
  REQUIRE_FALSE(inf.violations.empty());
  CHECK(inf.violations[0].prefix == Word{"a"});
  CHECK(inf.violations[0].suffix == Word{"a"});
  CHECK(inf.violations[0].markings == ms({2, 4}));

  const OpacityVerdict k0 = brute_force_k_step(f, fixture_secret(), 0, 3);
  CHECK(k0.opaque);
  CHECK(k0.certified_depth == std::size_t{3});
  CHECK_FALSE(brute_force_k_step(f, fixture_secret(), 1, 3).opaque);
  CHECK_FALSE(brute_force_k_step(f, fixture_secret(), 2, 3).opaque);
  CHECK_THROWS_AS(brute_force_k_step(f, fixture_secret(), 4, 3), std::invalid_argument);

  CHECK(brute_force_infinite_step(f, Secret{}, 5).opaque);
  CHECK(brute_force(f, fixture_secret(), Property::current_state(), 3).opaque);
}

TEST_CASE("bisimilar secret and non-secret branches stay opaque") {
  // Two silent branches reach p2 or p3; both then offer the same "a".
  const LabeledPetriNet g = opacity::testing::make_net(
      4,
      {{"u1", "", {{0, 1}}, {{1, 1}}},
       {"u2", "", {{0, 1}}, {{2, 1}}},
       {"t1", "a", {{1, 1}}, {{3, 1}}},
       {"t2", "a", {{2, 1}}, {{3, 1}}}},
      {1, 0, 0, 0});
  Secret s;
  s.members.insert(Marking({0, 1, 0, 0}));
  CHECK(brute_force_infinite_step(g, s, 4).opaque);
  CHECK(brute_force_k_step(g, s, 2, 4).opaque);
}

TEST_CASE("containment on the basis graph") {
  const LabeledPetriNet f = fixture_f();
  const Brg brg = build_brg(f);
  const OpacityVerdict v = containment_check_brg(f, brg, fixture_secret(), Property::infinite(), 3);
  CHECK_FALSE(v.opaque);
  CHECK(containment_check_brg(f, brg, fixture_secret(), Property::k_step(0), 3).opaque);
  CHECK_FALSE(containment_check_brg(f, brg, fixture_secret(), Property::k_step(1), 3).opaque);
  CHECK_THROWS_AS(
      containment_check_brg(f, brg, opacity::testing::secret_of({2}), Property::infinite(), 3),
      A1NotVerified);
  // A1 holds and no basis marking is secret.
  CHECK(containment_check_brg(f, brg, opacity::testing::secret_of({5}), Property::infinite(), 3).opaque);
}

TEST_CASE("default depth") {
  const Lts rg = build_rg(fixture_f());
  CHECK(default_oracle_depth(rg, Property::infinite()) == 7);
  CHECK(default_oracle_depth(rg, Property::k_step(2)) == 9);
}

TEST_CASE("language form agrees with the per-marking definition") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto inst = opacity::testing::random_instance(seed);
    CAPTURE(seed);
    for (const Property p : {Property::infinite(), Property::k_step(0), Property::k_step(1),
                             Property::k_step(2)}) {
      const bool literal = opacity::testing::definition_opaque(inst.lpn, inst.secret, p, 3, 3);
      const OpacityVerdict v = brute_force(inst.lpn, inst.secret, p, 3, opacity::testing::kRandomBounds);
      CHECK(v.opaque == literal);
      const Brg brg = build_brg(inst.lpn, opacity::testing::kRandomBounds);
      CHECK(containment_check_brg(inst.lpn, brg, inst.secret, p, 3, opacity::testing::kRandomBounds).opaque ==
            literal);
    }
  }
}

}  // TEST_SUITE
