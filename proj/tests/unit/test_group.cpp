// Copyright 2026 The qwsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qwsym/errors.hpp"
#include "qwsym/group.hpp"

using namespace qwsym;

namespace {

std::vector<GroupElement> declared_causal(const Group& g) {
  std::vector<GroupElement> out;
  for (const auto& x : g.elements()) {
    if (g.coset_index(x) == 0) out.push_back(x);
  }
  return out;
}

std::vector<Group> all_kinds() {
  return {Group::line(),           Group::line({1}),   Group::line({2, -3}), Group::lattice(2),
          Group::torus({6, 6}),    Group::cyclic(8),   Group::cyclic(8, {1}), Group::cyclic(7),
          Group::hypercube(3),     Group::lattice(3, 3)};
}

}  // namespace

TEST(Group, Arithmetic) {
  const Group c8 = Group::cyclic(8);
  EXPECT_EQ(c8.multiply({5}, {6}), GroupElement{3});
  EXPECT_EQ(c8.inverse({3}), GroupElement{5});
  const Group h3 = Group::hypercube(3);
  EXPECT_EQ(h3.multiply({1, 0, 1}, {1, 1, 0}), (GroupElement{0, 1, 1}));
  EXPECT_EQ(h3.inverse({1, 0, 1}), (GroupElement{1, 0, 1}));
  const Group z = Group::line();
  EXPECT_EQ(z.multiply({-4}, {9}), GroupElement{5});
  EXPECT_EQ(z.power({3}, -4), GroupElement{-12});
  const Group t = Group::torus({6, 5});
  EXPECT_EQ(t.make({-1, 7}), (GroupElement{5, 2}));
}

TEST(Group, GeneratorsAndDegree) {
  EXPECT_EQ(Group::line().degree(), 2u);
  EXPECT_EQ(Group::lattice(3).degree(), 6u);
  EXPECT_EQ(Group::hypercube(4).degree(), 4u);
  EXPECT_EQ(Group::cyclic(8).generators(), (std::vector<GroupElement>{{1}, {7}}));
  EXPECT_EQ(Group::cyclic(2).degree(), 1u);
  EXPECT_EQ(Group::lattice(2, 3).distinguished_generator(), (GroupElement{0, -1}));
}

TEST(Group, InvalidSpecs) {
  EXPECT_THROW(Group::line({2, 4}), SpecError);
  EXPECT_THROW(Group::line({0, 1}), SpecError);
  EXPECT_THROW(Group::torus({2, 6}), SpecError);
  EXPECT_THROW(Group::cyclic(8, {2, 6}), SpecError);
  EXPECT_THROW(Group::hypercube(2, 5), SpecError);
  EXPECT_THROW(Group::line().make({1, 2}), EncodingError);
  EXPECT_THROW(Group::cyclic(8).validate({9}), EncodingError);
  EXPECT_THROW(Group::line().elements(), UnsupportedOperation);
}

// Brute-force enumeration of S^n S^-n is the oracle for the declared chi and
// coset index.
TEST(Group, CausalSubgroupCyclicTwoGenerators) {
  const Group g = Group::cyclic(8);
  const CausalStructure cs = brute_force_causal(g);
  EXPECT_EQ(cs.causal, (std::vector<GroupElement>{{0}, {2}, {4}, {6}}));
  EXPECT_EQ(cs.chi, 2);
  EXPECT_TRUE(cs.nonseparating);
  EXPECT_EQ(g.chi(), 2);
  EXPECT_EQ(declared_causal(g), cs.causal);
}

TEST(Group, CausalSubgroupCyclicOneGenerator) {
  const Group g = Group::cyclic(8, {1});
  const CausalStructure cs = brute_force_causal(g);
  EXPECT_EQ(cs.causal, (std::vector<GroupElement>{{0}}));
  EXPECT_EQ(cs.chi, 8);
  EXPECT_TRUE(cs.nonseparating);
  EXPECT_EQ(g.chi(), 8);
  EXPECT_EQ(declared_causal(g), cs.causal);
}

TEST(Group, CausalSubgroupHypercube) {
  const Group h2 = Group::hypercube(2);
  const CausalStructure cs2 = brute_force_causal(h2);
  EXPECT_EQ(cs2.causal, (std::vector<GroupElement>{{0, 0}, {1, 1}}));
  EXPECT_EQ(cs2.chi, 2);
  const Group h3 = Group::hypercube(3);
  const CausalStructure cs3 = brute_force_causal(h3);
  EXPECT_EQ(cs3.chi, 2);
  for (const auto& x : cs3.causal) EXPECT_EQ((x[0] + x[1] + x[2]) % 2, 0);
  EXPECT_EQ(declared_causal(h3), cs3.causal);
}

TEST(Group, CausalSubgroupTorus) {
  const Group t = Group::torus({6, 6});
  const CausalStructure cs = brute_force_causal(t);
  EXPECT_EQ(cs.chi, 2);
  EXPECT_EQ(cs.causal.size(), 18u);
  for (const auto& x : cs.causal) EXPECT_EQ((x[0] + x[1]) % 2, 0);
  EXPECT_EQ(declared_causal(t), cs.causal);
  // Odd periods glue the two parity classes together.
  const Group odd = Group::torus({5, 6});
  EXPECT_EQ(brute_force_causal(odd).chi, 1);
  EXPECT_EQ(odd.chi(), 1);
}

TEST(Group, CausalSubgroupCyclicAgreesForManyOrders) {
  for (std::int64_t n = 3; n <= 24; ++n) {
    for (const auto& gens : {std::vector<std::int64_t>{}, std::vector<std::int64_t>{1}, std::vector<std::int64_t>{1, 2}}) {
      const Group g = Group::cyclic(n, gens);
      const CausalStructure cs = brute_force_causal(g);
      ASSERT_EQ(g.chi(), cs.chi) << g.name();
      EXPECT_EQ(declared_causal(g), cs.causal) << g.name();
    }
  }
}

TEST(Group, LineChi) {
  EXPECT_EQ(Group::line().chi(), 2);
  EXPECT_EQ(Group::line({1}).chi(), std::nullopt);
  EXPECT_EQ(Group::line({2, -3}).chi(), 5);
  EXPECT_EQ(Group::lattice(3).chi(), 2);
  // 2Z: even numbers have coset index 0.
  const Group z = Group::line();
  for (std::int64_t x = -10; x <= 10; ++x) EXPECT_EQ(z.coset_index({x}), ((x % 2) + 2) % 2);
}

TEST(Group, GeneratorsHaveCosetIndexOne) {
  for (const auto& g : all_kinds()) {
    const std::int64_t one = g.chi() == 1 ? 0 : 1;
    for (const auto& c : g.generators()) EXPECT_EQ(g.coset_index(c), one) << g.name();
  }
}

TEST(Group, CosetIndexIsHomomorphism) {
  std::mt19937_64 rng(7);
  for (const auto& g : all_kinds()) {
    std::uniform_int_distribution<std::int64_t> coord(-50, 50);
    for (int i = 0; i < 200; ++i) {
      std::vector<std::int64_t> a(g.rank()), b(g.rank());
      for (auto& v : a) v = coord(rng);
      for (auto& v : b) v = coord(rng);
      const GroupElement x = g.make(a), y = g.make(b);
      std::int64_t sum = g.coset_index(x) + g.coset_index(y);
      if (g.chi()) sum %= *g.chi();
      ASSERT_EQ(g.coset_index(g.multiply(x, y)), sum) << g.name();
    }
  }
}

TEST(Group, DecomposeCompose) {
  std::mt19937_64 rng(11);
  for (const auto& g : all_kinds()) {
    std::uniform_int_distribution<std::int64_t> coord(-30, 30);
    for (int i = 0; i < 100; ++i) {
      std::vector<std::int64_t> a(g.rank());
      for (auto& v : a) v = coord(rng);
      const GroupElement x = g.make(a);
      const Decomposition d = g.decompose(x);
      EXPECT_EQ(g.coset_index(d.causal_part), 0) << g.name();
      EXPECT_EQ(d.k, g.coset_index(x));
      EXPECT_EQ(g.compose(d.causal_part, d.k), x);
      if (g.chi()) {
        EXPECT_GE(d.k, 0);
        EXPECT_LT(d.k, *g.chi());
      }
    }
  }
}

TEST(Group, Enumeration) {
  const Group g = Group::torus({3, 4});
  const auto all = g.elements();
  ASSERT_EQ(all.size(), 12u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(g.index_of(all[i]), i);
    EXPECT_EQ(g.element_at(i), all[i]);
  }
  EXPECT_EQ(Group::hypercube(10).order(), 1024u);
}

TEST(Group, Ball) {
  EXPECT_EQ(Group::line().ball(1), (std::vector<GroupElement>{{-1}, {0}, {1}}));
  EXPECT_EQ(Group::lattice(2).ball(2).size(), 13u);
  EXPECT_EQ(Group::hypercube(3).ball(3).size(), 8u);
}

TEST(Group, GeneratedSubgroup) {
  const Group g = Group::cyclic(12, {1});
  EXPECT_EQ(generated_subgroup(g, {{4}}), (std::vector<GroupElement>{{0}, {4}, {8}}));
  EXPECT_EQ(generated_subgroup(g, {{4}, {6}}).size(), 6u);
}
