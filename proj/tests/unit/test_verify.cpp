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

#include "../test_util.hpp"
#include "qwsym/verify.hpp"

using namespace qwsym;

TEST(Verify, IdentityHasZeroResidual) {
  const Group z = Group::line();
  const QuantumCoin c = random_coin(2, 1, true, true);
  const WalkState psi0 = WalkState::basis(z, {0}, 0);
  const auto r = check_symmetry_relation(c, psi0, identity_symmetry(z), 20);
  EXPECT_EQ(r.max_residual, 0.0);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.per_step_residuals.size(), 21u);
  EXPECT_EQ(check_probability_map(c, psi0, identity_symmetry(z), 20).max_residual, 0.0);
}

TEST(Verify, CorruptedPhaseFails) {
  const Group z = Group::line();
  const QuantumCoin c = QuantumCoin::uniform(hadamard());
  const WalkState psi0 = WalkState::basis(z, {0}, 0);
  const SymmetryTransform t = random_symmetry(z, SymmetryFamily::FullHomogeneous, 3);
  // Flip u_{2,0,+1}; the walk at n = 2 has amplitude there.
  const SymmetryTransform bad = make_general_symmetry(
      z, t.initial_operator(), PhaseField([t](std::int64_t n, const GroupElement& x, std::size_t cc) {
        const Complex u = t.phase(n, x, cc);
        return (n == 2 && x == GroupElement{0} && cc == 0) ? -u : u;
      }));
  const auto r = check_symmetry_relation(c, psi0, transform_coin(t, c), transform_state(t, psi0), bad, 10);
  EXPECT_FALSE(r.passed);
  EXPECT_LT(r.per_step_residuals[1], 1e-14);
  EXPECT_GT(r.per_step_residuals[2], 0.1);
}

TEST(Verify, TranslationPermutesProbabilities) {
  const Group z = Group::line();
  const GeneralizedSymmetry gs{make_shifted_automorphism(z, {5}, {0, 1}), identity_symmetry(z)};
  CoinVector chi(2);
  chi << 0.6, Complex(0, 0.8);
  const auto r = check_probability_map(QuantumCoin::uniform(hadamard()), WalkState::localized(z, {0}, chi), gs, 50);
  EXPECT_LT(r.max_residual, 1e-10);
  EXPECT_EQ(r.steps, 50);
}

TEST(Verify, Homogeneity) {
  const Group z = Group::line();
  const auto xs = z.ball(4);
  const auto h = check_homogeneity(QuantumCoin::uniform(hadamard()), {0, 1, 5}, xs);
  EXPECT_TRUE(h.time_homogeneous);
  EXPECT_TRUE(h.space_homogeneous);
  const QuantumCoin turning(2, [](std::int64_t n, const GroupElement&) { return rotation(0.1 * static_cast<double>(n)); },
                            false, true);
  const auto t = check_homogeneity(turning, {0, 1, 5}, xs);
  EXPECT_FALSE(t.time_homogeneous);
  EXPECT_TRUE(t.space_homogeneous);
}

TEST(Verify, InvariantSuiteCyclic) {
  const auto reports = run_invariant_suite(Group::cyclic(8), 1);
  bool saw_tp = false;
  for (const auto& r : reports) {
    EXPECT_TRUE(r.ok()) << r.case_id << " residual " << r.max_residual;
    if (r.case_id == "tp_equals_pt") {
      saw_tp = true;
      EXPECT_EQ(r.max_residual, 0.0);
    }
  }
  EXPECT_TRUE(saw_tp);
}

TEST(Verify, InvariantSuiteOtherGroups) {
  for (const auto& g : {Group::hypercube(3), Group::line(), Group::lattice(2), Group::torus({6, 6}), Group::cyclic(8, {1}),
                        Group::line({1})}) {
    std::size_t negatives = 0;
    for (const auto& r : run_invariant_suite(g, 7)) {
      EXPECT_TRUE(r.ok()) << g.name() << " " << r.case_id << " residual " << r.max_residual;
      negatives += !r.expected_pass;
    }
    EXPECT_GE(negatives, 5u) << g.name();
  }
}

TEST(Verify, SuiteIsDeterministic) {
  const auto a = run_invariant_suite(Group::lattice(2), 3);
  const auto b = run_invariant_suite(Group::lattice(2), 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].case_id, b[i].case_id);
    EXPECT_EQ(a[i].per_step_residuals, b[i].per_step_residuals);
  }
}

TEST(Verify, ReportSemantics) {
  const auto r = make_report("x", {1e-12, 3e-11}, 1e-11);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.max_residual, 3e-11);
  EXPECT_TRUE(make_report("y", {}, 0.0).passed);
  EXPECT_TRUE(make_report("z", {1.0}, 0.0, 0, false).ok());
}
