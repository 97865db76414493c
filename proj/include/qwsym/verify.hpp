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

#ifndef QWSYM_VERIFY_HPP
#define QWSYM_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qwsym/automorphism.hpp"

namespace qwsym {

inline constexpr double kRelationTol = 1e-10;
inline constexpr double kIdentityTol = 1e-12;

struct VerificationReport {
  std::string case_id;
  double max_residual = 0.0;
  std::vector<double> per_step_residuals;
  bool passed = false;
  double tolerance = 0.0;
  std::int64_t steps = 0;
  /// Negative controls are built to fail; they set this to false.
  bool expected_pass = true;

  bool ok() const { return passed == expected_pass; }
};

VerificationReport make_report(std::string case_id, std::vector<double> residuals, double tol,
                               std::int64_t steps = 0, bool expected_pass = true);

/// Right-hand side of a symmetry relation applied to the original trajectory.
using StateMap = std::function<WalkState(std::int64_t n, const WalkState&)>;
using PositionMap = std::function<GroupElement(const GroupElement&)>;

/// max_n || psi~_n - map(n, psi_n) || for the two given walks.
VerificationReport compare_walks(std::string case_id, const QuantumCoin& coin, const WalkState& psi0,
                                 const QuantumCoin& transformed_coin, const WalkState& transformed_psi0,
                                 const StateMap& map, std::int64_t n_max, double tol);
/// max_{n,x} |p~_n(position(x)) - p_n(x)|
VerificationReport compare_distributions(std::string case_id, const QuantumCoin& coin, const WalkState& psi0,
                                         const QuantumCoin& transformed_coin, const WalkState& transformed_psi0,
                                         const PositionMap& position, std::int64_t n_max, double tol);

/// W_C~(n) psi~_0 = U_n W_C(n) psi_0, with (C~, psi~_0) built from t.
VerificationReport check_symmetry_relation(const QuantumCoin& coin, const WalkState& psi0,
                                           const SymmetryTransform& t, std::int64_t n_max,
                                           double tol = kRelationTol);
/// W_C~(n) psi~_0 = P U_n W_C(n) psi_0
VerificationReport check_symmetry_relation(const QuantumCoin& coin, const WalkState& psi0,
                                           const GeneralizedSymmetry& gs, std::int64_t n_max,
                                           double tol = kRelationTol);
/// Checks a claimed transformed walk against the phases of t.
VerificationReport check_symmetry_relation(const QuantumCoin& coin, const WalkState& psi0,
                                           const QuantumCoin& claimed_coin, const WalkState& claimed_psi0,
                                           const SymmetryTransform& t, std::int64_t n_max,
                                           double tol = kRelationTol);

/// p~_n = p_n
VerificationReport check_probability_map(const QuantumCoin& coin, const WalkState& psi0,
                                         const SymmetryTransform& t, std::int64_t n_max,
                                         double tol = kRelationTol);
/// p~_n(g phi(x)) = p_n(x)
VerificationReport check_probability_map(const QuantumCoin& coin, const WalkState& psi0,
                                         const GeneralizedSymmetry& gs, std::int64_t n_max,
                                         double tol = kRelationTol);

/// The distribution with p(x) moved to position(x).
Distribution permute_distribution(const Distribution& p, const PositionMap& position);

struct HomogeneityCheck {
  bool time_homogeneous;
  bool space_homogeneous;
  double time_spread;   ///< max ||C_{n,x} - C_{n0,x}||_max over the probes
  double space_spread;  ///< max ||C_{n,x} - C_{n,x0}||_max over the probes
};

HomogeneityCheck check_homogeneity(const QuantumCoin& coin, const std::vector<std::int64_t>& n_probe,
                                   const std::vector<GroupElement>& positions_probe, double tol = kIdentityTol);

/// Seeded random character valid on all of g (hence also on S^(0)).
UnitaryCharacter random_character(const Group& g, UnitaryCharacter::Domain domain, std::uint64_t seed);
/// Seeded random member of a family. Phases and site-dependent parts are
/// derived from (seed, n, x, c), so repeated queries agree.
SymmetryTransform random_symmetry(const Group& g, SymmetryFamily family, std::uint64_t seed);

/// Fixed battery of structural checks on g, each with a negative control.
std::vector<VerificationReport> run_invariant_suite(const Group& g, std::uint64_t seed, double tol = kIdentityTol);

}  // namespace qwsym

#endif  // QWSYM_VERIFY_HPP
