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

#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qwsym/walk.hpp"

namespace qwsym {

/// One-dimensional unitary representation of the causal subgroup or of G.
/// Rules are defined on all of G; validation only looks at the domain.
class UnitaryCharacter {
 public:
  enum class Domain { CausalSubgroup, FullGroup };
  using Rule = std::function<Complex(const GroupElement&)>;

  UnitaryCharacter(Domain domain, Rule rule, std::string description = "custom")
      : domain_(domain), rule_(std::move(rule)), description_(std::move(description)) {}

  static UnitaryCharacter trivial(Domain domain);
  /// exp(i * sum_j phi_j x_j) on canonical coordinates.
  static UnitaryCharacter exp_linear(std::vector<double> phi, Domain domain);
  /// (-1)^(sum_j mask_j x_j)
  static UnitaryCharacter sign(std::vector<std::int64_t> mask, Domain domain);

  Complex operator()(const GroupElement& x) const { return rule_(x); }
  Domain domain() const { return domain_; }
  const std::string& description() const { return description_; }

 private:
  Domain domain_;
  Rule rule_;
  std::string description_;
};

/// max |rho(ab) - rho(a) rho(b)| and max ||rho(a)| - 1| over the character's
/// domain. Exhaustive on finite groups, `samples` seeded random pairs
/// otherwise.
double multiplicativity_defect(const Group& g, const UnitaryCharacter& rho, std::size_t samples = 1000,
                               std::uint64_t seed = 0);

/// A doubly infinite sequence of complex units (eta_m)_{m in Z}.
class PhaseSequence {
 public:
  static PhaseSequence constant(Complex value = 1.0);
  /// eta_{r + q p} = base[r] * twist^q with p = base.size(), r in [0, p).
  static PhaseSequence periodic(std::vector<Complex> base, Complex twist = 1.0);
  /// eta_m = values[m] where present, 1 elsewhere.
  static PhaseSequence table(std::map<std::int64_t, Complex> values);

  Complex operator()(std::int64_t m) const;

 private:
  std::vector<Complex> base_;
  Complex twist_{1.0};
  std::map<std::int64_t, Complex> table_;
  bool is_table_ = false;
};

/// Lookup key of a tabulated phase u_{n,x,c}.
struct PhaseKey {
  std::int64_t n;
  GroupElement x;
  std::size_t c;
  auto operator<=>(const PhaseKey&) const = default;
};

/// Diagonal phases u_{n,x,c} of U_n for n >= 1.
class PhaseField {
 public:
  using Rule = std::function<Complex(std::int64_t n, const GroupElement& x, std::size_t c)>;

  explicit PhaseField(Rule rule) : rule_(std::move(rule)) {}
  static PhaseField constant(Complex value = 1.0);
  /// Sparse table; entries absent from the table evaluate to `fallback`.
  static PhaseField table(std::map<PhaseKey, Complex> entries, Complex fallback = 1.0);

  /// Throws PreconditionError for n < 1.
  Complex operator()(std::int64_t n, const GroupElement& x, std::size_t c) const;

 private:
  Rule rule_;
};

/// Full tabulation for 1 <= n <= n_max over a finite group; throws
/// UnsupportedOperation on infinite groups.
PhaseField tabulate(const PhaseField& field, const Group& g, std::int64_t n_max);

enum class SymmetryFamily { General, SpaceHomogeneous, TimeHomogeneous, FullHomogeneous };

const char* to_string(SymmetryFamily family);

/// Coin-space operator sequence n -> U'_n (any unitary at n = 0, diagonal for
/// n >= 1).
using CoinOperatorSequence = std::function<CoinMatrix(std::int64_t n)>;
/// Site phases delta_{x,c}.
using SitePhases = std::function<Complex(const GroupElement& x, std::size_t c)>;

struct GeneralParams {};
struct SpaceHomogParams {
  std::vector<Complex> eta;
  UnitaryCharacter rho;
  CoinOperatorSequence uprime;
};
struct TimeHomogParams {
  Complex epsilon;
  std::vector<Complex> eta;
  SitePhases delta;
};
struct FullHomogParams {
  std::vector<Complex> eta;
  Complex epsilon;
  UnitaryCharacter gamma;
  CoinVector uprime;  ///< diagonal of U'
};
using SymmetryParameters = std::variant<GeneralParams, SpaceHomogParams, TimeHomogParams, FullHomogParams>;

/// A unitary quantum walk symmetry given by U_0 (local) and the diagonal
/// phases of U_n for n >= 1.
class SymmetryTransform {
 public:
  /// U_{n, x~ c0^k} evaluated from an arbitrary decomposition.
  using DecomposedRule = std::function<CoinMatrix(std::int64_t n, const GroupElement& causal_part, std::int64_t k)>;

  SymmetryTransform(Group group, SymmetryFamily family, LocalUnitary u0, PhaseField phases,
                    SymmetryParameters parameters, DecomposedRule decomposed = {});

  const Group& group() const { return group_; }
  SymmetryFamily family() const { return family_; }
  const LocalUnitary& initial_operator() const { return u0_; }
  const PhaseField& phases() const { return phases_; }
  const SymmetryParameters& parameters() const { return parameters_; }

  /// u_{n,x,c}; throws PreconditionError for n = 0.
  Complex phase(std::int64_t n, const GroupElement& x, std::size_t c) const;
  /// U_{n,x}: the U_0 component for n = 0, diag(u_{n,x,.}) otherwise.
  CoinMatrix component(std::int64_t n, const GroupElement& x) const;
  LocalUnitary operator_at(std::int64_t n) const;
  /// U_n |s>
  WalkState apply(std::int64_t n, const WalkState& s) const;

  /// Only the homogeneous families carry a decomposed rule.
  bool has_decomposed_rule() const { return static_cast<bool>(decomposed_); }
  std::optional<CoinMatrix> component_from_decomposition(std::int64_t n, const GroupElement& causal_part,
                                                         std::int64_t k) const;

 private:
  Group group_;
  SymmetryFamily family_;
  LocalUnitary u0_;
  PhaseField phases_;
  SymmetryParameters parameters_;
  DecomposedRule decomposed_;
};

/// Identity symmetry on g.
SymmetryTransform identity_symmetry(const Group& g);

/// Unrestricted family: any local unitary U0 and any diagonal phases.
SymmetryTransform make_general_symmetry(const Group& g, LocalUnitary u0, PhaseField phases);

/// Space-homogeneity preserving family:
///   U_{n, x~ c0^k} = eta_{n-k} rho(x~) U'_n,
/// with eta extended quasi-periodically, eta_{m+chi} = eta_m conj(rho(c0^chi)).
/// `eta` holds chi base values (or a single value) when chi is finite; for
/// infinite chi it lists eta_0, eta_1, ... with 1 elsewhere.
SymmetryTransform make_space_homog_symmetry(const Group& g, std::vector<Complex> eta, UnitaryCharacter rho,
                                            CoinOperatorSequence uprime);

/// Time-homogeneity preserving family:
///   u_{n,x,c} = epsilon^n eta_{n-k} delta_{x,c},  n >= 0.
/// epsilon must be 1 when chi is infinite.
SymmetryTransform make_time_homog_symmetry(const Group& g, Complex epsilon, std::vector<Complex> eta,
                                           SitePhases delta);

/// Both homogeneities:  U_{n,x} = eta_{n-k} epsilon^n gamma(x) U'.
SymmetryTransform make_full_homog_symmetry(const Group& g, std::vector<Complex> eta, Complex epsilon,
                                           UnitaryCharacter gamma, const CoinVector& uprime);

/// C~_{n,x} = V_{n,x} C_{n,x} U_{n,x}^dagger with V_{n,x} = diag(u_{n+1, xc, c}).
QuantumCoin transform_coin(const SymmetryTransform& t, const QuantumCoin& coin);
/// U_0 |psi0>
WalkState transform_state(const SymmetryTransform& t, const WalkState& psi0);
/// u_{n,x,c}; throws PreconditionError for n = 0.
Complex symmetry_phase_at(const SymmetryTransform& t, std::int64_t n, const GroupElement& x, std::size_t c);

}  // namespace qwsym
