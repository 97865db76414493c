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

#ifndef QWSYM_AUTOMORPHISM_HPP
#define QWSYM_AUTOMORPHISM_HPP

#include <cstdint>
#include <vector>

#include "qwsym/symmetry.hpp"

namespace qwsym {

/// x -> g phi(x) with phi an automorphism of G fixing S setwise. phi is stored
/// as an integer matrix acting on coordinates; it is always induced from the
/// generator permutation, never given directly.
class ShiftedAutomorphism {
 public:
  const Group& group() const { return group_; }
  const GroupElement& shift() const { return shift_; }
  /// phi(c_i) = c_{pi[i]}
  const std::vector<std::size_t>& generator_permutation() const { return pi_; }

  GroupElement phi(const GroupElement& x) const;
  /// g phi(x)
  GroupElement operator()(const GroupElement& x) const;
  std::size_t coin_image(std::size_t c) const { return pi_[c]; }
  /// P^(C) with P^(C)|c> = |pi(c)>.
  CoinMatrix coin_permutation() const;
  bool is_identity() const;

 private:
  friend ShiftedAutomorphism make_shifted_automorphism(const Group&, const GroupElement&,
                                                       std::vector<std::size_t>);
  ShiftedAutomorphism(Group group, GroupElement shift, std::vector<std::size_t> pi,
                      std::vector<std::int64_t> matrix)
      : group_(std::move(group)), shift_(std::move(shift)), pi_(std::move(pi)), matrix_(std::move(matrix)) {}

  Group group_;
  GroupElement shift_;
  std::vector<std::size_t> pi_;
  std::vector<std::int64_t> matrix_;  ///< rank x rank, row major
};

/// Throws NotAutomorphismError when pi does not induce an S-preserving
/// automorphism of g.
ShiftedAutomorphism make_shifted_automorphism(const Group& g, const GroupElement& shift,
                                              std::vector<std::size_t> pi);
ShiftedAutomorphism identity_automorphism(const Group& g);
/// Translation x -> h x.
ShiftedAutomorphism shift_only(const Group& g, const GroupElement& h);

/// (g1 phi1) o (g2 phi2) = g1 phi1(g2) (phi1 o phi2)
ShiftedAutomorphism compose(const ShiftedAutomorphism& a, const ShiftedAutomorphism& b);
/// (g phi)^-1 = phi^-1(g^-1) phi^-1
ShiftedAutomorphism invert(const ShiftedAutomorphism& a);
bool operator==(const ShiftedAutomorphism& a, const ShiftedAutomorphism& b);

/// Every generator permutation that induces an automorphism (shift e). For
/// |S| > 8 only permutations found among `max_samples` random draws are
/// returned.
std::vector<ShiftedAutomorphism> generator_automorphisms(const Group& g, std::uint64_t seed = 0,
                                                         std::size_t max_samples = 2000);

/// P|s>: the amplitude at (x,c) moves to (g phi(x), pi(c)).
WalkState permutation_apply(const ShiftedAutomorphism& a, const WalkState& s);
/// P^dagger U P, with component P^(C)^dagger U_{g phi(y)} P^(C) at y.
LocalUnitary conjugate_local(const ShiftedAutomorphism& a, const LocalUnitary& u);
/// The coin sequence P C_n P^dagger.
QuantumCoin conjugate_coin(const ShiftedAutomorphism& a, const QuantumCoin& coin);

struct GeneralizedSymmetry {
  ShiftedAutomorphism perm;
  SymmetryTransform inner;

  /// P U_n |s>
  WalkState apply(std::int64_t n, const WalkState& s) const;
};

struct TransformedWalk {
  QuantumCoin coin;
  WalkState initial;
};

/// Ordinary transform by `inner`, then conjugation by P:
///   C~_n = P C'_n P^dagger,  psi~_0 = P U_0 psi_0.
TransformedWalk generalized_transform(const GeneralizedSymmetry& gs, const QuantumCoin& coin,
                                      const WalkState& psi0);

}  // namespace qwsym

#endif  // QWSYM_AUTOMORPHISM_HPP
