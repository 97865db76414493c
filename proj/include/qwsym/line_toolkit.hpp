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

#ifndef QWSYM_LINE_TOOLKIT_HPP
#define QWSYM_LINE_TOOLKIT_HPP

#include <cstdint>
#include <utility>

#include "qwsym/automorphism.hpp"

namespace qwsym {

/// C = omega diag(mu, mu*) R(psi) diag(nu, nu*) in the coin basis (+1, -1).
struct LineCoinParams {
  Complex omega{1.0};
  Complex mu{1.0};
  Complex nu{1.0};
  double psi = 0.0;
};

/// Throws PreconditionError if omega, mu or nu is not a unit.
CoinMatrix build_line_coin(const LineCoinParams& p);
/// Inverse of build_line_coin. Branch: omega = principal sqrt(det C),
/// psi in [0, pi/2], Re(nu) >= 0 (Im(nu) >= 0 on ties).
LineCoinParams decompose_line_coin(const CoinMatrix& c);
/// Uniformly random phases and psi in [0, pi).
LineCoinParams random_line_params(std::uint64_t seed);

/// Throws GroupMismatchError unless g is Z with S = (+1, -1).
void require_standard_line(const Group& g);

struct Canonicalization {
  double psi;
  LineCoinParams params;
  SymmetryTransform transform;
};

/// Full-homogeneous symmetry that turns the uniform coin C into R(psi):
/// epsilon = omega*, e^{i phi} = mu* nu*, U' = diag(nu, nu*).
Canonicalization canonicalize_line_coin(const CoinMatrix& c, const Group& line = Group::line());

/// Q = [[0, -i nu*^2], [i nu^2, 0]]
CoinMatrix mirror_chirality_map(const LineCoinParams& p);

struct MirrorSymmetry {
  GeneralizedSymmetry symmetry;
  CoinMatrix q;
};

/// Reflection x -> -x with the compensating full-homogeneous inner transform
/// (epsilon = 1, e^{i phi} = mu*^2 nu*^2, U' = diag(i nu^2, -i nu*^2)). Maps
/// the coin to itself and |0> (x) chi to |0> (x) Q chi.
MirrorSymmetry mirror_generalized_symmetry(const LineCoinParams& p, const Group& line = Group::line());

/// Eigenvectors of Q for +1 and -1: (nu*, +-i nu) / sqrt 2. Throws
/// DegenerateCoinError when |sin psi| < 1e-9.
std::pair<CoinVector, CoinVector> symmetric_initial_states(const LineCoinParams& p);

}  // namespace qwsym

#endif  // QWSYM_LINE_TOOLKIT_HPP
