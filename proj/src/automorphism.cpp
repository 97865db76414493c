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

#include "qwsym/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "qwsym/errors.hpp"

namespace qwsym {
namespace {

std::string describe(const std::vector<std::size_t>& pi) {
  std::string s = "[";
  for (std::size_t i = 0; i < pi.size(); ++i) s += (i ? "," : "") + std::to_string(pi[i]);
  return s + "]";
}

// Signed representative of a canonical coordinate (N-1 -> -1 on a torus).
std::int64_t signed_coord(std::int64_t v, std::int64_t modulus) {
  return (modulus > 2 && v > modulus / 2) ? v - modulus : v;
}

GroupElement apply_matrix(const Group& g, const std::vector<std::int64_t>& m, const GroupElement& x) {
  const std::size_t r = g.rank();
  std::vector<std::int64_t> out(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) out[i] += m[i * r + j] * x[j];
  }
  return g.make(std::move(out));
}

bool is_signed_permutation(const std::vector<std::int64_t>& m, std::size_t r) {
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t row = 0, col = 0;
    for (std::size_t j = 0; j < r; ++j) {
      if (m[i * r + j] != 0) ++row;
      if (m[j * r + i] != 0) ++col;
      if (std::abs(m[i * r + j]) > 1) return false;
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

// Candidate matrices for phi given pi; the caller checks them against S.
std::vector<std::vector<std::int64_t>> candidates(const Group& g, const std::vector<std::size_t>& pi) {
  const std::size_t r = g.rank();
  const auto moduli = g.moduli();
  switch (g.kind()) {
    case GroupKind::Line:
      return {{1}, {-1}};
    case GroupKind::Cyclic: {
      const std::int64_t n = moduli[0];
      // phi(x) = u x with u a unit mod N; small N, so just scan.
      std::vector<std::vector<std::int64_t>> out;
      for (std::int64_t u = 1; u < std::max<std::int64_t>(n, 2); ++u) {
        if (std::gcd(u, n) == 1) out.push_back({u});
      }
      return out;
    }
    case GroupKind::Lattice:
    case GroupKind::Hypercube: {
      const std::size_t stride = g.kind() == GroupKind::Lattice ? 2 : 1;
      std::vector<std::int64_t> m(r * r, 0);
      for (std::size_t j = 0; j < r; ++j) {
        const GroupElement& image = g.generator(pi[stride * j]);
        for (std::size_t i = 0; i < r; ++i) m[i * r + j] = signed_coord(image[i], moduli[i]);
      }
      if (!is_signed_permutation(m, r)) return {};
      return {m};
    }
  }
  return {};
}

bool induces(const Group& g, const std::vector<std::int64_t>& m, const std::vector<std::size_t>& pi) {
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (apply_matrix(g, m, g.generator(i)) != g.generator(pi[i])) return false;
  }
  // Well defined on the quotient: every relation L_j e_j must map to e.
  const auto moduli = g.moduli();
  const std::size_t r = g.rank();
  for (std::size_t j = 0; j < r; ++j) {
    if (moduli[j] == 0) continue;
    std::vector<std::int64_t> out(r, 0);
    for (std::size_t i = 0; i < r; ++i) out[i] = m[i * r + j] * moduli[j];
    if (g.make(std::move(out)) != g.identity()) return false;
  }
  return true;
}

std::vector<std::size_t> inverse_permutation(const std::vector<std::size_t>& pi) {
  std::vector<std::size_t> inv(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) inv[pi[i]] = i;
  return inv;
}

}  // namespace

GroupElement ShiftedAutomorphism::phi(const GroupElement& x) const { return apply_matrix(group_, matrix_, x); }

GroupElement ShiftedAutomorphism::operator()(const GroupElement& x) const {
  return group_.multiply(shift_, phi(x));
}

CoinMatrix ShiftedAutomorphism::coin_permutation() const {
  const auto dim = static_cast<Eigen::Index>(pi_.size());
  CoinMatrix p = CoinMatrix::Zero(dim, dim);
  for (std::size_t c = 0; c < pi_.size(); ++c) p(static_cast<Eigen::Index>(pi_[c]), static_cast<Eigen::Index>(c)) = 1.0;
  return p;
}

bool ShiftedAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < pi_.size(); ++i) {
    if (pi_[i] != i) return false;
  }
  return shift_ == group_.identity();
}

ShiftedAutomorphism make_shifted_automorphism(const Group& g, const GroupElement& shift, std::vector<std::size_t> pi) {
  g.validate(shift);
  if (pi.size() != g.degree()) {
    throw NotAutomorphismError("permutation " + describe(pi) + " has the wrong length for |S| = " +
                               std::to_string(g.degree()));
  }
  std::vector<std::size_t> sorted = pi;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw NotAutomorphismError(describe(pi) + " is not a permutation of the generators");
  }
  for (auto& m : candidates(g, pi)) {
    if (induces(g, m, pi)) return ShiftedAutomorphism(g, shift, std::move(pi), std::move(m));
  }
  throw NotAutomorphismError("generator permutation " + describe(pi) + " does not induce an automorphism of " +
                             g.name());
}

ShiftedAutomorphism identity_automorphism(const Group& g) { return shift_only(g, g.identity()); }

ShiftedAutomorphism shift_only(const Group& g, const GroupElement& h) {
  std::vector<std::size_t> id(g.degree());
  std::iota(id.begin(), id.end(), std::size_t{0});
  return make_shifted_automorphism(g, h, std::move(id));
}

ShiftedAutomorphism compose(const ShiftedAutomorphism& a, const ShiftedAutomorphism& b) {
  if (!(a.group() == b.group())) throw GroupMismatchError("cannot compose automorphisms of different groups");
  const Group& g = a.group();
  std::vector<std::size_t> pi(g.degree());
  for (std::size_t i = 0; i < pi.size(); ++i) pi[i] = a.coin_image(b.coin_image(i));
  return make_shifted_automorphism(g, g.multiply(a.shift(), a.phi(b.shift())), std::move(pi));
}

ShiftedAutomorphism invert(const ShiftedAutomorphism& a) {
  const Group& g = a.group();
  const ShiftedAutomorphism phi_inv =
      make_shifted_automorphism(g, g.identity(), inverse_permutation(a.generator_permutation()));
  return make_shifted_automorphism(g, phi_inv.phi(g.inverse(a.shift())), phi_inv.generator_permutation());
}

bool operator==(const ShiftedAutomorphism& a, const ShiftedAutomorphism& b) {
  return a.group() == b.group() && a.shift() == b.shift() &&
         a.generator_permutation() == b.generator_permutation();
}

std::vector<ShiftedAutomorphism> generator_automorphisms(const Group& g, std::uint64_t seed,
                                                         std::size_t max_samples) {
  std::vector<std::size_t> pi(g.degree());
  std::iota(pi.begin(), pi.end(), std::size_t{0});
  std::vector<ShiftedAutomorphism> out;
  auto try_add = [&](const std::vector<std::size_t>& p) {
    try {
      auto a = make_shifted_automorphism(g, g.identity(), p);
      if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(std::move(a));
    } catch (const NotAutomorphismError&) {
    }
  };
  if (pi.size() <= 8) {
    do {
      try_add(pi);
    } while (std::next_permutation(pi.begin(), pi.end()));
    return out;
  }
  try_add(pi);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < max_samples; ++i) {
    std::shuffle(pi.begin(), pi.end(), rng);
    try_add(pi);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.generator_permutation() < b.generator_permutation();
  });
  return out;
}

WalkState permutation_apply(const ShiftedAutomorphism& a, const WalkState& s) {
  if (!(s.group() == a.group())) throw GroupMismatchError("state and automorphism live on different groups");
  WalkState out(s.group());
  for (const auto& [x, block] : s.blocks()) {
    CoinVector moved(block.size());
    for (Eigen::Index c = 0; c < block.size(); ++c) {
      moved(static_cast<Eigen::Index>(a.coin_image(static_cast<std::size_t>(c)))) = block(c);
    }
    out.set_block(a(x), std::move(moved));
  }
  return out;
}

LocalUnitary conjugate_local(const ShiftedAutomorphism& a, const LocalUnitary& u) {
  const CoinMatrix p = a.coin_permutation();
  if (u.is_uniform()) {
    return LocalUnitary::uniform(p.adjoint() * u.component(a.group().identity()) * p);
  }
  return LocalUnitary::from_rule(u.dimension(), [a, u, p](const GroupElement& y) {
    return CoinMatrix(p.adjoint() * u.component(a(y)) * p);
  });
}

QuantumCoin conjugate_coin(const ShiftedAutomorphism& a, const QuantumCoin& coin) {
  const ShiftedAutomorphism inv = invert(a);
  const CoinMatrix p = a.coin_permutation();
  return QuantumCoin(
      coin.dimension(),
      [inv, p, coin](std::int64_t n, const GroupElement& y) {
        return CoinMatrix(p * coin.at(n, inv(y)) * p.adjoint());
      },
      coin.time_homogeneous(), coin.space_homogeneous());
}

WalkState GeneralizedSymmetry::apply(std::int64_t n, const WalkState& s) const {
  return permutation_apply(perm, inner.apply(n, s));
}

TransformedWalk generalized_transform(const GeneralizedSymmetry& gs, const QuantumCoin& coin,
                                      const WalkState& psi0) {
  if (!(gs.perm.group() == gs.inner.group())) {
    throw GroupMismatchError("generalized symmetry mixes two groups");
  }
  QuantumCoin inner_coin = transform_coin(gs.inner, coin);
  return TransformedWalk{conjugate_coin(gs.perm, inner_coin),
                         permutation_apply(gs.perm, transform_state(gs.inner, psi0))};
}

}  // namespace qwsym
