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

#include "qwsym/walk.hpp"

#include <cmath>
#include <string>

#include "qwsym/errors.hpp"

namespace qwsym {

QuantumCoin QuantumCoin::uniform(CoinMatrix c) {
  require_unitary(c, "coin matrix");
  const auto dim = static_cast<std::size_t>(c.rows());
  return QuantumCoin(dim, [m = std::move(c)](std::int64_t, const GroupElement&) { return m; }, true, true);
}

LocalUnitary QuantumCoin::at_step(std::int64_t n) const {
  if (space_homogeneous_) {
    return LocalUnitary::from_rule(
        dim_, [rule = rule_, n](const GroupElement& x) { return rule(n, x); }, true);
  }
  return LocalUnitary::from_rule(dim_, [rule = rule_, n](const GroupElement& x) { return rule(n, x); });
}

WalkState step(const WalkState& s, StepDirection direction) {
  const Group& g = s.group();
  const std::size_t dim = s.coin_dimension();
  std::vector<GroupElement> moves(g.generators());
  if (direction == StepDirection::Adjoint) {
    for (auto& m : moves) m = g.inverse(m);
  }
  WalkState out(g);
  for (const auto& [x, b] : s.blocks()) {
    for (std::size_t c = 0; c < dim; ++c) {
      const Complex a = b(static_cast<Eigen::Index>(c));
      if (a == Complex(0.0)) continue;
      out.set_amplitude(g.multiply(x, moves[c]), c, a);
    }
  }
  return out;
}

WalkState apply_coin(const QuantumCoin& coin, std::int64_t n, const WalkState& s) {
  if (coin.dimension() != s.coin_dimension()) {
    throw GroupMismatchError("coin dimension " + std::to_string(coin.dimension()) +
                             " does not match |S| = " + std::to_string(s.coin_dimension()));
  }
  return apply_local(coin.at_step(n), s, /*validate=*/true);
}

WalkInstance::WalkInstance(QuantumCoin coin, WalkState initial)
    : coin_(std::move(coin)), initial_(std::move(initial)) {
  if (coin_.dimension() != initial_.coin_dimension()) {
    throw GroupMismatchError("coin dimension does not match the group degree");
  }
  if (std::abs(initial_.norm() - 1.0) > kOperatorTol) {
    throw PreconditionError("initial state is not normalized (norm " + std::to_string(initial_.norm()) + ")");
  }
}

std::vector<WalkState> evolve(const WalkInstance& w, std::int64_t n_max) {
  return evolve(w.coin(), w.initial_state(), n_max);
}

std::vector<WalkState> evolve(const QuantumCoin& coin, const WalkState& psi0, std::int64_t n_max) {
  if (n_max < 0) throw PreconditionError("n_max must be non-negative");
  std::vector<WalkState> trajectory;
  trajectory.reserve(static_cast<std::size_t>(n_max) + 1);
  trajectory.push_back(psi0);
  for (std::int64_t n = 0; n < n_max; ++n) {
    trajectory.push_back(step(apply_coin(coin, n, trajectory.back())));
  }
  return trajectory;
}

QuantumCoin random_coin(std::size_t dim, std::uint64_t seed, bool time_dependent, bool space_dependent) {
  auto rule = [dim, seed, time_dependent, space_dependent](std::int64_t n, const GroupElement& x) {
    std::vector<std::int64_t> keys{time_dependent ? n : 0};
    if (space_dependent) keys.insert(keys.end(), x.coords().begin(), x.coords().end());
    std::mt19937_64 rng = derived_rng(seed, keys);
    return random_unitary(dim, rng);
  };
  return QuantumCoin(dim, std::move(rule), !time_dependent, !space_dependent);
}

}  // namespace qwsym
