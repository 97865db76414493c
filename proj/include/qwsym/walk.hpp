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

#include <functional>
#include <vector>

#include "qwsym/state.hpp"

namespace qwsym {

/// Sequence of local unitaries C_n with components C_{n,x}.
class QuantumCoin {
 public:
  using Rule = std::function<CoinMatrix(std::int64_t n, const GroupElement& x)>;

  QuantumCoin(std::size_t dim, Rule rule, bool time_homogeneous, bool space_homogeneous)
      : dim_(dim),
        rule_(std::move(rule)),
        time_homogeneous_(time_homogeneous),
        space_homogeneous_(space_homogeneous) {}

  /// Time- and space-homogeneous coin Id (x) C.
  static QuantumCoin uniform(CoinMatrix c);

  CoinMatrix at(std::int64_t n, const GroupElement& x) const { return rule_(n, x); }
  /// C_n as a local operator.
  LocalUnitary at_step(std::int64_t n) const;

  std::size_t dimension() const { return dim_; }
  bool time_homogeneous() const { return time_homogeneous_; }
  bool space_homogeneous() const { return space_homogeneous_; }
  const Rule& rule() const { return rule_; }

 private:
  std::size_t dim_;
  Rule rule_;
  bool time_homogeneous_;
  bool space_homogeneous_;
};

enum class StepDirection { Forward, Adjoint };

/// T|x,c> = |xc,c>, or T^dagger|x,c> = |xc^-1,c>.
WalkState step(const WalkState& s, StepDirection direction = StepDirection::Forward);

/// C_n |s>; throws NotUnitaryError if the coin emits a non-unitary matrix.
WalkState apply_coin(const QuantumCoin& coin, std::int64_t n, const WalkState& s);

/// A coin together with a normalized initial state.
class WalkInstance {
 public:
  WalkInstance(QuantumCoin coin, WalkState initial);

  const Group& group() const { return initial_.group(); }
  const QuantumCoin& coin() const { return coin_; }
  const WalkState& initial_state() const { return initial_; }

 private:
  QuantumCoin coin_;
  WalkState initial_;
};

/// (psi_0, ..., psi_{n_max}) with psi_{k+1} = T C_k psi_k.
std::vector<WalkState> evolve(const WalkInstance& w, std::int64_t n_max);
std::vector<WalkState> evolve(const QuantumCoin& coin, const WalkState& psi0, std::int64_t n_max);

/// Position- and time-dependent Haar-random coin derived from a seed.
/// Components are reproducible: the same (seed, n, x) always yields the same
/// matrix. `time_dependent`/`space_dependent` select which arguments matter.
QuantumCoin random_coin(std::size_t dim, std::uint64_t seed, bool time_dependent, bool space_dependent);

}  // namespace qwsym
