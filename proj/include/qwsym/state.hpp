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
#include <map>

#include "qwsym/group.hpp"
#include "qwsym/linalg.hpp"

namespace qwsym {

/// Amplitudes below this magnitude are dropped after every operation.
inline constexpr double kPruneThreshold = 1e-15;

/// Block-diagonal operator A = sum_x |x><x| (x) A_x on H_S (x) H_C.
class LocalUnitary {
 public:
  using Rule = std::function<CoinMatrix(const GroupElement&)>;

  static LocalUnitary identity(std::size_t dim);
  /// Id (x) B: every component equals `component`.
  static LocalUnitary uniform(CoinMatrix component);
  static LocalUnitary from_rule(std::size_t dim, Rule rule, bool uniform = false);

  CoinMatrix component(const GroupElement& x) const;
  bool is_uniform() const { return uniform_; }
  std::size_t dimension() const { return dim_; }

 private:
  LocalUnitary(std::size_t dim, Rule rule, bool uniform)
      : dim_(dim), rule_(std::move(rule)), uniform_(uniform) {}
  std::size_t dim_;
  Rule rule_;
  bool uniform_;
};

/// Finite-support state in H = H_S (x) H_C. Amplitudes are stored per
/// position as a coin block of size |S|; blocks are kept in canonical element
/// order so iteration is deterministic.
class WalkState {
 public:
  using Blocks = std::map<GroupElement, CoinVector>;

  explicit WalkState(Group group) : group_(std::move(group)) {}

  /// |x> (x) chirality
  static WalkState localized(const Group& group, const GroupElement& x, const CoinVector& chirality);
  /// |x, c>
  static WalkState basis(const Group& group, const GroupElement& x, std::size_t c);

  const Group& group() const { return group_; }
  std::size_t coin_dimension() const { return group_.degree(); }

  Complex amplitude(const GroupElement& x, std::size_t c) const;
  void set_amplitude(const GroupElement& x, std::size_t c, Complex value);
  void add_amplitude(const GroupElement& x, std::size_t c, Complex value);
  /// Mutable access to the coin block at x, creating a zero block if absent.
  CoinVector& block(const GroupElement& x);
  const CoinVector* find_block(const GroupElement& x) const;
  void set_block(const GroupElement& x, CoinVector values);

  const Blocks& blocks() const { return blocks_; }
  bool empty() const { return blocks_.empty(); }
  std::size_t support_size() const { return blocks_.size(); }

  double norm_squared() const;
  double norm() const;
  void normalize();
  /// Zeroes amplitudes below `threshold` and drops empty blocks.
  void prune(double threshold = kPruneThreshold);

  WalkState& operator*=(Complex factor);
  WalkState& operator+=(const WalkState& other);
  WalkState& operator-=(const WalkState& other);

 private:
  Group group_;
  Blocks blocks_;
};

WalkState operator-(WalkState a, const WalkState& b);

/// <a|b>, conjugate-linear in a. Throws GroupMismatchError.
Complex inner_product(const WalkState& a, const WalkState& b);
/// ||a - b||
double distance(const WalkState& a, const WalkState& b);
/// max over entries |a - b|
double max_amplitude_difference(const WalkState& a, const WalkState& b);

/// Multiplies the coin block at each x by U_x. With `validate`, throws
/// NotUnitaryError for a non-unitary component.
WalkState apply_local(const LocalUnitary& u, const WalkState& s, bool validate = false);

/// Position measurement distribution p(x) = sum_c |<x,c|s>|^2.
class Distribution {
 public:
  using Map = std::map<GroupElement, double>;
  Distribution() = default;
  explicit Distribution(Map probabilities) : p_(std::move(probabilities)) {}

  double operator()(const GroupElement& x) const;
  const Map& probabilities() const { return p_; }
  double total() const;

 private:
  Map p_;
};

/// Logs a warning (but still computes) when s is not normalized.
Distribution position_distribution(const WalkState& s);

/// max_x |p(x) - q(x)| over the union of both supports.
double max_deviation(const Distribution& p, const Distribution& q);

}  // namespace qwsym
