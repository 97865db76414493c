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

#include "qwsym/state.hpp"

#include <cmath>

#include <spdlog/spdlog.h>

#include "qwsym/errors.hpp"

namespace qwsym {

LocalUnitary LocalUnitary::identity(std::size_t dim) {
  return uniform(CoinMatrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)));
}

LocalUnitary LocalUnitary::uniform(CoinMatrix component) {
  const auto dim = static_cast<std::size_t>(component.rows());
  return LocalUnitary(dim, [m = std::move(component)](const GroupElement&) { return m; }, true);
}

LocalUnitary LocalUnitary::from_rule(std::size_t dim, Rule rule, bool uniform) {
  return LocalUnitary(dim, std::move(rule), uniform);
}

CoinMatrix LocalUnitary::component(const GroupElement& x) const { return rule_(x); }

WalkState WalkState::localized(const Group& group, const GroupElement& x, const CoinVector& chirality) {
  if (static_cast<std::size_t>(chirality.size()) != group.degree()) {
    throw EncodingError("chirality has dimension " + std::to_string(chirality.size()) +
                        ", coin space of " + group.name() + " has " + std::to_string(group.degree()));
  }
  WalkState s(group);
  s.set_block(x, chirality);
  return s;
}

WalkState WalkState::basis(const Group& group, const GroupElement& x, std::size_t c) {
  WalkState s(group);
  s.set_amplitude(x, c, 1.0);
  return s;
}

Complex WalkState::amplitude(const GroupElement& x, std::size_t c) const {
  auto it = blocks_.find(x);
  if (it == blocks_.end()) return 0.0;
  return it->second(static_cast<Eigen::Index>(c));
}

CoinVector& WalkState::block(const GroupElement& x) {
  auto it = blocks_.find(x);
  if (it != blocks_.end()) return it->second;
  group_.validate(x);
  const auto dim = static_cast<Eigen::Index>(coin_dimension());
  return blocks_.emplace(x, CoinVector::Zero(dim)).first->second;
}

const CoinVector* WalkState::find_block(const GroupElement& x) const {
  auto it = blocks_.find(x);
  return it == blocks_.end() ? nullptr : &it->second;
}

void WalkState::set_block(const GroupElement& x, CoinVector values) {
  if (static_cast<std::size_t>(values.size()) != coin_dimension()) {
    throw EncodingError("coin block has wrong dimension");
  }
  block(x) = std::move(values);
}

void WalkState::set_amplitude(const GroupElement& x, std::size_t c, Complex value) {
  if (c >= coin_dimension()) throw EncodingError("coin index " + std::to_string(c) + " out of range");
  block(x)(static_cast<Eigen::Index>(c)) = value;
}

void WalkState::add_amplitude(const GroupElement& x, std::size_t c, Complex value) {
  if (c >= coin_dimension()) throw EncodingError("coin index " + std::to_string(c) + " out of range");
  block(x)(static_cast<Eigen::Index>(c)) += value;
}

double WalkState::norm_squared() const {
  double sum = 0.0;
  for (const auto& [x, b] : blocks_) sum += b.squaredNorm();
  return sum;
}

double WalkState::norm() const { return std::sqrt(norm_squared()); }

void WalkState::normalize() {
  const double n = norm();
  if (n == 0.0) throw NumericError("cannot normalize the zero state");
  *this *= 1.0 / n;
}

void WalkState::prune(double threshold) {
  for (auto it = blocks_.begin(); it != blocks_.end();) {
    bool any = false;
    for (auto& a : it->second) {
      if (std::abs(a) < threshold) {
        a = 0.0;
      } else {
        any = true;
      }
    }
    it = any ? std::next(it) : blocks_.erase(it);
  }
}

WalkState& WalkState::operator*=(Complex factor) {
  for (auto& [x, b] : blocks_) b *= factor;
  return *this;
}

WalkState& WalkState::operator+=(const WalkState& other) {
  if (!(group_ == other.group_)) throw GroupMismatchError("adding states of different groups");
  for (const auto& [x, b] : other.blocks_) block(x) += b;
  return *this;
}

WalkState& WalkState::operator-=(const WalkState& other) {
  if (!(group_ == other.group_)) throw GroupMismatchError("subtracting states of different groups");
  for (const auto& [x, b] : other.blocks_) block(x) -= b;
  return *this;
}

WalkState operator-(WalkState a, const WalkState& b) {
  a -= b;
  return a;
}

Complex inner_product(const WalkState& a, const WalkState& b) {
  if (!(a.group() == b.group())) throw GroupMismatchError("inner product of states on different groups");
  Complex sum = 0.0;
  const auto& small = a.support_size() <= b.support_size() ? a : b;
  const auto& large = &small == &a ? b : a;
  for (const auto& [x, block] : small.blocks()) {
    const CoinVector* other = large.find_block(x);
    if (!other) continue;
    sum += &small == &a ? block.dot(*other) : other->dot(block);
  }
  return sum;
}

double distance(const WalkState& a, const WalkState& b) { return (a - b).norm(); }

double max_amplitude_difference(const WalkState& a, const WalkState& b) {
  const WalkState d = a - b;
  double m = 0.0;
  for (const auto& [x, block] : d.blocks()) m = std::max(m, block.cwiseAbs().maxCoeff());
  return m;
}

WalkState apply_local(const LocalUnitary& u, const WalkState& s, bool validate) {
  if (u.dimension() != s.coin_dimension()) {
    throw GroupMismatchError("local operator dimension does not match the coin space");
  }
  WalkState out(s.group());
  if (u.is_uniform()) {
    const CoinMatrix m = u.component(s.group().identity());
    if (validate) require_unitary(m, "local operator component");
    for (const auto& [x, b] : s.blocks()) out.set_block(x, m * b);
  } else {
    for (const auto& [x, b] : s.blocks()) {
      const CoinMatrix m = u.component(x);
      if (validate) require_unitary(m, "local operator component");
      out.set_block(x, m * b);
    }
  }
  out.prune();
  return out;
}

double Distribution::operator()(const GroupElement& x) const {
  auto it = p_.find(x);
  return it == p_.end() ? 0.0 : it->second;
}

double Distribution::total() const {
  double sum = 0.0;
  for (const auto& [x, p] : p_) sum += p;
  return sum;
}

Distribution position_distribution(const WalkState& s) {
  Distribution::Map p;
  for (const auto& [x, b] : s.blocks()) p.emplace(x, b.squaredNorm());
  Distribution d(std::move(p));
  if (std::abs(d.total() - 1.0) > 1e-10) {
    spdlog::warn("position_distribution: state is not normalized (total probability {})", d.total());
  }
  return d;
}

double max_deviation(const Distribution& p, const Distribution& q) {
  double m = 0.0;
  for (const auto& [x, v] : p.probabilities()) m = std::max(m, std::abs(v - q(x)));
  for (const auto& [x, v] : q.probabilities()) m = std::max(m, std::abs(v - p(x)));
  return m;
}

}  // namespace qwsym
