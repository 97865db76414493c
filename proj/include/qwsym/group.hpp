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
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qwsym {

/// Canonical integer-tuple encoding of a group element. One coordinate for
/// the line and cyclic groups, d coordinates for lattices, d bits for the
/// hypercube. Coordinates of finite factors are kept in [0, modulus).
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  GroupElement(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  std::span<const std::int64_t> coords() const { return coords_; }
  std::size_t rank() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }

  auto operator<=>(const GroupElement&) const = default;
  bool operator==(const GroupElement&) const = default;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& x) const noexcept;
};

enum class GroupKind { Line, Lattice, Cyclic, Hypercube };

const char* to_string(GroupKind kind);

/// x = causal_part * c0^k with causal_part in the causal subgroup.
struct Decomposition {
  GroupElement causal_part;
  std::int64_t k = 0;
};

/// A finitely generated group with an ordered generating set S. All built-in
/// kinds are abelian, so the group law is coordinate-wise addition reduced by
/// the per-coordinate modulus (0 meaning an infinite cyclic factor).
///
/// Group is a cheap handle; copies share the same immutable description.
class Group {
 public:
  /// Z with generators (default S = (+1, -1)). gcd(S) must be 1.
  static Group line(std::vector<std::int64_t> generators = {1, -1}, std::size_t c0_index = 0);
  /// Z^d with S = (+e1, -e1, ..., +ed, -ed).
  static Group lattice(std::size_t d, std::size_t c0_index = 0);
  /// Z_{L1} x ... x Z_{Ld} with S = (+e1, -e1, ...). Every period must be >= 3
  /// so that +e_i and -e_i are distinct.
  static Group torus(std::vector<std::int64_t> periods, std::size_t c0_index = 0);
  /// Z_N with generators (default {1, N-1}, or {1} when N <= 2).
  static Group cyclic(std::int64_t n, std::vector<std::int64_t> generators = {},
                      std::size_t c0_index = 0);
  /// Z_2^d with S = (e1, ..., ed).
  static Group hypercube(std::size_t d, std::size_t c0_index = 0);

  GroupKind kind() const;
  std::string name() const;
  std::size_t rank() const;
  std::span<const std::int64_t> moduli() const;
  bool is_finite() const;
  /// Number of elements; nullopt for infinite groups.
  std::optional<std::uint64_t> order() const;

  const std::vector<GroupElement>& generators() const;
  const GroupElement& generator(std::size_t i) const;
  /// |S|, the coin dimension.
  std::size_t degree() const;
  std::optional<std::size_t> generator_index(const GroupElement& x) const;
  std::size_t distinguished_index() const;
  const GroupElement& distinguished_generator() const;

  /// Index [G : S^(0)]; nullopt means infinite.
  std::optional<std::int64_t> chi() const;
  /// True for every built-in kind (abelian).
  bool nonseparating() const;

  GroupElement identity() const;
  /// Reduces raw coordinates to the canonical encoding. Throws EncodingError
  /// on arity mismatch.
  GroupElement make(std::vector<std::int64_t> coords) const;
  /// Throws EncodingError unless x is canonical for this group.
  void validate(const GroupElement& x) const;
  bool is_canonical(const GroupElement& x) const;

  GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
  GroupElement inverse(const GroupElement& x) const;
  GroupElement power(const GroupElement& x, std::int64_t k) const;

  /// k with x S^(0) = (c0 S^(0))^k, reduced to [0, chi) when chi is finite.
  std::int64_t coset_index(const GroupElement& x) const;
  /// Canonical decomposition x = x~ c0^k with k = coset_index(x).
  Decomposition decompose(const GroupElement& x) const;
  /// x~ * c0^k for an arbitrary (not necessarily canonical) k.
  GroupElement compose(const GroupElement& causal_part, std::int64_t k) const;

  /// All elements in canonical order. Throws UnsupportedOperation when infinite.
  std::vector<GroupElement> elements() const;
  /// Dense index in [0, order) for finite groups (mixed radix).
  std::size_t index_of(const GroupElement& x) const;
  GroupElement element_at(std::size_t index) const;
  /// Elements within word distance `radius` of the identity, sorted.
  std::vector<GroupElement> ball(std::size_t radius) const;

  bool operator==(const Group& other) const;

 private:
  struct Data;
  explicit Group(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// Result of enumerating the causal subgroups directly from their definition.
struct CausalStructure {
  std::vector<GroupElement> causal;         ///< S^(0), sorted
  std::vector<GroupElement> future_causal;  ///< S^(0)_+, sorted
  std::int64_t chi = 0;                     ///< |G| / |S^(0)|
  bool nonseparating = false;
};

/// Closure over the union of S^n S^-n. Finite groups only; throws
/// UnsupportedOperation otherwise.
CausalStructure brute_force_causal(const Group& g);

/// Subgroup generated by `seeds` (finite groups only).
std::vector<GroupElement> generated_subgroup(const Group& g, const std::vector<GroupElement>& seeds);

/// Free-standing forms of the group operations.
inline GroupElement multiply(const Group& g, const GroupElement& x, const GroupElement& y) {
  return g.multiply(x, y);
}
inline GroupElement inverse(const Group& g, const GroupElement& x) { return g.inverse(x); }
inline std::int64_t coset_index(const Group& g, const GroupElement& x) { return g.coset_index(x); }
inline Decomposition decompose(const Group& g, const GroupElement& x) { return g.decompose(x); }

}  // namespace qwsym
