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

#include "qwsym/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "qwsym/errors.hpp"

namespace qwsym {
namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a modulo m for gcd(a, m) = 1, m >= 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t t = 0, new_t = 1, r = m, new_r = floor_mod(a, m);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return floor_mod(t, m);
}

constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 24;

}  // namespace

std::string GroupElement::to_string() const {
  if (coords_.size() == 1) return std::to_string(coords_[0]);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

std::size_t GroupElementHash::operator()(const GroupElement& x) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto c : x.coords()) {
    h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

const char* to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::Line: return "line";
    case GroupKind::Lattice: return "lattice";
    case GroupKind::Cyclic: return "cyclic";
    case GroupKind::Hypercube: return "hypercube";
  }
  return "?";
}

struct Group::Data {
  GroupKind kind;
  std::string name;
  std::vector<std::int64_t> moduli;
  std::vector<GroupElement> generators;
  std::size_t c0 = 0;
  std::optional<std::int64_t> chi;
  // Rank-one kinds: k = x * c0_inverse mod chi (or x * c0 when chi infinite).
  std::int64_t c0_inverse = 1;
};

namespace {

void check_c0(std::size_t c0, std::size_t degree) {
  if (c0 >= degree) {
    throw SpecError("distinguished generator index " + std::to_string(c0) +
                    " out of range for |S| = " + std::to_string(degree));
  }
}

void check_distinct(const std::vector<GroupElement>& gens) {
  std::set<GroupElement> seen(gens.begin(), gens.end());
  if (seen.size() != gens.size()) throw SpecError("generators must be listed exactly once");
}

}  // namespace

Group Group::line(std::vector<std::int64_t> generators, std::size_t c0_index) {
  if (generators.empty()) throw SpecError("line needs at least one generator");
  auto data = std::make_shared<Data>();
  data->kind = GroupKind::Line;
  data->moduli = {0};
  std::int64_t g = 0;
  for (auto s : generators) {
    if (s == 0) throw SpecError("the identity cannot be a generator");
    g = std::gcd(g, s);
    data->generators.push_back(GroupElement{s});
  }
  check_distinct(data->generators);
  if (g != 1) throw SpecError("line generators must have gcd 1 to generate Z");
  check_c0(c0_index, generators.size());
  data->c0 = c0_index;
  const std::int64_t c0 = generators[c0_index];
  std::int64_t d = 0;
  for (auto s : generators) d = std::gcd(d, s - c0);
  if (d == 0) {
    data->chi = std::nullopt;  // single generator +-1
    data->c0_inverse = c0;
  } else {
    data->chi = d;
    data->c0_inverse = mod_inverse(c0, d);
  }
  std::ostringstream name;
  name << "line";
  if (generators != std::vector<std::int64_t>{1, -1}) {
    name << '[';
    for (std::size_t i = 0; i < generators.size(); ++i) name << (i ? "," : "") << generators[i];
    name << ']';
  }
  data->name = name.str();
  return Group(std::move(data));
}

Group Group::lattice(std::size_t d, std::size_t c0_index) {
  if (d == 0) throw SpecError("lattice dimension must be positive");
  auto data = std::make_shared<Data>();
  data->kind = GroupKind::Lattice;
  data->moduli.assign(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::int64_t> plus(d, 0), minus(d, 0);
    plus[i] = 1;
    minus[i] = -1;
    data->generators.emplace_back(std::move(plus));
    data->generators.emplace_back(std::move(minus));
  }
  check_c0(c0_index, data->generators.size());
  data->c0 = c0_index;
  data->chi = 2;
  data->name = "lattice(" + std::to_string(d) + ")";
  return Group(std::move(data));
}

Group Group::torus(std::vector<std::int64_t> periods, std::size_t c0_index) {
  if (periods.empty()) throw SpecError("torus needs at least one period");
  const std::size_t d = periods.size();
  auto data = std::make_shared<Data>();
  data->kind = GroupKind::Lattice;
  bool all_even = true;
  std::ostringstream name;
  name << "torus(";
  for (std::size_t i = 0; i < d; ++i) {
    if (periods[i] < 3) throw SpecError("torus periods must be >= 3");
    all_even = all_even && periods[i] % 2 == 0;
    name << (i ? "x" : "") << periods[i];
  }
  name << ')';
  data->moduli = periods;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::int64_t> plus(d, 0), minus(d, 0);
    plus[i] = 1;
    minus[i] = periods[i] - 1;
    data->generators.emplace_back(std::move(plus));
    data->generators.emplace_back(std::move(minus));
  }
  check_c0(c0_index, data->generators.size());
  data->c0 = c0_index;
  data->chi = all_even ? 2 : 1;
  data->name = name.str();
  return Group(std::move(data));
}

Group Group::cyclic(std::int64_t n, std::vector<std::int64_t> generators, std::size_t c0_index) {
  if (n < 1) throw SpecError("cyclic order must be positive");
  if (generators.empty()) {
    generators = n <= 2 ? std::vector<std::int64_t>{1 % n} : std::vector<std::int64_t>{1, n - 1};
  }
  auto data = std::make_shared<Data>();
  data->kind = GroupKind::Cyclic;
  data->moduli = {n};
  std::int64_t g = n;
  for (auto& s : generators) {
    s = floor_mod(s, n);
    g = std::gcd(g, s);
    data->generators.push_back(GroupElement{s});
  }
  check_distinct(data->generators);
  if (g != 1) throw SpecError("cyclic generators do not generate Z_" + std::to_string(n));
  check_c0(c0_index, generators.size());
  data->c0 = c0_index;
  const std::int64_t c0 = generators[c0_index];
  std::int64_t d = n;
  for (auto s : generators) d = std::gcd(d, floor_mod(s - c0, n));
  data->chi = d;
  data->c0_inverse = mod_inverse(c0, d);
  std::ostringstream name;
  name << "cyclic(" << n << ")";
  const bool default_gens =
      n <= 2 ? generators.size() == 1 : generators == std::vector<std::int64_t>{1, n - 1};
  if (!default_gens) {
    name << '[';
    for (std::size_t i = 0; i < generators.size(); ++i) name << (i ? "," : "") << generators[i];
    name << ']';
  }
  data->name = name.str();
  return Group(std::move(data));
}

Group Group::hypercube(std::size_t d, std::size_t c0_index) {
  if (d == 0) throw SpecError("hypercube dimension must be positive");
  auto data = std::make_shared<Data>();
  data->kind = GroupKind::Hypercube;
  data->moduli.assign(d, 2);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::int64_t> e(d, 0);
    e[i] = 1;
    data->generators.emplace_back(std::move(e));
  }
  check_c0(c0_index, d);
  data->c0 = c0_index;
  data->chi = 2;
  data->name = "hypercube(" + std::to_string(d) + ")";
  return Group(std::move(data));
}

GroupKind Group::kind() const { return data_->kind; }
std::string Group::name() const { return data_->name; }
std::size_t Group::rank() const { return data_->moduli.size(); }
std::span<const std::int64_t> Group::moduli() const { return data_->moduli; }

bool Group::is_finite() const {
  return std::all_of(data_->moduli.begin(), data_->moduli.end(), [](auto m) { return m > 0; });
}

std::optional<std::uint64_t> Group::order() const {
  if (!is_finite()) return std::nullopt;
  std::uint64_t n = 1;
  for (auto m : data_->moduli) n *= static_cast<std::uint64_t>(m);
  return n;
}

const std::vector<GroupElement>& Group::generators() const { return data_->generators; }
const GroupElement& Group::generator(std::size_t i) const { return data_->generators.at(i); }
std::size_t Group::degree() const { return data_->generators.size(); }

std::optional<std::size_t> Group::generator_index(const GroupElement& x) const {
  const auto& gens = data_->generators;
  auto it = std::find(gens.begin(), gens.end(), x);
  if (it == gens.end()) return std::nullopt;
  return static_cast<std::size_t>(it - gens.begin());
}

std::size_t Group::distinguished_index() const { return data_->c0; }
const GroupElement& Group::distinguished_generator() const { return data_->generators[data_->c0]; }
std::optional<std::int64_t> Group::chi() const { return data_->chi; }
bool Group::nonseparating() const { return true; }

GroupElement Group::identity() const {
  return GroupElement(std::vector<std::int64_t>(rank(), 0));
}

GroupElement Group::make(std::vector<std::int64_t> coords) const {
  if (coords.size() != rank()) {
    throw EncodingError("element has " + std::to_string(coords.size()) +
                        " coordinates, group " + name() + " expects " + std::to_string(rank()));
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (data_->moduli[i] > 0) coords[i] = floor_mod(coords[i], data_->moduli[i]);
  }
  return GroupElement(std::move(coords));
}

bool Group::is_canonical(const GroupElement& x) const {
  if (x.rank() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto m = data_->moduli[i];
    if (m > 0 && (x[i] < 0 || x[i] >= m)) return false;
  }
  return true;
}

void Group::validate(const GroupElement& x) const {
  if (x.rank() != rank()) {
    throw EncodingError("element " + x.to_string() + " has wrong arity for group " + name());
  }
  if (!is_canonical(x)) {
    throw EncodingError("element " + x.to_string() + " is out of range for group " + name());
  }
}

GroupElement Group::multiply(const GroupElement& x, const GroupElement& y) const {
  validate(x);
  validate(y);
  std::vector<std::int64_t> out(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto m = data_->moduli[i];
    const auto s = x[i] + y[i];
    out[i] = m > 0 ? (s >= m ? s - m : s) : s;
  }
  return GroupElement(std::move(out));
}

GroupElement Group::inverse(const GroupElement& x) const {
  validate(x);
  std::vector<std::int64_t> out(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto m = data_->moduli[i];
    out[i] = m > 0 ? (x[i] == 0 ? 0 : m - x[i]) : -x[i];
  }
  return GroupElement(std::move(out));
}

GroupElement Group::power(const GroupElement& x, std::int64_t k) const {
  validate(x);
  std::vector<std::int64_t> out(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto m = data_->moduli[i];
    if (m > 0) {
      out[i] = floor_mod(floor_mod(x[i], m) * floor_mod(k, m) % m, m);
    } else {
      out[i] = x[i] * k;
    }
  }
  return GroupElement(std::move(out));
}

std::int64_t Group::coset_index(const GroupElement& x) const {
  validate(x);
  const auto& d = *data_;
  switch (d.kind) {
    case GroupKind::Line:
    case GroupKind::Cyclic:
      if (!d.chi) return x[0] * d.c0_inverse;  // c0 = +-1
      if (*d.chi == 1) return 0;
      return floor_mod(floor_mod(x[0], *d.chi) * d.c0_inverse, *d.chi);
    case GroupKind::Lattice:
    case GroupKind::Hypercube: {
      if (*d.chi == 1) return 0;
      std::int64_t sum = 0;
      for (auto c : x.coords()) sum += c;
      return floor_mod(sum, *d.chi);
    }
  }
  return 0;
}

GroupElement Group::compose(const GroupElement& causal_part, std::int64_t k) const {
  return multiply(causal_part, power(distinguished_generator(), k));
}

Decomposition Group::decompose(const GroupElement& x) const {
  const std::int64_t k = coset_index(x);
  return {multiply(x, power(distinguished_generator(), -k)), k};
}

std::vector<GroupElement> Group::elements() const {
  const auto n = order();
  if (!n) throw UnsupportedOperation("cannot enumerate infinite group " + name());
  if (*n > kMaxEnumeration) throw UnsupportedOperation("group " + name() + " too large to enumerate");
  std::vector<GroupElement> out;
  out.reserve(*n);
  for (std::size_t i = 0; i < *n; ++i) out.push_back(element_at(i));
  return out;
}

std::size_t Group::index_of(const GroupElement& x) const {
  if (!is_finite()) throw UnsupportedOperation("index_of on infinite group " + name());
  validate(x);
  std::size_t index = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    index = index * static_cast<std::size_t>(data_->moduli[i]) + static_cast<std::size_t>(x[i]);
  }
  return index;
}

GroupElement Group::element_at(std::size_t index) const {
  if (!is_finite()) throw UnsupportedOperation("element_at on infinite group " + name());
  std::vector<std::int64_t> coords(rank());
  for (std::size_t i = rank(); i-- > 0;) {
    const auto m = static_cast<std::size_t>(data_->moduli[i]);
    coords[i] = static_cast<std::int64_t>(index % m);
    index /= m;
  }
  return GroupElement(std::move(coords));
}

std::vector<GroupElement> Group::ball(std::size_t radius) const {
  std::set<GroupElement> seen{identity()};
  std::vector<GroupElement> frontier{identity()};
  std::vector<GroupElement> moves = generators();
  for (const auto& s : generators()) moves.push_back(inverse(s));
  for (std::size_t r = 0; r < radius && !frontier.empty(); ++r) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& s : moves) {
        auto y = multiply(x, s);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool Group::operator==(const Group& other) const {
  if (data_ == other.data_) return true;
  return data_->kind == other.data_->kind && data_->moduli == other.data_->moduli &&
         data_->generators == other.data_->generators && data_->c0 == other.data_->c0;
}

std::vector<GroupElement> generated_subgroup(const Group& g, const std::vector<GroupElement>& seeds) {
  if (!g.is_finite()) throw UnsupportedOperation("subgroup closure needs a finite group");
  std::set<GroupElement> members{g.identity()};
  std::deque<GroupElement> queue{g.identity()};
  while (!queue.empty()) {
    const GroupElement x = queue.front();
    queue.pop_front();
    for (const auto& s : seeds) {
      for (const auto& y : {g.multiply(x, s), g.multiply(x, g.inverse(s))}) {
        if (members.insert(y).second) queue.push_back(y);
      }
    }
  }
  return {members.begin(), members.end()};
}

CausalStructure brute_force_causal(const Group& g) {
  if (!g.is_finite()) {
    throw UnsupportedOperation("brute_force_causal needs a finite group, got " + g.name());
  }
  const auto& gens = g.generators();
  std::set<GroupElement> s_inv;
  for (const auto& s : gens) s_inv.insert(g.inverse(s));

  // P_n = S^n and Q_n = S^-n as sets; iterate until P_n repeats.
  std::set<GroupElement> forward_words, backward_words;  // union of S^n S^-n, S^-n S^n
  std::set<GroupElement> p(gens.begin(), gens.end());
  std::set<GroupElement> q = s_inv;
  std::set<std::set<GroupElement>> seen;
  while (seen.insert(p).second) {
    for (const auto& a : p) {
      for (const auto& b : q) {
        forward_words.insert(g.multiply(a, b));
        backward_words.insert(g.multiply(b, a));
      }
    }
    std::set<GroupElement> next_p, next_q;
    for (const auto& a : p) {
      for (const auto& s : gens) next_p.insert(g.multiply(a, s));
    }
    for (const auto& b : q) {
      for (const auto& s : s_inv) next_q.insert(g.multiply(s, b));
    }
    p = std::move(next_p);
    q = std::move(next_q);
  }

  CausalStructure out;
  out.future_causal = generated_subgroup(g, {forward_words.begin(), forward_words.end()});
  std::vector<GroupElement> all(forward_words.begin(), forward_words.end());
  all.insert(all.end(), backward_words.begin(), backward_words.end());
  out.causal = generated_subgroup(g, all);
  out.chi = static_cast<std::int64_t>(*g.order() / out.causal.size());
  out.nonseparating = out.causal == out.future_causal;
  return out;
}

}  // namespace qwsym
