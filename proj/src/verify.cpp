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

#include "qwsym/verify.hpp"

#include <algorithm>
#include <numbers>
#include <random>
#include <set>

#include "qwsym/errors.hpp"

namespace qwsym {
namespace {

std::vector<GroupElement> sample_support(const Group& g) {
  const auto order = g.order();
  if (order && *order <= 4096) return g.elements();
  return g.ball(g.rank() == 1 ? 64 : 6);
}

WalkState random_state(const Group& g, const std::vector<GroupElement>& support, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  WalkState s(g);
  for (const auto& x : support) {
    CoinVector b(static_cast<Eigen::Index>(g.degree()));
    for (auto& v : b) v = Complex(normal(rng), normal(rng));
    s.set_block(x, std::move(b));
  }
  s.normalize();
  return s;
}

GroupElement pick(const std::vector<GroupElement>& v, std::mt19937_64& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

// Automorphisms with random shifts: all generator-induced ones for small |S|,
// at most `count` of them otherwise.
std::vector<ShiftedAutomorphism> sample_automorphisms(const Group& g, const std::vector<GroupElement>& support,
                                                      std::mt19937_64& rng, std::size_t count) {
  auto base = generator_automorphisms(g, rng(), 64);
  std::shuffle(base.begin(), base.end(), rng);
  if (base.size() > count) base.erase(base.begin() + static_cast<std::ptrdiff_t>(count), base.end());
  std::vector<ShiftedAutomorphism> out;
  for (const auto& a : base) {
    out.push_back(make_shifted_automorphism(g, pick(support, rng), a.generator_permutation()));
  }
  out.push_back(shift_only(g, g.distinguished_generator()));
  return out;
}

std::int64_t reduce_k(const Group& g, std::int64_t k) {
  const auto chi = g.chi();
  if (!chi) return k;
  const std::int64_t r = k % *chi;
  return r < 0 ? r + *chi : r;
}

// Collisions of a map on (x, c) pairs over a finite domain.
double count_collisions(const Group& g, const std::vector<GroupElement>& domain,
                        const std::function<std::pair<GroupElement, std::size_t>(const GroupElement&, std::size_t)>& f) {
  std::set<std::pair<GroupElement, std::size_t>> image;
  std::size_t total = 0;
  for (const auto& x : domain) {
    for (std::size_t c = 0; c < g.degree(); ++c) {
      image.insert(f(x, c));
      ++total;
    }
  }
  return static_cast<double>(total - image.size());
}

VerificationReport step_unitarity(const Group& g, const std::vector<GroupElement>& support, std::mt19937_64& rng,
                                  double tol) {
  double defects = count_collisions(g, support, [&](const GroupElement& x, std::size_t c) {
    return std::make_pair(g.multiply(x, g.generator(c)), c);
  });
  if (g.is_finite()) {
    // Exhaustive: T maps the basis onto itself, so T^dagger T = I entrywise.
    std::vector<int> hits(support.size() * g.degree(), 0);
    for (const auto& x : support) {
      for (std::size_t c = 0; c < g.degree(); ++c) {
        ++hits[g.index_of(g.multiply(x, g.generator(c))) * g.degree() + c];
      }
    }
    for (int h : hits) defects += h == 1 ? 0 : 1;
  }
  const WalkState s = random_state(g, support, rng);
  const double roundtrip = std::max(distance(step(step(s), StepDirection::Adjoint), s),
                                    distance(step(step(s, StepDirection::Adjoint)), s));
  return make_report("step_unitarity", {defects, roundtrip}, tol);
}

std::vector<std::int64_t> keys(std::initializer_list<std::int64_t> head, const GroupElement& x,
                                std::initializer_list<std::int64_t> tail = {}) {
  std::vector<std::int64_t> k(head);
  k.insert(k.end(), x.coords().begin(), x.coords().end());
  k.insert(k.end(), tail);
  return k;
}

std::vector<Complex> random_eta(const Group& g, std::mt19937_64& rng) {
  std::vector<Complex> eta(static_cast<std::size_t>(g.chi().value_or(3)));
  for (auto& e : eta) e = random_unit(rng);
  return eta;
}

}  // namespace

UnitaryCharacter random_character(const Group& g, UnitaryCharacter::Domain domain, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto moduli = g.moduli();
  if (g.kind() == GroupKind::Hypercube) {
    std::vector<std::int64_t> mask(g.rank());
    for (auto& m : mask) m = static_cast<std::int64_t>(rng() % 2);
    return UnitaryCharacter::sign(std::move(mask), domain);
  }
  std::vector<double> phi(g.rank());
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    // On a finite cyclic factor only multiples of 2 pi / L are characters.
    phi[i] = moduli[i] == 0 ? angle(rng)
                            : 2 * std::numbers::pi * static_cast<double>(rng() % static_cast<std::uint64_t>(moduli[i])) /
                                  static_cast<double>(moduli[i]);
  }
  return UnitaryCharacter::exp_linear(std::move(phi), domain);
}

SymmetryTransform random_symmetry(const Group& g, SymmetryFamily family, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t d = g.degree();
  switch (family) {
    case SymmetryFamily::General: {
      LocalUnitary u0 = LocalUnitary::from_rule(d, [seed, d](const GroupElement& x) {
        auto r = derived_rng(seed, keys({-1}, x));
        return random_unitary(d, r);
      });
      PhaseField phases([seed](std::int64_t n, const GroupElement& x, std::size_t c) {
        auto r = derived_rng(seed, keys({n}, x, {static_cast<std::int64_t>(c)}));
        return random_unit(r);
      });
      return make_general_symmetry(g, std::move(u0), std::move(phases));
    }
    case SymmetryFamily::SpaceHomogeneous: {
      auto eta = random_eta(g, rng);
      auto rho = random_character(g, UnitaryCharacter::Domain::CausalSubgroup, rng());
      const std::uint64_t useed = rng();
      return make_space_homog_symmetry(g, std::move(eta), std::move(rho), [useed, d](std::int64_t n) {
        auto r = derived_rng(useed, {n});
        return n == 0 ? random_unitary(d, r) : diagonal_matrix(random_unit_phases(d, r));
      });
    }
    case SymmetryFamily::TimeHomogeneous: {
      const Complex epsilon = g.chi() ? random_unit(rng) : Complex(1.0);
      auto eta = random_eta(g, rng);
      const std::uint64_t dseed = rng();
      return make_time_homog_symmetry(g, epsilon, std::move(eta), [dseed](const GroupElement& x, std::size_t c) {
        auto r = derived_rng(dseed, keys({}, x, {static_cast<std::int64_t>(c)}));
        return random_unit(r);
      });
    }
    case SymmetryFamily::FullHomogeneous: {
      const Complex epsilon = g.chi() ? random_unit(rng) : Complex(1.0);
      auto eta = random_eta(g, rng);
      auto gamma = random_character(g, UnitaryCharacter::Domain::FullGroup, rng());
      return make_full_homog_symmetry(g, std::move(eta), epsilon, std::move(gamma), random_unit_phases(d, rng));
    }
  }
  throw PreconditionError("unknown symmetry family");
}

VerificationReport make_report(std::string case_id, std::vector<double> residuals, double tol, std::int64_t steps,
                               bool expected_pass) {
  VerificationReport r;
  r.case_id = std::move(case_id);
  r.max_residual = residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
  r.per_step_residuals = std::move(residuals);
  r.tolerance = tol;
  r.passed = r.max_residual <= tol;
  r.steps = steps;
  r.expected_pass = expected_pass;
  return r;
}

VerificationReport compare_walks(std::string case_id, const QuantumCoin& coin, const WalkState& psi0,
                                 const QuantumCoin& transformed_coin, const WalkState& transformed_psi0,
                                 const StateMap& map, std::int64_t n_max, double tol) {
  if (n_max < 1) throw PreconditionError("n_max must be at least 1");
  if (!(psi0.group() == transformed_psi0.group())) throw GroupMismatchError("walks live on different groups");
  const auto original = evolve(coin, psi0, n_max);
  const auto transformed = evolve(transformed_coin, transformed_psi0, n_max);
  std::vector<double> residuals;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    residuals.push_back(distance(transformed[i], map(n, original[i])));
  }
  return make_report(std::move(case_id), std::move(residuals), tol, n_max);
}

Distribution permute_distribution(const Distribution& p, const PositionMap& position) {
  Distribution::Map out;
  for (const auto& [x, v] : p.probabilities()) out[position(x)] += v;
  return Distribution(std::move(out));
}

VerificationReport compare_distributions(std::string case_id, const QuantumCoin& coin, const WalkState& psi0,
                                         const QuantumCoin& transformed_coin, const WalkState& transformed_psi0,
                                         const PositionMap& position, std::int64_t n_max, double tol) {
  if (n_max < 1) throw PreconditionError("n_max must be at least 1");
  if (!(psi0.group() == transformed_psi0.group())) throw GroupMismatchError("walks live on different groups");
  const auto original = evolve(coin, psi0, n_max);
  const auto transformed = evolve(transformed_coin, transformed_psi0, n_max);
  std::vector<double> residuals;
  for (std::size_t i = 0; i < original.size(); ++i) {
    const Distribution p = position_distribution(original[i]);
    residuals.push_back(max_deviation(position_distribution(transformed[i]),
                                      position ? permute_distribution(p, position) : p));
  }
  return make_report(std::move(case_id), std::move(residuals), tol, n_max);
}

VerificationReport check_symmetry_relation(const QuantumCoin& coin, const WalkState& psi0,
                                           const SymmetryTransform& t, std::int64_t n_max, double tol) {
  return check_symmetry_relation(coin, psi0, transform_coin(t, coin), transform_state(t, psi0), t, n_max, tol);
}

VerificationReport check_symmetry_relation(const QuantumCoin& coin, const WalkState& psi0,
                                           const QuantumCoin& claimed_coin, const WalkState& claimed_psi0,
                                           const SymmetryTransform& t, std::int64_t n_max, double tol) {
  if (coin.dimension() != t.group().degree()) throw GroupMismatchError("coin dimension does not match |S|");
  return compare_walks(std::string("symmetry_relation/") + to_string(t.family()), coin, psi0, claimed_coin,
                       claimed_psi0, [&t](std::int64_t n, const WalkState& s) { return t.apply(n, s); }, n_max,
                       tol);
}

VerificationReport check_symmetry_relation(const QuantumCoin& coin, const WalkState& psi0,
                                           const GeneralizedSymmetry& gs, std::int64_t n_max, double tol) {
  const TransformedWalk tw = generalized_transform(gs, coin, psi0);
  return compare_walks(std::string("generalized_relation/") + to_string(gs.inner.family()), coin, psi0, tw.coin,
                       tw.initial, [&gs](std::int64_t n, const WalkState& s) { return gs.apply(n, s); }, n_max,
                       tol);
}

VerificationReport check_probability_map(const QuantumCoin& coin, const WalkState& psi0,
                                         const SymmetryTransform& t, std::int64_t n_max, double tol) {
  return compare_distributions(std::string("probability_map/") + to_string(t.family()), coin, psi0,
                               transform_coin(t, coin), transform_state(t, psi0), nullptr, n_max, tol);
}

VerificationReport check_probability_map(const QuantumCoin& coin, const WalkState& psi0,
                                         const GeneralizedSymmetry& gs, std::int64_t n_max, double tol) {
  const TransformedWalk tw = generalized_transform(gs, coin, psi0);
  return compare_distributions(std::string("permuted_probability_map/") + to_string(gs.inner.family()), coin,
                               psi0, tw.coin, tw.initial, [&gs](const GroupElement& x) { return gs.perm(x); },
                               n_max, tol);
}

HomogeneityCheck check_homogeneity(const QuantumCoin& coin, const std::vector<std::int64_t>& n_probe,
                                   const std::vector<GroupElement>& positions_probe, double tol) {
  HomogeneityCheck h{true, true, 0.0, 0.0};
  if (n_probe.empty() || positions_probe.empty()) return h;
  for (std::int64_t n : n_probe) {
    for (const auto& x : positions_probe) {
      const CoinMatrix c = coin.at(n, x);
      h.time_spread = std::max(h.time_spread, max_abs_diff(c, coin.at(n_probe.front(), x)));
      h.space_spread = std::max(h.space_spread, max_abs_diff(c, coin.at(n, positions_probe.front())));
    }
  }
  h.time_homogeneous = h.time_spread <= tol;
  h.space_homogeneous = h.space_spread <= tol;
  return h;
}

std::vector<VerificationReport> run_invariant_suite(const Group& g, std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  const auto support = sample_support(g);
  const std::size_t d = g.degree();
  std::vector<VerificationReport> reports;

  reports.push_back(step_unitarity(g, support, rng, tol));
  {
    const double collisions = count_collisions(g, support, [&](const GroupElement&, std::size_t c) {
      return std::make_pair(g.identity(), c);
    });
    reports.push_back(make_report("step_unitarity/collapsing_map", {collisions}, tol, 0, false));
  }

  const auto autos = sample_automorphisms(g, support, rng, 6);
  {
    std::vector<double> residuals;
    for (const auto& a : autos) {
      double exhaustive = 0.0;
      if (g.is_finite()) {
        for (const auto& x : support) {
          for (std::size_t c = 0; c < d; ++c) {
            const GroupElement tp = g.multiply(a(x), g.generator(a.coin_image(c)));
            const GroupElement pt = a(g.multiply(x, g.generator(c)));
            if (tp != pt) exhaustive = 1.0;
          }
        }
      }
      const WalkState s = random_state(g, support, rng);
      residuals.push_back(std::max(exhaustive, max_amplitude_difference(step(permutation_apply(a, s)),
                                                                        permutation_apply(a, step(s)))));
    }
    reports.push_back(make_report("tp_equals_pt", std::move(residuals), tol));
  }
  if (d > 1 || g.order().value_or(3) > 2) {
    // A coin relabeling without the matching position map does not commute with T.
    auto fake = [&](const WalkState& s) {
      WalkState out(g);
      for (const auto& [x, b] : s.blocks()) {
        CoinVector moved(b.size());
        for (Eigen::Index c = 0; c < b.size(); ++c) moved((c + 1) % b.size()) = b(c);
        out.set_block(d > 1 ? x : g.inverse(x), std::move(moved));
      }
      return out;
    };
    const WalkState s = random_state(g, support, rng);
    reports.push_back(make_report("tp_equals_pt/coin_relabeling",
                                  {max_amplitude_difference(step(fake(s)), fake(step(s)))}, tol, 0, false));
  }

  {
    double mismatches = 0;
    for (const auto& a : autos) {
      if (!(compose(a, invert(a)) == identity_automorphism(g)) ||
          !(compose(invert(a), a) == identity_automorphism(g))) {
        ++mismatches;
      }
      for (const auto& b : autos) {
        const auto ab = compose(a, b);
        for (std::size_t i = 0; i < 8; ++i) {
          const GroupElement x = pick(support, rng);
          if (ab(x) != a(b(x))) ++mismatches;
        }
        for (const auto& c : autos) {
          if (!(compose(a, compose(b, c)) == compose(compose(a, b), c))) ++mismatches;
        }
      }
    }
    reports.push_back(make_report("automorphism_group_laws", {mismatches}, tol));
    const auto t = shift_only(g, g.distinguished_generator());
    reports.push_back(make_report("automorphism_group_laws/idempotent_translation",
                                  {compose(t, t) == t ? 0.0 : 1.0}, tol, 0, false));
  }

  {
    double mismatches = 0;
    for (const auto& a : autos) {
      for (std::size_t i = 0; i < 8; ++i) {
        const GroupElement h = pick(support, rng);
        const auto conj = compose(a, compose(shift_only(g, h), invert(a)));
        if (!(conj == shift_only(g, a.phi(h)))) ++mismatches;
      }
    }
    reports.push_back(make_report("shift_normality", {mismatches}, tol));
    const auto a = make_shifted_automorphism(g, g.distinguished_generator(), autos.front().generator_permutation());
    const GroupElement h = g.distinguished_generator();
    reports.push_back(make_report("shift_normality/missing_inverse",
                                  {compose(a, shift_only(g, h)) == shift_only(g, a.phi(h)) ? 0.0 : 1.0}, tol, 0,
                                  false));
  }

  {
    double mismatches = 0;
    double negative = 0;
    if (g.is_finite()) {
      const CausalStructure cs = brute_force_causal(g);
      std::vector<GroupElement> declared, shifted;
      for (const auto& x : g.elements()) {
        if (g.coset_index(x) == 0) declared.push_back(x);
        if (g.coset_index(x) == 1) shifted.push_back(x);
      }
      if (cs.causal != declared) ++mismatches;
      if (!g.chi() || cs.chi != *g.chi()) ++mismatches;
      if (cs.nonseparating != g.nonseparating()) ++mismatches;
      negative = cs.causal == shifted ? 0.0 : 1.0;
    } else {
      // Words of the form c1..cn d1^-1..dn^-1 lie in S^(0).
      std::vector<GroupElement> layer{g.identity()};
      for (int n = 1; n <= 3; ++n) {
        std::vector<GroupElement> next;
        for (const auto& x : layer) {
          for (const auto& c : g.generators()) next.push_back(g.multiply(x, c));
        }
        layer = std::move(next);
        for (std::size_t i = 0; i < 32; ++i) {
          const GroupElement x = pick(layer, rng), y = pick(layer, rng);
          if (g.coset_index(g.multiply(x, g.inverse(y))) != 0) ++mismatches;
        }
      }
      for (const auto& c : g.generators()) {
        if (g.coset_index(c) != reduce_k(g, 1)) ++mismatches;
        if (g.coset_index(c) != 0) negative = 1.0;
      }
    }
    reports.push_back(make_report("causal_subgroup", {mismatches}, tol));
    reports.push_back(make_report("causal_subgroup/shifted_coset", {negative}, tol, 0, false));
  }

  {
    double mismatches = 0;
    double negative = 0;
    std::vector<std::pair<GroupElement, GroupElement>> pairs;
    if (support.size() <= 64) {
      for (const auto& x : support) {
        for (const auto& y : support) pairs.emplace_back(x, y);
      }
    } else {
      for (std::size_t i = 0; i < 2000; ++i) pairs.emplace_back(pick(support, rng), pick(support, rng));
    }
    for (const auto& [x, y] : pairs) {
      const std::int64_t kx = g.coset_index(x), ky = g.coset_index(y), kxy = g.coset_index(g.multiply(x, y));
      if (kxy != reduce_k(g, kx + ky)) ++mismatches;
      if (kxy != reduce_k(g, kx + ky + 1)) negative = 1.0;
      if (g.coset_index(g.inverse(x)) != reduce_k(g, -kx)) ++mismatches;
    }
    for (const auto& c : g.generators()) {
      if (g.coset_index(c) != reduce_k(g, 1)) ++mismatches;
    }
    reports.push_back(make_report("coset_index_homomorphism", {mismatches}, tol));
    if (g.chi() != 1) {
      reports.push_back(make_report("coset_index_homomorphism/off_by_one", {negative}, tol, 0, false));
    }
  }
  return reports;
}

}  // namespace qwsym
