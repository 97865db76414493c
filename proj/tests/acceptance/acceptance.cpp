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

// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <Eigen/Eigenvalues>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "qwsym/automorphism.hpp"
#include "qwsym/cli.hpp"
#include "qwsym/errors.hpp"
#include "qwsym/group.hpp"
#include "qwsym/line_toolkit.hpp"
#include "qwsym/linalg.hpp"
#include "qwsym/symmetry.hpp"
#include "qwsym/verify.hpp"
#include "qwsym/walk.hpp"

using namespace qwsym;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body, double limit_s = 0.0) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double dt = seconds_since(t0);
  if (limit_s > 0.0 && dt >= limit_s) o.require(false, "runtime " + std::to_string(dt) + " s over " + std::to_string(limit_s));
  if (!o.ok) ++failures;
  std::printf("criterion %d %-44s %s  (%.3f s)%s%s\n", id, name.c_str(), o.ok ? "PASS" : "FAIL", dt,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

// Dense T on a finite group, built from step() on basis vectors.
Eigen::MatrixXcd assemble_step(const Group& g) {
  const std::size_t d = g.degree();
  const auto dim = static_cast<Eigen::Index>(*g.order() * d);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& x : g.elements()) {
    for (std::size_t c = 0; c < d; ++c) {
      const WalkState image = step(WalkState::basis(g, x, c));
      for (const auto& [y, b] : image.blocks()) {
        for (Eigen::Index e = 0; e < b.size(); ++e) {
          m(static_cast<Eigen::Index>(g.index_of(y) * d) + e, static_cast<Eigen::Index>(g.index_of(x) * d + c)) = b(e);
        }
      }
    }
  }
  return m;
}

Outcome step_unitarity() {
  Outcome o;
  for (const auto& g : {Group::cyclic(8, {1, 7}), Group::hypercube(3)}) {
    const Eigen::MatrixXcd t = assemble_step(g);
    const auto dim = t.rows();
    // Entries must be exactly 0 or 1 with one 1 per row and column; then the
    // integer product T^T T is the identity.
    Eigen::MatrixXi ti(dim, dim);
    bool entries = true;
    for (Eigen::Index r = 0; r < dim; ++r) {
      for (Eigen::Index c = 0; c < dim; ++c) {
        const Complex v = t(r, c);
        entries = entries && v.imag() == 0.0 && (v.real() == 0.0 || v.real() == 1.0);
        ti(r, c) = static_cast<int>(v.real());
      }
    }
    o.require(entries, g.name() + ": entries not in {0,1}");
    o.require(ti.rowwise().sum().isConstant(1) && ti.colwise().sum().isConstant(1), g.name() + ": not a permutation");
    o.require(ti.transpose() * ti == Eigen::MatrixXi::Identity(dim, dim), g.name() + ": T^T T != I");
  }
  return o;
}

Outcome causal_oracle() {
  Outcome o;
  struct Case {
    Group g;
    std::int64_t chi;
    std::function<bool(const GroupElement&)> in_causal;
  };
  auto coord_sum_even = [](const GroupElement& x) {
    std::int64_t s = 0;
    for (auto v : x.coords()) s += v;
    return s % 2 == 0;
  };
  const std::vector<Case> cases{
      {Group::cyclic(8, {1, 7}), 2, [](const GroupElement& x) { return x[0] % 2 == 0; }},
      {Group::cyclic(8, {1}), 8, [](const GroupElement& x) { return x[0] == 0; }},
      {Group::hypercube(2), 2, coord_sum_even},
      {Group::hypercube(3), 2, coord_sum_even},
      {Group::torus({6, 6}), 2, coord_sum_even},
  };
  for (const auto& c : cases) {
    const CausalStructure cs = brute_force_causal(c.g);
    std::set<GroupElement> expected, declared;
    for (const auto& x : c.g.elements()) {
      if (c.in_causal(x)) expected.insert(x);
      if (c.g.coset_index(x) == 0) declared.insert(x);
    }
    const std::set<GroupElement> found(cs.causal.begin(), cs.causal.end());
    o.require(found == expected, c.g.name() + ": causal set differs from oracle");
    o.require(found == declared, c.g.name() + ": causal set differs from declared coset_index");
    o.require(cs.chi == c.chi, c.g.name() + ": brute-force chi " + std::to_string(cs.chi));
    o.require(c.g.chi() == c.chi, c.g.name() + ": declared chi");
    o.require(cs.nonseparating == c.g.nonseparating(), c.g.name() + ": nonseparating flag");
  }
  o.require(Group::line().chi() == 2, "line: chi != 2");
  return o;
}

std::vector<Group> battery_groups() { return {Group::line(), Group::cyclic(8), Group::hypercube(3)}; }

std::vector<QuantumCoin> battery_coins(const Group& g, std::uint64_t seed) {
  const std::size_t d = g.degree();
  return {QuantumCoin::uniform(d == 2 ? hadamard() : grover(d)), random_coin(d, seed, true, true)};
}

WalkState random_localized(const Group& g, std::uint64_t seed) {
  auto rng = derived_rng(seed, {17});
  std::normal_distribution<double> normal;
  CoinVector chi(static_cast<Eigen::Index>(g.degree()));
  for (auto& v : chi) v = Complex(normal(rng), normal(rng));
  chi.normalize();
  return WalkState::localized(g, g.identity(), chi);
}

const SymmetryFamily kFamilies[] = {SymmetryFamily::General, SymmetryFamily::SpaceHomogeneous,
                                    SymmetryFamily::TimeHomogeneous, SymmetryFamily::FullHomogeneous};

Outcome defining_relation() {
  Outcome o;
  double worst_rel = 0.0, worst_prob = 0.0;
  for (const auto& g : battery_groups()) {
    for (auto family : kFamilies) {
      for (std::uint64_t draw = 0; draw < 20; ++draw) {
        const std::uint64_t seed = 1000 * (static_cast<std::uint64_t>(family) + 1) + draw;
        const SymmetryTransform t = random_symmetry(g, family, seed);
        const WalkState psi0 = random_localized(g, seed);
        for (const auto& coin : battery_coins(g, seed)) {
          const auto rel = check_symmetry_relation(coin, psi0, t, 50, 1e-10);
          const auto prob = check_probability_map(coin, psi0, t, 50, 1e-10);
          worst_rel = std::max(worst_rel, rel.max_residual);
          worst_prob = std::max(worst_prob, prob.max_residual);
          o.require(rel.passed && prob.passed, g.name() + "/" + rel.case_id + " seed " + std::to_string(seed));
        }
      }
    }
  }
  std::ostringstream ss;
  ss << "max relation residual " << worst_rel << ", max probability deviation " << worst_prob;
  if (o.ok) o.detail = ss.str();
  return o;
}

Outcome homogeneity() {
  Outcome o;
  const std::vector<std::int64_t> ns{0, 1, 2, 3, 7, 20, 50};
  double worst = 0.0;
  for (const auto& g : battery_groups()) {
    const auto xs = g.is_finite() ? g.elements() : g.ball(6);
    const std::size_t d = g.degree();
    for (std::uint64_t draw = 0; draw < 5; ++draw) {
      const std::uint64_t seed = 77 + draw;
      // Space-homogeneous family keeps space homogeneity of a time-dependent coin.
      {
        const QuantumCoin coin = random_coin(d, seed, true, false);
        const auto h = check_homogeneity(transform_coin(random_symmetry(g, SymmetryFamily::SpaceHomogeneous, seed), coin),
                                         ns, xs);
        worst = std::max(worst, h.space_spread);
        o.require(h.space_spread < 1e-12, g.name() + ": space_homog spread " + std::to_string(h.space_spread));
      }
      // Time-homogeneous family keeps time homogeneity of a site-dependent coin.
      {
        const QuantumCoin coin = random_coin(d, seed, false, true);
        const auto h = check_homogeneity(transform_coin(random_symmetry(g, SymmetryFamily::TimeHomogeneous, seed), coin),
                                         ns, xs);
        worst = std::max(worst, h.time_spread);
        o.require(h.time_spread < 1e-12, g.name() + ": time_homog spread " + std::to_string(h.time_spread));
      }
      // Full family keeps both for a uniform coin.
      {
        const QuantumCoin coin = random_coin(d, seed, false, false);
        const auto h = check_homogeneity(transform_coin(random_symmetry(g, SymmetryFamily::FullHomogeneous, seed), coin),
                                         ns, xs);
        worst = std::max({worst, h.time_spread, h.space_spread});
        o.require(h.time_spread < 1e-12 && h.space_spread < 1e-12, g.name() + ": full_homog spread");
      }
    }
  }
  std::ostringstream ss;
  ss << "max spread " << worst;
  if (o.ok) o.detail = ss.str();
  return o;
}

double tp_pt_residual(const ShiftedAutomorphism& a, const std::vector<GroupElement>& xs) {
  const Group& g = a.group();
  double worst = 0.0;
  for (const auto& x : xs) {
    for (std::size_t c = 0; c < g.degree(); ++c) {
      const WalkState s = WalkState::basis(g, x, c);
      worst = std::max(worst, max_amplitude_difference(step(permutation_apply(a, s)), permutation_apply(a, step(s))));
    }
  }
  return worst;
}

Outcome generalized() {
  Outcome o;
  double worst_tp = 0.0, worst_p = 0.0;
  // TP = PT, exhaustive over finite groups, every S-preserving automorphism and shift.
  for (const auto& g : {Group::cyclic(8), Group::hypercube(3), Group::torus({4, 4})}) {
    const auto xs = g.elements();
    for (const auto& base : generator_automorphisms(g)) {
      for (const auto& h : xs) {
        const auto a = make_shifted_automorphism(g, h, base.generator_permutation());
        worst_tp = std::max(worst_tp, tp_pt_residual(a, xs));
      }
    }
  }
  {
    const Group z = Group::line();
    std::vector<GroupElement> xs;
    for (std::int64_t x = -64; x <= 64; ++x) xs.push_back({x});
    for (const auto& base : generator_automorphisms(z)) {
      for (std::int64_t h : {-7, 0, 3, 64}) {
        worst_tp = std::max(worst_tp, tp_pt_residual(make_shifted_automorphism(z, {h}, base.generator_permutation()), xs));
      }
    }
  }
  o.require(worst_tp < 1e-14, "TP != PT, residual " + std::to_string(worst_tp));

  // p~_n(g phi(x)) = p_n(x)
  auto probability_law = [&](const Group& g, const ShiftedAutomorphism& a, const QuantumCoin& coin, std::uint64_t seed) {
    const GeneralizedSymmetry gs{a, random_symmetry(g, SymmetryFamily::General, seed)};
    const auto r = check_probability_map(coin, random_localized(g, seed), gs, 50, 1e-10);
    worst_p = std::max(worst_p, r.max_residual);
    o.require(r.passed, g.name() + ": probability law, residual " + std::to_string(r.max_residual));
  };
  const Group z = Group::line();
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    for (const auto& coin : battery_coins(z, seed)) {
      probability_law(z, make_shifted_automorphism(z, {0}, {1, 0}), coin, seed);
      probability_law(z, make_shifted_automorphism(z, {4}, {1, 0}), coin, seed);
      probability_law(z, shift_only(z, {5}), coin, seed);
      probability_law(z, shift_only(z, {-3}), coin, seed);
    }
  }
  const Group h3 = Group::hypercube(3);
  for (const auto& a : generator_automorphisms(h3)) {
    for (const auto& coin : battery_coins(h3, 9)) probability_law(h3, a, coin, 9);
  }
  std::ostringstream ss;
  ss << "TP-PT " << worst_tp << ", probability law " << worst_p;
  if (o.ok) o.detail = ss.str();
  return o;
}

double max_imag(const WalkState& s) {
  double m = 0.0;
  for (const auto& [x, b] : s.blocks()) m = std::max(m, b.imag().cwiseAbs().maxCoeff());
  return m;
}

Outcome canonicalization() {
  Outcome o;
  const Group z = Group::line();
  double worst_coin = 0.0, worst_real = 0.0, worst_p = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const LineCoinParams p = random_line_params(seed);
    const QuantumCoin coin = QuantumCoin::uniform(build_line_coin(p));
    const Canonicalization canon = canonicalize_line_coin(coin.at(0, z.identity()), z);
    const QuantumCoin reduced = transform_coin(canon.transform, coin);
    for (std::int64_t n : {0, 1, 9, 50}) {
      for (std::int64_t x : {-5, 0, 3}) {
        const CoinMatrix m = reduced.at(n, {x});
        worst_coin = std::max({worst_coin, m.imag().cwiseAbs().maxCoeff(), max_abs_diff(m, rotation(canon.psi))});
      }
    }
    // Real localized start under the real coin stays real.
    auto rng = derived_rng(seed, {3});
    std::normal_distribution<double> normal;
    CoinVector chi(2);
    chi << normal(rng), normal(rng);
    chi.normalize();
    for (const auto& s : evolve(reduced, WalkState::localized(z, z.identity(), chi), 100)) {
      worst_real = std::max(worst_real, max_imag(s));
    }
    const auto r = check_probability_map(coin, random_localized(z, seed), canon.transform, 50, 1e-10);
    worst_p = std::max(worst_p, r.max_residual);
  }
  o.require(worst_coin < 1e-12, "reduced coin not real rotation: " + std::to_string(worst_coin));
  o.require(worst_real < 1e-12, "real evolution drifted: " + std::to_string(worst_real));
  o.require(worst_p < 1e-10, "distributions differ: " + std::to_string(worst_p));
  std::ostringstream ss;
  ss << "coin " << worst_coin << ", imag " << worst_real << ", distributions " << worst_p;
  if (o.ok) o.detail = ss.str();
  return o;
}

// max_{n <= 50, x} |p_n(x) - q_n(-x)|
double mirror_deviation(const QuantumCoin& coin, const CoinVector& a, const CoinVector& b) {
  const Group z = Group::line();
  const auto ta = evolve(coin, WalkState::localized(z, {0}, a), 50);
  const auto tb = evolve(coin, WalkState::localized(z, {0}, b), 50);
  double worst = 0.0;
  for (std::size_t n = 0; n < ta.size(); ++n) {
    const Distribution p = position_distribution(ta[n]);
    const Distribution q = position_distribution(tb[n]);
    for (std::int64_t x = -static_cast<std::int64_t>(n); x <= static_cast<std::int64_t>(n); ++x) {
      worst = std::max(worst, std::abs(p({x}) - q({-x})));
    }
  }
  return worst;
}

Outcome mirror() {
  Outcome o;
  const Group z = Group::line();
  double worst_eig = 0.0, worst_orth = 0.0, worst_sym = 0.0, worst_map = 0.0;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const LineCoinParams p = random_line_params(seed);
    if (std::abs(std::sin(p.psi)) < 1e-6) continue;
    const QuantumCoin coin = QuantumCoin::uniform(build_line_coin(p));
    const CoinMatrix q = mirror_chirality_map(p);
    Eigen::ComplexEigenSolver<CoinMatrix> es(q);
    std::vector<double> ev{es.eigenvalues()(0).real(), es.eigenvalues()(1).real()};
    std::sort(ev.begin(), ev.end());
    worst_eig = std::max({worst_eig, std::abs(ev[0] + 1.0), std::abs(ev[1] - 1.0),
                          std::abs(es.eigenvalues()(0).imag()), std::abs(es.eigenvalues()(1).imag())});

    const auto [plus, minus] = symmetric_initial_states(p);
    // Closed form (nu*, +-i nu) / sqrt 2.
    CoinVector ep(2), em(2);
    ep << std::conj(p.nu), Complex(0, 1) * p.nu;
    em << std::conj(p.nu), Complex(0, -1) * p.nu;
    ep /= std::sqrt(2.0);
    em /= std::sqrt(2.0);
    worst_orth = std::max({worst_orth, std::abs(plus.norm() - 1.0), std::abs(minus.norm() - 1.0),
                           std::abs(plus.dot(minus)), (plus - ep).cwiseAbs().maxCoeff(), (minus - em).cwiseAbs().maxCoeff(),
                           (q * plus - plus).cwiseAbs().maxCoeff(), (q * minus + minus).cwiseAbs().maxCoeff()});
    worst_sym = std::max({worst_sym, mirror_deviation(coin, plus, plus), mirror_deviation(coin, minus, minus)});

    // Walk from Q chi is the mirror image of the walk from chi.
    auto rng = derived_rng(seed, {5});
    CoinVector chi(2);
    chi << random_unit(rng) * 0.6, random_unit(rng) * 0.8;
    worst_map = std::max(worst_map, mirror_deviation(coin, chi, q * chi));
  }
  o.require(worst_eig < 1e-12, "Q eigenvalues off by " + std::to_string(worst_eig));
  o.require(worst_orth < 1e-12, "chi+- not orthonormal eigenvectors: " + std::to_string(worst_orth));
  o.require(worst_sym < 1e-10, "symmetric walks asymmetric: " + std::to_string(worst_sym));
  o.require(worst_map < 1e-10, "Q does not mirror the walk: " + std::to_string(worst_map));

  // nu = 1 closed form.
  LineCoinParams unit;
  unit.psi = 0.7;
  const auto [p1, m1] = symmetric_initial_states(unit);
  const double r = 1.0 / std::sqrt(2.0);
  o.require(std::abs(p1(0) - r) < 1e-12 && std::abs(p1(1) - Complex(0, r)) < 1e-12 && std::abs(m1(0) - r) < 1e-12 &&
                std::abs(m1(1) - Complex(0, -r)) < 1e-12,
            "nu = 1 states");

  // Hadamard: the mirror transform keeps H, and the mirror walk is the reflected original.
  const LineCoinParams hp = decompose_line_coin(hadamard());
  const MirrorSymmetry ms = mirror_generalized_symmetry(hp, z);
  const QuantumCoin h = QuantumCoin::uniform(hadamard());
  CoinVector chi(2);
  chi << 1.0, 0.0;
  const WalkState psi0 = WalkState::localized(z, {0}, chi);
  const TransformedWalk tw = generalized_transform(ms.symmetry, h, psi0);
  o.require(max_abs_diff(tw.coin.at(0, {0}), hadamard()) < 1e-12 && max_abs_diff(tw.coin.at(7, {-3}), hadamard()) < 1e-12,
            "Hadamard mirror coin != H");
  const auto rp = check_probability_map(h, psi0, ms.symmetry, 50, 1e-10);
  o.require(rp.passed, "Hadamard mirror distribution: " + std::to_string(rp.max_residual));
  o.require(mirror_deviation(h, chi, ms.q * chi) < 1e-10, "Hadamard Q chi walk");
  std::ostringstream ss;
  ss << "eig " << worst_eig << ", states " << worst_orth << ", symmetric " << worst_sym << ", map " << worst_map;
  if (o.ok) o.detail = ss.str();
  return o;
}

int cli_exit(std::vector<std::string> args) {
  std::ostringstream out, err;
  return cli::run(args, out, err);
}

Outcome negative_controls() {
  Outcome o;
  // Corrupted phase: the transformed walk of the intact symmetry checked
  // against phases with one entry flipped.
  {
    const Group z = Group::line();
    const QuantumCoin h = QuantumCoin::uniform(hadamard());
    const WalkState psi0 = WalkState::basis(z, {0}, 0);
    const SymmetryTransform t = random_symmetry(z, SymmetryFamily::FullHomogeneous, 11);
    const SymmetryTransform bad = make_general_symmetry(
        z, t.initial_operator(), PhaseField([t](std::int64_t n, const GroupElement& x, std::size_t c) {
          const Complex u = t.phase(n, x, c);
          return (n == 2 && x == GroupElement{0} && c == 0) ? -u : u;
        }));
    const auto r = check_symmetry_relation(h, psi0, transform_coin(t, h), transform_state(t, psi0), bad, 10);
    o.require(!r.passed, "corrupted phase passed");
    o.require(check_symmetry_relation(h, psi0, t, 10).passed, "intact symmetry failed");
    o.require(cli_exit({"verify", "--symmetry",
                        R"({"family":"full_homog","epsilon":"i","corrupt":{"n":2,"x":0,"c":0}})"}) == cli::kCheckFailed,
              "CLI corrupted phase exit code");
  }
  // Non-automorphism: swapping e1 with -e2 but not -e1 with e2 on Z^2
  // (generators +e1, -e1, +e2, -e2).
  {
    bool threw = false;
    try {
      make_shifted_automorphism(Group::lattice(2), {0, 0}, {0, 3, 2, 1});
    } catch (const NotAutomorphismError&) {
      threw = true;
    }
    o.require(threw, "non-automorphism accepted");
    o.require(cli_exit({"transform", "--group", "lattice(2)", "--coin", "grover", "--start", "[0,0]:(1,0,0,0)",
                        "--symmetry", R"({"automorphism":{"shift":[0,0],"perm":[0,3,2,1]}})"}) == cli::kBadConfig,
              "CLI non-automorphism exit code");
  }
  // Degenerate psi.
  {
    bool threw = false;
    LineCoinParams p;
    p.psi = 0.0;
    try {
      symmetric_initial_states(p);
    } catch (const DegenerateCoinError&) {
      threw = true;
    }
    o.require(threw, "degenerate psi accepted");
    o.require(cli_exit({"line", "symmetric-states", "--psi", "0"}) == cli::kDegenerate, "CLI degenerate exit code");
  }
  return o;
}

Outcome performance() {
  Outcome o;
  {
    const Group z = Group::line();
    const auto t0 = Clock::now();
    const auto traj = evolve(QuantumCoin::uniform(hadamard()), WalkState::basis(z, {0}, 0), 200);
    const double dt = seconds_since(t0);
    o.require(dt < 0.1, "200-step Hadamard took " + std::to_string(dt) + " s");
    o.require(std::abs(traj.back().norm() - 1.0) < 1e-10, "Hadamard norm drift");
    o.detail = "hadamard-200 " + std::to_string(dt) + " s";
  }
  {
    const Group g = Group::hypercube(10);
    const auto t0 = Clock::now();
    const auto traj = evolve(QuantumCoin::uniform(grover(10)), WalkState::basis(g, g.identity(), 0), 50);
    const double dt = seconds_since(t0);
    o.require(dt < 10.0, "hypercube(10) took " + std::to_string(dt) + " s");
    o.require(std::abs(traj.back().norm() - 1.0) < 1e-10, "hypercube norm drift");
    o.detail += ", hypercube(10)-50 " + std::to_string(dt) + " s";
  }
  return o;
}

}  // namespace

int main() {
  report(1, "step operator is a permutation", step_unitarity, 1.0);
  report(2, "causal subgroup oracle", causal_oracle, 5.0);
  report(3, "defining relation, four families", defining_relation, 60.0);
  report(4, "homogeneity preservation", homogeneity);
  report(5, "generalized symmetries", generalized);
  report(6, "line canonicalization", canonicalization);
  report(7, "mirror example", mirror);
  report(8, "negative controls", negative_controls);
  report(9, "performance", performance);
  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
