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

#include "qwsym/line_toolkit.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qwsym/errors.hpp"

namespace qwsym {
namespace {

constexpr double kUnitTol = 1e-12;
constexpr double kDegenerateSin = 1e-9;

CoinMatrix phase_pair(Complex a) {
  CoinMatrix d = CoinMatrix::Zero(2, 2);
  d(0, 0) = a;
  d(1, 1) = std::conj(a);
  return d;
}

Complex phase_of(Complex z) { return std::polar(1.0, std::arg(z)); }

}  // namespace

CoinMatrix build_line_coin(const LineCoinParams& p) {
  if (!is_unit(p.omega, kUnitTol) || !is_unit(p.mu, kUnitTol) || !is_unit(p.nu, kUnitTol)) {
    throw PreconditionError("line coin parameters omega, mu, nu must be complex units");
  }
  return p.omega * phase_pair(p.mu) * rotation(p.psi) * phase_pair(p.nu);
}

LineCoinParams decompose_line_coin(const CoinMatrix& c) {
  if (c.rows() != 2 || c.cols() != 2) throw PreconditionError("line coins are 2x2");
  if (!is_unitary(c, 1e-10)) throw NotUnitaryError("line coin is not unitary");
  LineCoinParams p;
  p.omega = std::sqrt(c.determinant());
  p.omega /= std::abs(p.omega);
  // m = [[mu nu cos, mu nu* sin], [-mu* nu sin, mu* nu* cos]]
  const CoinMatrix m = c / p.omega;
  const double cs = std::abs(m(0, 0)), sn = std::abs(m(0, 1));
  p.psi = std::atan2(sn, cs);
  const double tiny = 1e-14;
  if (sn < tiny) {
    p.mu = phase_of(m(0, 0));
    p.nu = 1.0;
  } else if (cs < tiny) {
    p.mu = phase_of(m(0, 1));
    p.nu = 1.0;
  } else {
    const double a = std::arg(m(0, 0)), b = std::arg(m(0, 1));
    p.mu = std::polar(1.0, (a + b) / 2);
    p.nu = std::polar(1.0, (a - b) / 2);
  }
  if (p.nu.real() < -tiny || (std::abs(p.nu.real()) <= tiny && p.nu.imag() < 0)) {
    p.mu = -p.mu;
    p.nu = -p.nu;
  }
  const double err = max_abs_diff(build_line_coin(p), c);
  if (err > 1e-10) {
    throw NumericError("line coin decomposition failed (residual " + std::to_string(err) + ")");
  }
  return p;
}

LineCoinParams random_line_params(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> half(0.0, std::numbers::pi);
  LineCoinParams p;
  p.omega = unit(angle(rng));
  p.mu = unit(angle(rng));
  p.nu = unit(angle(rng));
  p.psi = half(rng);
  return p;
}

void require_standard_line(const Group& g) {
  if (g.kind() != GroupKind::Line || g.degree() != 2 || g.generator(0) != GroupElement{1} ||
      g.generator(1) != GroupElement{-1}) {
    throw GroupMismatchError("the line toolkit needs Z with S = (+1, -1), got " + g.name());
  }
}

Canonicalization canonicalize_line_coin(const CoinMatrix& c, const Group& line) {
  require_standard_line(line);
  const LineCoinParams p = decompose_line_coin(c);
  CoinVector uprime(2);
  uprime << p.nu, std::conj(p.nu);
  const double phi = std::arg(std::conj(p.mu * p.nu));
  SymmetryTransform t = make_full_homog_symmetry(
      line, {1.0}, std::conj(p.omega), UnitaryCharacter::exp_linear({phi}, UnitaryCharacter::Domain::FullGroup),
      uprime);
  return Canonicalization{p.psi, p, std::move(t)};
}

CoinMatrix mirror_chirality_map(const LineCoinParams& p) {
  const Complex nu2 = p.nu * p.nu;
  CoinMatrix q = CoinMatrix::Zero(2, 2);
  q(0, 1) = -kI * std::conj(nu2);
  q(1, 0) = kI * nu2;
  return q;
}

MirrorSymmetry mirror_generalized_symmetry(const LineCoinParams& p, const Group& line) {
  require_standard_line(line);
  const Complex nu2 = p.nu * p.nu;
  CoinVector uprime(2);
  uprime << kI * nu2, -kI * std::conj(nu2);
  const double phi = std::arg(std::conj(p.mu * p.mu * nu2));
  SymmetryTransform inner = make_full_homog_symmetry(
      line, {1.0}, 1.0, UnitaryCharacter::exp_linear({phi}, UnitaryCharacter::Domain::FullGroup), uprime);
  ShiftedAutomorphism reflection = make_shifted_automorphism(line, line.identity(), {1, 0});
  return MirrorSymmetry{GeneralizedSymmetry{std::move(reflection), std::move(inner)}, mirror_chirality_map(p)};
}

std::pair<CoinVector, CoinVector> symmetric_initial_states(const LineCoinParams& p) {
  if (std::abs(std::sin(p.psi)) < kDegenerateSin) {
    throw DegenerateCoinError("psi = " + std::to_string(p.psi) +
                              " is a multiple of pi; nu is not determined and no symmetric pair exists");
  }
  const double r = 1.0 / std::sqrt(2.0);
  CoinVector plus(2), minus(2);
  plus << r * std::conj(p.nu), r * kI * p.nu;
  minus << r * std::conj(p.nu), -r * kI * p.nu;
  return {plus, minus};
}

}  // namespace qwsym
