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

#include "qwsym/symmetry.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "qwsym/errors.hpp"

namespace qwsym {
namespace {

constexpr double kParameterTol = 1e-9;
constexpr std::int64_t kUprimeProbe = 64;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Elements used to spot-check rules that cannot be validated everywhere.
std::vector<GroupElement> probe_elements(const Group& g) {
  const auto order = g.order();
  if (order && *order <= 4096) return g.elements();
  return g.ball(4);
}

void require_nonseparating(const Group& g) {
  if (!g.nonseparating()) {
    throw SeparatingGroupError("group " + g.name() + " has a separating Cayley graph");
  }
}

void require_unit(Complex z, const std::string& what) {
  if (!is_unit(z, kParameterTol)) {
    throw PreconditionError(what + " is not a complex unit (|z| = " + std::to_string(std::abs(z)) + ")");
  }
}

void require_epsilon(const Group& g, Complex epsilon) {
  require_unit(epsilon, "epsilon");
  if (!g.chi() && std::abs(epsilon - Complex(1.0)) > kParameterTol) {
    throw PreconditionError("epsilon must be 1 when chi(G,S) is infinite (group " + g.name() + ")");
  }
}

void require_character(const Group& g, const UnitaryCharacter& rho, UnitaryCharacter::Domain domain,
                       const char* what) {
  if (rho.domain() != domain) {
    throw PreconditionError(std::string(what) + ": character domain mismatch (expected " +
                            (domain == UnitaryCharacter::Domain::FullGroup ? "full group" : "causal subgroup") +
                            ")");
  }
  const double defect = multiplicativity_defect(g, rho, 256);
  if (defect > kParameterTol) {
    throw PreconditionError(std::string(what) + ": '" + rho.description() +
                            "' is not a unitary character on its domain (defect " + std::to_string(defect) + ")");
  }
}

// eta as a sequence over Z: chi base values (quasi-periodic with `twist`) for
// finite chi, a table starting at index 0 otherwise.
PhaseSequence make_eta(const Group& g, std::vector<Complex> eta, Complex twist) {
  if (eta.empty()) eta = {1.0};
  for (std::size_t i = 0; i < eta.size(); ++i) require_unit(eta[i], "eta[" + std::to_string(i) + "]");
  const auto chi = g.chi();
  if (!chi) {
    std::map<std::int64_t, Complex> values;
    for (std::size_t i = 0; i < eta.size(); ++i) values.emplace(static_cast<std::int64_t>(i), eta[i]);
    return PhaseSequence::table(std::move(values));
  }
  if (eta.size() == 1 && *chi > 1) eta.assign(static_cast<std::size_t>(*chi), eta.front());
  if (static_cast<std::int64_t>(eta.size()) != *chi) {
    throw PreconditionError("eta needs chi(G,S) = " + std::to_string(*chi) + " values, got " +
                            std::to_string(eta.size()));
  }
  return PhaseSequence::periodic(std::move(eta), twist);
}

}  // namespace

UnitaryCharacter UnitaryCharacter::trivial(Domain domain) {
  return UnitaryCharacter(domain, [](const GroupElement&) { return Complex(1.0); }, "trivial");
}

UnitaryCharacter UnitaryCharacter::exp_linear(std::vector<double> phi, Domain domain) {
  std::string desc = "exp_linear(";
  for (std::size_t i = 0; i < phi.size(); ++i) desc += (i ? "," : "") + std::to_string(phi[i]);
  desc += ")";
  return UnitaryCharacter(
      domain,
      [phi = std::move(phi)](const GroupElement& x) {
        if (x.rank() != phi.size()) throw EncodingError("character arity mismatch");
        double angle = 0.0;
        for (std::size_t i = 0; i < phi.size(); ++i) angle += phi[i] * static_cast<double>(x[i]);
        return unit(angle);
      },
      desc);
}

UnitaryCharacter UnitaryCharacter::sign(std::vector<std::int64_t> mask, Domain domain) {
  std::string desc = "sign(";
  for (std::size_t i = 0; i < mask.size(); ++i) desc += (i ? "," : "") + std::to_string(mask[i]);
  desc += ")";
  return UnitaryCharacter(
      domain,
      [mask = std::move(mask)](const GroupElement& x) {
        if (x.rank() != mask.size()) throw EncodingError("character arity mismatch");
        std::int64_t s = 0;
        for (std::size_t i = 0; i < mask.size(); ++i) s += mask[i] * x[i];
        return Complex(s % 2 == 0 ? 1.0 : -1.0);
      },
      desc);
}

double multiplicativity_defect(const Group& g, const UnitaryCharacter& rho, std::size_t samples,
                               std::uint64_t seed) {
  const bool causal = rho.domain() == UnitaryCharacter::Domain::CausalSubgroup;
  std::vector<GroupElement> domain;
  const auto order = g.order();
  std::vector<std::pair<GroupElement, GroupElement>> pairs;
  if (order && *order * *order <= samples * samples && *order <= 4096) {
    for (const auto& x : g.elements()) {
      if (!causal || g.coset_index(x) == 0) domain.push_back(x);
    }
    for (const auto& a : domain) {
      for (const auto& b : domain) pairs.emplace_back(a, b);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coord(-200, 200);
    auto draw = [&] {
      std::vector<std::int64_t> c(g.rank());
      for (auto& v : c) v = coord(rng);
      GroupElement x = g.make(std::move(c));
      return causal ? g.decompose(x).causal_part : x;
    };
    for (std::size_t i = 0; i < samples; ++i) {
      GroupElement a = draw();
      pairs.emplace_back(a, draw());
    }
  }
  double defect = 0.0;
  for (const auto& [a, b] : pairs) {
    const Complex ra = rho(a), rb = rho(b);
    defect = std::max({defect, std::abs(rho(g.multiply(a, b)) - ra * rb), std::abs(std::abs(ra) - 1.0)});
  }
  defect = std::max(defect, std::abs(rho(g.identity()) - Complex(1.0)));
  return defect;
}

PhaseSequence PhaseSequence::constant(Complex value) { return periodic({value}); }

PhaseSequence PhaseSequence::periodic(std::vector<Complex> base, Complex twist) {
  if (base.empty()) throw PreconditionError("periodic sequence needs at least one value");
  PhaseSequence s;
  s.base_ = std::move(base);
  s.twist_ = twist;
  return s;
}

PhaseSequence PhaseSequence::table(std::map<std::int64_t, Complex> values) {
  PhaseSequence s;
  s.table_ = std::move(values);
  s.is_table_ = true;
  return s;
}

Complex PhaseSequence::operator()(std::int64_t m) const {
  if (is_table_) {
    auto it = table_.find(m);
    return it == table_.end() ? Complex(1.0) : it->second;
  }
  const auto p = static_cast<std::int64_t>(base_.size());
  const std::int64_t q = floor_div(m, p);
  const Complex b = base_[static_cast<std::size_t>(m - q * p)];
  return q == 0 || twist_ == Complex(1.0) ? b : b * unit_pow(twist_, q);
}

PhaseField PhaseField::constant(Complex value) {
  return PhaseField([value](std::int64_t, const GroupElement&, std::size_t) { return value; });
}

PhaseField PhaseField::table(std::map<PhaseKey, Complex> entries, Complex fallback) {
  auto shared = std::make_shared<const std::map<PhaseKey, Complex>>(std::move(entries));
  return PhaseField([shared, fallback](std::int64_t n, const GroupElement& x, std::size_t c) {
    auto it = shared->find(PhaseKey{n, x, c});
    return it == shared->end() ? fallback : it->second;
  });
}

Complex PhaseField::operator()(std::int64_t n, const GroupElement& x, std::size_t c) const {
  if (n < 1) {
    throw PreconditionError("phase field is defined for n >= 1; U_0 is not diagonal in general");
  }
  return rule_(n, x, c);
}

PhaseField tabulate(const PhaseField& field, const Group& g, std::int64_t n_max) {
  if (!g.is_finite()) throw UnsupportedOperation("cannot tabulate a phase field over infinite group " + g.name());
  std::map<PhaseKey, Complex> entries;
  const auto elements = g.elements();
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (const auto& x : elements) {
      for (std::size_t c = 0; c < g.degree(); ++c) entries.emplace(PhaseKey{n, x, c}, field(n, x, c));
    }
  }
  auto table = std::make_shared<const std::map<PhaseKey, Complex>>(std::move(entries));
  return PhaseField([table, n_max](std::int64_t n, const GroupElement& x, std::size_t c) {
    if (n > n_max) throw UnsupportedOperation("tabulated phase field queried beyond n_max");
    return table->at(PhaseKey{n, x, c});
  });
}

const char* to_string(SymmetryFamily family) {
  switch (family) {
    case SymmetryFamily::General: return "general";
    case SymmetryFamily::SpaceHomogeneous: return "space_homog";
    case SymmetryFamily::TimeHomogeneous: return "time_homog";
    case SymmetryFamily::FullHomogeneous: return "full_homog";
  }
  return "?";
}

SymmetryTransform::SymmetryTransform(Group group, SymmetryFamily family, LocalUnitary u0, PhaseField phases,
                                     SymmetryParameters parameters, DecomposedRule decomposed)
    : group_(std::move(group)),
      family_(family),
      u0_(std::move(u0)),
      phases_(std::move(phases)),
      parameters_(std::move(parameters)),
      decomposed_(std::move(decomposed)) {
  if (u0_.dimension() != group_.degree()) {
    throw GroupMismatchError("U0 acts on a coin space of the wrong dimension");
  }
}

Complex SymmetryTransform::phase(std::int64_t n, const GroupElement& x, std::size_t c) const {
  return phases_(n, x, c);
}

CoinMatrix SymmetryTransform::component(std::int64_t n, const GroupElement& x) const {
  if (n == 0) return u0_.component(x);
  const auto dim = static_cast<Eigen::Index>(group_.degree());
  CoinMatrix m = CoinMatrix::Zero(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) m(c, c) = phases_(n, x, static_cast<std::size_t>(c));
  return m;
}

LocalUnitary SymmetryTransform::operator_at(std::int64_t n) const {
  if (n == 0) return u0_;
  return LocalUnitary::from_rule(group_.degree(), [self = *this, n](const GroupElement& x) {
    return self.component(n, x);
  });
}

WalkState SymmetryTransform::apply(std::int64_t n, const WalkState& s) const {
  if (!(s.group() == group_)) throw GroupMismatchError("state and symmetry live on different groups");
  if (n == 0) return apply_local(u0_, s);
  WalkState out(s);
  for (const auto& [x, b] : s.blocks()) {
    CoinVector& block = out.block(x);
    for (Eigen::Index c = 0; c < block.size(); ++c) block(c) *= phases_(n, x, static_cast<std::size_t>(c));
  }
  return out;
}

std::optional<CoinMatrix> SymmetryTransform::component_from_decomposition(std::int64_t n,
                                                                          const GroupElement& causal_part,
                                                                          std::int64_t k) const {
  if (!decomposed_) return std::nullopt;
  return decomposed_(n, causal_part, k);
}

SymmetryTransform identity_symmetry(const Group& g) {
  return make_general_symmetry(g, LocalUnitary::identity(g.degree()), PhaseField::constant(1.0));
}

SymmetryTransform make_general_symmetry(const Group& g, LocalUnitary u0, PhaseField phases) {
  if (u0.dimension() != g.degree()) throw GroupMismatchError("U0 dimension does not match |S|");
  const auto probes = probe_elements(g);
  for (const auto& x : u0.is_uniform() ? std::vector<GroupElement>{g.identity()} : probes) {
    if (!is_unitary(u0.component(x), kParameterTol)) {
      throw NotUnitaryError("U0 component at " + x.to_string() + " is not unitary");
    }
  }
  for (std::int64_t n = 1; n <= 4; ++n) {
    for (const auto& x : probes) {
      for (std::size_t c = 0; c < g.degree(); ++c) {
        require_unit(phases(n, x, c), "phase u_{" + std::to_string(n) + "," + x.to_string() + "," +
                                          std::to_string(c) + "}");
      }
    }
  }
  return SymmetryTransform(g, SymmetryFamily::General, std::move(u0), std::move(phases), GeneralParams{});
}

SymmetryTransform make_space_homog_symmetry(const Group& g, std::vector<Complex> eta, UnitaryCharacter rho,
                                            CoinOperatorSequence uprime) {
  require_nonseparating(g);
  require_character(g, rho, UnitaryCharacter::Domain::CausalSubgroup, "space_homog rho");
  const auto dim = static_cast<Eigen::Index>(g.degree());
  const CoinMatrix uprime0 = uprime(0);
  if (uprime0.rows() != dim || !is_unitary(uprime0, kParameterTol)) {
    throw PreconditionError("U'_0 must be a unitary of dimension |S|");
  }
  // Diagonals of U'_n, cached for the first steps.
  auto cache = std::make_shared<std::vector<CoinVector>>();
  for (std::int64_t n = 1; n <= kUprimeProbe; ++n) {
    const CoinMatrix m = uprime(n);
    if (m.rows() != dim || !is_diagonal(m, kParameterTol) || !is_unitary(m, kParameterTol)) {
      throw PreconditionError("U'_" + std::to_string(n) + " must be a diagonal unitary for n >= 1");
    }
    cache->push_back(m.diagonal());
  }
  auto diag_at = [cache, uprime, dim](std::int64_t n) -> CoinVector {
    if (n <= static_cast<std::int64_t>(cache->size())) return (*cache)[static_cast<std::size_t>(n - 1)];
    const CoinMatrix m = uprime(n);
    if (m.rows() != dim || !is_diagonal(m, kParameterTol)) {
      throw PreconditionError("U'_" + std::to_string(n) + " must be diagonal for n >= 1");
    }
    return m.diagonal();
  };

  const auto chi = g.chi();
  const Complex twist = chi ? std::conj(rho(g.power(g.distinguished_generator(), *chi))) : Complex(1.0);
  const PhaseSequence seq = make_eta(g, eta, twist);

  PhaseField phases([g, seq, rho, diag_at](std::int64_t n, const GroupElement& x, std::size_t c) {
    const Decomposition d = g.decompose(x);
    return seq(n - d.k) * rho(d.causal_part) * diag_at(n)(static_cast<Eigen::Index>(c));
  });
  LocalUnitary u0 = LocalUnitary::from_rule(g.degree(), [g, seq, rho, uprime0](const GroupElement& x) {
    const Decomposition d = g.decompose(x);
    return CoinMatrix(seq(-d.k) * rho(d.causal_part) * uprime0);
  });
  SymmetryTransform::DecomposedRule decomposed = [seq, rho, uprime0, diag_at](
                                                     std::int64_t n, const GroupElement& xt, std::int64_t k) {
    const Complex scalar = seq(n - k) * rho(xt);
    return n == 0 ? CoinMatrix(scalar * uprime0) : CoinMatrix(scalar * diagonal_matrix(diag_at(n)));
  };
  return SymmetryTransform(g, SymmetryFamily::SpaceHomogeneous, std::move(u0), std::move(phases),
                           SpaceHomogParams{std::move(eta), rho, std::move(uprime)}, std::move(decomposed));
}

SymmetryTransform make_time_homog_symmetry(const Group& g, Complex epsilon, std::vector<Complex> eta,
                                           SitePhases delta) {
  require_nonseparating(g);
  require_epsilon(g, epsilon);
  const PhaseSequence seq = make_eta(g, eta, 1.0);
  for (const auto& x : probe_elements(g)) {
    for (std::size_t c = 0; c < g.degree(); ++c) {
      require_unit(delta(x, c), "delta_{" + x.to_string() + "," + std::to_string(c) + "}");
    }
  }
  // Extending the n >= 1 solution to n = 0 gives the unique diagonal U_0.
  auto value = [g, epsilon, seq, delta](std::int64_t n, const GroupElement& x, std::int64_t k, std::size_t c) {
    return unit_pow(epsilon, n) * seq(n - k) * delta(x, c);
  };
  PhaseField phases([g, value](std::int64_t n, const GroupElement& x, std::size_t c) {
    return value(n, x, g.coset_index(x), c);
  });
  const std::size_t dim = g.degree();
  auto diag = [dim, value](std::int64_t n, const GroupElement& x, std::int64_t k) {
    CoinVector d(static_cast<Eigen::Index>(dim));
    for (std::size_t c = 0; c < dim; ++c) d(static_cast<Eigen::Index>(c)) = value(n, x, k, c);
    return diagonal_matrix(d);
  };
  LocalUnitary u0 = LocalUnitary::from_rule(dim, [g, diag](const GroupElement& x) {
    return diag(0, x, g.coset_index(x));
  });
  SymmetryTransform::DecomposedRule decomposed = [g, diag](std::int64_t n, const GroupElement& xt, std::int64_t k) {
    return diag(n, g.compose(xt, k), k);
  };
  return SymmetryTransform(g, SymmetryFamily::TimeHomogeneous, std::move(u0), std::move(phases),
                           TimeHomogParams{epsilon, std::move(eta), std::move(delta)}, std::move(decomposed));
}

SymmetryTransform make_full_homog_symmetry(const Group& g, std::vector<Complex> eta, Complex epsilon,
                                           UnitaryCharacter gamma, const CoinVector& uprime) {
  require_nonseparating(g);
  require_epsilon(g, epsilon);
  require_character(g, gamma, UnitaryCharacter::Domain::FullGroup, "full_homog gamma");
  if (static_cast<std::size_t>(uprime.size()) != g.degree()) {
    throw PreconditionError("U' must have |S| = " + std::to_string(g.degree()) + " diagonal entries");
  }
  for (Eigen::Index c = 0; c < uprime.size(); ++c) require_unit(uprime(c), "U' diagonal entry");
  const PhaseSequence seq = make_eta(g, eta, 1.0);

  auto scalar = [epsilon, seq, gamma](std::int64_t n, const GroupElement& x, std::int64_t k) {
    return seq(n - k) * unit_pow(epsilon, n) * gamma(x);
  };
  PhaseField phases([g, scalar, uprime](std::int64_t n, const GroupElement& x, std::size_t c) {
    return scalar(n, x, g.coset_index(x)) * uprime(static_cast<Eigen::Index>(c));
  });
  LocalUnitary u0 = LocalUnitary::from_rule(g.degree(), [g, scalar, uprime](const GroupElement& x) {
    return CoinMatrix(scalar(0, x, g.coset_index(x)) * diagonal_matrix(uprime));
  });
  SymmetryTransform::DecomposedRule decomposed = [g, scalar, uprime](std::int64_t n, const GroupElement& xt,
                                                                     std::int64_t k) {
    return CoinMatrix(scalar(n, g.compose(xt, k), k) * diagonal_matrix(uprime));
  };
  return SymmetryTransform(g, SymmetryFamily::FullHomogeneous, std::move(u0), std::move(phases),
                           FullHomogParams{std::move(eta), epsilon, gamma, uprime}, std::move(decomposed));
}

QuantumCoin transform_coin(const SymmetryTransform& t, const QuantumCoin& coin) {
  const Group& g = t.group();
  if (coin.dimension() != g.degree()) throw GroupMismatchError("coin dimension does not match the symmetry");
  auto rule = [t, coin](std::int64_t n, const GroupElement& x) {
    const Group& g = t.group();
    const auto dim = static_cast<Eigen::Index>(g.degree());
    CoinVector v(dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
      const auto ci = static_cast<std::size_t>(c);
      v(c) = t.phase(n + 1, g.multiply(x, g.generator(ci)), ci);
    }
    return CoinMatrix(v.asDiagonal() * coin.at(n, x) * t.component(n, x).adjoint());
  };
  const auto f = t.family();
  const bool keeps_time = f == SymmetryFamily::TimeHomogeneous || f == SymmetryFamily::FullHomogeneous;
  const bool keeps_space = f == SymmetryFamily::SpaceHomogeneous || f == SymmetryFamily::FullHomogeneous;
  return QuantumCoin(coin.dimension(), std::move(rule), coin.time_homogeneous() && keeps_time,
                     coin.space_homogeneous() && keeps_space);
}

WalkState transform_state(const SymmetryTransform& t, const WalkState& psi0) {
  if (!(psi0.group() == t.group())) throw GroupMismatchError("state and symmetry live on different groups");
  return apply_local(t.initial_operator(), psi0);
}

Complex symmetry_phase_at(const SymmetryTransform& t, std::int64_t n, const GroupElement& x, std::size_t c) {
  return t.phase(n, x, c);
}

}  // namespace qwsym
