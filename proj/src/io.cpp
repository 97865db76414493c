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

#include "qwsym/io.hpp"

#include <cmath>
#include <iomanip>
#include <regex>
#include <sstream>

#include "qwsym/errors.hpp"

namespace qwsym::io {
namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SpecError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw SpecError(std::string("bad value for ") + what + ": " + e.what());
  }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return get<T>(j.at(key), key);
}

std::vector<Complex> parse_units(const json& j) {
  if (!j.is_array()) throw SpecError("expected a list of complex numbers");
  std::vector<Complex> out;
  for (const auto& v : j) out.push_back(parse_complex(v));
  return out;
}

CoinVector to_vector(const std::vector<Complex>& v) {
  CoinVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

UnitaryCharacter parse_character(const json& j, UnitaryCharacter::Domain domain) {
  const std::string kind = get_or<std::string>(j, "kind", "trivial");
  if (kind == "trivial") return UnitaryCharacter::trivial(domain);
  if (kind == "exp_linear") {
    const json& phi = field(j, "phi");
    std::vector<double> v = phi.is_array() ? get<std::vector<double>>(phi, "phi")
                                           : std::vector<double>{get<double>(phi, "phi")};
    return UnitaryCharacter::exp_linear(std::move(v), domain);
  }
  if (kind == "sign") return UnitaryCharacter::sign(get<std::vector<std::int64_t>>(field(j, "mask"), "mask"), domain);
  throw SpecError("unknown character kind '" + kind + "'");
}

std::size_t coin_index(const json& j, const Group& g) {
  const auto c = get<std::size_t>(j, "c");
  if (c >= g.degree()) throw SpecError("coin index " + std::to_string(c) + " out of range");
  return c;
}

std::string trim(std::string s) {
  const auto a = s.find_first_not_of(" \t");
  const auto b = s.find_last_not_of(" \t");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

}  // namespace

json read_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed JSON: ") + e.what());
  }
}

Complex parse_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {get<double>(j[0], "re"), get<double>(j[1], "im")};
  if (j.is_object()) return {get_or<double>(j, "re", 0.0), get_or<double>(j, "im", 0.0)};
  if (j.is_string()) return parse_complex_text(j.get<std::string>());
  throw SpecError("cannot read a complex number from " + j.dump());
}

Complex parse_complex_text(const std::string& text) {
  static const std::regex full(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i)?\s*$)");
  static const std::regex imag_only(R"(^\s*([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, imag_only)) {
    const double v = m[2].matched ? std::stod(m[2]) : 1.0;
    return {0.0, m[1] == "-" ? -v : v};
  }
  if (!text.empty() && std::regex_match(text, m, full) && (m[1].matched || m[2].matched)) {
    const double re = m[1].matched ? std::stod(m[1]) : 0.0;
    double im = 0.0;
    if (m[2].matched) {
      im = m[3].matched ? std::stod(m[3]) : 1.0;
      if (m[2] == "-") im = -im;
    }
    return {re, im};
  }
  throw SpecError("cannot read a complex number from '" + text + "'");
}

json to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const CoinMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const CoinVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

CoinMatrix parse_matrix(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw SpecError("matrix must be a list of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  CoinMatrix m(n, static_cast<Eigen::Index>(j[0].size()));
  for (Eigen::Index r = 0; r < n; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != m.cols()) throw SpecError("ragged matrix");
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = parse_complex(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

Group parse_group(const json& j) {
  if (j.is_string()) return parse_group_text(j.get<std::string>());
  const std::string kind = get<std::string>(field(j, "kind"), "kind");
  const auto c0 = get_or<std::size_t>(j, "c0_index", 0);
  if (kind == "line") {
    return Group::line(get_or<std::vector<std::int64_t>>(j, "generators", {1, -1}), c0);
  }
  if (kind == "lattice") {
    if (j.contains("periods")) return Group::torus(get<std::vector<std::int64_t>>(j.at("periods"), "periods"), c0);
    return Group::lattice(get<std::size_t>(field(j, "d"), "d"), c0);
  }
  if (kind == "torus") return Group::torus(get<std::vector<std::int64_t>>(field(j, "periods"), "periods"), c0);
  if (kind == "cyclic") {
    return Group::cyclic(get<std::int64_t>(field(j, "N"), "N"), get_or<std::vector<std::int64_t>>(j, "generators", {}),
                         c0);
  }
  if (kind == "hypercube") return Group::hypercube(get<std::size_t>(field(j, "d"), "d"), c0);
  throw SpecError("unknown group kind '" + kind + "'");
}

Group parse_group_text(const std::string& text) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') return parse_group(read_json_text(t));
  static const std::regex shape(R"(^([a-z]+)(?:\(([-\d, ]*)\))?$)");
  std::smatch m;
  if (!std::regex_match(t, m, shape)) throw SpecError("cannot read group '" + text + "'");
  std::vector<std::int64_t> args;
  std::stringstream ss(m[2].str());
  for (std::string item; std::getline(ss, item, ',');) {
    if (!trim(item).empty()) args.push_back(std::stoll(item));
  }
  const std::string kind = m[1];
  auto one = [&]() -> std::int64_t {
    if (args.size() != 1) throw SpecError(kind + " takes one argument");
    return args[0];
  };
  if (kind == "line" && args.empty()) return Group::line();
  if (kind == "lattice") return Group::lattice(static_cast<std::size_t>(one()));
  if (kind == "torus") return Group::torus(args);
  if (kind == "cyclic") return Group::cyclic(one());
  if (kind == "hypercube") return Group::hypercube(static_cast<std::size_t>(one()));
  throw SpecError("cannot read group '" + text + "'");
}

GroupElement parse_element(const Group& g, const json& j) {
  std::vector<std::int64_t> coords;
  if (j.is_number_integer()) {
    coords = {j.get<std::int64_t>()};
  } else if (j.is_array()) {
    coords = get<std::vector<std::int64_t>>(j, "element");
  } else {
    throw SpecError("cannot read a group element from " + j.dump());
  }
  if (coords.size() != g.rank()) throw SpecError("element " + j.dump() + " has the wrong arity for " + g.name());
  return g.make(std::move(coords));
}

json to_json(const GroupElement& x) {
  if (x.rank() == 1) return x[0];
  return json(std::vector<std::int64_t>(x.coords().begin(), x.coords().end()));
}

LineCoinParams parse_line_params(const json& j) {
  if (j.is_object() && j.contains("named")) {
    const std::string name = get<std::string>(j.at("named"), "named");
    if (name == "hadamard") return decompose_line_coin(hadamard());
    if (name == "identity") return LineCoinParams{};
    throw SpecError("unknown named line coin '" + name + "'");
  }
  LineCoinParams p;
  p.omega = j.contains("omega") ? parse_complex(j.at("omega")) : Complex(1.0);
  p.mu = j.contains("mu") ? parse_complex(j.at("mu")) : Complex(1.0);
  p.nu = j.contains("nu") ? parse_complex(j.at("nu")) : Complex(1.0);
  p.psi = get_or<double>(j, "psi", 0.0);
  build_line_coin(p);
  return p;
}

json to_json(const LineCoinParams& p) {
  return json{{"omega", to_json(p.omega)}, {"mu", to_json(p.mu)}, {"nu", to_json(p.nu)}, {"psi", p.psi}};
}

QuantumCoin parse_coin(const json& j, const Group& g, std::uint64_t seed) {
  const std::size_t d = g.degree();
  auto check = [d](const CoinMatrix& m) {
    if (static_cast<std::size_t>(m.rows()) != d || m.rows() != m.cols()) {
      throw SpecError("coin matrix must be " + std::to_string(d) + "x" + std::to_string(d));
    }
    return m;
  };
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "hadamard") {
      if (d != 2) throw SpecError("the Hadamard coin needs |S| = 2");
      return QuantumCoin::uniform(hadamard());
    }
    if (name == "grover") return QuantumCoin::uniform(grover(d));
    if (name == "identity") return QuantumCoin::uniform(CoinMatrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)));
    if (name == "random") {
      std::mt19937_64 rng(seed);
      return QuantumCoin::uniform(random_unitary(d, rng));
    }
    throw SpecError("unknown coin '" + name + "'");
  }
  const std::string kind = get<std::string>(field(j, "kind"), "kind");
  if (kind == "uniform_matrix") return QuantumCoin::uniform(check(parse_matrix(field(j, "matrix"))));
  if (kind == "line_params") {
    if (d != 2) throw SpecError("line_params coins need |S| = 2");
    return QuantumCoin::uniform(build_line_coin(parse_line_params(j.contains("params") ? j.at("params") : j)));
  }
  if (kind == "random") {
    return random_coin(d, get_or<std::uint64_t>(j, "seed", seed), get_or<bool>(j, "time_dependent", false),
                       get_or<bool>(j, "space_dependent", false));
  }
  if (kind == "rule_table") {
    const CoinMatrix fallback = check(parse_matrix(field(j, "default")));
    std::map<std::pair<std::int64_t, GroupElement>, CoinMatrix> entries;
    for (const auto& e : get_or<json>(j, "entries", json::array())) {
      CoinMatrix m = check(parse_matrix(field(e, "matrix")));
      if (!is_unitary(m, 1e-10)) throw SpecError("rule_table entry is not unitary");
      entries.emplace(std::make_pair(get<std::int64_t>(field(e, "n"), "n"), parse_element(g, field(e, "x"))),
                      std::move(m));
    }
    const bool homogeneous = entries.empty();
    return QuantumCoin(
        d,
        [fallback, entries = std::move(entries)](std::int64_t n, const GroupElement& x) {
          auto it = entries.find({n, x});
          return it == entries.end() ? fallback : it->second;
        },
        homogeneous, homogeneous);
  }
  throw SpecError("unknown coin kind '" + kind + "'");
}

QuantumCoin parse_coin_text(const std::string& text, const Group& g, std::uint64_t seed) {
  const std::string t = trim(text);
  if (!t.empty() && (t.front() == '{' || t.front() == '"')) return parse_coin(read_json_text(t), g, seed);
  return parse_coin(json(t), g, seed);
}

WalkState parse_state(const json& j, const Group& g) {
  if (!j.is_array()) throw SpecError("state must be a list of amplitudes");
  WalkState s(g);
  for (const auto& e : j) {
    s.add_amplitude(parse_element(g, field(e, "x")), coin_index(field(e, "c"), g),
                    {get_or<double>(e, "re", 0.0), get_or<double>(e, "im", 0.0)});
  }
  s.prune();
  return s;
}

WalkState parse_state_text(const std::string& text, const Group& g) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '[' && t.find(':') == std::string::npos) return parse_state(read_json_text(t), g);
  WalkState s(g);
  std::stringstream terms(t);
  for (std::string term; std::getline(terms, term, ';');) {
    static const std::regex shape(R"(^\s*(-?\d+|\[[-\d, ]*\])\s*:\s*\(([^)]*)\)\s*$)");
    std::smatch m;
    if (!std::regex_match(term, m, shape)) throw SpecError("cannot read start state term '" + term + "'");
    const GroupElement x = parse_element(g, read_json_text(m[1]));
    std::vector<Complex> chirality;
    std::stringstream parts(m[2].str());
    for (std::string part; std::getline(parts, part, ',');) chirality.push_back(parse_complex_text(part));
    if (chirality.size() != g.degree()) {
      throw SpecError("chirality needs " + std::to_string(g.degree()) + " entries");
    }
    for (std::size_t c = 0; c < chirality.size(); ++c) s.add_amplitude(x, c, chirality[c]);
  }
  s.prune();
  return s;
}

json to_json(const WalkState& s) {
  json out = json::array();
  for (const auto& [x, b] : s.blocks()) {
    for (Eigen::Index c = 0; c < b.size(); ++c) {
      if (std::abs(b(c)) <= kPruneThreshold) continue;
      out.push_back(json{{"x", to_json(x)}, {"c", c}, {"re", b(c).real()}, {"im", b(c).imag()}});
    }
  }
  return out;
}

ShiftedAutomorphism parse_automorphism(const json& j, const Group& g) {
  const GroupElement shift = j.contains("shift") ? parse_element(g, j.at("shift")) : g.identity();
  std::vector<std::size_t> pi;
  if (j.contains("perm")) {
    pi = get<std::vector<std::size_t>>(j.at("perm"), "perm");
  } else {
    for (std::size_t i = 0; i < g.degree(); ++i) pi.push_back(i);
  }
  return make_shifted_automorphism(g, shift, std::move(pi));
}

json to_json(const ShiftedAutomorphism& a) {
  return json{{"shift", to_json(a.shift())}, {"perm", a.generator_permutation()}};
}

SymmetryTransform parse_symmetry(const json& j, const Group& g) {
  if (!j.is_object()) throw SpecError("symmetry spec must be an object");
  const std::string family = get_or<std::string>(j, "family", "identity");
  const std::size_t d = g.degree();
  const std::vector<Complex> eta = j.contains("eta") ? parse_units(j.at("eta")) : std::vector<Complex>{1.0};
  const Complex epsilon = j.contains("epsilon") ? parse_complex(j.at("epsilon")) : Complex(1.0);
  auto units_of_size = [d](const json& v, const char* what) {
    auto u = parse_units(v);
    if (u.size() != d) throw SpecError(std::string(what) + " needs " + std::to_string(d) + " entries");
    return to_vector(u);
  };

  if (family == "identity") return identity_symmetry(g);
  if (family == "general") {
    const CoinMatrix u0 = j.contains("U0") ? parse_matrix(j.at("U0"))
                                           : CoinMatrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    if (static_cast<std::size_t>(u0.rows()) != d) throw SpecError("U0 must be |S| x |S|");
    std::map<PhaseKey, Complex> entries;
    Complex fallback = 1.0;
    if (j.contains("phases")) {
      const json& p = j.at("phases");
      if (p.contains("default")) fallback = parse_complex(p.at("default"));
      for (const auto& e : get_or<json>(p, "entries", json::array())) {
        entries[PhaseKey{get<std::int64_t>(field(e, "n"), "n"), parse_element(g, field(e, "x")),
                         coin_index(field(e, "c"), g)}] = parse_complex(field(e, "value"));
      }
    }
    return make_general_symmetry(g, LocalUnitary::uniform(u0), PhaseField::table(std::move(entries), fallback));
  }
  if (family == "space_homog") {
    const auto rho = parse_character(get_or<json>(j, "character", json::object()),
                                     UnitaryCharacter::Domain::CausalSubgroup);
    CoinMatrix initial = CoinMatrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    CoinVector diag = CoinVector::Ones(static_cast<Eigen::Index>(d));
    if (j.contains("Uprime")) {
      const json& u = j.at("Uprime");
      if (u.is_array()) {
        diag = units_of_size(u, "Uprime");
        initial = diagonal_matrix(diag);
      } else {
        if (u.contains("diagonal")) diag = units_of_size(u.at("diagonal"), "Uprime.diagonal");
        initial = u.contains("initial") ? parse_matrix(u.at("initial")) : diagonal_matrix(diag);
      }
    }
    if (static_cast<std::size_t>(initial.rows()) != d) throw SpecError("Uprime.initial must be |S| x |S|");
    const CoinMatrix later = diagonal_matrix(diag);
    return make_space_homog_symmetry(g, eta, rho, [initial, later](std::int64_t n) { return n == 0 ? initial : later; });
  }
  if (family == "time_homog") {
    CoinVector base = CoinVector::Ones(static_cast<Eigen::Index>(d));
    std::map<std::pair<GroupElement, std::size_t>, Complex> table;
    if (j.contains("delta")) base = units_of_size(j.at("delta"), "delta");
    if (j.contains("delta_table")) {
      const json& t = j.at("delta_table");
      if (t.contains("default")) base = units_of_size(t.at("default"), "delta_table.default");
      for (const auto& e : get_or<json>(t, "entries", json::array())) {
        table[{parse_element(g, field(e, "x")), coin_index(field(e, "c"), g)}] = parse_complex(field(e, "value"));
      }
    }
    return make_time_homog_symmetry(g, epsilon, eta, [base, table](const GroupElement& x, std::size_t c) {
      auto it = table.find({x, c});
      return it == table.end() ? base(static_cast<Eigen::Index>(c)) : it->second;
    });
  }
  if (family == "full_homog") {
    const auto gamma = parse_character(get_or<json>(j, "character", json::object()),
                                       UnitaryCharacter::Domain::FullGroup);
    const CoinVector uprime =
        j.contains("Uprime") ? units_of_size(j.at("Uprime"), "Uprime") : CoinVector::Ones(static_cast<Eigen::Index>(d));
    return make_full_homog_symmetry(g, eta, epsilon, gamma, uprime);
  }
  throw SpecError("unknown symmetry family '" + family + "'");
}

std::optional<GeneralizedSymmetry> parse_generalized(const json& j, const Group& g) {
  if (!j.is_object() || !j.contains("automorphism")) return std::nullopt;
  return GeneralizedSymmetry{parse_automorphism(j.at("automorphism"), g), parse_symmetry(j, g)};
}

json to_json(const VerificationReport& r) {
  json out{{"case", r.case_id}, {"passed", r.passed},     {"max_residual", r.max_residual},
           {"tol", r.tolerance}, {"steps", r.steps}};
  if (!r.expected_pass) out["expected_pass"] = false;
  return out;
}

void write_distributions_csv(std::ostream& out, const std::vector<WalkState>& trajectory) {
  out << "step,x,probability\n";
  out << std::setprecision(17);
  for (std::size_t n = 0; n < trajectory.size(); ++n) {
    const Distribution dist = position_distribution(trajectory[n]);
    for (const auto& [x, p] : dist.probabilities()) {
      if (p <= kPruneThreshold) continue;
      const std::string label = x.to_string();
      out << n << ',' << (x.rank() > 1 ? "\"" + label + "\"" : label) << ',' << p << '\n';
    }
  }
}

json distributions_json(const std::vector<WalkState>& trajectory) {
  json out = json::array();
  for (std::size_t n = 0; n < trajectory.size(); ++n) {
    json rows = json::array();
    const Distribution dist = position_distribution(trajectory[n]);
    for (const auto& [x, p] : dist.probabilities()) {
      if (p > kPruneThreshold) rows.push_back(json{{"x", to_json(x)}, {"p", p}});
    }
    out.push_back(json{{"step", n}, {"distribution", std::move(rows)}});
  }
  return out;
}

}  // namespace qwsym::io
