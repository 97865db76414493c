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

#ifndef QWSYM_IO_HPP
#define QWSYM_IO_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qwsym/line_toolkit.hpp"
#include "qwsym/verify.hpp"

namespace qwsym::io {

using nlohmann::json;

/// {"re":..,"im":..}, a bare number, or [re, im].
Complex parse_complex(const json& j);
/// "1", "-0.5i", "0.3+0.2i", "i"
Complex parse_complex_text(const std::string& text);
json to_json(Complex z);
json to_json(const CoinMatrix& m);
json to_json(const CoinVector& v);

CoinMatrix parse_matrix(const json& j);

/// JSON object or shorthand: "line", "lattice(2)", "torus(6,6)", "cyclic(8)",
/// "hypercube(3)".
Group parse_group(const json& j);
Group parse_group_text(const std::string& text);

/// An integer for rank-one groups, an array of coordinates otherwise.
GroupElement parse_element(const Group& g, const json& j);
json to_json(const GroupElement& x);

/// Named coins ("hadamard", "grover", "identity", "random") or
/// {"kind": "uniform_matrix" | "line_params" | "rule_table" | "random", ...}.
QuantumCoin parse_coin(const json& j, const Group& g, std::uint64_t seed = 0);
QuantumCoin parse_coin_text(const std::string& text, const Group& g, std::uint64_t seed = 0);

/// {"omega":..,"mu":..,"nu":..,"psi":..} or {"named": "hadamard"}.
LineCoinParams parse_line_params(const json& j);
json to_json(const LineCoinParams& p);

/// List of {"x", "c", "re", "im"} entries.
WalkState parse_state(const json& j, const Group& g);
/// "x:(a,b,...)" with x an integer or [..] coordinate list, or a JSON list.
WalkState parse_state_text(const std::string& text, const Group& g);
json to_json(const WalkState& s);

ShiftedAutomorphism parse_automorphism(const json& j, const Group& g);
json to_json(const ShiftedAutomorphism& a);

SymmetryTransform parse_symmetry(const json& j, const Group& g);
/// Present when the spec carries an "automorphism" entry.
std::optional<GeneralizedSymmetry> parse_generalized(const json& j, const Group& g);

json to_json(const VerificationReport& r);

/// step,x,probability rows over the support (p > 1e-15), canonical order.
void write_distributions_csv(std::ostream& out, const std::vector<WalkState>& trajectory);
json distributions_json(const std::vector<WalkState>& trajectory);

json read_json_text(const std::string& text);

}  // namespace qwsym::io

#endif  // QWSYM_IO_HPP
