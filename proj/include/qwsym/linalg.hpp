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

#include <complex>
#include <random>
#include <span>

#include <Eigen/Dense>

namespace qwsym {

using Complex = std::complex<double>;
using CoinMatrix = Eigen::MatrixXcd;
using CoinVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Tolerance for single-operator identities.
inline constexpr double kOperatorTol = 1e-12;

double max_abs(const CoinMatrix& m);
double max_abs_diff(const CoinMatrix& a, const CoinMatrix& b);

bool is_unitary(const CoinMatrix& m, double tol = kOperatorTol);
bool is_diagonal(const CoinMatrix& m, double tol = kOperatorTol);
bool is_unit(Complex z, double tol = kOperatorTol);

/// Throws NotUnitaryError with `what` in the message.
void require_unitary(const CoinMatrix& m, const char* what);

/// e^{i*theta}
inline Complex unit(double theta) { return std::polar(1.0, theta); }

/// z^n for a complex unit, computed through the argument so that large n does
/// not accumulate rounding.
Complex unit_pow(Complex z, std::int64_t n);

CoinMatrix diagonal_matrix(const CoinVector& d);

CoinMatrix hadamard();
CoinMatrix pauli_x();
CoinMatrix rotation(double psi);
/// Grover diffusion coin 2/d J - I.
CoinMatrix grover(std::size_t dim);

/// Haar-random unitary (QR of a complex Ginibre matrix with phase fix).
CoinMatrix random_unitary(std::size_t dim, std::mt19937_64& rng);
CoinVector random_unit_phases(std::size_t dim, std::mt19937_64& rng);
Complex random_unit(std::mt19937_64& rng);

/// Deterministic generator derived from a seed and a list of integers; used
/// for reproducible position/time dependent random coins.
std::mt19937_64 derived_rng(std::uint64_t seed, std::span<const std::int64_t> keys);
inline std::mt19937_64 derived_rng(std::uint64_t seed, std::initializer_list<std::int64_t> keys) {
  return derived_rng(seed, std::span<const std::int64_t>(keys.begin(), keys.size()));
}

}  // namespace qwsym
