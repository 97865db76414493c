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

#include "qwsym/linalg.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qwsym/errors.hpp"

namespace qwsym {

double max_abs(const CoinMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const CoinMatrix& a, const CoinMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  return max_abs(a - b);
}

bool is_unitary(const CoinMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  const CoinMatrix id = CoinMatrix::Identity(m.rows(), m.cols());
  return max_abs_diff(m.adjoint() * m, id) <= tol;
}

bool is_diagonal(const CoinMatrix& m, double tol) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (r != c && std::abs(m(r, c)) > tol) return false;
    }
  }
  return true;
}

bool is_unit(Complex z, double tol) { return std::abs(std::abs(z) - 1.0) <= tol; }

void require_unitary(const CoinMatrix& m, const char* what) {
  if (!is_unitary(m)) {
    throw NotUnitaryError(std::string(what) + " is not unitary");
  }
}

Complex unit_pow(Complex z, std::int64_t n) {
  if (n == 0) return {1.0, 0.0};
  const double r = std::pow(std::abs(z), static_cast<double>(n));
  return std::polar(r, std::arg(z) * static_cast<double>(n));
}

CoinMatrix diagonal_matrix(const CoinVector& d) {
  CoinMatrix m = CoinMatrix::Zero(d.size(), d.size());
  m.diagonal() = d;
  return m;
}

CoinMatrix hadamard() {
  CoinMatrix h(2, 2);
  const double s = 1.0 / std::numbers::sqrt2;
  h << s, s, s, -s;
  return h;
}

CoinMatrix pauli_x() {
  CoinMatrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  return x;
}

CoinMatrix rotation(double psi) {
  CoinMatrix r(2, 2);
  r << std::cos(psi), std::sin(psi), -std::sin(psi), std::cos(psi);
  return r;
}

CoinMatrix grover(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  CoinMatrix g = CoinMatrix::Constant(n, n, Complex(2.0 / static_cast<double>(dim), 0.0));
  g -= CoinMatrix::Identity(n, n);
  return g;
}

CoinMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(dim);
  CoinMatrix z(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) z(r, c) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<CoinMatrix> qr(z);
  CoinMatrix q = qr.householderQ();
  const CoinMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index c = 0; c < n; ++c) {
    const Complex d = r(c, c);
    const double a = std::abs(d);
    if (a > 0) q.col(c) *= d / a;
  }
  return q;
}

Complex random_unit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  return unit(angle(rng));
}

CoinVector random_unit_phases(std::size_t dim, std::mt19937_64& rng) {
  CoinVector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = random_unit(rng);
  return v;
}

std::mt19937_64 derived_rng(std::uint64_t seed, std::span<const std::int64_t> keys) {
  std::vector<std::uint32_t> words;
  words.push_back(static_cast<std::uint32_t>(seed));
  words.push_back(static_cast<std::uint32_t>(seed >> 32));
  for (auto k : keys) {
    const auto u = static_cast<std::uint64_t>(k);
    words.push_back(static_cast<std::uint32_t>(u));
    words.push_back(static_cast<std::uint32_t>(u >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

}  // namespace qwsym
