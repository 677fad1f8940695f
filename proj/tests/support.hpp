#pragma once

// Seeded generators and comparison helpers shared by the unit tests and the
// acceptance runner.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "meanineq/matrix.hpp"
#include "meanineq/operator_means.hpp"
#include "meanineq/rng.hpp"

namespace meanineq::testing {

inline double rel_frobenius(const SymMatrix& got, const SymMatrix& want) {
  return frobenius(got - want) / std::max(frobenius(want), 1e-300);
}

inline Matrix random_matrix(std::size_t rows, std::size_t cols, CounterRng& rng) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.normal();
  return m;
}

/// Entries uniform on [-1, 1].
inline SymMatrix random_symmetric(std::size_t n, CounterRng& rng) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) m(i, j) = m(j, i) = rng.uniform(-1.0, 1.0);
  return SymMatrix(m);
}

/// Haar-ish orthogonal matrix from Gram-Schmidt on a Gaussian matrix.
inline Matrix random_orthogonal(std::size_t n, CounterRng& rng) {
  Matrix q = random_matrix(n, n, rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      double d = 0.0;
      for (std::size_t i = 0; i < n; ++i) d += q(i, j) * q(i, k);
      for (std::size_t i = 0; i < n; ++i) q(i, j) -= d * q(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += q(i, j) * q(i, j);
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return q;
}

/// Q diag(d) Q^T.
inline SymMatrix with_spectrum(const Matrix& q, const std::vector<double>& d) {
  return congruence(q.transpose(), SymMatrix::diagonal(d));
}

/// SPD matrix with eigenvalues log-uniform on [lo, hi] in a random basis.
inline SymMatrix random_spd(std::size_t n, CounterRng& rng, double lo = 0.1, double hi = 10.0) {
  std::vector<double> d(n);
  for (auto& v : d) v = std::exp(rng.uniform(std::log(lo), std::log(hi)));
  return with_spectrum(random_orthogonal(n, rng), d);
}

/// Commuting PD pair: two positive polynomials of one random symmetric matrix.
inline std::pair<SymMatrix, SymMatrix> commuting_pair(std::size_t n, CounterRng& rng) {
  const Matrix q = random_orthogonal(n, rng);
  std::vector<double> base(n), da(n), db(n);
  for (auto& v : base) v = rng.uniform(0.2, 3.0);
  const double a0 = rng.uniform(0.1, 1.0), a1 = rng.uniform(0.1, 1.0), a2 = rng.uniform(0.0, 0.5);
  const double b0 = rng.uniform(0.1, 1.0), b1 = rng.uniform(0.0, 1.0), b2 = rng.uniform(0.1, 0.5);
  for (std::size_t i = 0; i < n; ++i) {
    da[i] = a0 + a1 * base[i] + a2 * base[i] * base[i];
    db[i] = b0 + b1 * base[i] + b2 * base[i] * base[i];
  }
  return {with_spectrum(q, da), with_spectrum(q, db)};
}

/// Invertible C = U diag(s) V^T with singular values in [1, cond].
inline Matrix random_conditioned(std::size_t n, CounterRng& rng, double cond) {
  const Matrix u = random_orthogonal(n, rng);
  const Matrix v = random_orthogonal(n, rng);
  std::vector<double> s(n);
  for (auto& x : s) x = std::exp(rng.uniform(0.0, std::log(cond)));
  s.front() = 1.0;
  s.back() = cond;
  return matmul(matmul(u, Matrix::diagonal(s)), v.transpose());
}

/// Contraction with spectral norm `norm` and singular values in [norm / 100, norm].
inline Matrix random_contraction(std::size_t n, CounterRng& rng, double norm) {
  const double cond = rng.uniform(1.0, 100.0);
  return (norm / cond) * random_conditioned(n, rng, cond);
}

}  // namespace meanineq::testing
