#include "meanineq/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "meanineq/errors.hpp"
#include "meanineq/kernels.hpp"

namespace meanineq {
namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw UsageError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

void require_same_dim(const SymMatrix& a, const SymMatrix& b, const char* op) {
  if (a.dim() != b.dim())
    throw UsageError(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()));
}

std::vector<double> symmetrized(std::size_t n, const std::vector<double>& m) {
  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i * n + i] = m[i * n + i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 0.5 * (m[i * n + j] + m[j * n + i]);
      out[i * n + j] = v;
      out[j * n + i] = v;
    }
  }
  return out;
}

double off_diagonal_norm(const Matrix& w) {
  double sum = 0.0;
  for (std::size_t p = 0; p < w.rows(); ++p)
    for (std::size_t q = p + 1; q < w.cols(); ++q) sum += w(p, q) * w(p, q);
  return std::sqrt(2.0 * sum);
}

// sum_k Q_ik w_k Q_jk, filled on the upper triangle and mirrored.
SymMatrix weighted_outer(const Matrix& q, std::span<const double> weights) {
  const std::size_t n = q.rows();
  Matrix scaled = q;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) scaled(i, k) *= weights[k];
  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = simd::dot(scaled.row(i), q.row(j));
      out[i * n + j] = v;
      out[j * n + i] = v;
    }
  }
  return SymMatrix(n, std::move(out));
}

}  // namespace

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows_ * cols_)
    throw UsageError("Matrix: expected " + std::to_string(rows_ * cols_) + " entries, got " +
                     std::to_string(data_.size()));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw UsageError("Matrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::column(std::span<const double> v) { return Matrix(v.size(), 1, std::vector<double>(v.begin(), v.end())); }

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "Matrix +");
  Matrix out = a;
  simd::axpy(1.0, b.data_, out.data_);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "Matrix -");
  Matrix out = a;
  simd::axpy(-1.0, b.data_, out.data_);
  return out;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix out = a;
  simd::scale(s, out.data_);
  return out;
}

// ---------------------------------------------------------------------------
// SymMatrix

SymMatrix::SymMatrix(const Matrix& m) : SymMatrix(m.rows(), std::vector<double>(m.data().begin(), m.data().end())) {
  if (m.rows() != m.cols())
    throw UsageError("SymMatrix: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     ", not square");
}

SymMatrix::SymMatrix(std::size_t n, std::vector<double> row_major) : n_(n) {
  if (n == 0 || n > kMaxDimension)
    throw UsageError("SymMatrix: dimension " + std::to_string(n) + " outside [1, " + std::to_string(kMaxDimension) + "]");
  if (row_major.size() != n * n)
    throw UsageError("SymMatrix: expected " + std::to_string(n * n) + " entries, got " +
                     std::to_string(row_major.size()));
  for (double v : row_major)
    if (!std::isfinite(v)) throw UsageError("SymMatrix: non-finite entry");
  data_ = symmetrized(n, row_major);
}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<double>> rows) : SymMatrix(Matrix(rows)) {}

SymMatrix SymMatrix::identity(std::size_t n) {
  std::vector<double> d(n, 1.0);
  return diagonal(d);
}

SymMatrix SymMatrix::diagonal(std::span<const double> d) {
  const std::size_t n = d.size();
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = d[i];
  return SymMatrix(n, std::move(m));
}

SymMatrix SymMatrix::diagonal(std::initializer_list<double> d) {
  return diagonal(std::span<const double>(d.begin(), d.size()));
}

SymMatrix SymMatrix::zero(std::size_t n) { return SymMatrix(n, std::vector<double>(n * n, 0.0)); }

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a, b, "SymMatrix +");
  std::vector<double> out = a.data_;
  simd::axpy(1.0, b.data_, out);
  return SymMatrix(a.n_, std::move(out));
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a, b, "SymMatrix -");
  std::vector<double> out = a.data_;
  simd::axpy(-1.0, b.data_, out);
  return SymMatrix(a.n_, std::move(out));
}

SymMatrix operator*(double s, const SymMatrix& a) {
  std::vector<double> out = a.data_;
  simd::scale(s, out);
  return SymMatrix(a.n_, std::move(out));
}

// ---------------------------------------------------------------------------
// Eigendecomposition

SymMatrix SpectralDecomposition::reconstruct() const { return weighted_outer(eigenvectors, eigenvalues); }

SpectralDecomposition sym_eigen(const SymMatrix& a, const JacobiOptions& options) {
  const std::size_t n = a.dim();
  Matrix w = a.to_matrix();
  // Rows of vt are the eigenvectors, so the accumulation is a contiguous row rotation.
  Matrix vt = Matrix::identity(n);
  const double target = options.relative_tol * frobenius(a);

  auto sweep_once = [&] {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = w(p, q);
        if (apq == 0.0) continue;
        const double app = w(p, p);
        const double aqq = w(q, q);
        // t = tan(theta) is the smaller root of t^2 + 2 tau t - 1 = 0.
        const double tau = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(tau) > 1e150) {
          t = 0.5 / tau;
        } else {
          t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Rows p, q of J^T W; the column update follows from symmetry.
        simd::rotate(w.row(p), w.row(q), c, s);
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          w(k, p) = w(p, k);
          w(k, q) = w(q, k);
        }
        w(p, p) = app - t * apq;
        w(q, q) = aqq + t * apq;
        w(p, q) = 0.0;
        w(q, p) = 0.0;

        simd::rotate(vt.row(p), vt.row(q), c, s);
      }
    }
  };

  int sweep = 0;
  double off = off_diagonal_norm(w);
  while (off > target) {
    if (sweep >= options.max_sweeps) {
      throw NumericError("sym_eigen: no convergence after " + std::to_string(options.max_sweeps) +
                             " sweeps, off-diagonal residual " + std::to_string(off),
                         off);
    }
    sweep_once();
    ++sweep;
    off = off_diagonal_norm(w);
  }
  // Convergence is quadratic, so one more sweep takes small eigenvalues to
  // full relative accuracy instead of stopping at the absolute target.
  if (sweep > 0 && off > 0.0) sweep_once();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&w](std::size_t i, std::size_t j) { return w(i, i) < w(j, j); });

  SpectralDecomposition out;
  out.sweeps = sweep;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = w(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = vt(order[k], i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(SymMatrix rho) : rho_(std::move(rho)) {
  const double tr = trace(rho_);
  if (std::abs(tr - 1.0) > 1e-12) throw DomainError("density matrix trace " + std::to_string(tr) + " is not 1", tr);
  const double lo = min_eigenvalue(rho_);
  if (lo < -1e-12) throw DomainError("density matrix has negative eigenvalue " + std::to_string(lo), lo);
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n) {
  return DensityMatrix((1.0 / static_cast<double>(n)) * SymMatrix::identity(n));
}

DensityMatrix DensityMatrix::pure(std::span<const double> v) {
  const double norm2 = simd::dot(v, v);
  if (!(norm2 > 0.0)) throw DomainError("pure state needs a non-zero vector", norm2);
  const std::size_t n = v.size();
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = v[i] * v[j] / norm2;
  return DensityMatrix(SymMatrix(n, std::move(m)));
}

// ---------------------------------------------------------------------------
// Functional calculus

SymMatrix apply_function(const SpectralDecomposition& eig, const ScalarFunction& phi, double domain_floor,
                         double clamp_tol) {
  std::vector<double> values(eig.eigenvalues.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    double lambda = eig.eigenvalues[k];
    if (lambda <= domain_floor) {
      if (domain_floor - lambda > clamp_tol || clamp_tol <= 0.0) {
        throw DomainError("apply_function: eigenvalue " + std::to_string(lambda) + " at or below domain floor " +
                              std::to_string(domain_floor),
                          lambda);
      }
      lambda = domain_floor;
    }
    values[k] = phi(lambda);
  }
  return weighted_outer(eig.eigenvectors, values);
}

SymMatrix apply_function(const SymMatrix& a, const ScalarFunction& phi, double domain_floor, double clamp_tol) {
  return apply_function(sym_eigen(a), phi, domain_floor, clamp_tol);
}

PdRoots pd_roots(const SymMatrix& a, double pd_floor) {
  const SpectralDecomposition eig = sym_eigen(a);
  const double lo = eig.min_eigenvalue();
  if (!(lo > pd_floor))
    throw NotPositiveDefinite("matrix is not positive definite: min eigenvalue " + std::to_string(lo), lo);
  std::vector<double> root(eig.eigenvalues.size());
  std::vector<double> inv_root(root.size());
  for (std::size_t k = 0; k < root.size(); ++k) {
    root[k] = std::sqrt(eig.eigenvalues[k]);
    inv_root[k] = 1.0 / root[k];
  }
  return {weighted_outer(eig.eigenvectors, root), weighted_outer(eig.eigenvectors, inv_root), lo,
          eig.max_eigenvalue()};
}

SymMatrix sqrt_pd(const SymMatrix& a, double pd_floor) { return pd_roots(a, pd_floor).sqrt; }

SymMatrix inv_sqrt_pd(const SymMatrix& a, double pd_floor) { return pd_roots(a, pd_floor).inv_sqrt; }

SymMatrix inverse_pd(const SymMatrix& a, double pd_floor) {
  const SpectralDecomposition eig = sym_eigen(a);
  const double lo = eig.min_eigenvalue();
  if (!(lo > pd_floor))
    throw NotPositiveDefinite("matrix is not positive definite: min eigenvalue " + std::to_string(lo), lo);
  std::vector<double> inv(eig.eigenvalues.size());
  for (std::size_t k = 0; k < inv.size(); ++k) inv[k] = 1.0 / eig.eigenvalues[k];
  return weighted_outer(eig.eigenvectors, inv);
}

double min_eigenvalue(const SymMatrix& a) { return sym_eigen(a).min_eigenvalue(); }

bool loewner_leq(const SymMatrix& a, const SymMatrix& b, double tol) {
  require_same_dim(a, b, "loewner_leq");
  return min_eigenvalue(b - a) >= -tol;
}

// ---------------------------------------------------------------------------
// Basic algebra

double trace(const SymMatrix& a) noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

double trace(const Matrix& a) {
  if (a.rows() != a.cols()) throw UsageError("trace: matrix is not square");
  double t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double frobenius(const SymMatrix& a) noexcept { return std::sqrt(simd::dot(a.data(), a.data())); }

double frobenius(const Matrix& a) noexcept { return std::sqrt(simd::dot(a.data(), a.data())); }

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw UsageError("matmul: inner dimensions " + std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                     " differ");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) simd::axpy(a(i, k), b.row(k), out.row(i));
  return out;
}

Matrix matmul(const SymMatrix& a, const SymMatrix& b) { return matmul(a.to_matrix(), b.to_matrix()); }

SymMatrix congruence(const Matrix& c, const SymMatrix& a) {
  if (c.rows() != a.dim())
    throw UsageError("congruence: factor has " + std::to_string(c.rows()) + " rows, matrix dimension is " +
                     std::to_string(a.dim()));
  const std::size_t n = a.dim();
  const std::size_t k = c.cols();
  Matrix ac(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) simd::axpy(a(i, j), c.row(j), ac.row(i));
  Matrix out(k, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < k; ++r) simd::axpy(c(i, r), ac.row(i), out.row(r));
  return SymMatrix(out);
}

SymMatrix congruence(const SymMatrix& c, const SymMatrix& a) { return congruence(c.to_matrix(), a); }

// ---------------------------------------------------------------------------
// Sampling

SymMatrix sample_spd(std::size_t n, CounterRng& rng, double spread, double floor) {
  if (n == 0 || n > kMaxDimension) throw UsageError("sample_spd: dimension " + std::to_string(n) + " unsupported");
  if (!(spread >= 0.0) || !(floor > 0.0)) throw UsageError("sample_spd: spread must be >= 0 and floor > 0");
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = spread * rng.normal();
  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = simd::dot(g.row(i), g.row(j)) + (i == j ? floor : 0.0);
      out[i * n + j] = v;
      out[j * n + i] = v;
    }
  }
  return SymMatrix(n, std::move(out));
}

DensityMatrix sample_density(std::size_t n, CounterRng& rng) {
  const SymMatrix s = sample_spd(n, rng, 1.0, 1e-6);
  const double tr = trace(s);
  std::vector<double> scaled(s.data().begin(), s.data().end());
  for (double& v : scaled) v /= tr;
  return DensityMatrix(SymMatrix(n, std::move(scaled)));
}

// ---------------------------------------------------------------------------
// Text format

SymMatrix read_matrix(std::istream& in, const std::string& source_name) {
  long long n = 0;
  if (!(in >> n)) throw UsageError("malformed matrix file " + source_name + ": missing dimension");
  if (n < 1 || n > static_cast<long long>(kMaxDimension))
    throw UsageError("malformed matrix file " + source_name + ": dimension " + std::to_string(n) + " unsupported");
  const auto dim = static_cast<std::size_t>(n);
  std::vector<double> values(dim * dim);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(in >> values[i]))
      throw UsageError("malformed matrix file " + source_name + ": expected " + std::to_string(values.size()) +
                       " values, read " + std::to_string(i));
    if (!std::isfinite(values[i])) throw UsageError("malformed matrix file " + source_name + ": non-finite value");
  }
  std::string extra;
  if (in >> extra) throw UsageError("malformed matrix file " + source_name + ": trailing content '" + extra + "'");
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      if (std::abs(values[i * dim + j] - values[j * dim + i]) > 1e-9)
        throw UsageError("malformed matrix file " + source_name + ": not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
    }
  }
  return SymMatrix(dim, std::move(values));
}

SymMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open matrix file " + path);
  return read_matrix(in, path);
}

void write_matrix(std::ostream& out, const SymMatrix& a) {
  out << a.dim() << '\n';
  char buf[32];
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", a(i, j));
      out << (j ? " " : "") << buf;
    }
    out << '\n';
  }
}

}  // namespace meanineq
