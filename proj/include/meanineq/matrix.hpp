#pragma once

// Dense real matrices for the operator routines: a general rectangular Matrix,
// an immutable SymMatrix, cyclic-Jacobi eigendecomposition, functional
// calculus, Loewner comparisons and seeded SPD / density sampling.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "meanineq/numeric_means.hpp"
#include "meanineq/rng.hpp"

namespace meanineq {

inline constexpr std::size_t kMaxDimension = 64;
inline constexpr double kDefaultPdFloor = 1e-10;

/// Row-major rows x cols matrix. Used for congruence factors and products.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> row_major);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> d);
  static Matrix column(std::span<const double> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<double> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> data() const noexcept { return data_; }

  Matrix transpose() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(double s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Real symmetric n x n matrix, 1 <= n <= 64, finite entries. Construction
/// averages (a_ij + a_ji) / 2 so the stored entries are exactly symmetric.
class SymMatrix {
 public:
  SymMatrix() = default;
  /// Symmetrizes `m`. Throws UsageError if non-square, empty, too large or non-finite.
  explicit SymMatrix(const Matrix& m);
  SymMatrix(std::size_t n, std::vector<double> row_major);
  SymMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static SymMatrix identity(std::size_t n);
  static SymMatrix diagonal(std::span<const double> d);
  static SymMatrix diagonal(std::initializer_list<double> d);
  static SymMatrix zero(std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }
  std::span<const double> data() const noexcept { return data_; }

  Matrix to_matrix() const { return Matrix(n_, n_, data_); }

  friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator*(double s, const SymMatrix& a);
  friend bool operator==(const SymMatrix& a, const SymMatrix& b) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Eigenpairs with ascending eigenvalues; column k of `eigenvectors` pairs with eigenvalues[k].
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
  int sweeps = 0;

  /// Q diag(lambda) Q^T.
  SymMatrix reconstruct() const;
  double min_eigenvalue() const noexcept { return eigenvalues.front(); }
  double max_eigenvalue() const noexcept { return eigenvalues.back(); }
};

struct JacobiOptions {
  int max_sweeps = 100;
  double relative_tol = 1e-12;  // stop when off-diagonal Frobenius <= tol * ||A||_F
};

/// Cyclic Jacobi. Throws NumericError (carrying the off-diagonal residual) when
/// the sweep budget runs out.
SpectralDecomposition sym_eigen(const SymMatrix& a, const JacobiOptions& options = {});

/// Positive semi-definite state with unit trace.
class DensityMatrix {
 public:
  /// Throws DomainError if min eigenvalue < -1e-12 or |Tr - 1| > 1e-12.
  explicit DensityMatrix(SymMatrix rho);

  /// Maximally mixed state I / n.
  static DensityMatrix maximally_mixed(std::size_t n);
  /// Pure state v v^T for a unit vector v (normalized here).
  static DensityMatrix pure(std::span<const double> v);

  const SymMatrix& matrix() const noexcept { return rho_; }
  std::size_t dim() const noexcept { return rho_.dim(); }

 private:
  SymMatrix rho_;
};

/// Q diag(phi(lambda_i)) Q^T. Eigenvalues at or below `domain_floor` raise
/// DomainError carrying the eigenvalue, unless they lie within `clamp_tol` of
/// the floor, in which case they are clamped to it before phi is applied.
SymMatrix apply_function(const SymMatrix& a, const ScalarFunction& phi, double domain_floor = 0.0,
                         double clamp_tol = 0.0);
SymMatrix apply_function(const SpectralDecomposition& eig, const ScalarFunction& phi, double domain_floor = 0.0,
                         double clamp_tol = 0.0);

struct PdRoots {
  SymMatrix sqrt;
  SymMatrix inv_sqrt;
  double min_eigenvalue;
  double max_eigenvalue;
};

/// A^{1/2} and A^{-1/2} from one eigendecomposition. Throws NotPositiveDefinite
/// when the smallest eigenvalue is <= pd_floor.
PdRoots pd_roots(const SymMatrix& a, double pd_floor = kDefaultPdFloor);
SymMatrix sqrt_pd(const SymMatrix& a, double pd_floor = kDefaultPdFloor);
SymMatrix inv_sqrt_pd(const SymMatrix& a, double pd_floor = kDefaultPdFloor);
SymMatrix inverse_pd(const SymMatrix& a, double pd_floor = kDefaultPdFloor);

double min_eigenvalue(const SymMatrix& a);

/// True iff lambda_min(B - A) >= -tol. Throws UsageError on dimension mismatch.
bool loewner_leq(const SymMatrix& a, const SymMatrix& b, double tol);

double trace(const SymMatrix& a) noexcept;
double trace(const Matrix& a);
double frobenius(const SymMatrix& a) noexcept;
double frobenius(const Matrix& a) noexcept;

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix matmul(const SymMatrix& a, const SymMatrix& b);
/// C^T A C, symmetrized. C may be rectangular (n x k), giving a k x k result.
SymMatrix congruence(const Matrix& c, const SymMatrix& a);
SymMatrix congruence(const SymMatrix& c, const SymMatrix& a);

/// G G^T + floor I with G_ij ~ N(0, spread^2). spread may be zero.
SymMatrix sample_spd(std::size_t n, CounterRng& rng, double spread, double floor);
/// sample_spd(n, rng, 1, 1e-6) scaled to unit trace.
DensityMatrix sample_density(std::size_t n, CounterRng& rng);

/// Matrix text format: first line n, then n lines of n values. Asymmetry above
/// 1e-9 is an error. Throws UsageError with the offending source name.
SymMatrix read_matrix(std::istream& in, const std::string& source_name);
SymMatrix load_matrix(const std::string& path);
void write_matrix(std::ostream& out, const SymMatrix& a);

}  // namespace meanineq
