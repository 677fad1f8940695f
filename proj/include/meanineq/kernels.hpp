#pragma once

// Data-parallel inner loops shared by the matrix routines.
//
// Every kernel has a scalar reference implementation and, where the build and
// the CPU allow it, an AVX2 (x86-64) or NEON (aarch64) variant. The variants
// are bit-identical to the reference: element-wise kernels use the same
// multiply/add sequence, and dot() fixes a four-accumulator reduction order
// that the scalar code reproduces exactly. Kernel translation units are built
// with -ffp-contract=off so no variant silently fuses into FMA.

#include <cstddef>
#include <span>
#include <string_view>

namespace meanineq::simd {

enum class Target { kScalar, kAvx2, kNeon };

std::string_view target_name(Target t) noexcept;

struct KernelTable {
  Target target;
  /// sum_i a[i] * b[i], reduction order fixed across targets.
  double (*dot)(const double* a, const double* b, std::size_t n) noexcept;
  /// y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n) noexcept;
  /// (x, y) <- (c*x - s*y, s*x + c*y), a plane rotation of two rows.
  void (*rotate)(double* x, double* y, double c, double s, std::size_t n) noexcept;
  /// x[i] *= alpha
  void (*scale)(double alpha, double* x, std::size_t n) noexcept;
};

const KernelTable& scalar_kernels() noexcept;

/// True if the target was compiled in and the running CPU supports it.
bool target_available(Target t) noexcept;

/// Table for a specific target. Throws UsageError if it is unavailable.
const KernelTable& kernels_for(Target t);

/// Best available table, chosen once on first use.
const KernelTable& active() noexcept;

inline double dot(std::span<const double> a, std::span<const double> b) noexcept {
  return active().dot(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept {
  active().axpy(alpha, x.data(), y.data(), x.size() < y.size() ? x.size() : y.size());
}

inline void rotate(std::span<double> x, std::span<double> y, double c, double s) noexcept {
  active().rotate(x.data(), y.data(), c, s, x.size() < y.size() ? x.size() : y.size());
}

inline void scale(double alpha, std::span<double> x) noexcept { active().scale(alpha, x.data(), x.size()); }

namespace detail {
// Per-target entry points; defined in their own translation units.
const KernelTable* avx2_table() noexcept;
const KernelTable* neon_table() noexcept;
}  // namespace detail

}  // namespace meanineq::simd
