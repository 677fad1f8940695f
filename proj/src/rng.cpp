#include "meanineq/rng.hpp"

#include <cmath>
#include <numbers>

namespace meanineq {

std::uint64_t CounterRng::uniform_int(std::uint64_t lo, std::uint64_t hi) noexcept {
  if (hi <= lo) return lo;
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return next_u64();  // full 64-bit range
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = max() - max() % span;
  std::uint64_t r = next_u64();
  while (r >= limit) r = next_u64();
  return lo + r % span;
}

double CounterRng::normal() noexcept {
  const double u1 = uniform_open0();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double CounterRng::exponential() noexcept { return -std::log(uniform_open0()); }

}  // namespace meanineq
