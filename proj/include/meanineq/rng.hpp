#pragma once

#include <cstdint>
#include <limits>

namespace meanineq {

/// Counter-based generator: the k-th output is a SplitMix64 finalization of
/// `key + k * gamma`. Streams are derived with split(), which hashes the child
/// index into a fresh key, so a campaign can hand trial i the generator
/// `root.split(i)` and get the same numbers regardless of which thread runs it.
///
/// Normal variates use Box-Muller from libm, so sequences are reproducible on a
/// given platform but not guaranteed bit-identical across libm implementations.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed) noexcept : key_(mix(seed ^ kSeedSalt)) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept { return next_u64(); }

  std::uint64_t next_u64() noexcept { return mix(key_ + (counter_++) * kGamma); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1]; safe to pass to log().
  double uniform_open0() noexcept { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [lo, hi].
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) noexcept;

  /// Standard normal variate.
  double normal() noexcept;

  /// Exponential(1) variate.
  double exponential() noexcept;

  /// Independent child stream. Does not advance this generator.
  CounterRng split(std::uint64_t index) const noexcept {
    CounterRng child(0);
    child.key_ = mix(key_ ^ mix(index * kGamma + kSplitSalt));
    return child;
  }

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kSeedSalt = 0x6A09E667F3BCC909ull;
  static constexpr std::uint64_t kSplitSalt = 0xBB67AE8584CAA73Bull;

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace meanineq
