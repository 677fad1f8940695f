#include <cmath>
#include <cstring>
#include <vector>

#include "doctest.h"
#include "meanineq/errors.hpp"
#include "meanineq/kernels.hpp"
#include "meanineq/rng.hpp"

using namespace meanineq;
using simd::Target;

namespace {

std::vector<double> noise(std::size_t n, CounterRng& rng) {
  std::vector<double> v(n);
  // Wide dynamic range so that reassociation would show up in the low bits.
  for (auto& x : v) x = rng.normal() * std::exp2(rng.uniform(-20.0, 20.0));
  return v;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

std::vector<Target> available_targets() {
  std::vector<Target> out;
  for (Target t : {Target::kAvx2, Target::kNeon})
    if (simd::target_available(t)) out.push_back(t);
  return out;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar reference values") {
    const auto& k = simd::scalar_kernels();
    CHECK(k.target == Target::kScalar);
    const double a[] = {1, 2, 3, 4, 5};
    const double b[] = {5, 4, 3, 2, 1};
    CHECK(k.dot(a, b, 5) == 35.0);
    CHECK(k.dot(a, b, 0) == 0.0);

    double y[] = {1, 1, 1};
    k.axpy(2.0, a, y, 3);
    CHECK(y[0] == 3.0);
    CHECK(y[2] == 7.0);

    double x[] = {1, 0};
    double z[] = {0, 1};
    k.rotate(x, z, 0.0, 1.0, 2);  // quarter turn
    CHECK(x[0] == 0.0);
    CHECK(x[1] == -1.0);
    CHECK(z[0] == 1.0);
    CHECK(z[1] == 0.0);

    double s[] = {1, -2};
    k.scale(-3.0, s, 2);
    CHECK(s[0] == -3.0);
    CHECK(s[1] == 6.0);
  }

  TEST_CASE("scalar target is always available") {
    CHECK(simd::target_available(Target::kScalar));
    CHECK(&simd::kernels_for(Target::kScalar) == &simd::scalar_kernels());
    CHECK(simd::target_name(simd::active().target).size() > 0);
  }

  TEST_CASE("unavailable target is a usage error") {
    for (Target t : {Target::kAvx2, Target::kNeon})
      if (!simd::target_available(t)) CHECK_THROWS_AS(simd::kernels_for(t), UsageError);
  }

  TEST_CASE("active table is the best available one") {
    const Target t = simd::active().target;
    CHECK(simd::target_available(t));
    if (simd::target_available(Target::kAvx2)) CHECK(t == Target::kAvx2);
  }

  TEST_CASE("vector targets are bit-identical to scalar") {
    const auto& ref = simd::scalar_kernels();
    const auto targets = available_targets();
    if (targets.empty()) MESSAGE("no vector target on this machine; only the scalar path is exercised");
    CounterRng rng(2024);
    for (Target t : targets) {
      const auto& k = simd::kernels_for(t);
      CAPTURE(simd::target_name(t));
      for (std::size_t n = 0; n <= 67; ++n) {
        CAPTURE(n);
        for (int rep = 0; rep < 8; ++rep) {
          const auto a = noise(n, rng);
          const auto b = noise(n, rng);
          CHECK(same_bits(ref.dot(a.data(), b.data(), n), k.dot(a.data(), b.data(), n)));

          const double alpha = rng.normal();
          auto y1 = b, y2 = b;
          ref.axpy(alpha, a.data(), y1.data(), n);
          k.axpy(alpha, a.data(), y2.data(), n);
          CHECK(same_bits(y1, y2));

          const double angle = rng.uniform(-3.2, 3.2);
          auto x1 = a, x2 = a, z1 = b, z2 = b;
          ref.rotate(x1.data(), z1.data(), std::cos(angle), std::sin(angle), n);
          k.rotate(x2.data(), z2.data(), std::cos(angle), std::sin(angle), n);
          CHECK(same_bits(x1, x2));
          CHECK(same_bits(z1, z2));

          auto s1 = a, s2 = a;
          ref.scale(alpha, s1.data(), n);
          k.scale(alpha, s2.data(), n);
          CHECK(same_bits(s1, s2));
        }
      }
    }
  }

  TEST_CASE("span wrappers use the shorter length") {
    const std::vector<double> a = {1, 2, 3};
    const std::vector<double> b = {1, 1};
    CHECK(simd::dot(a, b) == 3.0);
    std::vector<double> y = {0, 0, 0};
    simd::axpy(1.0, b, y);
    CHECK(y == std::vector<double>{1, 1, 0});
  }
}
