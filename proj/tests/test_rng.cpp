#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "meanineq/rng.hpp"

using meanineq::CounterRng;

TEST_SUITE("rng") {
  TEST_CASE("same seed gives the same stream") {
    CounterRng a(42), b(42);
    for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());
    CHECK(a.counter() == 1000);
  }

  TEST_CASE("different seeds diverge") {
    CounterRng a(1), b(2);
    int equal = 0;
    for (int i = 0; i < 100; ++i) equal += a.next_u64() == b.next_u64();
    CHECK(equal == 0);
  }

  TEST_CASE("split is pure and does not advance the parent") {
    const CounterRng root(7);
    CounterRng c1 = root.split(3);
    CounterRng c2 = root.split(3);
    CHECK(root.counter() == 0);
    for (int i = 0; i < 100; ++i) REQUIRE(c1.next_u64() == c2.next_u64());

    std::set<std::uint64_t> firsts;
    for (std::uint64_t i = 0; i < 1000; ++i) firsts.insert(root.split(i).next_u64());
    CHECK(firsts.size() == 1000);
  }

  TEST_CASE("children do not replay the parent stream") {
    CounterRng root(9);
    CounterRng child = root.split(0);
    std::set<std::uint64_t> parent;
    for (int i = 0; i < 256; ++i) parent.insert(root.next_u64());
    for (int i = 0; i < 256; ++i) CHECK(parent.count(child.next_u64()) == 0);
  }

  TEST_CASE("uniform01 range and moments") {
    CounterRng rng(11);
    const int n = 200000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
      const double u = rng.uniform01();
      REQUIRE(u >= 0.0);
      REQUIRE(u < 1.0);
      sum += u;
      sq += u * u;
    }
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
    CHECK(sq / n - (sum / n) * (sum / n) == doctest::Approx(1.0 / 12.0).epsilon(0.02));
  }

  TEST_CASE("uniform_open0 excludes zero") {
    CounterRng rng(12);
    for (int i = 0; i < 10000; ++i) {
      const double u = rng.uniform_open0();
      REQUIRE(u > 0.0);
      REQUIRE(u <= 1.0);
    }
  }

  TEST_CASE("uniform_int covers the closed range without bias") {
    CounterRng rng(13);
    std::vector<int> counts(6, 0);
    const int n = 60000;
    for (int i = 0; i < n; ++i) {
      const auto v = rng.uniform_int(2, 7);
      REQUIRE(v >= 2);
      REQUIRE(v <= 7);
      ++counts[v - 2];
    }
    for (int c : counts) CHECK(std::abs(c - n / 6) < 500);
    CHECK(rng.uniform_int(5, 5) == 5);
  }

  TEST_CASE("normal and exponential moments") {
    CounterRng rng(14);
    const int n = 200000;
    double s = 0.0, s2 = 0.0, e = 0.0;
    for (int i = 0; i < n; ++i) {
      const double z = rng.normal();
      s += z;
      s2 += z * z;
      const double x = rng.exponential();
      REQUIRE(x >= 0.0);
      e += x;
    }
    CHECK(std::abs(s / n) < 0.01);
    CHECK(s2 / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(e / n == doctest::Approx(1.0).epsilon(0.02));
  }
}
