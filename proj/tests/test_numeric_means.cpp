#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "doctest.h"
#include "meanineq/errors.hpp"
#include "meanineq/numeric_means.hpp"
#include "meanineq/rng.hpp"

using namespace meanineq;
using doctest::Approx;

namespace {

const std::vector<double> kSmallGrid = {0.5, 1.0, 2.0, 4.0};

// Closed forms written out independently of the library.
double oracle_f(const std::string& id, double t) {
  if (id == "arithmetic") return (1 + t) / 2;
  if (id == "geometric") return std::sqrt(t);
  if (id == "harmonic") return 2 * t / (t + 1);
  if (id == "logarithmic") return t == 1 ? 1 : (t - 1) / std::log(t);
  if (id == "counterexample-g") return t <= 1 ? (t + 3) / 4 : (3 * t + 1) / 4;
  const double b = std::stod(id.substr(4));
  return (std::pow(t, b) + std::pow(t, 1 - b)) / 2;
}

std::vector<RepresentingFunction> all_six_plus_g() {
  auto v = concave_catalog();
  v.push_back(RepresentingFunction::counterexample_g());
  return v;
}

}  // namespace

TEST_SUITE("numeric-means") {
  TEST_CASE("catalog contents and flags") {
    const auto cat = concave_catalog();
    REQUIRE(cat.size() == 6);
    std::vector<std::string> ids;
    for (const auto& f : cat) {
      ids.push_back(f.id());
      CHECK(f.claims_concave());
      CHECK(f.claims_operator_monotone());
    }
    CHECK(ids == std::vector<std::string>{"arithmetic", "wyd:0.25", "wyd:0.5", "geometric", "harmonic", "logarithmic"});
    const auto g = RepresentingFunction::counterexample_g();
    CHECK_FALSE(g.claims_concave());
    CHECK_FALSE(g.claims_operator_monotone());
  }

  TEST_CASE("lookup by id is total over the catalog names") {
    for (const auto& id : catalog_ids()) CHECK_NOTHROW(RepresentingFunction::from_id(id));
    for (const auto& f : all_six_plus_g()) CHECK(RepresentingFunction::from_id(f.id()).id() == f.id());
    CHECK(RepresentingFunction::from_id("wyd:0.3").params() == std::vector<double>{0.3});
    CHECK(RepresentingFunction::from_id("wyd:0.3").kind() == RepresentingFunction::Kind::kWyd);
  }

  TEST_CASE("bad ids are usage errors") {
    for (const char* id : {"", "Geometric", "wyd", "wyd:", "wyd:x", "wyd:0.5x", "wyd:0", "wyd:1", "wyd:-0.2", "g"})
      CHECK_THROWS_AS(RepresentingFunction::from_id(id), UsageError);
  }

  TEST_CASE("wyd beta outside (0,1) is a domain error") {
    CHECK_THROWS_AS(RepresentingFunction::wyd(0.0), DomainError);
    CHECK_THROWS_AS(RepresentingFunction::wyd(1.0), DomainError);
    CHECK_THROWS_AS(RepresentingFunction::wyd(std::nan("")), DomainError);
    CHECK_NOTHROW(RepresentingFunction::wyd(1e-9));
  }

  TEST_CASE("eval_f examples") {
    CHECK(eval_f(RepresentingFunction::geometric(), 4) == 2.0);
    CHECK(eval_f(RepresentingFunction::arithmetic(), 1) == 1.0);
    CHECK(eval_f(RepresentingFunction::counterexample_g(), 2) == 1.75);
    CHECK(eval_f(RepresentingFunction::logarithmic(), 1) == 1.0);
  }

  TEST_CASE("eval_f rejects non-positive and non-finite input") {
    for (const auto& f : all_six_plus_g()) {
      CHECK_THROWS_AS(eval_f(f, 0.0), DomainError);
      CHECK_THROWS_AS(eval_f(f, -1.0), DomainError);
      CHECK_THROWS_AS(eval_f(f, INFINITY), DomainError);
      CHECK_THROWS_AS(eval_f(f, std::nan("")), DomainError);
    }
  }

  TEST_CASE("catalog matches closed forms") {
    for (const auto& f : all_six_plus_g())
      for (double t : log_grid(1.0 / 64, 64, 97)) {
        CAPTURE(f.id());
        CAPTURE(t);
        CHECK(f(t) == Approx(oracle_f(f.id(), t)).epsilon(1e-12));
      }
  }

  TEST_CASE("logarithmic is continuous through t = 1") {
    const auto f = RepresentingFunction::logarithmic();
    for (double d : {1e-15, 1e-13, 1e-11, 1e-9, 1e-6, 1e-3}) {
      // (t-1)/log t = 1 + d/2 + O(d^2) near t = 1 + d
      CHECK(f(1 + d) == Approx(1 + d / 2).epsilon(1e-12 + d * d));
      CHECK(f(1 - d) == Approx(1 - d / 2).epsilon(1e-12 + d * d));
    }
  }

  TEST_CASE("perspective_num examples") {
    CHECK(perspective_num(RepresentingFunction::geometric(), 4, 1) == 2.0);
    CHECK(perspective_num(RepresentingFunction::arithmetic(), 3, 5) == 4.0);
    CHECK(perspective_num(RepresentingFunction::harmonic(), 1, 3) == Approx(1.5).epsilon(1e-15));
    CHECK_THROWS_AS(perspective_num(RepresentingFunction::geometric(), 1, 0), DomainError);
    CHECK_THROWS_AS(perspective_num(RepresentingFunction::geometric(), -1, 1), DomainError);
  }

  TEST_CASE("mean_num examples") {
    CHECK(mean_num(RepresentingFunction::harmonic(), 2, 2) == 2.0);
    CHECK(mean_num(RepresentingFunction::logarithmic(), std::numbers::e, 1) ==
          Approx(1.718281828459045).epsilon(1e-14));
    CHECK(mean_num(RepresentingFunction::wyd(0.25), 16, 1) == Approx(5.0).epsilon(1e-15));
    CHECK_THROWS_AS(mean_num(RepresentingFunction::arithmetic(), 0, 1), DomainError);
  }

  TEST_CASE("mean_num equals perspective_num") {
    CounterRng rng(5);
    for (const auto& f : all_six_plus_g())
      for (int i = 0; i < 200; ++i) {
        const double x = std::exp(rng.uniform(-4, 4)), y = std::exp(rng.uniform(-4, 4));
        CHECK(mean_num(f, x, y) == perspective_num(f, x, y));
      }
  }

  TEST_CASE("function_from_mean examples") {
    const auto mean_of = [](RepresentingFunction f) {
      return MeanEvaluator([f](double x, double y) { return mean_num(f, x, y); });
    };
    CHECK(function_from_mean(mean_of(RepresentingFunction::arithmetic()), 3) == 2.0);
    CHECK(function_from_mean(mean_of(RepresentingFunction::geometric()), 4) == 2.0);
    CHECK(function_from_mean(mean_of(RepresentingFunction::harmonic()), 3) == Approx(1.5).epsilon(1e-15));
    CHECK_THROWS_AS(function_from_mean(mean_of(RepresentingFunction::arithmetic()), 0), DomainError);
  }

  TEST_CASE("bijection round trip") {
    for (const auto& f : all_six_plus_g()) {
      const MeanEvaluator m = [&f](double x, double y) { return mean_num(f, x, y); };
      for (double t : default_grid()) CHECK(std::abs(function_from_mean(m, t) - f(t)) <= 1e-12 * f(t));
    }
  }

  TEST_CASE("homogeneity, symmetry and betweenness") {
    const auto grid = default_grid();
    for (const auto& f : all_six_plus_g()) {
      CAPTURE(f.id());
      for (double x : grid)
        for (double y : grid) {
          const double m = mean_num(f, x, y);
          for (double c : {0.5, 2.0, 10.0}) CHECK(std::abs(mean_num(f, c * x, c * y) - c * m) <= 1e-10 * c * m);
          CHECK(std::abs(mean_num(f, y, x) - m) <= 1e-10 * m);
          CHECK(m >= std::min(x, y));
          CHECK(m <= std::max(x, y));
          if (x != y) {
            CHECK(m > std::min(x, y));
            CHECK(m < std::max(x, y));
          }
        }
    }
  }

  TEST_CASE("wyd at one half coincides with geometric") {
    const auto w = RepresentingFunction::wyd(0.5);
    const auto g = RepresentingFunction::geometric();
    for (double x : default_grid())
      for (double y : default_grid()) {
        const double want = mean_num(g, x, y);
        CHECK(std::abs(mean_num(w, x, y) - want) <= 1e-12 * want);
      }
  }

  TEST_CASE("joint concavity of concave-catalog means") {
    CounterRng rng(21);
    for (const auto& f : concave_catalog())
      for (int i = 0; i < 2000; ++i) {
        const double x1 = std::exp(rng.uniform(-3, 3)), y1 = std::exp(rng.uniform(-3, 3));
        const double x2 = std::exp(rng.uniform(-3, 3)), y2 = std::exp(rng.uniform(-3, 3));
        for (double l : {0.25, 0.5, 0.75}) {
          const double lhs = mean_num(f, l * x1 + (1 - l) * x2, l * y1 + (1 - l) * y2);
          const double rhs = l * mean_num(f, x1, y1) + (1 - l) * mean_num(f, x2, y2);
          CHECK(lhs >= rhs - 1e-9);
        }
      }
  }

  TEST_CASE("default grid") {
    const auto grid = default_grid();
    REQUIRE(grid.size() == 33);
    CHECK(grid.front() == 1.0 / 16);
    CHECK(grid[16] == 1.0);
    CHECK(grid.back() == 16.0);
    for (std::size_t k = 0; k < grid.size(); ++k) CHECK(grid[k] * grid[32 - k] == Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("log_grid endpoints") {
    const auto g = log_grid(0.1, 10, 5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 0.1);
    CHECK(g[2] == Approx(1.0).epsilon(1e-15));
    CHECK(g.back() == 10.0);
    CHECK_THROWS_AS(log_grid(0, 1, 3), DomainError);
  }

  TEST_CASE("check_axioms: geometric on a small grid passes") {
    const auto r = check_axioms(RepresentingFunction::geometric(), kSmallGrid, 1e-10);
    CHECK(r.all_pass());
    CHECK(r.function == "geometric");
    CHECK(r.grid_size == 4);
    CHECK(r.tol == 1e-10);
    for (const char* name : {"normalization", "symmetry", "betweenness", "monotonicity", "continuity", "homogeneity",
                             "f_positive", "f_increasing", "f_normalized", "f_functional_equation"})
      CHECK(r.find(name) != nullptr);
    CHECK(r.find("nope") == nullptr);
  }

  TEST_CASE("check_axioms: counterexample-g is a mean") {
    CHECK(check_axioms(RepresentingFunction::counterexample_g(), kSmallGrid, 1e-10).all_pass());
  }

  TEST_CASE("check_axioms: constant function fails the functional equation") {
    const auto one = RepresentingFunction::custom("one", [](double) { return 1.0; }, true, false);
    const auto r = check_axioms(one, kSmallGrid, 1e-10);
    CHECK_FALSE(r.all_pass());
    REQUIRE(r.find("f_functional_equation") != nullptr);
    CHECK_FALSE(r.find("f_functional_equation")->pass);
    CHECK_FALSE(r.find("symmetry")->pass);
    CHECK_FALSE(r.find("symmetry")->witness.empty());
    CHECK(r.find("f_normalized")->pass);
  }

  TEST_CASE("check_axioms: pass iff violation within tolerance") {
    const auto off = RepresentingFunction::custom("scaled", [](double t) { return 1.001 * std::sqrt(t); }, true, false);
    const auto r = check_axioms(off, default_grid(), 1e-10);
    for (const auto& c : r.checks) CHECK(c.pass == (c.violation <= r.tol));
    CHECK_FALSE(r.find("normalization")->pass);
    CHECK_FALSE(r.find("f_normalized")->pass);
    CHECK(r.find("homogeneity")->pass);
  }

  TEST_CASE("check_axioms: decreasing function fails monotonicity") {
    const auto dec = RepresentingFunction::custom("dec", [](double t) { return 2.0 / (1.0 + t); }, false, false);
    const auto r = check_axioms(dec, kSmallGrid, 1e-10);
    CHECK_FALSE(r.find("f_increasing")->pass);
  }

  TEST_CASE("check_axioms preconditions") {
    CHECK_THROWS_AS(check_axioms(RepresentingFunction::geometric(), std::vector<double>{}, 1e-10), UsageError);
    CHECK_THROWS_AS(check_axioms(RepresentingFunction::geometric(), kSmallGrid, 0.0), UsageError);
  }

  TEST_CASE("all catalog functions pass on the default grid") {
    for (const auto& f : all_six_plus_g()) {
      CAPTURE(f.id());
      CHECK(check_axioms(f, default_grid(), 1e-10).all_pass());
    }
  }

  TEST_CASE("concavity_probe examples") {
    CHECK(concavity_probe(RepresentingFunction::logarithmic(), log_grid(0.1, 10, 200), 1e-9).concave);

    const auto g = concavity_probe(RepresentingFunction::counterexample_g(), std::vector<double>{0.5, 2.0}, 1e-9);
    CHECK_FALSE(g.concave);
    REQUIRE(g.witness.has_value());
    CHECK(g.witness->first == 0.5);
    CHECK(g.witness->second == 2.0);
    CHECK(g.worst_defect == Approx(0.125).epsilon(1e-15));

    const auto a = concavity_probe(RepresentingFunction::arithmetic(), default_grid(), 1e-12);
    CHECK(a.concave);
    CHECK_FALSE(a.witness.has_value());
  }

  TEST_CASE("concavity_probe separates catalog from counterexample-g") {
    for (const auto& f : all_six_plus_g())
      CHECK(concavity_probe(f, default_grid(), 1e-10).concave == f.claims_concave());
  }

  TEST_CASE("concavity_probe needs two points") {
    CHECK_THROWS_AS(concavity_probe(RepresentingFunction::geometric(), std::vector<double>{1.0}, 1e-9), UsageError);
  }
}
