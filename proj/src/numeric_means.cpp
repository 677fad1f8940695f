#include "meanineq/numeric_means.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <system_error>

#include "meanineq/errors.hpp"

namespace meanineq {
namespace {

std::string format_shortest(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive and finite, got " + format_shortest(v), v);
}

// (t - 1) / log t evaluated as expm1(u) / u with u = log t, which stays accurate
// near t = 1. The removable singularity is filled by continuity.
double logarithmic_f(double t) {
  const double u = std::log(t);
  if (std::abs(u) < 1e-12) return 1.0 + 0.5 * u;
  return std::expm1(u) / u;
}

double relative(double diff, double scale) { return std::abs(diff) / std::max(std::abs(scale), 1e-300); }

}  // namespace

RepresentingFunction RepresentingFunction::arithmetic() { return {Kind::kArithmetic, "arithmetic", {}, true, true}; }

RepresentingFunction RepresentingFunction::wyd(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("WYD beta must lie in (0,1), got " + format_shortest(beta), beta);
  return {Kind::kWyd, "wyd:" + format_shortest(beta), {beta}, true, true};
}

RepresentingFunction RepresentingFunction::geometric() { return {Kind::kGeometric, "geometric", {}, true, true}; }

RepresentingFunction RepresentingFunction::harmonic() { return {Kind::kHarmonic, "harmonic", {}, true, true}; }

RepresentingFunction RepresentingFunction::logarithmic() { return {Kind::kLogarithmic, "logarithmic", {}, true, true}; }

RepresentingFunction RepresentingFunction::counterexample_g() {
  return {Kind::kCounterexampleG, "counterexample-g", {}, false, false};
}

RepresentingFunction RepresentingFunction::custom(std::string id, ScalarFunction fn, bool claims_concave,
                                                  bool claims_operator_monotone) {
  if (!fn) throw UsageError("custom representing function '" + id + "' has no evaluator");
  RepresentingFunction f{Kind::kCustom, std::move(id), {}, claims_concave, claims_operator_monotone};
  f.custom_ = std::move(fn);
  return f;
}

RepresentingFunction RepresentingFunction::from_id(std::string_view id) {
  if (id == "arithmetic") return arithmetic();
  if (id == "geometric") return geometric();
  if (id == "harmonic") return harmonic();
  if (id == "logarithmic") return logarithmic();
  if (id == "counterexample-g") return counterexample_g();
  if (id.starts_with("wyd:")) {
    const std::string_view num = id.substr(4);
    double beta = 0.0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), beta);
    if (ec != std::errc{} || ptr != num.data() + num.size() || num.empty())
      throw UsageError("malformed WYD parameter in function id '" + std::string(id) + "'");
    if (!(beta > 0.0 && beta < 1.0))
      throw UsageError("WYD beta must lie in (0,1) in function id '" + std::string(id) + "'");
    return wyd(beta);
  }
  throw UsageError("unknown function id '" + std::string(id) + "'");
}

double RepresentingFunction::operator()(double t) const {
  require_positive(t, "representing function argument");
  switch (kind_) {
    case Kind::kArithmetic:
      return (1.0 + t) / 2.0;
    case Kind::kWyd: {
      const double beta = params_[0];
      return (std::pow(t, beta) + std::pow(t, 1.0 - beta)) / 2.0;
    }
    case Kind::kGeometric:
      return std::sqrt(t);
    case Kind::kHarmonic:
      return 2.0 * t / (t + 1.0);
    case Kind::kLogarithmic:
      return logarithmic_f(t);
    case Kind::kCounterexampleG:
      return t <= 1.0 ? (t + 3.0) / 4.0 : (3.0 * t + 1.0) / 4.0;
    case Kind::kCustom:
      return custom_(t);
  }
  return 0.0;
}

std::vector<RepresentingFunction> concave_catalog() {
  return {RepresentingFunction::arithmetic(), RepresentingFunction::wyd(0.25), RepresentingFunction::wyd(0.5),
          RepresentingFunction::geometric(),  RepresentingFunction::harmonic(), RepresentingFunction::logarithmic()};
}

std::vector<std::string> catalog_ids() {
  return {"arithmetic", "wyd:0.25", "geometric", "harmonic", "logarithmic", "counterexample-g"};
}

double eval_f(const RepresentingFunction& f, double t) { return f(t); }

double perspective_num(const RepresentingFunction& f, double x, double t) {
  require_positive(x, "perspective argument x");
  require_positive(t, "perspective argument t");
  return t * f(x / t);
}

double mean_num(const RepresentingFunction& f, double x, double y) {
  require_positive(x, "mean argument x");
  require_positive(y, "mean argument y");
  return y * f(x / y);
}

double function_from_mean(const MeanEvaluator& m, double t) {
  require_positive(t, "mean argument t");
  return m(1.0, t);
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  require_positive(lo, "grid lower bound");
  require_positive(hi, "grid upper bound");
  if (count == 0) return {};
  if (count == 1) return {lo};
  std::vector<double> grid(count);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t k = 0; k < count; ++k)
    grid[k] = std::exp(a + (b - a) * static_cast<double>(k) / static_cast<double>(count - 1));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<double> default_grid() {
  std::vector<double> grid(33);
  for (int k = 0; k < 33; ++k) grid[k] = std::exp2(static_cast<double>(k - 16) / 4.0);
  return grid;
}

bool AxiomReport::all_pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

const AxiomCheck* AxiomReport::find(std::string_view name) const noexcept {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

AxiomReport check_axioms(const RepresentingFunction& f, std::span<const double> grid_in, double tol) {
  if (grid_in.empty()) throw UsageError("check_axioms: grid must not be empty");
  if (!(tol > 0.0)) throw UsageError("check_axioms: tolerance must be positive");
  for (double g : grid_in) require_positive(g, "grid point");

  std::vector<double> grid(grid_in.begin(), grid_in.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  const std::size_t n = grid.size();

  AxiomReport report;
  report.function = f.id();
  report.tol = tol;
  report.grid_size = n;

  auto track = [](AxiomCheck& c, double v, std::vector<double> witness) {
    if (v > c.violation) {
      c.violation = v;
      c.witness = std::move(witness);
    }
  };
  auto m = [&f](double x, double y) { return mean_num(f, x, y); };

  // Mean values on the grid, reused by several axioms.
  std::vector<double> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = m(grid[i], grid[j]);

  AxiomCheck normalization{"normalization", 0.0, true, {}};
  AxiomCheck symmetry{"symmetry", 0.0, true, {}};
  AxiomCheck betweenness{"betweenness", 0.0, true, {}};
  AxiomCheck monotonicity{"monotonicity", 0.0, true, {}};
  AxiomCheck continuity{"continuity", 0.0, true, {}};
  AxiomCheck homogeneity{"homogeneity", 0.0, true, {}};

  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid[i];
    track(normalization, relative(table[i * n + i] - x, x), {x});
    for (std::size_t j = 0; j < n; ++j) {
      const double y = grid[j];
      const double mxy = table[i * n + j];
      track(symmetry, relative(mxy - table[j * n + i], mxy), {x, y});
      if (i != j) {
        const double lo = std::min(x, y);
        const double hi = std::max(x, y);
        track(betweenness, std::max({0.0, lo - mxy, mxy - hi}) / hi, {x, y});
      }
      for (std::size_t i2 = i + 1; i2 < n; ++i2)
        for (std::size_t j2 = j + 1; j2 < n; ++j2)
          track(monotonicity, std::max(0.0, mxy - table[i2 * n + j2]) / mxy, {x, y, grid[i2], grid[j2]});

      // A mean satisfies m(x,y) <= m(x(1+d),y) <= (1+d) m(x,y); a larger jump is a discontinuity.
      constexpr double kStep = 1e-6;
      const double dx = std::abs(m(x * (1.0 + kStep), y) - mxy);
      const double dy = std::abs(m(x, y * (1.0 + kStep)) - mxy);
      track(continuity, std::max(0.0, std::max(dx, dy) - kStep * mxy) / mxy, {x, y});

      for (double c : {0.5, 2.0, 10.0}) track(homogeneity, relative(m(c * x, c * y) - c * mxy, c * mxy), {x, y, c});
    }
  }

  AxiomCheck positive{"f_positive", 0.0, true, {}};
  AxiomCheck increasing{"f_increasing", 0.0, true, {}};
  AxiomCheck normalized{"f_normalized", 0.0, true, {}};
  AxiomCheck functional{"f_functional_equation", 0.0, true, {}};

  const double f1 = f(1.0);
  track(normalized, std::abs(f1 - 1.0), {1.0});
  for (std::size_t i = 0; i < n; ++i) {
    const double t = grid[i];
    const double ft = f(t);
    track(positive, std::max(0.0, -ft), {t});
    if (i + 1 < n) track(increasing, std::max(0.0, ft - f(grid[i + 1])) / std::max(std::abs(ft), 1e-300), {t, grid[i + 1]});
    track(functional, relative(t * f(1.0 / t) - ft, ft), {t});
  }

  for (AxiomCheck* c : {&normalization, &symmetry, &betweenness, &monotonicity, &continuity, &homogeneity, &positive,
                        &increasing, &normalized, &functional}) {
    c->pass = c->violation <= tol;
    report.checks.push_back(std::move(*c));
  }
  return report;
}

ConcavityVerdict concavity_probe(const RepresentingFunction& f, std::span<const double> grid, double tol) {
  if (grid.size() < 2) throw UsageError("concavity_probe: grid needs at least two points");
  ConcavityVerdict verdict;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const double a = std::min(grid[i], grid[j]);
      const double b = std::max(grid[i], grid[j]);
      if (a == b) continue;
      const double defect = (f(a) + f(b)) / 2.0 - f((a + b) / 2.0);
      if (defect > worst) {
        worst = defect;
        if (defect > tol) verdict.witness = std::make_pair(a, b);
      }
    }
  }
  verdict.worst_defect = std::isfinite(worst) ? worst : 0.0;
  verdict.concave = !(verdict.worst_defect > tol);
  if (verdict.concave) verdict.witness.reset();
  return verdict;
}

}  // namespace meanineq
