#pragma once

// Scalar representing functions, perspectives and the bivariate means they
// generate, plus grid probes for the mean axioms and for concavity.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace meanineq {

using ScalarFunction = std::function<double(double)>;
using MeanEvaluator = std::function<double(double, double)>;

/// A normalized, symmetric, increasing function f on (0, inf). Every mean in
/// the library is m_f(x, y) = y * f(x / y).
class RepresentingFunction {
 public:
  enum class Kind { kArithmetic, kWyd, kGeometric, kHarmonic, kLogarithmic, kCounterexampleG, kCustom };

  static RepresentingFunction arithmetic();
  /// Wigner-Yanase-Dyson family (t^b + t^(1-b)) / 2. Throws DomainError unless 0 < beta < 1.
  static RepresentingFunction wyd(double beta);
  static RepresentingFunction geometric();
  static RepresentingFunction harmonic();
  static RepresentingFunction logarithmic();
  /// Piecewise-affine (t+3)/4 on (0,1], (3t+1)/4 on [1,inf): normalized, symmetric, convex.
  static RepresentingFunction counterexample_g();
  /// User-supplied function; no invariants are assumed, check_axioms() reports on them.
  static RepresentingFunction custom(std::string id, ScalarFunction fn, bool claims_concave,
                                     bool claims_operator_monotone);

  /// Parses `arithmetic`, `wyd:<beta>`, `geometric`, `harmonic`, `logarithmic`,
  /// `counterexample-g`. Throws UsageError on anything else.
  static RepresentingFunction from_id(std::string_view id);

  /// f(t). Throws DomainError for t <= 0 or non-finite t.
  double operator()(double t) const;

  Kind kind() const noexcept { return kind_; }
  const std::string& id() const noexcept { return id_; }
  const std::vector<double>& params() const noexcept { return params_; }
  bool claims_concave() const noexcept { return claims_concave_; }
  bool claims_operator_monotone() const noexcept { return claims_operator_monotone_; }

 private:
  RepresentingFunction(Kind kind, std::string id, std::vector<double> params, bool concave, bool op_monotone)
      : kind_(kind), id_(std::move(id)), params_(std::move(params)), claims_concave_(concave),
        claims_operator_monotone_(op_monotone) {}

  Kind kind_;
  std::string id_;
  std::vector<double> params_;
  ScalarFunction custom_;
  bool claims_concave_;
  bool claims_operator_monotone_;
};

/// The six named catalog entries, with WYD at beta = 0.25 and 0.5.
std::vector<RepresentingFunction> concave_catalog();

/// Ids accepted by from_id() with a placeholder beta for WYD.
std::vector<std::string> catalog_ids();

double eval_f(const RepresentingFunction& f, double t);

/// t * f(x / t).
double perspective_num(const RepresentingFunction& f, double x, double t);

/// y * f(x / y).
double mean_num(const RepresentingFunction& f, double x, double y);

/// m(1, t): recovers the representing function of a mean.
double function_from_mean(const MeanEvaluator& m, double t);

/// 33 log-spaced points on [1/16, 16], closed under t -> 1/t up to rounding.
std::vector<double> default_grid();

/// Log-spaced points on [lo, hi].
std::vector<double> log_grid(double lo, double hi, std::size_t count);

struct AxiomCheck {
  std::string name;
  double violation = 0.0;  // worst relative violation over the grid
  bool pass = true;
  std::vector<double> witness;  // inputs that produced the worst violation
};

struct AxiomReport {
  std::string function;
  double tol = 0.0;
  std::size_t grid_size = 0;
  std::vector<AxiomCheck> checks;

  bool all_pass() const noexcept;
  const AxiomCheck* find(std::string_view name) const noexcept;
};

/// Probes the mean axioms (normalization, symmetry, betweenness, monotonicity,
/// continuity, homogeneity) on all grid pairs and the representing-function
/// conditions (positivity, increasing, f(1) = 1, t f(1/t) = f(t)) on the grid.
AxiomReport check_axioms(const RepresentingFunction& f, std::span<const double> grid, double tol);

struct ConcavityVerdict {
  bool concave = true;
  double worst_defect = 0.0;  // max over pairs of (f(a)+f(b))/2 - f((a+b)/2)
  std::optional<std::pair<double, double>> witness;
};

/// Midpoint test over every grid pair. Throws UsageError for fewer than two points.
ConcavityVerdict concavity_probe(const RepresentingFunction& f, std::span<const double> grid, double tol);

}  // namespace meanineq
