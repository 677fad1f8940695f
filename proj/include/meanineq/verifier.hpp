#pragma once

// Verification of the expectation inequality E m_f(X,Y) <= m_f(E X, E Y) on
// exact finite probability spaces: scalar, operator (state expectation) and
// random-matrix forms, plus seeded campaigns and a two-point violation search.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "meanineq/matrix.hpp"
#include "meanineq/numeric_means.hpp"
#include "meanineq/operator_means.hpp"
#include "meanineq/rng.hpp"

namespace meanineq {

inline constexpr double kScalarTol = 1e-10;
inline constexpr double kMatrixTol = 1e-8;

enum class Mode { kScalar, kOperator, kRandomMatrix };

/// "num", "op", "rm".
std::string_view mode_name(Mode m) noexcept;
Mode parse_mode(std::string_view s);

struct ScalarAtom {
  double p;
  double x;
  double y;
  friend bool operator==(const ScalarAtom&, const ScalarAtom&) = default;
};

struct MatrixAtom {
  double p;
  SymMatrix x;
  SymMatrix y;
  std::optional<DensityMatrix> rho;
};

/// Finitely many atoms with joint probabilities. Probabilities are
/// non-negative and sum to 1 within 1e-12; values are positive (scalar mode)
/// or positive definite of one common dimension (matrix mode).
class FiniteJointSpace {
 public:
  static FiniteJointSpace scalar(std::vector<ScalarAtom> atoms);
  static FiniteJointSpace matrix(std::vector<MatrixAtom> atoms);

  bool is_scalar() const noexcept { return std::holds_alternative<std::vector<ScalarAtom>>(atoms_); }
  std::size_t size() const noexcept;
  /// 1 in scalar mode.
  std::size_t dim() const noexcept;
  bool has_densities() const noexcept;

  /// Throw UsageError on mode mismatch.
  const std::vector<ScalarAtom>& scalar_atoms() const;
  const std::vector<MatrixAtom>& matrix_atoms() const;

 private:
  explicit FiniteJointSpace(std::variant<std::vector<ScalarAtom>, std::vector<MatrixAtom>> atoms)
      : atoms_(std::move(atoms)) {}

  std::variant<std::vector<ScalarAtom>, std::vector<MatrixAtom>> atoms_;
};

enum class Verdict { kHolds, kViolated, kEquality };

/// violated iff gap < -tol; equality iff |gap| <= tol; holds otherwise.
Verdict classify(double gap, double tol) noexcept;
std::string_view verdict_name(Verdict v) noexcept;
Verdict parse_verdict(std::string_view s);

struct InequalityReport {
  double lhs = 0.0;  // E of the mean
  double rhs = 0.0;  // mean of the expectations
  double gap = 0.0;  // rhs - lhs
  double tol = 0.0;
  Verdict verdict = Verdict::kEquality;
  std::string function;
  Mode mode = Mode::kScalar;
  std::size_t dims = 1;
  std::size_t atoms = 0;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const InequalityReport&, const InequalityReport&) = default;
};

enum class Component { kX, kY };

/// Exact weighted sum of X or Y over the atoms of a scalar space.
double expectation_scalar(const FiniteJointSpace& space, Component which);
/// Exact weighted sum of m_f(x, y) over the atoms of a scalar space.
double expectation_scalar(const FiniteJointSpace& space, const RepresentingFunction& mean_of);

InequalityReport verify_numeric(const FiniteJointSpace& space, const RepresentingFunction& f, double tol = kScalarTol);

/// Two atoms with probabilities (p, 1-p), X = (x1, x2), Y = 1. Its report gap
/// is f(p x1 + (1-p) x2) - p f(x1) - (1-p) f(x2).
FiniteJointSpace construct_counterexample(const RepresentingFunction& f, double x1, double x2, double p);

/// lhs = Tr(rho m_f(A,B)), rhs = m_f(Tr rho A, Tr rho B).
InequalityReport verify_operator(const DensityMatrix& rho, const SymMatrix& a, const SymMatrix& b,
                                 const OperatorMeanSpec& spec, double tol = kMatrixTol);

/// lhs = sum_w P(w) Tr(rho(w) m_f(X(w),Y(w))), rhs = m_f(sum P Tr rho X, sum P Tr rho Y).
InequalityReport verify_random_matrix(const FiniteJointSpace& space, const OperatorMeanSpec& spec,
                                      double tol = kMatrixTol);

// ---------------------------------------------------------------------------
// Instance samplers

struct SizeRange {
  std::size_t min = 1;
  std::size_t max = 1;
  friend bool operator==(const SizeRange&, const SizeRange&) = default;
};

/// Atom count uniform in `atoms`, Dirichlet(1) probabilities, values log-uniform on [1/16, 16].
FiniteJointSpace sample_scalar_space(CounterRng& rng, SizeRange atoms);

struct OperatorInstance {
  DensityMatrix rho;
  SymMatrix a;
  SymMatrix b;
};

/// Random state and two well-conditioned SPD observables of dimension n.
OperatorInstance sample_operator_instance(std::size_t n, CounterRng& rng);

/// Random-matrix space: dimension uniform in `dims`, atom count in `atoms`, each
/// atom carrying its own density and observables.
FiniteJointSpace sample_matrix_space(CounterRng& rng, SizeRange dims, SizeRange atoms);

// ---------------------------------------------------------------------------
// Campaigns

struct CampaignConfig {
  Mode mode = Mode::kScalar;
  std::vector<std::string> functions;
  std::size_t trials = 0;  // instances; every function is verified on each instance
  std::optional<SizeRange> dims;
  std::optional<SizeRange> atoms;
  std::optional<double> tol;
  std::uint64_t seed = 0;
  unsigned threads = 1;  // does not affect results

  double effective_tol() const noexcept;
  SizeRange effective_dims() const noexcept;
  SizeRange effective_atoms() const noexcept;
  /// Throws UsageError on any invalid field (unknown id, empty list, bad range).
  void validate() const;
};

/// Flat `key = value` document (`key: value` also accepted, `#` comments).
/// Keys: mode, functions, trials, dims, atoms, tol, seed, threads.
CampaignConfig parse_campaign_config(std::istream& in, const std::string& source_name);
CampaignConfig load_campaign_config(const std::string& path);

struct FunctionSummary {
  std::string function;
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::optional<double> worst_gap;
  double max_abs_gap = 0.0;
};

struct WorstCase {
  std::string function;
  std::size_t trial = 0;
  InequalityReport report;
  FiniteJointSpace space;
};

struct CampaignSummary {
  Mode mode = Mode::kScalar;
  std::size_t trials = 0;   // instances
  std::size_t reports = 0;  // instances x functions
  std::size_t violations = 0;
  std::optional<double> worst_gap;  // min gap over all reports; absent when no reports
  std::optional<WorstCase> worst_case;  // present only when violations > 0
  std::vector<FunctionSummary> per_function;
  double tol = 0.0;
  std::uint64_t seed = 0;
  SizeRange dims;
  SizeRange atoms;
};

/// Trial i draws its instance from rng.split(i), so the summary is identical
/// for any thread count.
CampaignSummary run_campaign(const CampaignConfig& config, const CounterRng& rng);

/// Random restart over two-point spaces (x1, x2 log-uniform on [1/16, 16],
/// p uniform on (0,1)); returns the report with the most negative gap.
InequalityReport search_violation(const RepresentingFunction& f, CounterRng& rng, std::size_t budget,
                                  double tol = kScalarTol);

// ---------------------------------------------------------------------------
// Space files

/// One `p x y` atom per line; blank lines and `#` comments ignored.
FiniteJointSpace read_scalar_space(std::istream& in, const std::string& source_name);
FiniteJointSpace load_scalar_space(const std::string& path);
void write_scalar_space(std::ostream& out, const FiniteJointSpace& space);

/// One `p x_path y_path [rho_path]` atom per line; relative paths resolve
/// against the space file's directory.
FiniteJointSpace load_matrix_space(const std::string& path);

}  // namespace meanineq
