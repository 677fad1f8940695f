#pragma once

// Non-commutative perspectives and Kubo-Ando operator means, state
// expectations, and Loewner-order checks of the transformer and Jensen-sum
// inequalities (concave orientation).

#include <string>
#include <vector>

#include "meanineq/matrix.hpp"
#include "meanineq/numeric_means.hpp"

namespace meanineq {

/// Inputs with condition number above this are rejected from perspective paths.
inline constexpr double kMaxConditionNumber = 1e8;

/// A representing function accepted as a Kubo-Ando mean generator.
class OperatorMeanSpec {
 public:
  /// Throws UsageError unless f claims operator monotonicity.
  explicit OperatorMeanSpec(RepresentingFunction f);
  static OperatorMeanSpec from_id(std::string_view id) { return OperatorMeanSpec(RepresentingFunction::from_id(id)); }

  const RepresentingFunction& function() const noexcept { return f_; }
  const std::string& id() const noexcept { return f_.id(); }

 private:
  RepresentingFunction f_;
};

/// The six operator-mean catalog specs, WYD at beta = 0.25 and 0.5.
std::vector<OperatorMeanSpec> operator_catalog();

/// A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2}. Throws NotPositiveDefinite for
/// non-PD input and DomainError when cond(A) or cond(B) exceeds 1e8.
SymMatrix operator_perspective(const ScalarFunction& f, const SymMatrix& a, const SymMatrix& b);
SymMatrix operator_perspective(const RepresentingFunction& f, const SymMatrix& a, const SymMatrix& b);

/// Kubo-Ando mean m_f(A, B).
SymMatrix operator_mean(const OperatorMeanSpec& spec, const SymMatrix& a, const SymMatrix& b);

/// Perspective of commuting A, B computed in a shared eigenbasis with the
/// scalar perspective a_i f(b_i / a_i) per eigenvalue pair. Throws
/// PreconditionError when ||AB - BA||_F > tol ||A||_F ||B||_F.
SymMatrix commuting_perspective(const RepresentingFunction& f, const SymMatrix& a, const SymMatrix& b, double tol);

/// Independent oracle for operator_mean on commuting inputs.
SymMatrix commuting_oracle(const OperatorMeanSpec& spec, const SymMatrix& a, const SymMatrix& b, double tol);

/// E_rho(A) = Tr(rho A).
double expectation_state(const DensityMatrix& rho, const SymMatrix& a);

struct TransformerReport {
  SymMatrix lhs;
  SymMatrix rhs;
  double min_eig_gap = 0.0;     // lambda_min(rhs - lhs)
  double relative_defect = 0.0;  // ||lhs - rhs||_F / ||rhs||_F
  bool holds = false;
  bool equality_case = false;
};

/// C^T m(A,B) C <= m(C^T A C, C^T B C). C is n x k. equality_case is set when
/// C is square and invertible and the relative defect is within tol. Throws
/// DomainError if a compressed matrix is not positive definite.
TransformerReport check_transformer(const OperatorMeanSpec& spec, const SymMatrix& a, const SymMatrix& b,
                                    const Matrix& c, double tol);

struct JensenTerm {
  Matrix c;  // n x k
  SymMatrix a;
  SymMatrix b;
};

/// sum c_i^T m(A_i,B_i) c_i <= m(sum c_i^T A_i c_i, sum c_i^T B_i c_i) given
/// sum c_i^T c_i = I (checked to 1e-10 Frobenius, else PreconditionError).
TransformerReport check_jensen_sum(const OperatorMeanSpec& spec, const std::vector<JensenTerm>& terms, double tol);

struct TraceReport {
  double trace_of_perspective = 0.0;  // Tr P_f(A, B)
  double perspective_of_traces = 0.0;  // P_f(Tr A, Tr B)
  double gap = 0.0;  // oriented so that gap >= -tol means the inequality holds
  bool concave_orientation = true;
  bool holds = false;
};

/// For concave f: Tr P_f(A,B) <= P_f(Tr A, Tr B). For f not claiming
/// concavity the convex orientation P_f(Tr A, Tr B) <= Tr P_f(A,B) is checked.
TraceReport trace_perspective_check(const RepresentingFunction& f, const SymMatrix& a, const SymMatrix& b, double tol);

}  // namespace meanineq
