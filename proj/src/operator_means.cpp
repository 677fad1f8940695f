#include "meanineq/operator_means.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "meanineq/errors.hpp"
#include "meanineq/kernels.hpp"

namespace meanineq {
namespace {

constexpr double kCommuteTol = 1e-10;
constexpr double kPartitionTol = 1e-10;
// Shift for the simultaneous diagonalization A + t B; any value avoiding
// accidental eigenvalue collisions works.
constexpr double kGenericShift = 0.6180339887498949;

SpectralDecomposition checked_pd_eigen(const SymMatrix& m, const char* name) {
  SpectralDecomposition eig = sym_eigen(m);
  const double lo = eig.min_eigenvalue();
  if (!(lo > kDefaultPdFloor))
    throw NotPositiveDefinite(std::string(name) + " is not positive definite: min eigenvalue " + std::to_string(lo), lo);
  const double cond = eig.max_eigenvalue() / lo;
  if (cond > kMaxConditionNumber)
    throw DomainError(std::string(name) + " condition number " + std::to_string(cond) + " exceeds 1e8", cond);
  return eig;
}

void require_same_dim(const SymMatrix& a, const SymMatrix& b, const char* op) {
  if (a.dim() != b.dim())
    throw UsageError(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()));
}

void require_pd_compression(const SymMatrix& m, const char* name) {
  const double lo = min_eigenvalue(m);
  if (!(lo > kDefaultPdFloor))
    throw DomainError(std::string("congruence destroys positive definiteness of ") + name + ": min eigenvalue " +
                          std::to_string(lo),
                      lo);
}

// Relative defect and Loewner gap between the two sides.
void finish_report(TransformerReport& r, double tol) {
  const SymMatrix diff = r.rhs - r.lhs;
  r.min_eig_gap = min_eigenvalue(diff);
  r.relative_defect = frobenius(diff) / std::max(frobenius(r.rhs), 1e-300);
  r.holds = r.min_eig_gap >= -tol;
}

}  // namespace

OperatorMeanSpec::OperatorMeanSpec(RepresentingFunction f) : f_(std::move(f)) {
  if (!f_.claims_operator_monotone())
    throw UsageError("function '" + f_.id() + "' is not operator monotone and cannot define an operator mean");
}

std::vector<OperatorMeanSpec> operator_catalog() {
  std::vector<OperatorMeanSpec> out;
  for (auto& f : concave_catalog()) out.emplace_back(std::move(f));
  return out;
}

SymMatrix operator_perspective(const ScalarFunction& f, const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a, b, "operator_perspective");
  const SpectralDecomposition eig_a = checked_pd_eigen(a, "A");
  checked_pd_eigen(b, "B");

  const SymMatrix root = apply_function(eig_a, [](double x) { return std::sqrt(x); });
  const SymMatrix inv_root = apply_function(eig_a, [](double x) { return 1.0 / std::sqrt(x); });
  const SymMatrix inner = congruence(inv_root, b);
  const SymMatrix f_inner = apply_function(inner, f, 0.0, 1e-12);
  return congruence(root, f_inner);
}

SymMatrix operator_perspective(const RepresentingFunction& f, const SymMatrix& a, const SymMatrix& b) {
  return operator_perspective(ScalarFunction([&f](double t) { return f(t); }), a, b);
}

SymMatrix operator_mean(const OperatorMeanSpec& spec, const SymMatrix& a, const SymMatrix& b) {
  return operator_perspective(spec.function(), a, b);
}

SymMatrix commuting_perspective(const RepresentingFunction& f, const SymMatrix& a, const SymMatrix& b, double tol) {
  require_same_dim(a, b, "commuting_perspective");
  const double na = frobenius(a);
  const double nb = frobenius(b);
  const double commutator = frobenius(matmul(a, b) - matmul(b, a));
  if (commutator > tol * na * nb)
    throw PreconditionError("inputs do not commute: ||AB - BA||_F = " + std::to_string(commutator), commutator);

  const double shift = nb > 0.0 ? kGenericShift * na / nb : 0.0;
  const SpectralDecomposition joint = sym_eigen(a + shift * b);
  const SymMatrix da = congruence(joint.eigenvectors, a);
  const SymMatrix db = congruence(joint.eigenvectors, b);

  SpectralDecomposition result{{}, joint.eigenvectors, 0};
  result.eigenvalues.resize(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!(da(i, i) > kDefaultPdFloor))
      throw NotPositiveDefinite("A is not positive definite: eigenvalue " + std::to_string(da(i, i)), da(i, i));
    if (!(db(i, i) > kDefaultPdFloor))
      throw NotPositiveDefinite("B is not positive definite: eigenvalue " + std::to_string(db(i, i)), db(i, i));
    result.eigenvalues[i] = perspective_num(f, db(i, i), da(i, i));
  }
  return result.reconstruct();
}

SymMatrix commuting_oracle(const OperatorMeanSpec& spec, const SymMatrix& a, const SymMatrix& b, double tol) {
  return commuting_perspective(spec.function(), a, b, tol);
}

double expectation_state(const DensityMatrix& rho, const SymMatrix& a) {
  require_same_dim(rho.matrix(), a, "expectation_state");
  // Both factors are symmetric, so Tr(rho A) is the entrywise inner product.
  return simd::dot(rho.matrix().data(), a.data());
}

TransformerReport check_transformer(const OperatorMeanSpec& spec, const SymMatrix& a, const SymMatrix& b,
                                    const Matrix& c, double tol) {
  require_same_dim(a, b, "check_transformer");
  if (c.rows() != a.dim())
    throw UsageError("check_transformer: C has " + std::to_string(c.rows()) + " rows, expected " +
                     std::to_string(a.dim()));
  const SymMatrix ca = congruence(c, a);
  const SymMatrix cb = congruence(c, b);
  require_pd_compression(ca, "A");
  require_pd_compression(cb, "B");

  TransformerReport r;
  r.lhs = congruence(c, operator_mean(spec, a, b));
  r.rhs = operator_mean(spec, ca, cb);
  finish_report(r, tol);

  bool invertible = false;
  if (c.rows() == c.cols()) {
    const SpectralDecomposition gram = sym_eigen(congruence(c, SymMatrix::identity(c.rows())));
    invertible = gram.min_eigenvalue() > 1e-20 * gram.max_eigenvalue() && gram.max_eigenvalue() > 0.0;
  }
  r.equality_case = invertible && r.relative_defect <= tol;
  return r;
}

TransformerReport check_jensen_sum(const OperatorMeanSpec& spec, const std::vector<JensenTerm>& terms, double tol) {
  if (terms.empty()) throw UsageError("check_jensen_sum: no terms");
  const std::size_t k = terms.front().c.cols();
  SymMatrix partition = SymMatrix::zero(k);
  SymMatrix sum_a = SymMatrix::zero(k);
  SymMatrix sum_b = SymMatrix::zero(k);
  SymMatrix lhs = SymMatrix::zero(k);
  for (const auto& t : terms) {
    if (t.c.cols() != k) throw UsageError("check_jensen_sum: factors have differing column counts");
    require_same_dim(t.a, t.b, "check_jensen_sum");
    partition = partition + congruence(t.c, SymMatrix::identity(t.c.rows()));
  }
  const double residual = frobenius(partition - SymMatrix::identity(k));
  if (residual > kPartitionTol)
    throw PreconditionError("check_jensen_sum: sum c_i^T c_i differs from I by " + std::to_string(residual), residual);

  for (const auto& t : terms) {
    sum_a = sum_a + congruence(t.c, t.a);
    sum_b = sum_b + congruence(t.c, t.b);
    lhs = lhs + congruence(t.c, operator_mean(spec, t.a, t.b));
  }
  require_pd_compression(sum_a, "sum c^T A c");
  require_pd_compression(sum_b, "sum c^T B c");

  TransformerReport r;
  r.lhs = lhs;
  r.rhs = operator_mean(spec, sum_a, sum_b);
  finish_report(r, tol);
  r.equality_case = r.relative_defect <= tol;
  return r;
}

TraceReport trace_perspective_check(const RepresentingFunction& f, const SymMatrix& a, const SymMatrix& b,
                                    double tol) {
  TraceReport r;
  r.trace_of_perspective = trace(commuting_perspective(f, a, b, kCommuteTol));
  r.perspective_of_traces = perspective_num(f, trace(b), trace(a));
  r.concave_orientation = f.claims_concave();
  r.gap = r.concave_orientation ? r.perspective_of_traces - r.trace_of_perspective
                                : r.trace_of_perspective - r.perspective_of_traces;
  r.holds = r.gap >= -tol;
  return r;
}

}  // namespace meanineq
