#pragma once

#include <Eigen/Dense>

#include <functional>

#include "liecat/errors.hpp"

namespace liecat {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

using VectorMap = std::function<Vector(const Vector&)>;
using DomainPredicate = std::function<bool(const Vector&)>;

struct ToleranceConfig {
  double rank_rel_tol = 1e-8;
  double fd_step = 1e-6;
  int ode_steps = 1000;

  /// Throws InvalidSpec unless every field is strictly positive.
  void validate() const;
};

namespace numerics {

/// Predicate accepting every point.
bool anywhere(const Vector&);

/// Throws NonFinite if any entry is NaN or infinite.
void require_finite(const Matrix& m, const char* what);

/// Number of singular values above rank_rel_tol times the largest one.
int numerical_rank(const Matrix& m, const ToleranceConfig& tol = {});

/// Orthonormal basis of the numerical kernel, one column per direction.
///
/// The basis is canonical: it is obtained by Gram-Schmidt on the kernel
/// projections of the coordinate axes, picking at each step the axis with
/// the largest remaining component (lowest index among near ties). Kernels
/// spanned by coordinate axes therefore come back as those axes, in order,
/// with positive sign. A matrix with zero rows has the identity as kernel
/// basis.
Matrix nullspace_basis(const Matrix& m, const ToleranceConfig& tol = {});

/// Finite-difference Jacobian of `f` at `x`.
///
/// Central differences with step fd_step; when a probe point fails `domain`
/// the column falls back to a second-order one-sided stencil (forward, then
/// backward), and to a first-order one if only one extra probe is valid.
/// Throws DomainExit if no stencil fits for some coordinate.
Matrix fd_jacobian(const VectorMap& f, const Vector& x, const ToleranceConfig& tol = {},
                   const DomainPredicate& domain = anywhere);

struct IntegrationResult {
  Vector state;
  double t_reached = 0.0;
  bool exited = false;
};

/// Fixed-step classical RK4 over ceil(|t| * ode_steps) steps. Every stage
/// point and step endpoint must satisfy `validity`; on the first failure the
/// integration stops and reports the start of the offending step.
IntegrationResult rk4_integrate(const VectorMap& field, const Vector& x0, double t,
                                const ToleranceConfig& tol = {},
                                const DomainPredicate& validity = anywhere);

/// Same as rk4_integrate but throws DomainExitError on exit.
Vector rk4_flow(const VectorMap& field, const Vector& x0, double t,
                const ToleranceConfig& tol = {}, const DomainPredicate& validity = anywhere);

/// Matrix exponential by scaling and squaring with a truncated Taylor series.
/// Used as an independent reference for the flow-based exponential.
Matrix matrix_exp_oracle(const Matrix& a);

}  // namespace numerics
}  // namespace liecat
