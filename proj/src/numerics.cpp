#include "liecat/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace liecat {

void ToleranceConfig::validate() const {
  if (!(rank_rel_tol > 0.0) || !std::isfinite(rank_rel_tol))
    throw Error(ErrorKind::InvalidSpec, "rank_rel_tol must be finite and > 0");
  if (!(fd_step > 0.0) || !std::isfinite(fd_step))
    throw Error(ErrorKind::InvalidSpec, "fd_step must be finite and > 0");
  if (ode_steps <= 0) throw Error(ErrorKind::InvalidSpec, "ode_steps must be > 0");
}

namespace numerics {

bool anywhere(const Vector&) { return true; }

void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) throw Error(ErrorKind::NonFinite, std::string(what) + " contains NaN or inf");
}

namespace {

Vector singular_values(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues();
}

int count_above(const Vector& sv, double rel_tol) {
  if (sv.size() == 0) return 0;
  const double largest = sv.maxCoeff();
  if (largest <= 0.0) return 0;
  return static_cast<int>((sv.array() > rel_tol * largest).count());
}

}  // namespace

int numerical_rank(const Matrix& m, const ToleranceConfig& tol) {
  require_finite(m, "matrix");
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return count_above(singular_values(m), tol.rank_rel_tol);
}

Matrix nullspace_basis(const Matrix& m, const ToleranceConfig& tol) {
  require_finite(m, "matrix");
  const Eigen::Index n = m.cols();
  if (m.rows() == 0) return Matrix::Identity(n, n);

  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const int rank = count_above(svd.singularValues(), tol.rank_rel_tol);
  const Eigen::Index k = n - rank;
  if (k == 0) return Matrix(n, 0);

  const Matrix raw = svd.matrixV().rightCols(k);
  const Matrix projector = raw * raw.transpose();

  Matrix basis(n, k);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (Eigen::Index col = 0; col < k; ++col) {
    Matrix residual = projector;
    if (col > 0) {
      const auto chosen = basis.leftCols(col);
      residual -= chosen * (chosen.transpose() * projector);
    }
    const Vector norms = residual.colwise().norm();
    const double best = norms.maxCoeff();
    Eigen::Index pick = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!used[static_cast<std::size_t>(i)] && norms(i) >= best - 1e-6) {
        pick = i;
        break;
      }
    }
    used[static_cast<std::size_t>(pick)] = true;
    basis.col(col) = residual.col(pick) / norms(pick);
  }
  return basis;
}

Matrix fd_jacobian(const VectorMap& f, const Vector& x, const ToleranceConfig& tol,
                   const DomainPredicate& domain) {
  require_finite(x, "evaluation point");
  const double h = tol.fd_step;
  const Vector fx = f(x);
  require_finite(fx, "function value");

  Matrix jac(fx.size(), x.size());
  Vector probe = x;
  auto eval_at = [&](Eigen::Index j, double offset, Vector& out) {
    probe(j) = x(j) + offset;
    const bool ok = domain(probe);
    if (ok) out = f(probe);
    probe(j) = x(j);
    return ok;
  };

  Vector plus, minus, plus2, minus2;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const bool has_plus = eval_at(j, h, plus);
    const bool has_minus = eval_at(j, -h, minus);
    if (has_plus && has_minus) {
      jac.col(j) = (plus - minus) / (2.0 * h);
    } else if (has_plus) {
      if (eval_at(j, 2.0 * h, plus2))
        jac.col(j) = (-3.0 * fx + 4.0 * plus - plus2) / (2.0 * h);
      else
        jac.col(j) = (plus - fx) / h;
    } else if (has_minus) {
      if (eval_at(j, -2.0 * h, minus2))
        jac.col(j) = (3.0 * fx - 4.0 * minus + minus2) / (2.0 * h);
      else
        jac.col(j) = (fx - minus) / h;
    } else {
      throw Error(ErrorKind::DomainExit,
                  "no finite-difference stencil fits the domain in coordinate " + std::to_string(j));
    }
  }
  require_finite(jac, "Jacobian");
  return jac;
}

IntegrationResult rk4_integrate(const VectorMap& field, const Vector& x0, double t,
                                const ToleranceConfig& tol, const DomainPredicate& validity) {
  require_finite(x0, "initial state");
  if (!std::isfinite(t)) throw Error(ErrorKind::NonFinite, "integration time is not finite");

  IntegrationResult result{x0, 0.0, false};
  const auto steps = static_cast<long>(std::ceil(std::abs(t) * tol.ode_steps));
  if (steps == 0) return result;
  const double dt = t / static_cast<double>(steps);

  Vector x = x0;
  for (long i = 0; i < steps; ++i) {
    const Vector k1 = field(x);
    const Vector x2 = x + 0.5 * dt * k1;
    if (!validity(x2)) break;
    const Vector k2 = field(x2);
    const Vector x3 = x + 0.5 * dt * k2;
    if (!validity(x3)) break;
    const Vector k3 = field(x3);
    const Vector x4 = x + dt * k3;
    if (!validity(x4)) break;
    const Vector k4 = field(x4);
    Vector next = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    require_finite(next, "integrated state");
    if (!validity(next)) break;
    x = std::move(next);
    result.t_reached = static_cast<double>(i + 1) * dt;
    if (i + 1 == steps) {
      result.state = x;
      result.t_reached = t;
      return result;
    }
  }
  result.state = x;
  result.exited = true;
  return result;
}

Vector rk4_flow(const VectorMap& field, const Vector& x0, double t, const ToleranceConfig& tol,
                const DomainPredicate& validity) {
  auto result = rk4_integrate(field, x0, t, tol, validity);
  if (result.exited)
    throw DomainExitError(result.t_reached,
                          "trajectory left the domain after t=" + std::to_string(result.t_reached));
  return result.state;
}

Matrix matrix_exp_oracle(const Matrix& a) {
  require_finite(a, "matrix");
  if (a.rows() != a.cols()) throw Error(ErrorKind::BadDimension, "matrix exponential needs a square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return Matrix(0, 0);

  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Matrix scaled = a / std::ldexp(1.0, squarings);

  // ||scaled|| <= 1/2, so 20 terms put the truncation error far below 1e-16.
  Matrix sum = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k <= 20; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

}  // namespace numerics
}  // namespace liecat
