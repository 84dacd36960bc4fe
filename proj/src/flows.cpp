#include "liecat/flows.hpp"

#include <cmath>
#include <random>

#include "liecat/spec_file.hpp"

namespace liecat {
namespace {

enum class DomainMode { Morphisms, Chart };

bool in_domain(const Realization& c, const Vector& g, DomainMode mode) {
  return mode == DomainMode::Morphisms ? c.is_valid_morphism(g) : c.in_chart(g);
}

Matrix frame_at(const Realization& c, const Vector& object, Side side, const ToleranceConfig& tol) {
  const Vector u = c.unit_coords(object);
  return numerics::nullspace_basis(side == Side::Left ? target_jacobian(c, u, tol) : source_jacobian(c, u, tol),
                                   tol);
}

void check_section(const Realization& c, const SectionSpec& alpha) {
  if (!alpha.coeffs.allFinite()) throw Error(ErrorKind::NonFinite, "section coefficients are not finite");
  if (alpha.mode == SectionSpec::Mode::MonoidVector && !c.is_monoid())
    throw Error(ErrorKind::Unsupported, "monoid-vector sections need a monoid family");
  if (alpha.coeffs.size() != c.delta())
    throw Error(ErrorKind::DimensionMismatch, "section needs " + std::to_string(c.delta()) + " coefficients");
}

// Invariant field at g without validating g. For monoids the translations
// are affine, so the field is evaluated exactly.
Vector field_at(const Realization& c, const Vector& alpha, const Vector& g, Side side, DomainMode mode,
                const ToleranceConfig& tol) {
  if (const auto m = c.as_monoid()) {
    return side == Side::Left ? Vector(monoid::left_translation(*m, g) * alpha)
                              : Vector(monoid::right_translation(*m, g) * alpha);
  }
  const Vector object = side == Side::Left ? c.source_coords(g) : c.target_coords(g);
  const Vector u = c.unit_coords(object);
  const Vector direction = frame_at(c, object, side, tol) * alpha;

  const VectorMap translate = [&](const Vector& eps) -> Vector {
    const Vector moved = u + eps(0) * direction;
    return side == Side::Left ? c.compose_coords(g, moved) : c.compose_coords(moved, g);
  };
  const DomainPredicate domain = [&](const Vector& eps) { return in_domain(c, u + eps(0) * direction, mode); };
  return numerics::fd_jacobian(translate, Vector::Zero(1), tol, domain).col(0);
}

FlowResult integrate(const Realization& c, const Vector& alpha, const Vector& g, double t, Side side,
                     DomainMode mode, const ToleranceConfig& tol) {
  const VectorMap field = [&](const Vector& x) { return field_at(c, alpha, x, side, mode, tol); };
  const DomainPredicate domain = [&](const Vector& x) { return in_domain(c, x, mode); };
  const auto result = numerics::rk4_integrate(field, g, t, tol, domain);
  return FlowResult{MorphismPoint{result.state}, result.t_reached, result.exited};
}

}  // namespace

Vector to_ambient(const Realization& c, const TangentAtUnit& v, Side side, const ToleranceConfig& tol) {
  require_valid(c, v.base);
  const Matrix frame = frame_at(c, v.base.coords, side, tol);
  if (v.vector.size() != frame.cols())
    throw Error(ErrorKind::DimensionMismatch, "tangent vector does not match the algebroid rank");
  return frame * v.vector;
}

Vector invariant_eval(const Realization& c, const SectionSpec& alpha, const MorphismPoint& g, Side side,
                      const ToleranceConfig& tol) {
  require_valid(c, g);
  check_section(c, alpha);
  return field_at(c, alpha.coeffs, g.coords, side, DomainMode::Morphisms, tol);
}

Vector left_invariant_eval(const Realization& c, const SectionSpec& alpha, const MorphismPoint& g,
                           const ToleranceConfig& tol) {
  return invariant_eval(c, alpha, g, Side::Left, tol);
}

FlowResult flow_invariant(const Realization& c, const SectionSpec& alpha, const MorphismPoint& g, double t, Side side,
                          const ToleranceConfig& tol) {
  require_valid(c, g);
  check_section(c, alpha);
  if (!std::isfinite(t)) throw Error(ErrorKind::NonFinite, "flow time is not finite");
  return integrate(c, alpha.coeffs, g.coords, t, side, DomainMode::Morphisms, tol);
}

FlowResult flow_left_invariant(const Realization& c, const SectionSpec& alpha, const MorphismPoint& g, double t,
                               const ToleranceConfig& tol) {
  return flow_invariant(c, alpha, g, t, Side::Left, tol);
}

MorphismPoint exp_monoid(const Realization& m, const Vector& v, const ToleranceConfig& tol) {
  const auto mon = m.as_monoid();
  if (!mon) throw Error(ErrorKind::Unsupported, "the exponential map needs a monoid family");
  if (v.size() != m.dim_morphisms()) throw Error(ErrorKind::DimensionMismatch, "vector does not match the monoid");
  if (!v.allFinite()) throw Error(ErrorKind::NonFinite, "vector is not finite");

  const Vector e = monoid::identity(*mon);
  if (!m.is_valid_morphism(e + tol.fd_step * v))
    throw Error(ErrorKind::OutwardVector, "vector points out of the monoid at its unit");
  const FlowResult flow = integrate(m, v, e, 1.0, Side::Left, DomainMode::Morphisms, tol);
  if (flow.exited)
    throw Error(ErrorKind::OutwardVector, "flow left the monoid at t=" + std::to_string(flow.t_reached));
  return flow.endpoint;
}

Vector bracket_at_unit(const Realization& c, const ObjectPoint& x, const SectionSpec& alpha, const SectionSpec& beta,
                       Side side, const ToleranceConfig& tol) {
  const MorphismPoint u = unit(c, x);
  check_section(c, alpha);
  check_section(c, beta);

  auto flow = [&](const Vector& coeffs, const Vector& from, double t) {
    const FlowResult r = integrate(c, coeffs, from, t, side, DomainMode::Chart, tol);
    if (r.exited) throw DomainExitError(r.t_reached, "bracket flow left the chart");
    return r.endpoint.coords;
  };
  // phi^b_{-h} phi^a_{-h} phi^b_h phi^a_h (u) = u + h^2 [a, b] + O(h^3)
  auto commutator = [&](double h) -> Vector {
    Vector p = flow(alpha.coeffs, u.coords, h);
    p = flow(beta.coeffs, p, h);
    p = flow(alpha.coeffs, p, -h);
    p = flow(beta.coeffs, p, -h);
    return (p - u.coords) / (h * h);
  };
  constexpr double h = 1e-3;
  const Vector bracket = 2.0 * commutator(0.5 * h) - commutator(h);
  numerics::require_finite(bracket, "bracket");

  const Matrix frame = frame_at(c, x.coords, side, tol);
  const Vector coeffs = frame.transpose() * bracket;
  const double residual = (bracket - frame * coeffs).norm();
  if (residual > 1e-4)
    throw Error(ErrorKind::ProjectionResidual, "bracket is not tangent to the fibre (residual " +
                                                   std::to_string(residual) + ")");
  return coeffs;
}

Matrix anchor_matrix(const Realization& c, const ObjectPoint& x, Side side, const ToleranceConfig& tol) {
  const MorphismPoint u = unit(c, x);
  const Matrix frame = frame_at(c, x.coords, side, tol);
  if (c.is_monoid()) return Matrix(0, frame.cols());
  const Matrix jac = side == Side::Left ? source_jacobian(c, u.coords, tol) : target_jacobian(c, u.coords, tol);
  return jac * frame;
}

namespace {

double det_of(const Vector& g, int n) {
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = g(i * n + j);
  return a.determinant();
}

}  // namespace

double naturality_check(const Realization& m, const Realization& n, Homomorphism phi, const Vector& v,
                        const std::vector<double>& t_grid, const ToleranceConfig& tol) {
  const auto mm = m.as_monoid();
  const auto nn = n.as_monoid();
  if (!mm || !nn) throw Error(ErrorKind::Unsupported, "naturality needs two monoid families");
  if (v.size() != m.dim_morphisms()) throw Error(ErrorKind::DimensionMismatch, "vector does not match the source");

  VectorMap apply;
  bool boundary_only = false;
  switch (phi) {
    case Homomorphism::Identity:
      if (write_realization_spec(m) != write_realization_spec(n)) throw Error(ErrorKind::Unsupported, "identity needs equal monoids");
      apply = [](const Vector& g) { return g; };
      break;
    case Homomorphism::Determinant: {
      const auto* src = std::get_if<MatrixMonoid>(&*mm);
      const auto* dst = std::get_if<MatrixMonoid>(&*nn);
      if (!src || !dst || dst->n != 1) throw Error(ErrorKind::Unsupported, "det maps a matrix monoid to the 1x1 one");
      const int size = src->n;
      apply = [size](const Vector& g) { return Vector::Constant(1, det_of(g, size)); };
      break;
    }
    case Homomorphism::BoundaryInclusion: {
      const auto* src = std::get_if<HalfSpaceMonoid>(&*mm);
      const auto* dst = std::get_if<HalfSpaceMonoid>(&*nn);
      if (!src || !dst || src->n != dst->n)
        throw Error(ErrorKind::Unsupported, "boundary inclusion needs two equal half-space monoids");
      if (v(src->n - 1) != 0.0)
        throw Error(ErrorKind::OutwardVector, "vector is not tangent to the boundary submonoid");
      apply = [](const Vector& g) { return g; };
      boundary_only = true;
      break;
    }
  }

  // Unit and product laws on random samples.
  std::mt19937_64 rng(0x6e61747572616cULL);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto sample = [&]() {
    Vector g = monoid::identity(*mm);
    for (auto& x : g) x += 0.5 * gauss(rng);
    if (const auto* hs = std::get_if<HalfSpaceMonoid>(&*mm))
      g(hs->n - 1) = boundary_only ? 0.0 : std::abs(g(hs->n - 1));
    return g;
  };
  const Vector e_m = monoid::identity(*mm);
  const Vector e_n = monoid::identity(*nn);
  if ((apply(e_m) - e_n).cwiseAbs().maxCoeff() > 1e-9)
    throw Error(ErrorKind::NotHomomorphism, "map does not send the unit to the unit");
  for (int i = 0; i < 8; ++i) {
    const Vector a = sample();
    const Vector b = sample();
    const Vector lhs = apply(monoid::multiply(*mm, a, b));
    const Vector rhs = monoid::multiply(*nn, apply(a), apply(b));
    if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-9 * (1.0 + rhs.cwiseAbs().maxCoeff()))
      throw Error(ErrorKind::NotHomomorphism, "map does not respect products");
  }

  const DomainPredicate domain = [&](const Vector& g) { return monoid::contains(*mm, g); };
  const Vector dv = numerics::fd_jacobian(apply, e_m, tol, domain) * v;

  double deviation = 0.0;
  for (const double t : t_grid) {
    if (!std::isfinite(t) || t < 0.0) throw Error(ErrorKind::NonFinite, "time grid must be finite and >= 0");
    const Vector lhs = apply(exp_monoid(m, t * v, tol).coords);
    const Vector rhs = exp_monoid(n, t * dv, tol).coords;
    deviation = std::max(deviation, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return deviation;
}

}  // namespace liecat
