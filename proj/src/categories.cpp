#include "liecat/categories.hpp"

#include <cmath>

#include "liecat/thermo.hpp"

namespace liecat {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// ---------------------------------------------------------------------------
// AlgebraSpec

Vector AlgebraSpec::multiply(const Vector& a, const Vector& b) const {
  Vector out = Vector::Zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (a(i) == 0.0) continue;
    for (int j = 0; j < dim; ++j) {
      const double w = a(i) * b(j);
      if (w == 0.0) continue;
      for (int k = 0; k < dim; ++k) out(k) += w * constant(i, j, k);
    }
  }
  return out;
}

Matrix AlgebraSpec::left_matrix(const Vector& a) const {
  Matrix m(dim, dim);
  for (int j = 0; j < dim; ++j) m.col(j) = multiply(a, Vector::Unit(dim, j));
  return m;
}

Matrix AlgebraSpec::right_matrix(const Vector& a) const {
  Matrix m(dim, dim);
  for (int j = 0; j < dim; ++j) m.col(j) = multiply(Vector::Unit(dim, j), a);
  return m;
}

void AlgebraSpec::validate() const {
  if (dim < 1) throw Error(ErrorKind::InvalidSpec, "algebra dimension must be at least 1");
  const auto d = static_cast<std::size_t>(dim);
  if (structure_constants.size() != d * d * d)
    throw Error(ErrorKind::InvalidSpec, "structure_constants must have dim^3 entries");
  if (unit_coords.size() != dim) throw Error(ErrorKind::InvalidSpec, "unit_coords must have dim entries");
  for (const double c : structure_constants)
    if (!std::isfinite(c)) throw Error(ErrorKind::InvalidSpec, "structure constants must be finite");
  if (!unit_coords.allFinite()) throw Error(ErrorKind::InvalidSpec, "unit_coords must be finite");

  constexpr double tol = 1e-12;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int l = 0; l < dim; ++l) {
          double lhs = 0.0;
          double rhs = 0.0;
          for (int m = 0; m < dim; ++m) {
            lhs += constant(i, j, m) * constant(m, k, l);
            rhs += constant(j, k, m) * constant(i, m, l);
          }
          if (std::abs(lhs - rhs) > tol)
            throw Error(ErrorKind::InvalidSpec, "structure constants are not associative");
        }
  for (int i = 0; i < dim; ++i) {
    const Vector e = Vector::Unit(dim, i);
    if ((multiply(unit_coords, e) - e).cwiseAbs().maxCoeff() > tol ||
        (multiply(e, unit_coords) - e).cwiseAbs().maxCoeff() > tol)
      throw Error(ErrorKind::InvalidSpec, "unit_coords is not a two-sided unit");
  }
}

AlgebraSpec AlgebraSpec::upper_triangular_2x2() {
  // a = E11, b = E22, c = E12:  aa = a, ac = c, bb = b, cb = c, all else 0.
  AlgebraSpec spec;
  spec.dim = 3;
  spec.structure_constants.assign(27, 0.0);
  auto set = [&](int i, int j, int k) { spec.structure_constants[static_cast<std::size_t>((i * 3 + j) * 3 + k)] = 1.0; };
  set(0, 0, 0);
  set(0, 2, 2);
  set(1, 1, 1);
  set(2, 1, 2);
  spec.unit_coords = Vector::Zero(3);
  spec.unit_coords << 1.0, 1.0, 0.0;
  return spec;
}

// ---------------------------------------------------------------------------
// Monoids

namespace monoid {

namespace {
Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> as_square(
    const Vector& v, int n) {
  return {v.data(), n, n};
}

Vector flatten(const Matrix& m) {
  Vector v(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}
}  // namespace

int dim(const Monoid& m) {
  return std::visit(overloaded{[](const MatrixMonoid& mm) { return mm.n * mm.n; },
                               [](const AlgebraMonoid& am) { return am.algebra.dim; },
                               [](const HalfSpaceMonoid& hs) { return hs.n; }},
                    m);
}

Vector identity(const Monoid& m) {
  return std::visit(overloaded{[](const MatrixMonoid& mm) -> Vector { return flatten(Matrix::Identity(mm.n, mm.n)); },
                               [](const AlgebraMonoid& am) -> Vector { return am.algebra.unit_coords; },
                               [](const HalfSpaceMonoid& hs) -> Vector { return Vector::Zero(hs.n); }},
                    m);
}

Vector multiply(const Monoid& m, const Vector& a, const Vector& b) {
  return std::visit(overloaded{[&](const MatrixMonoid& mm) -> Vector {
                                 return flatten(Matrix(as_square(a, mm.n) * as_square(b, mm.n)));
                               },
                               [&](const AlgebraMonoid& am) -> Vector { return am.algebra.multiply(a, b); },
                               [&](const HalfSpaceMonoid&) -> Vector { return a + b; }},
                    m);
}

bool contains(const Monoid& m, const Vector& g) {
  if (g.size() != dim(m) || !g.allFinite()) return false;
  if (const auto* hs = std::get_if<HalfSpaceMonoid>(&m)) return g(hs->n - 1) >= 0.0;
  return true;
}

Matrix left_translation(const Monoid& m, const Vector& g) {
  return std::visit(overloaded{[&](const MatrixMonoid& mm) -> Matrix {
                                 // vec(G H) = (G kron I) vec(H) for row-major vec.
                                 const int n = mm.n;
                                 Matrix out = Matrix::Zero(n * n, n * n);
                                 const auto gm = as_square(g, n);
                                 for (int i = 0; i < n; ++i)
                                   for (int j = 0; j < n; ++j)
                                     for (int k = 0; k < n; ++k) out(i * n + j, k * n + j) = gm(i, k);
                                 return out;
                               },
                               [&](const AlgebraMonoid& am) -> Matrix { return am.algebra.left_matrix(g); },
                               [&](const HalfSpaceMonoid& hs) -> Matrix { return Matrix::Identity(hs.n, hs.n); }},
                    m);
}

Matrix right_translation(const Monoid& m, const Vector& g) {
  return std::visit(overloaded{[&](const MatrixMonoid& mm) -> Matrix {
                                 const int n = mm.n;
                                 Matrix out = Matrix::Zero(n * n, n * n);
                                 const auto gm = as_square(g, n);
                                 for (int i = 0; i < n; ++i)
                                   for (int j = 0; j < n; ++j)
                                     for (int k = 0; k < n; ++k) out(i * n + j, i * n + k) = gm(k, j);
                                 return out;
                               },
                               [&](const AlgebraMonoid& am) -> Matrix { return am.algebra.right_matrix(g); },
                               [&](const HalfSpaceMonoid& hs) -> Matrix { return Matrix::Identity(hs.n, hs.n); }},
                    m);
}

bool is_invertible(const Monoid& m, const Vector& g, const ToleranceConfig& tol) {
  return std::visit(
      overloaded{[&](const MatrixMonoid& mm) {
                   const Matrix a = as_square(g, mm.n);
                   const double scale = 1.0 + std::pow(a.norm(), mm.n);
                   return std::abs(a.determinant()) > 1e-10 * scale;
                 },
                 [&](const AlgebraMonoid& am) {
                   // Solve g x = 1 and y g = 1; both must be solvable and agree.
                   const AlgebraSpec& alg = am.algebra;
                   const Vector& one = alg.unit_coords;
                   const Matrix lg = alg.left_matrix(g);
                   const Matrix rg = alg.right_matrix(g);
                   const Vector x = lg.completeOrthogonalDecomposition().solve(one);
                   const Vector y = rg.completeOrthogonalDecomposition().solve(one);
                   const double scale = 1.0 + one.norm();
                   const double cutoff = std::max(tol.rank_rel_tol, 1e-10) * scale;
                   if ((lg * x - one).norm() > cutoff || (rg * y - one).norm() > cutoff) return false;
                   return (x - y).norm() <= cutoff * (1.0 + x.norm());
                 },
                 [&](const HalfSpaceMonoid& hs) { return g(hs.n - 1) == 0.0; }},
      m);
}

bool core_on_boundary(const Monoid& m) { return std::holds_alternative<HalfSpaceMonoid>(m); }

std::string name(const Monoid& m) {
  return std::visit(overloaded{[](const MatrixMonoid&) { return std::string("matrix"); },
                               [](const AlgebraMonoid&) { return std::string("algebra"); },
                               [](const HalfSpaceMonoid&) { return std::string("halfspace"); }},
                    m);
}

}  // namespace monoid

std::string to_string(BuiltinAction action) {
  switch (action) {
    case BuiltinAction::Linear: return "linear";
    case BuiltinAction::Scale: return "scale";
    case BuiltinAction::Translate: return "translate";
  }
  return "unknown";
}

BuiltinAction parse_action(const std::string& name) {
  if (name == "linear") return BuiltinAction::Linear;
  if (name == "scale") return BuiltinAction::Scale;
  if (name == "translate") return BuiltinAction::Translate;
  throw Error(ErrorKind::InvalidSpec, "unknown built-in action '" + name + "'");
}

Vector apply_action(const ActionCategory& cat, const Vector& g, const Vector& x) {
  switch (cat.action) {
    case BuiltinAction::Linear: {
      const int n = cat.dim_objects;
      Vector out = Vector::Zero(n);
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) out(i) += g(i * n + k) * x(k);
      return out;
    }
    case BuiltinAction::Scale: return g(0) * x;
    case BuiltinAction::Translate: return x + g;
  }
  return x;
}

// ---------------------------------------------------------------------------
// Realization

namespace {

void validate_monoid(const Monoid& m) {
  std::visit(overloaded{[](const MatrixMonoid& mm) {
                          if (mm.n < 1) throw Error(ErrorKind::InvalidSpec, "matrix size n must be at least 1");
                        },
                        [](const AlgebraMonoid& am) { am.algebra.validate(); },
                        [](const HalfSpaceMonoid& hs) {
                          if (hs.n < 1) throw Error(ErrorKind::InvalidSpec, "half-space dimension must be at least 1");
                        }},
             m);
}

void validate_family(const Family& f) {
  std::visit(overloaded{[](const MatrixMonoid& m) { validate_monoid(m); },
                        [](const AlgebraMonoid& m) { validate_monoid(m); },
                        [](const HalfSpaceMonoid& m) { validate_monoid(m); },
                        [](const TrivialCategory& tc) {
                          if (tc.dim_objects < 1) throw Error(ErrorKind::InvalidSpec, "dim_X must be at least 1");
                          validate_monoid(tc.inner);
                        },
                        [](const OrderCategory&) {},
                        [](const EntropyCategory& ec) {
                          if (ec.n < 1) throw Error(ErrorKind::InvalidSpec, "simplex dimension n must be at least 1");
                        },
                        [](const ActionCategory& ac) {
                          validate_monoid(ac.monoid);
                          if (ac.dim_objects < 1) throw Error(ErrorKind::InvalidSpec, "dim_X must be at least 1");
                          const int dm = monoid::dim(ac.monoid);
                          switch (ac.action) {
                            case BuiltinAction::Linear: {
                              const auto* mm = std::get_if<MatrixMonoid>(&ac.monoid);
                              if (!mm || mm->n != ac.dim_objects)
                                throw Error(ErrorKind::InvalidSpec, "linear action needs matrix monoid with n = dim_X");
                              break;
                            }
                            case BuiltinAction::Scale:
                              if (!std::holds_alternative<MatrixMonoid>(ac.monoid) || dm != 1)
                                throw Error(ErrorKind::InvalidSpec, "scale action needs the 1x1 matrix monoid");
                              break;
                            case BuiltinAction::Translate: {
                              const auto* hs = std::get_if<HalfSpaceMonoid>(&ac.monoid);
                              if (!hs || hs->n != ac.dim_objects)
                                throw Error(ErrorKind::InvalidSpec, "translate action needs half-space monoid with n = dim_X");
                              break;
                            }
                          }
                        }},
             f);
}

bool entropy_object_ok(const Vector& chart, int n) {
  if (chart.size() != n || !chart.allFinite()) return false;
  Vector p(n + 1);
  p(0) = 1.0 - chart.sum();
  p.tail(n) = chart;
  return thermo::is_valid_object(p, n);
}

double entropy_of_chart(const Vector& chart) {
  double s = 0.0;
  const double p0 = 1.0 - chart.sum();
  if (p0 > 0.0) s -= p0 * std::log(p0);
  for (const double pi : chart)
    if (pi > 0.0) s -= pi * std::log(pi);
  return s;
}

}  // namespace

Realization::Realization(Family family, ToleranceConfig tol) : family_(std::move(family)), tol_(tol) {
  tol_.validate();
  validate_family(family_);
}

Realization Realization::matrix_monoid(int n) { return Realization(MatrixMonoid{n}); }
Realization Realization::algebra_monoid(AlgebraSpec algebra) { return Realization(AlgebraMonoid{std::move(algebra)}); }
Realization Realization::half_space(int n) { return Realization(HalfSpaceMonoid{n}); }
Realization Realization::trivial(int dim_objects, Monoid inner) {
  return Realization(TrivialCategory{dim_objects, std::move(inner)});
}
Realization Realization::order() { return Realization(OrderCategory{}); }
Realization Realization::entropy(int n) { return Realization(EntropyCategory{n}); }
Realization Realization::action(Monoid monoid, BuiltinAction action, int dim_objects) {
  return Realization(ActionCategory{std::move(monoid), action, dim_objects});
}

std::string Realization::family_name() const {
  return std::visit(overloaded{[](const MatrixMonoid&) { return std::string("matrix"); },
                               [](const AlgebraMonoid&) { return std::string("algebra"); },
                               [](const HalfSpaceMonoid&) { return std::string("halfspace"); },
                               [](const TrivialCategory&) { return std::string("trivial"); },
                               [](const OrderCategory&) { return std::string("order"); },
                               [](const EntropyCategory&) { return std::string("entropy"); },
                               [](const ActionCategory&) { return std::string("action"); }},
                    family_);
}

int Realization::dim_morphisms() const {
  return std::visit(overloaded{[](const MatrixMonoid& m) { return monoid::dim(m); },
                               [](const AlgebraMonoid& m) { return monoid::dim(m); },
                               [](const HalfSpaceMonoid& m) { return monoid::dim(m); },
                               [](const TrivialCategory& tc) { return 2 * tc.dim_objects + monoid::dim(tc.inner); },
                               [](const OrderCategory&) { return 2; },
                               [](const EntropyCategory& ec) { return 2 * ec.n; },
                               [](const ActionCategory& ac) { return monoid::dim(ac.monoid) + ac.dim_objects; }},
                    family_);
}

int Realization::dim_objects() const {
  return std::visit(overloaded{[](const MatrixMonoid&) { return 0; }, [](const AlgebraMonoid&) { return 0; },
                               [](const HalfSpaceMonoid&) { return 0; },
                               [](const TrivialCategory& tc) { return tc.dim_objects; },
                               [](const OrderCategory&) { return 1; }, [](const EntropyCategory& ec) { return ec.n; },
                               [](const ActionCategory& ac) { return ac.dim_objects; }},
                    family_);
}

std::optional<Monoid> Realization::as_monoid() const {
  return std::visit(overloaded{[](const MatrixMonoid& m) -> std::optional<Monoid> { return m; },
                               [](const AlgebraMonoid& m) -> std::optional<Monoid> { return m; },
                               [](const HalfSpaceMonoid& m) -> std::optional<Monoid> { return m; },
                               [](const auto&) -> std::optional<Monoid> { return std::nullopt; }},
                    family_);
}

bool Realization::is_valid_object(const Vector& x) const {
  if (x.size() != dim_objects() || !x.allFinite()) return false;
  if (const auto* ec = std::get_if<EntropyCategory>(&family_)) return entropy_object_ok(x, ec->n);
  return true;
}

bool Realization::in_chart(const Vector& g) const {
  if (g.size() != dim_morphisms() || !g.allFinite()) return false;
  if (const auto* ec = std::get_if<EntropyCategory>(&family_)) {
    const int n = ec->n;
    auto interior = [n](const Vector& c) { return c.minCoeff() > 0.0 && 1.0 - c.sum() > 0.0; };
    return interior(g.head(n)) && interior(g.tail(n));
  }
  return true;
}

bool Realization::is_valid_morphism(const Vector& g) const {
  if (g.size() != dim_morphisms() || !g.allFinite()) return false;
  return std::visit(
      overloaded{[&](const MatrixMonoid& m) { return monoid::contains(m, g); },
                 [&](const AlgebraMonoid& m) { return monoid::contains(m, g); },
                 [&](const HalfSpaceMonoid& m) { return monoid::contains(m, g); },
                 [&](const TrivialCategory& tc) {
                   return monoid::contains(tc.inner, g.segment(tc.dim_objects, monoid::dim(tc.inner)));
                 },
                 [&](const OrderCategory&) { return g(1) <= g(0); },
                 [&](const EntropyCategory& ec) {
                   const Vector q = g.head(ec.n);
                   const Vector p = g.tail(ec.n);
                   return entropy_object_ok(q, ec.n) && entropy_object_ok(p, ec.n) &&
                          entropy_of_chart(q) - entropy_of_chart(p) >= 0.0;
                 },
                 [&](const ActionCategory& ac) {
                   const int dm = monoid::dim(ac.monoid);
                   const Vector m = g.head(dm);
                   return monoid::contains(ac.monoid, m) && action_is_regular(*this, m, g.tail(ac.dim_objects), tol_);
                 }},
      family_);
}

Vector Realization::source_coords(const Vector& g) const {
  return std::visit(overloaded{[&](const TrivialCategory& tc) -> Vector { return g.tail(tc.dim_objects); },
                               [&](const OrderCategory&) -> Vector { return g.tail(1); },
                               [&](const EntropyCategory& ec) -> Vector { return g.tail(ec.n); },
                               [&](const ActionCategory& ac) -> Vector { return g.tail(ac.dim_objects); },
                               [](const auto&) -> Vector { return Vector(0); }},
                    family_);
}

Vector Realization::target_coords(const Vector& g) const {
  return std::visit(overloaded{[&](const TrivialCategory& tc) -> Vector { return g.head(tc.dim_objects); },
                               [&](const OrderCategory&) -> Vector { return g.head(1); },
                               [&](const EntropyCategory& ec) -> Vector { return g.head(ec.n); },
                               [&](const ActionCategory& ac) -> Vector {
                                 const int dm = monoid::dim(ac.monoid);
                                 return apply_action(ac, g.head(dm), g.tail(ac.dim_objects));
                               },
                               [](const auto&) -> Vector { return Vector(0); }},
                    family_);
}

Vector Realization::unit_coords(const Vector& x) const {
  return std::visit(overloaded{[](const MatrixMonoid& m) -> Vector { return monoid::identity(m); },
                               [](const AlgebraMonoid& m) -> Vector { return monoid::identity(m); },
                               [](const HalfSpaceMonoid& m) -> Vector { return monoid::identity(m); },
                               [&](const TrivialCategory& tc) -> Vector {
                                 Vector u(dim_morphisms());
                                 u << x, monoid::identity(tc.inner), x;
                                 return u;
                               },
                               [&](const OrderCategory&) -> Vector { return Vector::Constant(2, x(0)); },
                               [&](const EntropyCategory&) -> Vector {
                                 Vector u(dim_morphisms());
                                 u << x, x;
                                 return u;
                               },
                               [&](const ActionCategory& ac) -> Vector {
                                 Vector u(dim_morphisms());
                                 u << monoid::identity(ac.monoid), x;
                                 return u;
                               }},
                    family_);
}

Vector Realization::compose_coords(const Vector& g, const Vector& h) const {
  return std::visit(overloaded{[&](const MatrixMonoid& m) -> Vector { return monoid::multiply(m, g, h); },
                               [&](const AlgebraMonoid& m) -> Vector { return monoid::multiply(m, g, h); },
                               [&](const HalfSpaceMonoid& m) -> Vector { return monoid::multiply(m, g, h); },
                               [&](const TrivialCategory& tc) -> Vector {
                                 const int dx = tc.dim_objects;
                                 const int dm = monoid::dim(tc.inner);
                                 Vector out(dim_morphisms());
                                 out << g.head(dx), monoid::multiply(tc.inner, g.segment(dx, dm), h.segment(dx, dm)),
                                     h.tail(dx);
                                 return out;
                               },
                               [&](const OrderCategory&) -> Vector {
                                 Vector out(2);
                                 out << g(0), h(1);
                                 return out;
                               },
                               [&](const EntropyCategory& ec) -> Vector {
                                 Vector out(dim_morphisms());
                                 out << g.head(ec.n), h.tail(ec.n);
                                 return out;
                               },
                               [&](const ActionCategory& ac) -> Vector {
                                 const int dm = monoid::dim(ac.monoid);
                                 Vector out(dim_morphisms());
                                 out << monoid::multiply(ac.monoid, g.head(dm), h.head(dm)), h.tail(ac.dim_objects);
                                 return out;
                               }},
                    family_);
}

// ---------------------------------------------------------------------------
// Structure maps with validation

bool action_is_regular(const Realization& c, const Vector& g, const Vector& x, const ToleranceConfig& tol) {
  const auto* ac = std::get_if<ActionCategory>(&c.family());
  if (!ac) throw Error(ErrorKind::Unsupported, "action_is_regular needs an action category");
  const int dm = monoid::dim(ac->monoid);
  if (g.size() != dm || x.size() != ac->dim_objects)
    throw Error(ErrorKind::DimensionMismatch, "point does not match the action's dimensions");
  if (!g.allFinite() || !x.allFinite()) throw Error(ErrorKind::NonFinite, "action point is not finite");

  Vector joint(dm + ac->dim_objects);
  joint << g, x;
  const VectorMap phi = [&](const Vector& v) { return apply_action(*ac, v.head(dm), v.tail(ac->dim_objects)); };
  const DomainPredicate domain = [&](const Vector& v) { return monoid::contains(ac->monoid, v.head(dm)); };
  return numerics::numerical_rank(numerics::fd_jacobian(phi, joint, tol, domain), tol) == ac->dim_objects;
}

void require_valid(const Realization& c, const MorphismPoint& g) {
  if (!c.is_valid_morphism(g.coords))
    throw Error(ErrorKind::InvalidMorphism, "point is not a morphism of the " + c.family_name() + " realization");
}

void require_valid(const Realization& c, const ObjectPoint& x) {
  if (!c.is_valid_object(x.coords))
    throw Error(ErrorKind::InvalidObject, "point is not an object of the " + c.family_name() + " realization");
}

ObjectPoint source(const Realization& c, const MorphismPoint& g) {
  require_valid(c, g);
  return {c.source_coords(g.coords)};
}

ObjectPoint target(const Realization& c, const MorphismPoint& g) {
  require_valid(c, g);
  return {c.target_coords(g.coords)};
}

MorphismPoint unit(const Realization& c, const ObjectPoint& x) {
  require_valid(c, x);
  return {c.unit_coords(x.coords)};
}

bool is_composable(const Realization& c, const MorphismPoint& g, const MorphismPoint& h) {
  if (c.is_monoid()) return true;
  const Vector s = c.source_coords(g.coords);
  const Vector t = c.target_coords(h.coords);
  return (s - t).cwiseAbs().maxCoeff() <= kComposableTol;
}

MorphismPoint compose(const Realization& c, const MorphismPoint& g, const MorphismPoint& h) {
  require_valid(c, g);
  require_valid(c, h);
  if (!is_composable(c, g, h)) throw Error(ErrorKind::NotComposable, "source of g does not match target of h");
  MorphismPoint out{c.compose_coords(g.coords, h.coords)};
  if (!c.is_valid_morphism(out.coords))
    throw Error(ErrorKind::InvalidResult, "composition left the " + c.family_name() + " realization");
  return out;
}

Matrix target_jacobian(const Realization& c, const Vector& g, const ToleranceConfig& tol) {
  if (c.is_monoid()) return Matrix(0, c.dim_morphisms());
  const VectorMap t = [&](const Vector& v) { return c.target_coords(v); };
  const DomainPredicate in_chart = [&](const Vector& v) { return c.in_chart(v); };
  return numerics::fd_jacobian(t, g, tol, in_chart);
}

Matrix source_jacobian(const Realization& c, const Vector& g, const ToleranceConfig& tol) {
  if (c.is_monoid()) return Matrix(0, c.dim_morphisms());
  const VectorMap s = [&](const Vector& v) { return c.source_coords(v); };
  const DomainPredicate in_chart = [&](const Vector& v) { return c.in_chart(v); };
  return numerics::fd_jacobian(s, g, tol, in_chart);
}

Matrix ker_dt_basis_at_unit(const Realization& c, const ObjectPoint& x, const ToleranceConfig& tol) {
  const MorphismPoint u = unit(c, x);
  return numerics::nullspace_basis(target_jacobian(c, u.coords, tol), tol);
}

Matrix ker_ds_basis_at_unit(const Realization& c, const ObjectPoint& x, const ToleranceConfig& tol) {
  const MorphismPoint u = unit(c, x);
  return numerics::nullspace_basis(source_jacobian(c, u.coords, tol), tol);
}

}  // namespace liecat
