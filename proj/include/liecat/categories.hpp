#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liecat/numerics.hpp"

namespace liecat {

/// Finite-dimensional unital algebra given by structure constants:
/// e_i * e_j = sum_k c[i][j][k] e_k, stored flat at index (i*dim + j)*dim + k.
struct AlgebraSpec {
  int dim = 0;
  std::vector<double> structure_constants;
  Vector unit_coords;

  double constant(int i, int j, int k) const {
    return structure_constants[static_cast<std::size_t>((i * dim + j) * dim + k)];
  }

  Vector multiply(const Vector& a, const Vector& b) const;
  /// Matrix of h -> a*h.
  Matrix left_matrix(const Vector& a) const;
  /// Matrix of h -> h*a.
  Matrix right_matrix(const Vector& a) const;

  /// Checks sizes, finiteness, associativity and the unit laws (1e-12).
  void validate() const;

  /// Upper-triangular real 2x2 matrices in the basis
  /// a = E11, b = E22, c = E12.
  static AlgebraSpec upper_triangular_2x2();
};

/// (R^{n x n}, matrix product); coordinates are row-major entries.
struct MatrixMonoid {
  int n = 1;
};

struct AlgebraMonoid {
  AlgebraSpec algebra;
};

/// Closed upper half-space {x in R^n : x_n >= 0} under addition. For n = 1
/// this is the additive monoid [0, inf).
struct HalfSpaceMonoid {
  int n = 1;
};

using Monoid = std::variant<MatrixMonoid, AlgebraMonoid, HalfSpaceMonoid>;

namespace monoid {
int dim(const Monoid& m);
Vector identity(const Monoid& m);
Vector multiply(const Monoid& m, const Vector& a, const Vector& b);
bool contains(const Monoid& m, const Vector& g);
/// Differential of h -> g*h (constant: every translation here is affine).
Matrix left_translation(const Monoid& m, const Vector& g);
/// Differential of h -> h*g.
Matrix right_translation(const Monoid& m, const Vector& g);
bool is_invertible(const Monoid& m, const Vector& g, const ToleranceConfig& tol);
/// True if the unit lies on the boundary and the core is a boundary stratum.
bool core_on_boundary(const Monoid& m);
std::string name(const Monoid& m);
}  // namespace monoid

enum class BuiltinAction {
  Linear,     ///< MatrixMonoid(n) on R^n, (A, x) -> A x
  Scale,      ///< MatrixMonoid(1) on R^d, (g, x) -> g x
  Translate,  ///< HalfSpaceMonoid(n) on R^n, (g, x) -> x + g
};

std::string to_string(BuiltinAction action);
BuiltinAction parse_action(const std::string& name);

/// X x M x X with s = pr3, t = pr1 and (z,g,y)(y,h,x) = (z,gh,x).
/// Morphism coordinates are (z, g, x).
struct TrivialCategory {
  int dim_objects = 1;
  Monoid inner;
};

/// {(y, x) : x <= y} inside the pair groupoid of R; s(y,x) = x, t(y,x) = y.
struct OrderCategory {};

/// Morphisms (q, p) of configurations with S(q) >= S(p) over the punctured
/// open simplex. Objects use chart coordinates p_1..p_n (p_0 = 1 - sum).
struct EntropyCategory {
  int n = 1;
};

/// Regular points (g, x) of a monoid action; s = x, t = g x.
/// Morphism coordinates are (g, x).
struct ActionCategory {
  Monoid monoid;
  BuiltinAction action = BuiltinAction::Linear;
  int dim_objects = 1;
};

using Family = std::variant<MatrixMonoid, AlgebraMonoid, HalfSpaceMonoid, TrivialCategory,
                            OrderCategory, EntropyCategory, ActionCategory>;

struct ObjectPoint {
  Vector coords;
};

struct MorphismPoint {
  Vector coords;
};

/// A concrete Lie category in a single global chart. Immutable after
/// construction.
class Realization {
 public:
  /// Validates the family parameters; throws InvalidSpec on failure.
  /// `tol` is used by the ActionCategory regularity test.
  explicit Realization(Family family, ToleranceConfig tol = {});

  static Realization matrix_monoid(int n);
  static Realization algebra_monoid(AlgebraSpec algebra);
  static Realization half_space(int n);
  static Realization trivial(int dim_objects, Monoid inner);
  static Realization order();
  static Realization entropy(int n);
  static Realization action(Monoid monoid, BuiltinAction action, int dim_objects);

  const Family& family() const { return family_; }
  const ToleranceConfig& tolerance() const { return tol_; }
  std::string family_name() const;

  int dim_morphisms() const;
  int dim_objects() const;
  int delta() const { return dim_morphisms() - dim_objects(); }
  bool is_monoid() const { return dim_objects() == 0; }
  /// The monoid itself for monoid families.
  std::optional<Monoid> as_monoid() const;

  bool is_valid_object(const Vector& x) const;
  bool is_valid_morphism(const Vector& g) const;
  /// Membership in the chart domain where the structure-map formulas are
  /// defined, ignoring boundary inequalities (x <= y, S(q) >= S(p), x_n >= 0).
  bool in_chart(const Vector& g) const;

  // Structure maps on raw coordinates, without validation.
  Vector source_coords(const Vector& g) const;
  Vector target_coords(const Vector& g) const;
  Vector unit_coords(const Vector& x) const;
  Vector compose_coords(const Vector& g, const Vector& h) const;

 private:
  Family family_;
  ToleranceConfig tol_;
};

/// The action map phi(g, x) of an ActionCategory.
Vector apply_action(const ActionCategory& cat, const Vector& g, const Vector& x);

/// Regularity of phi at (g, x): numerical rank of d phi equals dim X.
bool action_is_regular(const Realization& c, const Vector& g, const Vector& x,
                       const ToleranceConfig& tol = {});

constexpr double kComposableTol = 1e-9;

/// Left data use ker dt and left translations; right data mirror them with
/// ker ds and right translations.
enum class Side { Left, Right };

ObjectPoint source(const Realization& c, const MorphismPoint& g);
ObjectPoint target(const Realization& c, const MorphismPoint& g);
MorphismPoint unit(const Realization& c, const ObjectPoint& x);
bool is_composable(const Realization& c, const MorphismPoint& g, const MorphismPoint& h);
/// g after h; requires s(g) = t(h).
MorphismPoint compose(const Realization& c, const MorphismPoint& g, const MorphismPoint& h);

/// Throws InvalidMorphism / InvalidObject when the point is not in the realization.
void require_valid(const Realization& c, const MorphismPoint& g);
void require_valid(const Realization& c, const ObjectPoint& x);

/// Jacobian of the target (resp. source) map at an arbitrary morphism.
Matrix target_jacobian(const Realization& c, const Vector& g, const ToleranceConfig& tol);
Matrix source_jacobian(const Realization& c, const Vector& g, const ToleranceConfig& tol);

/// Columns: orthonormal basis of ker dt at 1_x (fibre of the left algebroid).
Matrix ker_dt_basis_at_unit(const Realization& c, const ObjectPoint& x,
                            const ToleranceConfig& tol = {});
/// Columns: orthonormal basis of ker ds at 1_x (fibre of the right algebroid).
Matrix ker_ds_basis_at_unit(const Realization& c, const ObjectPoint& x,
                            const ToleranceConfig& tol = {});

}  // namespace liecat
