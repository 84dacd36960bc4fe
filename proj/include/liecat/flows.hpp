#pragma once

#include <vector>

#include "liecat/categories.hpp"

namespace liecat {

/// Constant-coefficient section of the algebroid, expressed in the
/// canonical ker dt (or ker ds) frame returned by ker_dt_basis_at_unit.
struct SectionSpec {
  enum class Mode {
    ConstantCoefficients,
    /// Ambient tangent vector at the unit of a monoid (frame is the identity).
    MonoidVector,
  };
  Mode mode = Mode::ConstantCoefficients;
  Vector coeffs;
};

/// Algebroid fibre vector at a unit, in frame coordinates.
struct TangentAtUnit {
  ObjectPoint base;
  Vector vector;
};

/// Ambient tangent coordinates at 1_base of a frame-coordinate vector.
Vector to_ambient(const Realization& c, const TangentAtUnit& v, Side side = Side::Left,
                  const ToleranceConfig& tol = {});

struct FlowResult {
  MorphismPoint endpoint;
  double t_reached = 0.0;
  bool exited = false;
};

/// alpha^L(g) = d(L_g) at 1_{s(g)} applied to alpha_{s(g)} (ambient coordinates).
Vector left_invariant_eval(const Realization& c, const SectionSpec& alpha, const MorphismPoint& g,
                           const ToleranceConfig& tol = {});
/// Left- or right-invariant extension of alpha evaluated at g.
Vector invariant_eval(const Realization& c, const SectionSpec& alpha, const MorphismPoint& g, Side side,
                      const ToleranceConfig& tol = {});

/// RK4 flow of the invariant extension of alpha starting at g, confined to
/// the realization's morphisms. On exit, t_reached is the start of the step
/// that left the domain.
FlowResult flow_left_invariant(const Realization& c, const SectionSpec& alpha, const MorphismPoint& g, double t,
                               const ToleranceConfig& tol = {});
FlowResult flow_invariant(const Realization& c, const SectionSpec& alpha, const MorphismPoint& g, double t,
                          Side side, const ToleranceConfig& tol = {});

/// exp(v): time-one flow of v^L from the unit of a monoid family.
/// Throws OutwardVector if v does not lie in the inward cone or the flow exits.
MorphismPoint exp_monoid(const Realization& m, const Vector& v, const ToleranceConfig& tol = {});

/// Lie bracket of the invariant extensions of alpha and beta at 1_x, in frame
/// coordinates. Computed from the commutator of flows at step 1e-3 with one
/// Richardson refinement; the flows use the chart extension of the
/// composition so that boundary units can be handled. Throws
/// ProjectionResidual if the bracket leaves the frame by more than 1e-4.
Vector bracket_at_unit(const Realization& c, const ObjectPoint& x, const SectionSpec& alpha,
                       const SectionSpec& beta, Side side = Side::Left, const ToleranceConfig& tol = {});

/// Left anchor ds restricted to ker dt at 1_x (dim_objects x delta), or the
/// right anchor dt restricted to ker ds.
Matrix anchor_matrix(const Realization& c, const ObjectPoint& x, Side side = Side::Left,
                     const ToleranceConfig& tol = {});

enum class Homomorphism {
  Identity,           ///< M -> M
  Determinant,        ///< MatrixMonoid(n) -> MatrixMonoid(1)
  BoundaryInclusion,  ///< boundary of HalfSpace(n) into HalfSpace(n)
};

/// max over t in t_grid of |phi(exp_M(t v)) - exp_N(t dphi(v))|_inf.
/// Throws NotHomomorphism if phi fails the unit or product law on random
/// samples, Unsupported if the realizations do not fit the homomorphism.
double naturality_check(const Realization& m, const Realization& n, Homomorphism phi, const Vector& v,
                        const std::vector<double>& t_grid, const ToleranceConfig& tol = {});

}  // namespace liecat
