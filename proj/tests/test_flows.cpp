#include <gtest/gtest.h>

#include <cmath>

#include "liecat/errors.hpp"
#include "liecat/flows.hpp"
#include "morphisms.hpp"

using namespace liecat;
namespace lt = liecat::testing;

namespace {

double inf_norm(const Vector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidSpec;
}

SectionSpec section(const Vector& v) { return {SectionSpec::Mode::ConstantCoefficients, v}; }

const ObjectPoint kMonoidPoint{Vector(0)};

}  // namespace

TEST(FlowProperty, LeftTranslationOfTheUnitFlow) {
  lt::Rng rng(31);
  const std::vector<Realization> monoids{Realization::matrix_monoid(2), Realization::matrix_monoid(3),
                                         Realization::algebra_monoid(AlgebraSpec::upper_triangular_2x2())};
  for (const auto& c : monoids) {
    const Vector e = monoid::identity(*c.as_monoid());
    for (int i = 0; i < 10; ++i) {
      const MorphismPoint g{lt::random_monoid_element(*c.as_monoid(), rng)};
      const SectionSpec alpha = section(lt::vector_in_ball(rng, c.delta(), 1.0));
      const double t = lt::uniform(rng, 0.0, 1.0);
      const Vector lhs = flow_left_invariant(c, alpha, g, t).endpoint.coords;
      const Vector rhs = compose(c, g, flow_left_invariant(c, alpha, {e}, t).endpoint).coords;
      EXPECT_LT(inf_norm(lhs - rhs), 1e-6) << c.family_name();
    }
  }
}

TEST(FlowProperty, RightInvariantFlowsTranslateOnTheRight) {
  lt::Rng rng(32);
  const Realization c = Realization::matrix_monoid(2);
  const MorphismPoint e{lt::flatten(Matrix::Identity(2, 2))};
  for (int i = 0; i < 10; ++i) {
    const MorphismPoint g{lt::flatten(lt::gaussian_matrix(rng, 2, 2))};
    const SectionSpec alpha = section(lt::vector_in_ball(rng, 4, 1.0));
    const double t = lt::uniform(rng, 0.0, 1.0);
    const Vector lhs = flow_invariant(c, alpha, g, t, Side::Right).endpoint.coords;
    const Vector rhs = compose(c, flow_invariant(c, alpha, e, t, Side::Right).endpoint, g).coords;
    EXPECT_LT(inf_norm(lhs - rhs), 1e-6);
  }
}

TEST(FlowProperty, LeftInvariantFlowsStayInTargetFibres) {
  lt::Rng rng(33);
  const std::vector<Realization> cats{Realization::order(), Realization::entropy(2),
                                      Realization::trivial(2, MatrixMonoid{2})};
  for (const auto& c : cats) {
    for (int i = 0; i < 10; ++i) {
      const MorphismPoint g = lt::composable_triple(c, rng)[0];
      const SectionSpec alpha = section(lt::vector_in_ball(rng, c.delta(), 0.05));
      const FlowResult left = flow_invariant(c, alpha, g, 0.5, Side::Left);
      EXPECT_LT(inf_norm(target(c, left.endpoint).coords - target(c, g).coords), 1e-9) << c.family_name();
      const FlowResult right = flow_invariant(c, alpha, g, 0.5, Side::Right);
      EXPECT_LT(inf_norm(source(c, right.endpoint).coords - source(c, g).coords), 1e-9) << c.family_name();
    }
  }
}

TEST(FlowProperty, OrderFlowMovesTheSource) {
  const Realization c = Realization::order();
  const FlowResult r = flow_left_invariant(c, section(Vector::Constant(1, -0.5)), {Eigen::Vector2d(1.0, 0.0)}, 2.0);
  EXPECT_FALSE(r.exited);
  EXPECT_NEAR(r.endpoint.coords(0), 1.0, 1e-12);
  EXPECT_NEAR(r.endpoint.coords(1), -1.0, 1e-9);
  const FlowResult out = flow_left_invariant(c, section(Vector::Constant(1, 1.0)), {Eigen::Vector2d(1.0, 0.0)}, 2.0);
  EXPECT_TRUE(out.exited);
  EXPECT_NEAR(out.t_reached, 1.0, 2e-3);
}

TEST(Exp, RescalingMatchesFlow) {
  lt::Rng rng(34);
  const Realization c = Realization::matrix_monoid(2);
  const MorphismPoint e{lt::flatten(Matrix::Identity(2, 2))};
  for (int i = 0; i < 5; ++i) {
    const Vector v = lt::vector_in_ball(rng, 4, 1.0);
    for (const double t : {0.25, 0.5, 1.0, 2.0}) {
      const Vector lhs = exp_monoid(c, t * v).coords;
      const Vector rhs = flow_left_invariant(c, section(v), e, t).endpoint.coords;
      EXPECT_LT(inf_norm(lhs - rhs), 1e-6);
    }
  }
}

TEST(Exp, OneParameterHomomorphism) {
  lt::Rng rng(35);
  const Realization c = Realization::matrix_monoid(3);
  for (int i = 0; i < 10; ++i) {
    const Vector v = lt::vector_in_ball(rng, 9, 1.0);
    const double t1 = lt::uniform(rng, 0.0, 1.0), t2 = lt::uniform(rng, 0.0, 1.0);
    const Vector lhs = exp_monoid(c, (t1 + t2) * v).coords;
    const Vector rhs = compose(c, exp_monoid(c, t1 * v), exp_monoid(c, t2 * v)).coords;
    EXPECT_LT(inf_norm(lhs - rhs), 1e-6);
  }
}

TEST(Exp, DifferentialAtZeroIsIdentity) {
  const Realization c = Realization::matrix_monoid(2);
  const VectorMap exp_map = [&](const Vector& v) { return exp_monoid(c, v).coords; };
  const Matrix d = numerics::fd_jacobian(exp_map, Vector::Zero(4));
  EXPECT_LT((d - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-5);
}

TEST(Exp, AlgebraMonoidMatchesExponentialOfLeftMultiplication) {
  lt::Rng rng(36);
  const AlgebraSpec a = AlgebraSpec::upper_triangular_2x2();
  const Realization c = Realization::algebra_monoid(a);
  for (int i = 0; i < 10; ++i) {
    const Vector v = lt::vector_in_ball(rng, 3, 2.0);
    const Vector want = numerics::matrix_exp_oracle(a.left_matrix(v)) * a.unit_coords;
    EXPECT_LT(inf_norm(exp_monoid(c, v).coords - want), 1e-6);
  }
}

TEST(Exp, DeterminantStaysPositiveAlongFlows) {
  lt::Rng rng(37);
  const Realization c = Realization::matrix_monoid(3);
  for (int i = 0; i < 10; ++i) {
    const Vector v = lt::vector_in_ball(rng, 9, 2.0);
    for (double t = 0.0; t <= 3.0; t += 0.5) EXPECT_GT(lt::unflatten(exp_monoid(c, t * v).coords, 3).determinant(), 0.0);
  }
}

TEST(Exp, HalfLineIsHalfComplete) {
  const Realization c = Realization::half_space(1);
  EXPECT_NEAR(exp_monoid(c, Vector::Constant(1, 4.0)).coords(0), 4.0, 1e-12);
  EXPECT_EQ(kind_of([&] { exp_monoid(c, Vector::Constant(1, -1.0)); }), ErrorKind::OutwardVector);
  EXPECT_NEAR(exp_monoid(Realization::half_space(2), Eigen::Vector2d(-3.0, 0.0)).coords(0), -3.0, 1e-12);
}

TEST(Exp, NeedsAMonoid) {
  EXPECT_EQ(kind_of([] { exp_monoid(Realization::order(), Vector::Zero(2)); }), ErrorKind::Unsupported);
}

TEST(Bracket, MatchesMatrixCommutator) {
  lt::Rng rng(38);
  const Realization c = Realization::matrix_monoid(2);
  for (int i = 0; i < 10; ++i) {
    const Vector a = lt::vector_in_ball(rng, 4, 1.0), b = lt::vector_in_ball(rng, 4, 1.0);
    const Matrix am = lt::unflatten(a, 2), bm = lt::unflatten(b, 2);
    const Vector want = lt::flatten(am * bm - bm * am);
    EXPECT_LT(inf_norm(bracket_at_unit(c, kMonoidPoint, section(a), section(b)) - want), 1e-3);
  }
}

TEST(Bracket, JacobiIdentity) {
  lt::Rng rng(39);
  const Realization c = Realization::matrix_monoid(2);
  auto br = [&](const Vector& a, const Vector& b) { return bracket_at_unit(c, kMonoidPoint, section(a), section(b)); };
  for (int i = 0; i < 5; ++i) {
    const Vector a = lt::vector_in_ball(rng, 4, 1.0), b = lt::vector_in_ball(rng, 4, 1.0),
                 d = lt::vector_in_ball(rng, 4, 1.0);
    EXPECT_LT(inf_norm(br(a, br(b, d)) + br(b, br(d, a)) + br(d, br(a, b))), 1e-3);
  }
}

TEST(Bracket, AlgebraMonoidIsTheCommutator) {
  const AlgebraSpec a = AlgebraSpec::upper_triangular_2x2();
  const Realization c = Realization::algebra_monoid(a);
  const Vector x = Vector::Unit(3, 0), y = Vector::Unit(3, 2);
  const Vector want = a.multiply(x, y) - a.multiply(y, x);
  EXPECT_LT(inf_norm(bracket_at_unit(c, kMonoidPoint, section(x), section(y)) - want), 1e-3);
}

TEST(Bracket, AbelianFibresInOrderAndEntropy) {
  EXPECT_LT(inf_norm(bracket_at_unit(Realization::order(), {Vector::Constant(1, 0.5)}, section(Vector::Ones(1)),
                                     section(Vector::Constant(1, 2.0)))),
            1e-6);
  EXPECT_LT(inf_norm(bracket_at_unit(Realization::entropy(2), {Eigen::Vector2d(0.2, 0.5)},
                                     section(Eigen::Vector2d(1, 0)), section(Eigen::Vector2d(0, 1)))),
            1e-6);
}

TEST(Anchor, Shapes) {
  const Matrix order = anchor_matrix(Realization::order(), {Vector::Constant(1, 0.0)});
  ASSERT_EQ(order.rows(), 1);
  ASSERT_EQ(order.cols(), 1);
  EXPECT_NEAR(std::abs(order(0, 0)), 1.0, 1e-6);

  const Realization triv = Realization::trivial(2, MatrixMonoid{2});
  const Matrix left = anchor_matrix(triv, {Eigen::Vector2d(0.3, -1.0)}, Side::Left);
  EXPECT_EQ(left.rows(), 2);
  EXPECT_EQ(left.cols(), 6);
  EXPECT_EQ(numerics::numerical_rank(left), 2);

  EXPECT_EQ(anchor_matrix(Realization::matrix_monoid(2), kMonoidPoint).rows(), 0);
}

TEST(Naturality, DeterminantIntertwinesExponentials) {
  lt::Rng rng(40);
  const std::vector<double> grid{0.1, 0.5, 1.0};
  for (int i = 0; i < 3; ++i) {
    const Vector v = lt::vector_in_ball(rng, 4, 1.0);
    EXPECT_LE(naturality_check(Realization::matrix_monoid(2), Realization::matrix_monoid(1),
                               Homomorphism::Determinant, v, grid),
              1e-6);
  }
}

TEST(Naturality, IdentityAndBoundaryInclusion) {
  const std::vector<double> grid{0.0, 0.5, 1.0};
  EXPECT_LE(naturality_check(Realization::matrix_monoid(2), Realization::matrix_monoid(2), Homomorphism::Identity,
                             Eigen::Vector4d(0.1, 0.2, -0.3, 0.4), grid),
            1e-9);
  EXPECT_LE(naturality_check(Realization::half_space(2), Realization::half_space(2), Homomorphism::BoundaryInclusion,
                             Eigen::Vector2d(-1.5, 0.0), grid),
            1e-9);
  EXPECT_EQ(kind_of([&] {
              naturality_check(Realization::half_space(2), Realization::half_space(2),
                               Homomorphism::BoundaryInclusion, Eigen::Vector2d(0.0, 1.0), grid);
            }),
            ErrorKind::OutwardVector);
  EXPECT_EQ(kind_of([&] {
              naturality_check(Realization::matrix_monoid(2), Realization::matrix_monoid(2),
                               Homomorphism::Determinant, Eigen::Vector4d(0, 0, 0, 0), grid);
            }),
            ErrorKind::Unsupported);
}

TEST(Sections, Validation) {
  const Realization order = Realization::order();
  EXPECT_EQ(kind_of([&] { flow_left_invariant(order, section(Eigen::Vector2d(1, 1)), {Eigen::Vector2d(1, 0)}, 1.0); }),
            ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([&] {
              flow_left_invariant(order, {SectionSpec::Mode::MonoidVector, Vector::Ones(1)}, {Eigen::Vector2d(1, 0)}, 1.0);
            }),
            ErrorKind::Unsupported);
  EXPECT_EQ(kind_of([&] { flow_left_invariant(order, section(Vector::Ones(1)), {Eigen::Vector2d(0, 1)}, 1.0); }),
            ErrorKind::InvalidMorphism);
}

TEST(Sections, InvariantFieldAtTheUnitIsTheFrameVector) {
  const Realization c = Realization::entropy(2);
  const ObjectPoint x{Eigen::Vector2d(0.2, 0.5)};
  const Vector alpha = Eigen::Vector2d(0.3, -0.7);
  const Vector at_unit = left_invariant_eval(c, section(alpha), unit(c, x));
  EXPECT_LT(inf_norm(at_unit - to_ambient(c, {x, alpha})), 1e-6);
}
