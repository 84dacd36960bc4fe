#include <gtest/gtest.h>

#include "liecat/errors.hpp"
#include "liecat/flows.hpp"
#include "liecat/ranks.hpp"
#include "morphisms.hpp"

using namespace liecat;
namespace lt = liecat::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidSpec;
}

}  // namespace

TEST(MatrixRanks, EqualNTimesMatrixRank) {
  lt::Rng rng(21);
  for (int n = 1; n <= 4; ++n) {
    const Realization c = Realization::matrix_monoid(n);
    for (int r = 0; r <= n; ++r) {
      for (int i = 0; i < 5; ++i) {
        const Matrix a = lt::matrix_of_rank(rng, n, r);
        const auto rep = rank_report(c, MorphismPoint{lt::flatten(a)});
        EXPECT_EQ(rep.left_rank, n * numerics::numerical_rank(a));
        EXPECT_EQ(rep.right_rank, n * numerics::numerical_rank(a));
        EXPECT_EQ(rep.regular, r == n);
        EXPECT_EQ(rep.delta, n * n);
      }
    }
  }
}

TEST(AlgebraRanks, UpperTriangularIsLopsided) {
  const Realization c = Realization::algebra_monoid(AlgebraSpec::upper_triangular_2x2());
  EXPECT_EQ(left_rank(c, {Vector::Unit(3, 0)}), 2);
  EXPECT_EQ(right_rank(c, {Vector::Unit(3, 0)}), 1);
  EXPECT_EQ(left_rank(c, {Vector::Unit(3, 1)}), 1);
  EXPECT_EQ(right_rank(c, {Vector::Unit(3, 1)}), 2);
  EXPECT_FALSE(rank_report(c, {Vector::Unit(3, 0)}).regular);
  EXPECT_TRUE(rank_report(c, {Eigen::Vector3d(1.0, 2.0, 5.0)}).regular);
}

class RankFamily : public ::testing::TestWithParam<int> {
 protected:
  Realization c = lt::sample_realizations().at(GetParam());
};

TEST_P(RankFamily, MonotoneUnderComposition) {
  lt::Rng rng(600 + GetParam());
  for (int i = 0; i < 30; ++i) {
    const auto [g, h, k] = lt::composable_triple(c, rng);
    const MorphismPoint gh = compose(c, g, h);
    EXPECT_LE(left_rank(c, gh), left_rank(c, h)) << c.family_name();
    EXPECT_LE(right_rank(c, gh), right_rank(c, g)) << c.family_name();
  }
}

TEST_P(RankFamily, BoundedBelowByAnchorRank) {
  lt::Rng rng(700 + GetParam());
  for (int i = 0; i < 20; ++i) {
    const MorphismPoint g = lt::composable_triple(c, rng)[0];
    const Matrix left_anchor = anchor_matrix(c, source(c, g), Side::Left);
    const Matrix right_anchor = anchor_matrix(c, target(c, g), Side::Right);
    EXPECT_GE(left_rank(c, g), numerics::numerical_rank(left_anchor)) << c.family_name();
    EXPECT_GE(right_rank(c, g), numerics::numerical_rank(right_anchor)) << c.family_name();
    EXPECT_LE(left_rank(c, g), c.delta());
  }
}

TEST_P(RankFamily, UnitsAreRegular) {
  lt::Rng rng(800 + GetParam());
  const MorphismPoint g = lt::composable_triple(c, rng)[0];
  const MorphismPoint u = unit(c, source(c, g));
  EXPECT_TRUE(is_invertible(c, u));
  EXPECT_TRUE(rank_report(c, u).regular) << c.family_name();
}

INSTANTIATE_TEST_SUITE_P(Families, RankFamily,
                         ::testing::Range(0, static_cast<int>(lt::sample_realizations().size())));

TEST(RankProperty, InvertibleImpliesRegular) {
  lt::Rng rng(22);
  const Realization mat = Realization::matrix_monoid(3);
  for (int i = 0; i < 50; ++i) {
    const MorphismPoint g{lt::flatten(lt::gaussian_matrix(rng, 3, 3))};
    if (is_invertible(mat, g)) {
      EXPECT_TRUE(rank_report(mat, g).regular);
    }
  }
  const Realization order = Realization::order();
  EXPECT_TRUE(rank_report(order, {Eigen::Vector2d(0.3, 0.3)}).regular);
  const Realization ent = Realization::entropy(2);
  Vector same(4);
  same << 0.2, 0.5, 0.5, 0.2;  // a permutation: zero entropy change
  ASSERT_TRUE(is_invertible(ent, {same}));
  EXPECT_TRUE(rank_report(ent, {same}).regular);
}

TEST(RankProperty, ExtendableFamiliesHaveFullConstantRank) {
  lt::Rng rng(23);
  for (const auto& c : {Realization::order(), Realization::entropy(2), Realization::entropy(3)}) {
    for (int i = 0; i < 20; ++i) {
      const MorphismPoint g = lt::composable_triple(c, rng)[0];
      EXPECT_TRUE(rank_report(c, g).regular) << c.family_name();
      EXPECT_TRUE(constant_rank_probe(c, g, 10, rng())) << c.family_name();
    }
  }
  const Realization gl = Realization::matrix_monoid(2);
  for (int i = 0; i < 20; ++i) {
    const MorphismPoint g{lt::flatten(lt::matrix_of_rank(rng, 2, 2))};
    EXPECT_TRUE(rank_report(gl, g).regular);
    EXPECT_TRUE(constant_rank_probe(gl, g, 10, rng()));
  }
}

TEST(RankProperty, RankAtInvertibleMorphismsMatchesRankAtUnits) {
  lt::Rng rng(24);
  const Realization c = Realization::matrix_monoid(2);
  for (int i = 0; i < 20; ++i) {
    const MorphismPoint g{lt::flatten(lt::matrix_of_rank(rng, 2, static_cast<int>(rng() % 3)))};
    const MorphismPoint h{lt::flatten(lt::matrix_of_rank(rng, 2, 2))};
    EXPECT_EQ(left_rank_at(c, g, h), left_rank(c, g));
    EXPECT_EQ(right_rank_at(c, g, h), right_rank(c, g));
  }
  const Realization order = Realization::order();
  EXPECT_EQ(left_rank_at(order, {Eigen::Vector2d(2.0, 1.0)}, {Eigen::Vector2d(1.0, 1.0)}), 1);
}

TEST(RankProperty, ActionSamplerIsUnavailable) {
  const Realization c = Realization::action(MatrixMonoid{1}, BuiltinAction::Scale, 2);
  EXPECT_EQ(kind_of([&] { constant_rank_probe(c, {Eigen::Vector3d(2.0, 1.0, 1.0)}, 5, 1); }),
            ErrorKind::SamplerUnavailable);
}

TEST(Invertibility, ClosedForms) {
  const Realization order = Realization::order();
  EXPECT_TRUE(is_invertible(order, {Eigen::Vector2d(1.5, 1.5)}));
  EXPECT_FALSE(is_invertible(order, {Eigen::Vector2d(1.5, 1.4999999)}));

  const Realization mat = Realization::matrix_monoid(2);
  EXPECT_TRUE(is_invertible(mat, {Eigen::Vector4d(1e-3, 0, 0, 1e-3)}));
  EXPECT_FALSE(is_invertible(mat, {Eigen::Vector4d(1, 2, 2, 4)}));

  const Realization alg = Realization::algebra_monoid(AlgebraSpec::upper_triangular_2x2());
  EXPECT_TRUE(is_invertible(alg, {Eigen::Vector3d(2, 3, 7)}));
  EXPECT_FALSE(is_invertible(alg, {Eigen::Vector3d(2, 0, 7)}));

  const Realization half = Realization::half_space(2);
  EXPECT_TRUE(is_invertible(half, {Eigen::Vector2d(-4.0, 0.0)}));
  EXPECT_FALSE(is_invertible(half, {Eigen::Vector2d(-4.0, 1e-9)}));

  const Realization triv = Realization::trivial(1, MatrixMonoid{1});
  EXPECT_TRUE(is_invertible(triv, {Eigen::Vector3d(5.0, 2.0, -1.0)}));
  EXPECT_FALSE(is_invertible(triv, {Eigen::Vector3d(5.0, 0.0, -1.0)}));
}

TEST(CoreProbe, OpenCoreNeighbourhoodsAreInvertible) {
  lt::Rng rng(25);
  const Realization mat = Realization::matrix_monoid(3);
  EXPECT_EQ(core_probe(mat, {lt::flatten(lt::matrix_of_rank(rng, 3, 3))}, 0.01, 200, 1), 1.0);
  EXPECT_EQ(core_probe(Realization::order(), {Eigen::Vector2d(0.2, 0.2)}, 0.01, 200, 2), 1.0);
  Vector same(4);
  same << 0.2, 0.5, 0.5, 0.2;
  EXPECT_EQ(core_probe(Realization::entropy(2), {same}, 0.01, 200, 3), 1.0);
  EXPECT_EQ(core_probe(Realization::half_space(2), {Eigen::Vector2d(1.0, 0.0)}, 0.01, 200, 4), 1.0);
  EXPECT_EQ(core_probe(Realization::algebra_monoid(AlgebraSpec::upper_triangular_2x2()),
                       {Eigen::Vector3d(1.0, 1.0, 0.0)}, 0.01, 200, 5),
            1.0);
}

TEST(CoreProbe, NeedsAnInvertibleCentre) {
  EXPECT_EQ(kind_of([] { core_probe(Realization::order(), {Eigen::Vector2d(1.0, 0.0)}, 0.01, 10, 1); }),
            ErrorKind::NotInvertible);
}

TEST(CoreProbe, DeterministicForFixedSeed) {
  const Realization mat = Realization::matrix_monoid(2);
  const MorphismPoint near_singular{Eigen::Vector4d(1e-3, 0.0, 0.0, 1e-3)};
  const double a = core_probe(mat, near_singular, 0.01, 100, 42);
  EXPECT_EQ(a, core_probe(mat, near_singular, 0.01, 100, 42));
}
