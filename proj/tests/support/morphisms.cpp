#include "morphisms.hpp"

#include <cmath>
#include <stdexcept>

namespace liecat::testing {

Vector random_monoid_element(const Monoid& m, Rng& rng) {
  Vector g = gaussian_matrix(rng, monoid::dim(m), 1).col(0);
  if (const auto* hs = std::get_if<HalfSpaceMonoid>(&m)) g(hs->n - 1) = std::abs(g(hs->n - 1));
  return g;
}

namespace {

Vector concat(const Vector& a, const Vector& b, const Vector& c = Vector(0)) {
  Vector v(a.size() + b.size() + c.size());
  v << a, b, c;
  return v;
}

}  // namespace

std::array<MorphismPoint, 3> composable_triple(const Realization& c, Rng& rng) {
  if (const auto m = c.as_monoid())
    return {MorphismPoint{random_monoid_element(*m, rng)}, MorphismPoint{random_monoid_element(*m, rng)},
            MorphismPoint{random_monoid_element(*m, rng)}};

  if (const auto* tc = std::get_if<TrivialCategory>(&c.family())) {
    std::array<Vector, 4> x;
    for (auto& xi : x) xi = gaussian_matrix(rng, tc->dim_objects, 1).col(0);
    auto arrow = [&](int to, int from) {
      return MorphismPoint{concat(x[to], random_monoid_element(tc->inner, rng), x[from])};
    };
    return {arrow(3, 2), arrow(2, 1), arrow(1, 0)};
  }
  if (std::holds_alternative<OrderCategory>(c.family())) {
    std::array<double, 4> x;
    x[0] = uniform(rng, -2.0, 2.0);
    for (int i = 1; i < 4; ++i) x[i] = x[i - 1] + (rng() % 4 == 0 ? 0.0 : uniform(rng, 0.0, 1.0));
    auto arrow = [&](int to, int from) { return MorphismPoint{Eigen::Vector2d(x[to], x[from])}; };
    return {arrow(3, 2), arrow(2, 1), arrow(1, 0)};
  }
  if (const auto* ec = std::get_if<EntropyCategory>(&c.family())) {
    const auto chain = entropy_chain(rng, ec->n, 4);
    auto arrow = [&](int to, int from) {
      return MorphismPoint{concat(chain[to].tail(ec->n), chain[from].tail(ec->n))};
    };
    return {arrow(0, 1), arrow(1, 2), arrow(2, 3)};
  }
  if (const auto* ac = std::get_if<ActionCategory>(&c.family())) {
    const Vector x = gaussian_matrix(rng, ac->dim_objects, 1).col(0);
    const Vector a3 = random_monoid_element(ac->monoid, rng);
    const Vector a2 = random_monoid_element(ac->monoid, rng);
    const Vector a1 = random_monoid_element(ac->monoid, rng);
    const Vector x2 = apply_action(*ac, a3, x);
    const Vector x3 = apply_action(*ac, a2, x2);
    return {MorphismPoint{concat(a1, x3)}, MorphismPoint{concat(a2, x2)}, MorphismPoint{concat(a3, x)}};
  }
  throw std::logic_error("no sampler for family");
}

std::vector<Realization> sample_realizations() {
  return {
      Realization::matrix_monoid(2),
      Realization::matrix_monoid(3),
      Realization::algebra_monoid(AlgebraSpec::upper_triangular_2x2()),
      Realization::half_space(1),
      Realization::half_space(2),
      Realization::trivial(2, MatrixMonoid{2}),
      Realization::trivial(1, AlgebraMonoid{AlgebraSpec::upper_triangular_2x2()}),
      Realization::order(),
      Realization::entropy(2),
      Realization::entropy(3),
      Realization::action(MatrixMonoid{2}, BuiltinAction::Linear, 2),
      Realization::action(MatrixMonoid{1}, BuiltinAction::Scale, 2),
      Realization::action(HalfSpaceMonoid{2}, BuiltinAction::Translate, 2),
  };
}

}  // namespace liecat::testing
