#include "liecat/ranks.hpp"

#include <cmath>
#include <optional>
#include <random>

#include "liecat/thermo.hpp"

namespace liecat {
namespace {

double chart_entropy(const Vector& chart) { return thermo::entropy(thermo::Configuration::from_chart(chart)); }

// Rank of the translation by g at h, restricted to the fibre tangent at h.
int translation_rank(const Realization& c, const Vector& g, const Vector& h, Side side, const ToleranceConfig& tol) {
  if (const auto m = c.as_monoid()) {
    const Matrix d = side == Side::Left ? monoid::left_translation(*m, g) : monoid::right_translation(*m, g);
    return numerics::numerical_rank(d, tol);
  }
  const Matrix frame = numerics::nullspace_basis(
      side == Side::Left ? target_jacobian(c, h, tol) : source_jacobian(c, h, tol), tol);
  if (frame.cols() == 0) return 0;

  const VectorMap translate = [&](const Vector& coeffs) -> Vector {
    const Vector moved = h + frame * coeffs;
    return side == Side::Left ? c.compose_coords(g, moved) : c.compose_coords(moved, g);
  };
  const DomainPredicate domain = [&](const Vector& coeffs) { return c.is_valid_morphism(h + frame * coeffs); };
  const Matrix jac = numerics::fd_jacobian(translate, Vector::Zero(frame.cols()), tol, domain);
  return numerics::numerical_rank(jac, tol);
}

// Random point of the t-fibre (Left) or s-fibre (Right) over `object`, near
// its unit.
std::optional<Vector> sample_fibre(const Realization& c, const Vector& object, Side side, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto noise = [&](Eigen::Index n, double scale) {
    Vector v(n);
    for (auto& x : v) x = scale * gauss(rng);
    return v;
  };
  constexpr double scale = 0.1;

  return std::visit(
      [&](const auto& f) -> std::optional<Vector> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, MatrixMonoid> || std::is_same_v<T, AlgebraMonoid> ||
                      std::is_same_v<T, HalfSpaceMonoid>) {
          const Monoid m = f;
          Vector h = monoid::identity(m) + noise(monoid::dim(m), scale);
          if constexpr (std::is_same_v<T, HalfSpaceMonoid>) h(f.n - 1) = std::abs(h(f.n - 1));
          return h;
        } else if constexpr (std::is_same_v<T, OrderCategory>) {
          const double step = std::abs(scale * gauss(rng));
          Vector h(2);
          if (side == Side::Left)
            h << object(0), object(0) - step;
          else
            h << object(0) + step, object(0);
          return h;
        } else if constexpr (std::is_same_v<T, EntropyCategory>) {
          const double p0 = 1.0 - object.sum();
          const double margin = std::min(p0, object.minCoeff());
          for (int attempt = 0; attempt < 100; ++attempt) {
            const Vector step = noise(f.n, 0.25 * margin);
            for (const double sign : {1.0, -1.0}) {
              Vector h(2 * f.n);
              if (side == Side::Left)
                h << object, object + sign * step;
              else
                h << object + sign * step, object;
              if (c.is_valid_morphism(h)) return h;
            }
          }
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, TrivialCategory>) {
          const int dx = f.dim_objects;
          const int dm = monoid::dim(f.inner);
          Vector inner = monoid::identity(f.inner) + noise(dm, scale);
          if (const auto* hs = std::get_if<HalfSpaceMonoid>(&f.inner)) inner(hs->n - 1) = std::abs(inner(hs->n - 1));
          Vector h(2 * dx + dm);
          if (side == Side::Left)
            h << object, inner, object + noise(dx, scale);
          else
            h << object + noise(dx, scale), inner, object;
          return h;
        } else {
          throw Error(ErrorKind::SamplerUnavailable, "no fibre sampler for the " + c.family_name() + " family");
        }
      },
      c.family());
}

// Uniform sample in the infinity-norm ball of the given radius.
Vector ball_sample(const Vector& centre, double radius, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-radius, radius);
  Vector v = centre;
  for (auto& x : v) x += uni(rng);
  return v;
}

Vector monoid_core_sample(const Monoid& m, const Vector& g, double radius, std::mt19937_64& rng) {
  Vector out = ball_sample(g, radius, rng);
  if (const auto* hs = std::get_if<HalfSpaceMonoid>(&m)) out(hs->n - 1) = 0.0;
  return out;
}

// Point (q', p') near (q, p) with S(q') = S(p') and S(q') >= S(p'),
// found by bisection along a random direction.
std::optional<Vector> entropy_level_sample(const Realization& c, const Vector& g, int n, double radius,
                                           std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const Vector q = g.head(n);
  const Vector p = g.tail(n);
  for (int attempt = 0; attempt < 200; ++attempt) {
    const Vector q2 = ball_sample(q, 0.5 * radius, rng);
    Vector q_full(n + 1);
    q_full << 1.0 - q2.sum(), q2;
    if (!thermo::is_valid_object(q_full, n)) continue;
    const double level = chart_entropy(q2);

    Vector dir(n);
    for (auto& x : dir) x = uni(rng);
    dir /= dir.cwiseAbs().maxCoeff();

    auto f = [&](double s) { return chart_entropy(p + s * dir) - level; };
    double lo = -0.5 * radius;
    double hi = 0.5 * radius;
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (!(f_lo <= 0.0 && f_hi >= 0.0) && !(f_lo >= 0.0 && f_hi <= 0.0)) continue;
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      const double f_mid = f(mid);
      if ((f_mid <= 0.0) == (f_lo <= 0.0)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
        f_hi = f_mid;
      }
    }
    // Keep the endpoint on the feasible side S(p') <= S(q').
    const double s = f_lo <= 0.0 ? lo : hi;
    Vector h(2 * n);
    h << q2, p + s * dir;
    if (c.is_valid_morphism(h)) return h;
  }
  return std::nullopt;
}

}  // namespace

int left_rank(const Realization& c, const MorphismPoint& g, const ToleranceConfig& tol) {
  require_valid(c, g);
  const Vector u = c.unit_coords(c.source_coords(g.coords));
  return translation_rank(c, g.coords, u, Side::Left, tol);
}

int right_rank(const Realization& c, const MorphismPoint& g, const ToleranceConfig& tol) {
  require_valid(c, g);
  const Vector u = c.unit_coords(c.target_coords(g.coords));
  return translation_rank(c, g.coords, u, Side::Right, tol);
}

int left_rank_at(const Realization& c, const MorphismPoint& g, const MorphismPoint& h, const ToleranceConfig& tol) {
  require_valid(c, g);
  require_valid(c, h);
  if (!is_composable(c, g, h)) throw Error(ErrorKind::NotComposable, "h is not in the t-fibre over s(g)");
  return translation_rank(c, g.coords, h.coords, Side::Left, tol);
}

int right_rank_at(const Realization& c, const MorphismPoint& g, const MorphismPoint& h, const ToleranceConfig& tol) {
  require_valid(c, g);
  require_valid(c, h);
  if (!is_composable(c, h, g)) throw Error(ErrorKind::NotComposable, "h is not in the s-fibre over t(g)");
  return translation_rank(c, g.coords, h.coords, Side::Right, tol);
}

RankReport rank_report(const Realization& c, const MorphismPoint& g, const ToleranceConfig& tol) {
  RankReport report;
  report.left_rank = left_rank(c, g, tol);
  report.right_rank = right_rank(c, g, tol);
  report.delta = c.delta();
  report.regular = report.left_rank == report.delta && report.right_rank == report.delta;
  report.tolerance = tol;
  return report;
}

bool constant_rank_probe(const Realization& c, const MorphismPoint& g, int samples, std::uint64_t seed,
                         const ToleranceConfig& tol) {
  if (samples < 1) throw Error(ErrorKind::BadDimension, "constant_rank_probe needs at least one sample");
  require_valid(c, g);
  if (std::holds_alternative<ActionCategory>(c.family()))
    throw Error(ErrorKind::SamplerUnavailable, "no fibre sampler for the action family");

  const int left_ref = left_rank(c, g, tol);
  const int right_ref = right_rank(c, g, tol);
  const Vector s = c.source_coords(g.coords);
  const Vector t = c.target_coords(g.coords);

  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const auto left_h = sample_fibre(c, s, Side::Left, rng);
    const auto right_h = sample_fibre(c, t, Side::Right, rng);
    if (!left_h || !right_h) throw Error(ErrorKind::SamplerUnavailable, "fibre sampler found no valid point");
    if (translation_rank(c, g.coords, *left_h, Side::Left, tol) != left_ref) return false;
    if (translation_rank(c, g.coords, *right_h, Side::Right, tol) != right_ref) return false;
  }
  return true;
}

bool is_invertible(const Realization& c, const MorphismPoint& g, const ToleranceConfig& tol) {
  require_valid(c, g);
  const Vector& x = g.coords;
  return std::visit(
      [&](const auto& f) -> bool {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, MatrixMonoid> || std::is_same_v<T, AlgebraMonoid> ||
                      std::is_same_v<T, HalfSpaceMonoid>) {
          return monoid::is_invertible(Monoid(f), x, tol);
        } else if constexpr (std::is_same_v<T, TrivialCategory>) {
          return monoid::is_invertible(f.inner, x.segment(f.dim_objects, monoid::dim(f.inner)), tol);
        } else if constexpr (std::is_same_v<T, OrderCategory>) {
          return x(0) == x(1);
        } else if constexpr (std::is_same_v<T, EntropyCategory>) {
          return std::abs(chart_entropy(x.head(f.n)) - chart_entropy(x.tail(f.n))) <= 1e-12;
        } else {
          return monoid::is_invertible(f.monoid, x.head(monoid::dim(f.monoid)), tol);
        }
      },
      c.family());
}

double core_probe(const Realization& c, const MorphismPoint& g, double radius, int samples, std::uint64_t seed,
                  const ToleranceConfig& tol) {
  if (samples < 1) throw Error(ErrorKind::BadDimension, "core_probe needs at least one sample");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw Error(ErrorKind::BadDimension, "radius must be positive");
  if (!is_invertible(c, g, tol)) throw Error(ErrorKind::NotInvertible, "core_probe needs an invertible morphism");

  std::mt19937_64 rng(seed);
  auto draw = [&]() -> std::optional<Vector> {
    return std::visit(
        [&](const auto& f) -> std::optional<Vector> {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, MatrixMonoid> || std::is_same_v<T, AlgebraMonoid> ||
                        std::is_same_v<T, HalfSpaceMonoid>) {
            return monoid_core_sample(Monoid(f), g.coords, radius, rng);
          } else if constexpr (std::is_same_v<T, TrivialCategory>) {
            Vector h = ball_sample(g.coords, radius, rng);
            if (const auto* hs = std::get_if<HalfSpaceMonoid>(&f.inner)) h(f.dim_objects + hs->n - 1) = 0.0;
            return h;
          } else if constexpr (std::is_same_v<T, OrderCategory>) {
            std::uniform_real_distribution<double> uni(-radius, radius);
            return Vector::Constant(2, g.coords(0) + uni(rng));
          } else if constexpr (std::is_same_v<T, EntropyCategory>) {
            return entropy_level_sample(c, g.coords, f.n, radius, rng);
          } else {
            const int dm = monoid::dim(f.monoid);
            Vector h = ball_sample(g.coords, radius, rng);
            h.head(dm) = monoid_core_sample(f.monoid, g.coords.head(dm), radius, rng);
            return h;
          }
        },
        c.family());
  };

  int accepted = 0;
  int invertible = 0;
  for (long attempt = 0; accepted < samples && attempt < 1000L * samples; ++attempt) {
    const auto h = draw();
    if (!h || !c.is_valid_morphism(*h)) continue;
    ++accepted;
    if (is_invertible(c, MorphismPoint{*h}, tol)) ++invertible;
  }
  if (accepted < samples) throw Error(ErrorKind::SamplerUnavailable, "could not draw enough valid morphisms");
  return static_cast<double>(invertible) / static_cast<double>(accepted);
}

}  // namespace liecat
