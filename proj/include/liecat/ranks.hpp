#pragma once

#include <cstdint>

#include "liecat/categories.hpp"

namespace liecat {

struct RankReport {
  int left_rank = 0;
  int right_rank = 0;
  int delta = 0;
  bool regular = false;
  ToleranceConfig tolerance;
};

/// Rank of d(L_g) at 1_{s(g)} restricted to ker dt. Monoid families use the
/// exact translation matrix; all others a finite-difference Jacobian.
int left_rank(const Realization& c, const MorphismPoint& g, const ToleranceConfig& tol = {});
/// Rank of d(R_g) at 1_{t(g)} restricted to ker ds.
int right_rank(const Realization& c, const MorphismPoint& g, const ToleranceConfig& tol = {});

/// Rank of d(L_g) at an arbitrary h with t(h) = s(g), restricted to ker dt_h.
int left_rank_at(const Realization& c, const MorphismPoint& g, const MorphismPoint& h,
                 const ToleranceConfig& tol = {});
/// Rank of d(R_g) at an arbitrary h with s(h) = t(g), restricted to ker ds_h.
int right_rank_at(const Realization& c, const MorphismPoint& g, const MorphismPoint& h,
                  const ToleranceConfig& tol = {});

RankReport rank_report(const Realization& c, const MorphismPoint& g, const ToleranceConfig& tol = {});

/// Samples `samples` points of the t-fibre over s(g) and of the s-fibre over
/// t(g) near the units and checks that the translation ranks there agree
/// with the ranks at the units. Throws SamplerUnavailable for action
/// categories (their fibres are not linear in the chart).
bool constant_rank_probe(const Realization& c, const MorphismPoint& g, int samples, std::uint64_t seed,
                         const ToleranceConfig& tol = {});

/// Per-family closed-form invertibility test.
bool is_invertible(const Realization& c, const MorphismPoint& g, const ToleranceConfig& tol = {});

/// Fraction of `samples` random morphisms within `radius` (infinity norm) of
/// the invertible g that are invertible. Families whose core sits in the
/// boundary (order, entropy, half-space) sample the boundary stratum: the
/// diagonal, the level set dS = 0, and {x_n = 0} respectively.
/// Throws NotInvertible if g is not invertible.
double core_probe(const Realization& c, const MorphismPoint& g, double radius, int samples, std::uint64_t seed,
                  const ToleranceConfig& tol = {});

}  // namespace liecat
