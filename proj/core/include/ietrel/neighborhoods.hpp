#pragma once

#include <initializer_list>
#include <ostream>
#include <vector>

#include "ietrel/iet.hpp"
#include "ietrel/interval_set.hpp"
#include "ietrel/scalar.hpp"

namespace ietrel {

/// Sorted set of distinct points of [0, 1].
class PointSet {
public:
  PointSet() = default;
  explicit PointSet(std::vector<Scalar> points);
  PointSet(std::initializer_list<Scalar> points) : PointSet(std::vector<Scalar>(points)) {}

  [[nodiscard]] const std::vector<Scalar>& points() const { return points_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] bool empty() const { return points_.empty(); }
  [[nodiscard]] bool contains(const Scalar& x) const;
  [[nodiscard]] bool is_subset_of(const PointSet& other) const;
  [[nodiscard]] PointSet unite(const PointSet& other) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

private:
  std::vector<Scalar> points_;
};

std::ostream& operator<<(std::ostream& os, const PointSet& p);

/// x mod 1/q, in [0, 1/q).
Scalar mod_grid(const Scalar& x, long q);

/// The grid {0, 1/q, ..., 1}.
PointSet grid_points(long q);

/// Representatives modulo 1/q, deduplicated; 1 projects to 0.
PointSet project_mod_q(const PointSet& p, long q);

/// Discontinuities of t^{-1} united with t({0, 1/q, ..., (q-1)/q}) and the grid.
PointSet x_q(const Iet& t, long q);
PointSet y_q(const Iet& t, long q);
/// The q translates of y_q by multiples of 1/q, plus the point 1.
PointSet z_q(const Iet& t, long q);

/// Shortest component of [0, 1/q) minus y_q(t). Zero exactly when t is
/// q-rational (then y_q(t) = {0}, and zero is the convention used here).
Scalar alpha_q(const Iet& t, long q);

/// alpha_q(r, q) > eps.
bool in_u_eps_q(const Iet& r, const Scalar& eps, long q);

/// Union of [p - eps, p + eps) over p, clipped to [0, 1). Stands in for the
/// open neighbourhood; the boundary points are immaterial to every strict
/// inequality checked against these sets.
IntervalSet neighborhood(const PointSet& p, const Scalar& eps);

/// Exact image of a set under an IET.
IntervalSet image_set(const Iet& t, const IntervalSet& a);

/// Points of `p` pairwise distinct modulo 1/q.
bool distinct_mod_q(const PointSet& p, long q);

/// Delta(t^{-1}) u {0} pairwise distinct modulo 1/q.
bool inverse_discontinuities_distinct_mod_q(const Iet& t, long q);

/// Hypothesis stated with Delta(t) instead: discontinuities of t pairwise
/// distinct modulo 1/q.
bool discontinuities_distinct_mod_q(const Iet& t, long q);

}  // namespace ietrel
