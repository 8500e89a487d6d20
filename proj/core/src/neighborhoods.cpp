#include "ietrel/neighborhoods.hpp"

#include <algorithm>
#include <stdexcept>

namespace ietrel {

namespace {

void require_positive(long q) {
  if (q < 1) throw std::invalid_argument("q must be a positive integer");
}

}  // namespace

PointSet::PointSet(std::vector<Scalar> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(const Scalar& x) const { return std::binary_search(points_.begin(), points_.end(), x); }

bool PointSet::is_subset_of(const PointSet& other) const {
  return std::includes(other.points_.begin(), other.points_.end(), points_.begin(), points_.end());
}

PointSet PointSet::unite(const PointSet& other) const {
  std::vector<Scalar> all = points_;
  all.insert(all.end(), other.points_.begin(), other.points_.end());
  return PointSet(std::move(all));
}

std::ostream& operator<<(std::ostream& os, const PointSet& p) {
  os << '{';
  for (std::size_t i = 0; i < p.points().size(); ++i) {
    if (i) os << ", ";
    os << p.points()[i];
  }
  return os << '}';
}

Scalar mod_grid(const Scalar& x, long q) {
  require_positive(q);
  Scalar scaled = x * Scalar(q);
  mpz_class cell = scaled.floor();
  return x - Scalar(mpq_class(cell, q));
}

PointSet grid_points(long q) {
  require_positive(q);
  std::vector<Scalar> pts;
  pts.reserve(static_cast<std::size_t>(q) + 1);
  for (long i = 0; i <= q; ++i) pts.emplace_back(i, q);
  return PointSet(std::move(pts));
}

PointSet project_mod_q(const PointSet& p, long q) {
  std::vector<Scalar> out;
  out.reserve(p.size());
  for (const auto& x : p.points()) out.push_back(mod_grid(x, q));
  return PointSet(std::move(out));
}

PointSet x_q(const Iet& t, long q) {
  require_positive(q);
  std::vector<Scalar> pts = inverse(t).breakpoints();
  for (long i = 0; i < q; ++i) pts.push_back(t(Scalar(i, q)));
  for (long i = 0; i <= q; ++i) pts.emplace_back(i, q);
  return PointSet(std::move(pts));
}

PointSet y_q(const Iet& t, long q) { return project_mod_q(x_q(t, q), q); }

PointSet z_q(const Iet& t, long q) {
  PointSet y = y_q(t, q);
  std::vector<Scalar> pts;
  pts.reserve(y.size() * static_cast<std::size_t>(q) + 1);
  for (long k = 0; k < q; ++k) {
    Scalar shift(k, q);
    for (const auto& p : y.points()) pts.push_back(p + shift);
  }
  pts.emplace_back(1);
  return PointSet(std::move(pts));
}

Scalar alpha_q(const Iet& t, long q) {
  PointSet y = y_q(t, q);
  const auto& pts = y.points();
  if (pts.size() <= 1) return Scalar(0);
  Scalar best = Scalar(1, q) - pts.back();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Scalar gap = pts[i + 1] - pts[i];
    if (gap < best) best = std::move(gap);
  }
  return best;
}

bool in_u_eps_q(const Iet& r, const Scalar& eps, long q) { return alpha_q(r, q) > eps; }

IntervalSet neighborhood(const PointSet& p, const Scalar& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("neighbourhood radius must be positive");
  std::vector<Interval> parts;
  parts.reserve(p.size());
  for (const auto& x : p.points()) parts.push_back({x - eps, x + eps});
  return IntervalSet(std::move(parts));
}

IntervalSet image_set(const Iet& t, const IntervalSet& a) {
  std::vector<Interval> out;
  const auto& starts = t.starts();
  const std::size_t n = starts.size();
  for (const auto& part : a.parts()) {
    std::size_t i = t.piece_index(part.lo);
    for (; i < n && starts[i] < part.hi; ++i) {
      const Scalar& piece_hi = i + 1 < n ? starts[i + 1] : Scalar(1);
      const Scalar& lo = part.lo < starts[i] ? starts[i] : part.lo;
      const Scalar& hi = piece_hi < part.hi ? piece_hi : part.hi;
      out.push_back({lo + t.translations()[i], hi + t.translations()[i]});
    }
  }
  return IntervalSet(std::move(out));
}

bool distinct_mod_q(const PointSet& p, long q) { return project_mod_q(p, q).size() == p.size(); }

bool inverse_discontinuities_distinct_mod_q(const Iet& t, long q) {
  std::vector<Scalar> pts = inverse(t).breakpoints();
  pts.emplace_back(0);
  return distinct_mod_q(PointSet(std::move(pts)), q);
}

bool discontinuities_distinct_mod_q(const Iet& t, long q) {
  return distinct_mod_q(PointSet(t.breakpoints()), q);
}

}  // namespace ietrel
