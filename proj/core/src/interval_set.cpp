#include "ietrel/interval_set.hpp"

#include <algorithm>

namespace ietrel {

IntervalSet::IntervalSet(std::vector<Interval> parts) {
  const Scalar zero(0);
  const Scalar one(1);
  std::vector<Interval> clipped;
  clipped.reserve(parts.size());
  for (auto& p : parts) {
    Scalar lo = max(p.lo, zero);
    Scalar hi = min(p.hi, one);
    if (lo < hi) clipped.push_back({std::move(lo), std::move(hi)});
  }
  std::sort(clipped.begin(), clipped.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  for (auto& p : clipped) {
    if (!parts_.empty() && p.lo <= parts_.back().hi) {
      if (parts_.back().hi < p.hi) parts_.back().hi = std::move(p.hi);
    } else {
      parts_.push_back(std::move(p));
    }
  }
}

IntervalSet IntervalSet::full() { return IntervalSet({Interval{Scalar(0), Scalar(1)}}); }

Scalar IntervalSet::measure() const {
  Scalar m(0);
  for (const auto& p : parts_) m += p.length();
  return m;
}

bool IntervalSet::contains(const Scalar& x) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                             [](const Scalar& v, const Interval& p) { return v < p.lo; });
  if (it == parts_.begin()) return false;
  return x < std::prev(it)->hi;
}

bool IntervalSet::is_subset_of(const IntervalSet& other) const {
  // Each part must sit inside a single part of `other` (parts are maximal).
  std::size_t j = 0;
  for (const auto& p : parts_) {
    while (j < other.parts_.size() && other.parts_[j].hi <= p.lo) ++j;
    if (j == other.parts_.size()) return false;
    const auto& q = other.parts_[j];
    if (p.lo < q.lo || q.hi < p.hi) return false;
  }
  return true;
}

bool IntervalSet::intersects(const IntervalSet& other) const { return !intersect(other).empty(); }

IntervalSet IntervalSet::complement() const {
  std::vector<Interval> out;
  Scalar cursor(0);
  for (const auto& p : parts_) {
    if (cursor < p.lo) out.push_back({cursor, p.lo});
    cursor = p.hi;
  }
  if (cursor < Scalar(1)) out.push_back({cursor, Scalar(1)});
  IntervalSet result;
  result.parts_ = std::move(out);
  return result;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    const auto& a = parts_[i];
    const auto& b = other.parts_[j];
    const Scalar& lo = a.lo < b.lo ? b.lo : a.lo;
    const Scalar& hi = a.hi < b.hi ? a.hi : b.hi;
    if (lo < hi) out.push_back({lo, hi});
    if (a.hi < b.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::minus(const IntervalSet& other) const { return intersect(other.complement()); }

std::ostream& operator<<(std::ostream& os, const IntervalSet& s) {
  if (s.empty()) return os << "{}";
  for (std::size_t i = 0; i < s.parts().size(); ++i) {
    if (i) os << " u ";
    os << '[' << s.parts()[i].lo << ", " << s.parts()[i].hi << ')';
  }
  return os;
}

}  // namespace ietrel
