#pragma once

#include <initializer_list>
#include <ostream>
#include <vector>

#include "ietrel/scalar.hpp"

namespace ietrel {

/// Half-open interval [lo, hi).
struct Interval {
  Scalar lo;
  Scalar hi;

  [[nodiscard]] bool empty() const { return !(lo < hi); }
  [[nodiscard]] Scalar length() const { return hi - lo; }
  [[nodiscard]] bool contains(const Scalar& x) const { return lo <= x && x < hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of half-open intervals inside [0, 1).
///
/// Stored sorted, disjoint and non-adjacent: hi of one part is strictly below
/// lo of the next. Construction clips to [0, 1) and merges overlaps.
class IntervalSet {
public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts);
  IntervalSet(std::initializer_list<Interval> parts) : IntervalSet(std::vector<Interval>(parts)) {}

  static IntervalSet full();

  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] const std::vector<Interval>& parts() const { return parts_; }
  [[nodiscard]] std::size_t size() const { return parts_.size(); }
  [[nodiscard]] Scalar measure() const;

  [[nodiscard]] bool contains(const Scalar& x) const;
  [[nodiscard]] bool is_subset_of(const IntervalSet& other) const;
  [[nodiscard]] bool intersects(const IntervalSet& other) const;

  [[nodiscard]] IntervalSet complement() const;
  [[nodiscard]] IntervalSet unite(const IntervalSet& other) const;
  [[nodiscard]] IntervalSet intersect(const IntervalSet& other) const;
  [[nodiscard]] IntervalSet minus(const IntervalSet& other) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
  std::vector<Interval> parts_;
};

std::ostream& operator<<(std::ostream& os, const IntervalSet& s);

}  // namespace ietrel
