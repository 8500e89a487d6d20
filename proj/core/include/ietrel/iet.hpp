#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "ietrel/interval_set.hpp"
#include "ietrel/scalar.hpp"

namespace ietrel {

/// Permutation of {1..n}; images()[i] is sigma(i+1).
class Permutation {
public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  [[nodiscard]] int size() const { return static_cast<int>(images_.size()); }
  /// sigma(i), 1-based.
  [[nodiscard]] int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  [[nodiscard]] const std::vector<int>& images() const { return images_; }
  [[nodiscard]] Permutation inverse() const;
  /// Merged form: sigma(i+1) != sigma(i) + 1 for all i < n.
  [[nodiscard]] bool is_canonical() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Interval exchange transformation of [0, 1) in canonical (merged) form.
///
/// Continuity interval i is [beta_{i-1}, beta_i) of length l_i; it is moved to
/// position sigma(i) in the image and translated by omega_i. Adjacent intervals
/// that would be translated by the same amount are merged on construction, so
/// equality of IETs is equality of (lengths, permutation).
class Iet {
public:
  /// The identity on one interval.
  Iet();
  /// Throws std::invalid_argument when lengths are not positive, do not sum to
  /// one, or do not match the permutation size.
  Iet(std::vector<Scalar> lengths, Permutation perm);

  static Iet identity() { return {}; }
  /// x -> x + angle mod 1; angle in [0, 1).
  static Iet rotation(const Scalar& angle);

  /// Builds the canonical IET from consecutive pieces: starts[0] = 0 and the
  /// piece [starts[i], starts[i+1]) translates by translations[i]. The images
  /// must tile [0, 1); checked.
  static Iet from_pieces(std::vector<Scalar> starts, std::vector<Scalar> translations);

  [[nodiscard]] int size() const { return perm_.size(); }
  [[nodiscard]] const std::vector<Scalar>& lengths() const { return lengths_; }
  [[nodiscard]] const Permutation& permutation() const { return perm_; }
  /// beta_0 = 0, beta_1, ..., beta_{n-1}.
  [[nodiscard]] const std::vector<Scalar>& starts() const { return starts_; }
  /// beta_1, ..., beta_{n-1}; in canonical form every one is a discontinuity.
  [[nodiscard]] std::vector<Scalar> breakpoints() const;
  [[nodiscard]] const std::vector<Scalar>& translations() const { return translations_; }
  /// Index (0-based) of the continuity interval containing x.
  [[nodiscard]] std::size_t piece_index(const Scalar& x) const;

  /// Throws std::domain_error when x is outside [0, 1).
  [[nodiscard]] Scalar operator()(const Scalar& x) const;

  [[nodiscard]] bool is_identity() const { return perm_.size() == 1; }

  friend bool operator==(const Iet& s, const Iet& t) {
    return s.perm_ == t.perm_ && s.lengths_ == t.lengths_;
  }

private:
  void derive();

  std::vector<Scalar> lengths_;
  Permutation perm_;
  std::vector<Scalar> starts_;
  std::vector<Scalar> translations_;
};

std::ostream& operator<<(std::ostream& os, const Iet& t);

/// The four structure maps plus the discontinuity set.
struct StructureMaps {
  std::vector<Scalar> lengths;
  std::vector<Scalar> breakpoints;
  Permutation permutation;
  std::vector<Scalar> translations;
  std::vector<Scalar> discontinuities;
};

StructureMaps structure_maps(const Iet& t);

Iet inverse(const Iet& t);
/// s o t, i.e. x -> s(t(x)).
Iet compose(const Iet& s, const Iet& t);
Iet power(const Iet& t, std::int64_t m);

inline bool equals(const Iet& s, const Iet& t) { return s == t; }
inline bool is_identity(const Iet& t) { return t.is_identity(); }

/// Union of continuity intervals with nonzero translation.
IntervalSet support(const Iet& t);

/// L1 distance of length vectors when permutations agree; nullopt means infinity.
std::optional<Scalar> distance(const Iet& s, const Iet& t);

/// Brute-force equality: evaluates both maps at every breakpoint of the common
/// refinement and at one interior point of every refined interval.
bool pointwise_equal(const Iet& s, const Iet& t);

}  // namespace ietrel
