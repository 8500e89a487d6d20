#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ietrel/iet.hpp"
#include "ietrel/scalar.hpp"

namespace ietrel {

/// A drifting direction d (zero sum) with its drifting vector v = V_sigma(d),
/// all v_i > 0, and ratio = v_max / v_min.
struct DriftData {
  std::vector<Scalar> direction;
  std::vector<Scalar> vector;
  Scalar ratio;

  [[nodiscard]] Scalar v_min() const;
  [[nodiscard]] Scalar v_max() const;
  [[nodiscard]] Scalar direction_l1() const;

  friend bool operator==(const DriftData&, const DriftData&) = default;
};

/// False iff some k has sigma(k) = k and sigma({1..k}) = {1..k}.
bool is_admissible(const Permutation& sigma);

/// Change in translation lengths caused by changing lengths by d:
/// v_i = sum_{sigma(j) < sigma(i)} d_j - sum_{j < i} d_j.
std::vector<Scalar> translation_change(const Permutation& sigma, const std::vector<Scalar>& d);

/// Exact feasibility of {sum d = 0, v_i(d) >= 1} by Fourier-Motzkin
/// elimination in index order; the witness is rescaled to max |d_i| = 1.
std::optional<DriftData> find_drifting_direction(const Permutation& sigma);

/// Re-checks the DriftData invariants against sigma.
bool drift_data_consistent(const Permutation& sigma, const DriftData& drift);

/// IET with the permutation of t0 and lengths lambda(t0) + theta * u.
/// Throws MathError("theta too large") when a length becomes nonpositive.
Iet drifted_iet(const Iet& t0, const std::vector<Scalar>& u, const Scalar& theta);

/// Every translation length of t, reduced to [0, 1/q), lies in [lo, hi].
bool translations_in_window(const Iet& t, long q, const Scalar& lo, const Scalar& hi);

struct DriftHint {
  Scalar theta;
  Scalar v_min;
};

/// Finds k >= 1 with all translation lengths of t^k in [2 eps, alpha - 2 eps]
/// modulo 1/q. Without a hint, the smallest such k. With a hint, the search
/// starts at the smallest k with k theta v_min > 4 eps and widens outward.
/// Throws MathError when the window is empty or the cap is exceeded.
std::int64_t find_drift_power(const Iet& t, long q, const Scalar& eps, const Scalar& alpha,
                              const std::optional<DriftHint>& hint = std::nullopt);

}  // namespace ietrel
