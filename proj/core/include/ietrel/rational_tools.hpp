#pragma once

#include <ostream>
#include <vector>

#include <gmpxx.h>

#include "ietrel/iet.hpp"
#include "ietrel/scalar.hpp"

namespace ietrel {

/// Permutation of the q grid cells [i/q, (i+1)/q) induced by a q-rational IET.
struct GridPermutation {
  long q = 0;
  std::vector<long> images;  // cell i -> images[i], 0-based

  /// Cycle decomposition, each cycle starting at its smallest cell.
  [[nodiscard]] std::vector<std::vector<long>> cycles() const;
  /// lcm of the cycle lengths.
  [[nodiscard]] mpz_class order() const;
};

/// Every breakpoint lies on (1/q)Z.
bool is_q_rational(const Iet& t, long q);

/// Throws std::invalid_argument when t is not q-rational.
GridPermutation grid_permutation(const Iet& t, long q);

/// Order of a q-rational IET as a group element.
mpz_class order(const Iet& t0, long q);

struct RationalApproximation {
  Iet t0;
  Scalar delta;
};

/// Closest IET with the permutation of s and lengths in (1/q)N, in the L1
/// distance on lengths. Requires q >= number of intervals of s.
RationalApproximation nearest_q_rational(const Iet& s, long q);

struct ArnouxYoccoz {
  Iet g;
  Iet h;
  Iet f;
};

/// g: pairwise swaps with lengths a/2, a/2, a^2/2, a^2/2, a^3/2, a^3/2;
/// h: rotation by 1/2; f = h o g.
ArnouxYoccoz arnoux_yoccoz();

/// The printed f: lengths ((1-a)/2, a-1/2, a/2, a^2/2, a^2/2, a^3/2, a^3/2),
/// permutation (7 1 6 3 2 5 4).
Iet arnoux_yoccoz_f_expected();

struct SweepRow {
  long q = 0;
  Scalar delta;
  mpz_class order;
  Scalar bound;

  [[nodiscard]] bool bound_below_one() const { return bound < Scalar(1); }
};

/// 40 q (o + 2) delta.
Scalar sweep_bound(long q, const mpz_class& order, const Scalar& delta);

SweepRow ay_sweep_row(const Iet& f, long q);
/// One row per q in [q_min, q_max]. Rows are computed on `threads` workers
/// and returned in q order.
std::vector<SweepRow> ay_sweep(long q_min, long q_max, unsigned threads = 1);

}  // namespace ietrel
