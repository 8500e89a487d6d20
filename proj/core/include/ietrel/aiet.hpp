#pragma once

#include <ostream>
#include <vector>

#include <gmpxx.h>

#include "ietrel/iet.hpp"
#include "ietrel/interval_set.hpp"

namespace ietrel {

/// x -> slope * x + offset on [lo, hi).
struct AffinePiece {
  mpq_class lo;
  mpq_class hi;
  mpq_class slope;
  mpq_class offset;

  [[nodiscard]] mpq_class image_lo() const { return slope * lo + offset; }
  [[nodiscard]] mpq_class image_hi() const { return slope * hi + offset; }

  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// Affine interval exchange over the rationals: positive slopes, piece domains
/// partition [0, 1) and so do piece images. Pieces continuing the same affine
/// map are merged, so equality is structural.
class Aiet {
public:
  Aiet();
  /// Throws std::invalid_argument unless the pieces describe a bijection of [0, 1).
  explicit Aiet(std::vector<AffinePiece> pieces);

  static Aiet from_iet(const Iet& t);

  [[nodiscard]] const std::vector<AffinePiece>& pieces() const { return pieces_; }
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] mpq_class operator()(const mpq_class& x) const;

  friend bool operator==(const Aiet&, const Aiet&) = default;

private:
  [[nodiscard]] std::size_t piece_index(const mpq_class& x) const;

  std::vector<AffinePiece> pieces_;
};

std::ostream& operator<<(std::ostream& os, const Aiet& f);

Aiet aiet_inverse(const Aiet& f);
/// f o g.
Aiet aiet_compose(const Aiet& f, const Aiet& g);
IntervalSet aiet_image_set(const Aiet& f, const IntervalSet& a);

struct PingPongSets {
  IntervalSet v;
  IntervalSet w;
  IntervalSet x;
  IntervalSet y;
};

/// Exact ping-pong hypotheses: the four sets are nonempty, pairwise disjoint
/// and do not cover [0, 1); f([0,1) \ V) c W, f^-1([0,1) \ W) c V,
/// g([0,1) \ X) c Y, g^-1([0,1) \ Y) c X.
bool pingpong_check(const Aiet& f, const Aiet& g, const PingPongSets& sets);

struct PingPongPair {
  Aiet f;
  Aiet g;
  PingPongSets sets;
};

/// V = [0, 1/5), W = [7/10, 4/5), X = [2/5, 1/2), Y = [9/10, 1); f expands V
/// onto [0,1) \ W and contracts the rest onto W, g does the same for (X, Y).
PingPongPair standard_pingpong_pair();

}  // namespace ietrel
