#include "ietrel/aiet.hpp"

#include <algorithm>
#include <stdexcept>

namespace ietrel {

namespace {

std::vector<AffinePiece> merged(std::vector<AffinePiece> pieces) {
  std::vector<AffinePiece> out;
  for (auto& p : pieces) {
    if (!out.empty() && out.back().slope == p.slope && out.back().offset == p.offset) {
      out.back().hi = p.hi;
    } else {
      out.push_back(std::move(p));
    }
  }
  return out;
}

mpq_class rational_of(const Scalar& x) {
  if (!x.is_rational()) throw std::invalid_argument("AIET arithmetic is rational only");
  return x.rational();
}

}  // namespace

Aiet::Aiet() : pieces_{{0, 1, 1, 0}} {}

Aiet::Aiet(std::vector<AffinePiece> pieces) {
  if (pieces.empty()) throw std::invalid_argument("AIET needs at least one piece");
  mpq_class cursor = 0;
  for (auto& p : pieces) {
    p.lo.canonicalize();
    p.hi.canonicalize();
    p.slope.canonicalize();
    p.offset.canonicalize();
    if (p.lo != cursor || !(p.lo < p.hi)) throw std::invalid_argument("AIET domains must partition [0,1)");
    if (sgn(p.slope) <= 0) throw std::invalid_argument("AIET slopes must be positive");
    cursor = p.hi;
  }
  if (cursor != 1) throw std::invalid_argument("AIET domains must partition [0,1)");
  std::vector<const AffinePiece*> by_image;
  for (const auto& p : pieces) by_image.push_back(&p);
  std::sort(by_image.begin(), by_image.end(),
            [](const AffinePiece* x, const AffinePiece* y) { return x->image_lo() < y->image_lo(); });
  cursor = 0;
  for (const auto* p : by_image) {
    if (p->image_lo() != cursor) throw std::invalid_argument("AIET images must partition [0,1)");
    cursor = p->image_hi();
  }
  if (cursor != 1) throw std::invalid_argument("AIET images must partition [0,1)");
  pieces_ = merged(std::move(pieces));
}

Aiet Aiet::from_iet(const Iet& t) {
  std::vector<AffinePiece> pieces;
  for (std::size_t i = 0; i < t.starts().size(); ++i) {
    mpq_class lo = rational_of(t.starts()[i]);
    mpq_class hi = lo + rational_of(t.lengths()[i]);
    pieces.push_back({lo, hi, 1, rational_of(t.translations()[i])});
  }
  return Aiet(std::move(pieces));
}

bool Aiet::is_identity() const {
  return pieces_.size() == 1 && pieces_[0].slope == 1 && sgn(pieces_[0].offset) == 0;
}

std::size_t Aiet::piece_index(const mpq_class& x) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](const mpq_class& v, const AffinePiece& p) { return v < p.lo; });
  return static_cast<std::size_t>(it - pieces_.begin()) - 1;
}

mpq_class Aiet::operator()(const mpq_class& x) const {
  if (sgn(x) < 0 || x >= 1) throw std::domain_error("point outside [0,1)");
  const auto& p = pieces_[piece_index(x)];
  return p.slope * x + p.offset;
}

std::ostream& operator<<(std::ostream& os, const Aiet& f) {
  os << "Aiet{";
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    const auto& p = f.pieces()[i];
    if (i) os << "; ";
    os << '[' << p.lo << ", " << p.hi << ") x" << p.slope << " +" << p.offset;
  }
  return os << '}';
}

Aiet aiet_inverse(const Aiet& f) {
  std::vector<AffinePiece> pieces;
  for (const auto& p : f.pieces()) {
    mpq_class slope = 1 / p.slope;
    mpq_class offset = -p.offset / p.slope;
    pieces.push_back({p.image_lo(), p.image_hi(), slope, offset});
  }
  std::sort(pieces.begin(), pieces.end(), [](const AffinePiece& x, const AffinePiece& y) { return x.lo < y.lo; });
  return Aiet(std::move(pieces));
}

Aiet aiet_compose(const Aiet& f, const Aiet& g) {
  std::vector<AffinePiece> pieces;
  const auto& fp = f.pieces();
  for (const auto& p : g.pieces()) {
    // Image of p is [image_lo, image_hi); cut it at the breakpoints of f.
    mpq_class y = p.image_lo();
    const mpq_class y_end = p.image_hi();
    auto j = static_cast<std::size_t>(
        std::upper_bound(fp.begin(), fp.end(), y, [](const mpq_class& v, const AffinePiece& q) { return v < q.lo; }) -
        fp.begin() - 1);
    while (y < y_end) {
      const auto& q = fp[j];
      mpq_class cut = q.hi < y_end ? q.hi : y_end;
      // Domain of this fragment: g^-1([y, cut)).
      mpq_class lo = (y - p.offset) / p.slope;
      mpq_class hi = (cut - p.offset) / p.slope;
      pieces.push_back({lo, hi, q.slope * p.slope, q.slope * p.offset + q.offset});
      y = cut;
      ++j;
    }
  }
  return Aiet(std::move(pieces));
}

IntervalSet aiet_image_set(const Aiet& f, const IntervalSet& a) {
  std::vector<Interval> out;
  for (const auto& part : a.parts()) {
    mpq_class lo = rational_of(part.lo);
    mpq_class hi = rational_of(part.hi);
    for (const auto& p : f.pieces()) {
      mpq_class l = std::max(lo, p.lo);
      mpq_class h = std::min(hi, p.hi);
      if (l < h) out.push_back({Scalar(mpq_class(p.slope * l + p.offset)), Scalar(mpq_class(p.slope * h + p.offset))});
    }
  }
  return IntervalSet(std::move(out));
}

bool pingpong_check(const Aiet& f, const Aiet& g, const PingPongSets& s) {
  const IntervalSet* sets[] = {&s.v, &s.w, &s.x, &s.y};
  IntervalSet all;
  for (int i = 0; i < 4; ++i) {
    if (sets[i]->empty()) return false;
    for (int j = i + 1; j < 4; ++j) {
      if (sets[i]->intersects(*sets[j])) return false;
    }
    all = all.unite(*sets[i]);
  }
  if (all == IntervalSet::full()) return false;
  const Aiet f_inv = aiet_inverse(f);
  const Aiet g_inv = aiet_inverse(g);
  return aiet_image_set(f, s.v.complement()).is_subset_of(s.w) &&
         aiet_image_set(f_inv, s.w.complement()).is_subset_of(s.v) &&
         aiet_image_set(g, s.x.complement()).is_subset_of(s.y) &&
         aiet_image_set(g_inv, s.y.complement()).is_subset_of(s.x);
}

PingPongPair standard_pingpong_pair() {
  // f: [0,1/10) -> [0,7/10) (x7), [1/10,1/5) -> [4/5,1) (x2), [1/5,1) -> [7/10,4/5) (x1/8).
  Aiet f({{0, mpq_class(1, 10), 7, 0},
          {mpq_class(1, 10), mpq_class(1, 5), 2, mpq_class(3, 5)},
          {mpq_class(1, 5), 1, mpq_class(1, 8), mpq_class(27, 40)}});
  // g: [0,2/5) -> [9/10,17/18) (x1/9), [2/5,1/2) -> [0,9/10) (x9),
  //    [1/2,1) -> [17/18,1) (x1/9).
  Aiet g({{0, mpq_class(2, 5), mpq_class(1, 9), mpq_class(9, 10)},
          {mpq_class(2, 5), mpq_class(1, 2), 9, mpq_class(-18, 5)},
          {mpq_class(1, 2), 1, mpq_class(1, 9), mpq_class(8, 9)}});
  PingPongSets sets{
      IntervalSet({Interval{Scalar(0), Scalar(1, 5)}}),
      IntervalSet({Interval{Scalar(7, 10), Scalar(4, 5)}}),
      IntervalSet({Interval{Scalar(2, 5), Scalar(1, 2)}}),
      IntervalSet({Interval{Scalar(9, 10), Scalar(1)}}),
  };
  return {std::move(f), std::move(g), std::move(sets)};
}

}  // namespace ietrel
