#include "ietrel/iet.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ietrel {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("permutation must be nonempty");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_canonical() const {
  for (std::size_t i = 0; i + 1 < images_.size(); ++i) {
    if (images_[i + 1] == images_[i] + 1) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  os << '(';
  for (std::size_t i = 0; i < p.images().size(); ++i) {
    if (i) os << ' ';
    os << p.images()[i];
  }
  return os << ')';
}

namespace {

struct Canonical {
  std::vector<Scalar> lengths;
  std::vector<int> perm;
  std::vector<Scalar> starts;
  std::vector<Scalar> translations;
};

// Merges equal neighbouring translations, then reads the permutation off the
// order of the image intervals. Throws if the images do not tile [0, 1).
Canonical canonicalize(std::vector<Scalar> starts, std::vector<Scalar> translations) {
  Canonical c;
  const std::size_t n = starts.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && translations[i] == c.translations.back()) continue;
    c.starts.push_back(std::move(starts[i]));
    c.translations.push_back(std::move(translations[i]));
  }
  const std::size_t m = c.starts.size();
  c.lengths.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    c.lengths.push_back((i + 1 < m ? c.starts[i + 1] : Scalar(1)) - c.starts[i]);
  }
  std::vector<Scalar> image_starts;
  image_starts.reserve(m);
  for (std::size_t i = 0; i < m; ++i) image_starts.push_back(c.starts[i] + c.translations[i]);
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return image_starts[x] < image_starts[y]; });
  c.perm.assign(m, 0);
  Scalar cursor(0);
  for (std::size_t rank = 0; rank < m; ++rank) {
    std::size_t i = order[rank];
    if (image_starts[i] != cursor) throw std::invalid_argument("pieces do not form a bijection of [0,1)");
    cursor += c.lengths[i];
    c.perm[i] = static_cast<int>(rank) + 1;
  }
  if (cursor != Scalar(1)) throw std::invalid_argument("pieces do not form a bijection of [0,1)");
  return c;
}

}  // namespace

Iet::Iet() : lengths_{Scalar(1)}, perm_(Permutation::identity(1)), starts_{Scalar(0)}, translations_{Scalar(0)} {}

Iet::Iet(std::vector<Scalar> lengths, Permutation perm) {
  if (lengths.size() != static_cast<std::size_t>(perm.size())) {
    throw std::invalid_argument("length vector and permutation differ in size");
  }
  Scalar total(0);
  for (const auto& l : lengths) {
    if (l.sign() <= 0) throw std::invalid_argument("interval lengths must be positive");
    total += l;
  }
  if (total != Scalar(1)) throw std::invalid_argument("interval lengths must sum to 1");
  lengths_ = std::move(lengths);
  perm_ = std::move(perm);
  derive();
  if (!perm_.is_canonical()) {
    Canonical c = canonicalize(std::move(starts_), std::move(translations_));
    lengths_ = std::move(c.lengths);
    perm_ = Permutation(std::move(c.perm));
    starts_ = std::move(c.starts);
    translations_ = std::move(c.translations);
  }
}

void Iet::derive() {
  const std::size_t n = lengths_.size();
  starts_.assign(n, Scalar(0));
  for (std::size_t i = 1; i < n; ++i) starts_[i] = starts_[i - 1] + lengths_[i - 1];
  Permutation inv = perm_.inverse();
  std::vector<Scalar> image_start(n, Scalar(0));
  Scalar cursor(0);
  for (int p = 1; p <= static_cast<int>(n); ++p) {
    auto i = static_cast<std::size_t>(inv(p) - 1);
    image_start[i] = cursor;
    cursor += lengths_[i];
  }
  translations_.clear();
  translations_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) translations_.push_back(image_start[i] - starts_[i]);
}

Iet Iet::rotation(const Scalar& angle) {
  if (angle.sign() < 0 || angle >= Scalar(1)) throw std::invalid_argument("rotation angle must lie in [0,1)");
  if (angle.is_zero()) return Iet();
  return Iet({Scalar(1) - angle, angle}, Permutation({2, 1}));
}

Iet Iet::from_pieces(std::vector<Scalar> starts, std::vector<Scalar> translations) {
  if (starts.empty() || starts.size() != translations.size() || !starts.front().is_zero()) {
    throw std::invalid_argument("malformed piece list");
  }
  for (std::size_t i = 1; i < starts.size(); ++i) {
    if (!(starts[i - 1] < starts[i])) throw std::invalid_argument("piece starts must increase");
  }
  if (!(starts.back() < Scalar(1))) throw std::invalid_argument("piece starts must lie in [0,1)");
  Canonical c = canonicalize(std::move(starts), std::move(translations));
  Iet t;
  t.lengths_ = std::move(c.lengths);
  t.perm_ = Permutation(std::move(c.perm));
  t.starts_ = std::move(c.starts);
  t.translations_ = std::move(c.translations);
  return t;
}

std::vector<Scalar> Iet::breakpoints() const { return {starts_.begin() + 1, starts_.end()}; }

std::size_t Iet::piece_index(const Scalar& x) const {
  auto it = std::upper_bound(starts_.begin(), starts_.end(), x);
  return static_cast<std::size_t>(it - starts_.begin()) - 1;
}

Scalar Iet::operator()(const Scalar& x) const {
  if (x.sign() < 0 || x >= Scalar(1)) throw std::domain_error("point outside [0,1): " + x.to_string());
  return x + translations_[piece_index(x)];
}

std::ostream& operator<<(std::ostream& os, const Iet& t) {
  os << "Iet{lengths=[";
  for (std::size_t i = 0; i < t.lengths().size(); ++i) {
    if (i) os << ", ";
    os << t.lengths()[i];
  }
  return os << "], perm=" << t.permutation() << '}';
}

StructureMaps structure_maps(const Iet& t) {
  StructureMaps m;
  m.lengths = t.lengths();
  m.breakpoints = t.breakpoints();
  m.permutation = t.permutation();
  m.translations = t.translations();
  m.discontinuities = m.breakpoints;
  return m;
}

Iet inverse(const Iet& t) {
  const int n = t.size();
  Permutation inv = t.permutation().inverse();
  std::vector<Scalar> starts;
  std::vector<Scalar> translations;
  starts.reserve(static_cast<std::size_t>(n));
  translations.reserve(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) {
    auto i = static_cast<std::size_t>(inv(p) - 1);
    starts.push_back(t.starts()[i] + t.translations()[i]);
    translations.push_back(-t.translations()[i]);
  }
  return Iet::from_pieces(std::move(starts), std::move(translations));
}

Iet compose(const Iet& s, const Iet& t) {
  if (t.is_identity()) return s;
  if (s.is_identity()) return t;
  const auto& t_starts = t.starts();
  const auto& s_starts = s.starts();
  const std::size_t nt = t_starts.size();
  const std::size_t ns = s_starts.size();
  std::vector<Scalar> starts;
  std::vector<Scalar> translations;
  starts.reserve(nt + ns);
  translations.reserve(nt + ns);
  for (std::size_t i = 0; i < nt; ++i) {
    const Scalar& shift = t.translations()[i];
    Scalar image_lo = t_starts[i] + shift;
    Scalar image_hi = (i + 1 < nt ? t_starts[i + 1] : Scalar(1)) + shift;
    std::size_t j = s.piece_index(image_lo);
    starts.push_back(t_starts[i]);
    translations.push_back(shift + s.translations()[j]);
    // Split the image of piece i at every breakpoint of s inside it.
    for (++j; j < ns && s_starts[j] < image_hi; ++j) {
      starts.push_back(s_starts[j] - shift);
      translations.push_back(shift + s.translations()[j]);
    }
  }
  return Iet::from_pieces(std::move(starts), std::move(translations));
}

Iet power(const Iet& t, std::int64_t m) {
  Iet base = m < 0 ? inverse(t) : t;
  std::uint64_t e = m < 0 ? static_cast<std::uint64_t>(-(m + 1)) + 1 : static_cast<std::uint64_t>(m);
  Iet result;
  while (e > 0) {
    if (e & 1U) result = compose(result, base);
    e >>= 1U;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

IntervalSet support(const Iet& t) {
  std::vector<Interval> parts;
  for (std::size_t i = 0; i < t.starts().size(); ++i) {
    if (!t.translations()[i].is_zero()) {
      parts.push_back({t.starts()[i], t.starts()[i] + t.lengths()[i]});
    }
  }
  return IntervalSet(std::move(parts));
}

std::optional<Scalar> distance(const Iet& s, const Iet& t) {
  if (!(s.permutation() == t.permutation())) return std::nullopt;
  Scalar d(0);
  for (std::size_t i = 0; i < s.lengths().size(); ++i) d += (s.lengths()[i] - t.lengths()[i]).abs();
  return d;
}

bool pointwise_equal(const Iet& s, const Iet& t) {
  std::vector<Scalar> cuts = s.starts();
  cuts.insert(cuts.end(), t.starts().begin(), t.starts().end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.emplace_back(1);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Scalar mid = (cuts[i] + cuts[i + 1]) / Scalar(2);
    if (s(cuts[i]) != t(cuts[i]) || s(mid) != t(mid)) return false;
  }
  return true;
}

}  // namespace ietrel
