#include "ietrel/rational_tools.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace ietrel {

std::vector<std::vector<long>> GridPermutation::cycles() const {
  std::vector<std::vector<long>> out;
  std::vector<bool> seen(images.size(), false);
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start]) continue;
    std::vector<long> cycle;
    for (auto i = static_cast<long>(start); !seen[static_cast<std::size_t>(i)]; i = images[static_cast<std::size_t>(i)]) {
      seen[static_cast<std::size_t>(i)] = true;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

mpz_class GridPermutation::order() const {
  mpz_class result = 1;
  for (const auto& c : cycles()) {
    mpz_class len = static_cast<unsigned long>(c.size());
    mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), len.get_mpz_t());
  }
  return result;
}

bool is_q_rational(const Iet& t, long q) {
  if (q < 1) throw std::invalid_argument("q must be a positive integer");
  const Scalar qs(q);
  for (const auto& b : t.breakpoints()) {
    if (!b.is_rational()) return false;
    Scalar scaled = b * qs;
    if (sgn(scaled.rational().get_den() - 1) != 0) return false;
  }
  return true;
}

GridPermutation grid_permutation(const Iet& t, long q) {
  if (!is_q_rational(t, q)) throw std::invalid_argument("IET is not q-rational");
  GridPermutation g;
  g.q = q;
  g.images.reserve(static_cast<std::size_t>(q));
  for (long i = 0; i < q; ++i) {
    Scalar image = t(Scalar(i, q)) * Scalar(q);
    g.images.push_back(image.floor().get_si());
  }
  return g;
}

mpz_class order(const Iet& t0, long q) { return grid_permutation(t0, q).order(); }

RationalApproximation nearest_q_rational(const Iet& s, long q) {
  const auto& lengths = s.lengths();
  const auto n = static_cast<long>(lengths.size());
  if (q < n) throw std::invalid_argument("q must be at least the number of intervals");
  const Scalar qs(q);
  const Scalar half(1, 2);
  std::vector<long> p;
  p.reserve(lengths.size());
  long total = 0;
  for (const auto& l : lengths) {
    long rounded = std::max(1L, (l * qs + half).floor().get_si());
    p.push_back(rounded);
    total += rounded;
  }
  auto cost = [&](std::size_t i, long pi) { return (lengths[i] - Scalar(pi, q)).abs(); };
  // Unit moves of least L1 increase; ties go to the lowest index.
  while (total != q) {
    const long step = total > q ? -1 : 1;
    std::size_t best = lengths.size();
    Scalar best_increase;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      if (p[i] + step < 1) continue;
      Scalar increase = cost(i, p[i] + step) - cost(i, p[i]);
      if (best == lengths.size() || increase < best_increase) {
        best = i;
        best_increase = std::move(increase);
      }
    }
    p[best] += step;
    total += step;
  }
  std::vector<Scalar> approx;
  Scalar delta(0);
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    approx.emplace_back(p[i], q);
    delta += cost(i, p[i]);
  }
  return {Iet(std::move(approx), s.permutation()), std::move(delta)};
}

ArnouxYoccoz arnoux_yoccoz() {
  const Scalar a = Scalar::a();
  const Scalar half(1, 2);
  const Scalar a1 = a * half;
  const Scalar a2 = a * a * half;
  const Scalar a3 = a * a * a * half;
  Iet g({a1, a1, a2, a2, a3, a3}, Permutation({2, 1, 4, 3, 6, 5}));
  Iet h = Iet::rotation(half);
  Iet f = compose(h, g);
  return {std::move(g), std::move(h), std::move(f)};
}

Iet arnoux_yoccoz_f_expected() {
  const Scalar a = Scalar::a();
  const Scalar half(1, 2);
  return Iet({(Scalar(1) - a) * half, a - half, a * half, a * a * half, a * a * half, a * a * a * half,
              a * a * a * half},
             Permutation({7, 1, 6, 3, 2, 5, 4}));
}

Scalar sweep_bound(long q, const mpz_class& order, const Scalar& delta) {
  return Scalar(mpq_class(40 * q * (order + 2))) * delta;
}

SweepRow ay_sweep_row(const Iet& f, long q) {
  SweepRow row;
  row.q = q;
  auto approx = nearest_q_rational(f, q);
  row.delta = std::move(approx.delta);
  row.order = order(approx.t0, q);
  row.bound = sweep_bound(q, row.order, row.delta);
  return row;
}

std::vector<SweepRow> ay_sweep(long q_min, long q_max, unsigned threads) {
  const Iet f = arnoux_yoccoz().f;
  if (q_min < f.size()) throw std::invalid_argument("q_min must be at least 7");
  if (q_max < q_min) return {};
  const auto count = static_cast<std::size_t>(q_max - q_min + 1);
  std::vector<SweepRow> rows(count);
  threads = std::max(1U, threads);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) rows[i] = ay_sweep_row(f, q_min + static_cast<long>(i));
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return rows;
}

}  // namespace ietrel
