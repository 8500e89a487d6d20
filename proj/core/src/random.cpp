#include "ietrel/random.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ietrel {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// In [1/10, 9/10) for every draw: 0.2 <= r and |s a + u a^2| <= 0.1 * (0.544 + 0.296).
Scalar positive_cubic(Rng& rng) {
  mpq_class r(uniform(rng, 2, 8), 10);
  mpq_class s(uniform(rng, -1, 1), 10);
  mpq_class u(uniform(rng, -1, 1), 10);
  return Scalar::cubic(r, s, u);
}

}  // namespace

Permutation random_permutation(Rng& rng, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

Iet random_iet(Rng& rng, int n, bool cubic) {
  if (n < 1) throw std::invalid_argument("need at least one interval");
  std::vector<Scalar> lengths;
  if (!cubic) {
    std::vector<long> w;
    long total = 0;
    for (int i = 0; i < n; ++i) total += w.emplace_back(uniform(rng, 1, 12));
    for (long x : w) lengths.emplace_back(x, total);
  } else {
    // n - 1 small pieces below 1/(2n) each, the remainder takes the rest.
    const auto rest = static_cast<std::size_t>(uniform(rng, 0, n - 1));
    Scalar sum(0);
    lengths.resize(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      if (i == rest) continue;
      lengths[i] = positive_cubic(rng) / Scalar(2L * n);
      sum += lengths[i];
    }
    lengths[rest] = Scalar(1) - sum;
  }
  return Iet(std::move(lengths), random_permutation(rng, n));
}

Iet random_q_rational(Rng& rng, long q, int n) {
  if (n < 1 || n > q) throw std::invalid_argument("need 1 <= n <= q");
  std::vector<long> cuts(static_cast<std::size_t>(q - 1));
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(static_cast<std::size_t>(n - 1));
  cuts.push_back(0);
  cuts.push_back(q);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Scalar> lengths;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) lengths.emplace_back(cuts[i + 1] - cuts[i], q);
  return Iet(std::move(lengths), random_permutation(rng, n));
}

Scalar random_scalar(Rng& rng, bool cubic) {
  mpq_class c0(uniform(rng, -20, 20), uniform(rng, 1, 12));
  if (!cubic) return Scalar(c0);
  return Scalar::cubic(c0, mpq_class(uniform(rng, -20, 20), uniform(rng, 1, 12)),
                       mpq_class(uniform(rng, -20, 20), uniform(rng, 1, 12)));
}

}  // namespace ietrel
