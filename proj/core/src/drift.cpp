#include "ietrel/drift.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ietrel/errors.hpp"
#include "ietrel/neighborhoods.hpp"

namespace ietrel {

Scalar DriftData::v_min() const { return *std::min_element(vector.begin(), vector.end()); }
Scalar DriftData::v_max() const { return *std::max_element(vector.begin(), vector.end()); }

Scalar DriftData::direction_l1() const {
  Scalar s(0);
  for (const auto& d : direction) s += d.abs();
  return s;
}

bool is_admissible(const Permutation& sigma) {
  int prefix_max = 0;
  for (int k = 1; k <= sigma.size(); ++k) {
    prefix_max = std::max(prefix_max, sigma(k));
    if (sigma(k) == k && prefix_max == k) return false;
  }
  return true;
}

std::vector<Scalar> translation_change(const Permutation& sigma, const std::vector<Scalar>& d) {
  const int n = sigma.size();
  if (static_cast<int>(d.size()) != n) throw std::invalid_argument("direction size mismatch");
  std::vector<Scalar> v;
  v.reserve(d.size());
  Scalar before(0);
  for (int i = 1; i <= n; ++i) {
    Scalar image_before(0);
    for (int j = 1; j <= n; ++j) {
      if (sigma(j) < sigma(i)) image_before += d[static_cast<std::size_t>(j - 1)];
    }
    v.push_back(image_before - before);
    before += d[static_cast<std::size_t>(i - 1)];
  }
  return v;
}

namespace {

// coeffs . x >= rhs
struct Constraint {
  std::vector<mpq_class> coeffs;
  mpq_class rhs;

  bool operator<(const Constraint& o) const {
    if (coeffs != o.coeffs) {
      return std::lexicographical_compare(coeffs.begin(), coeffs.end(), o.coeffs.begin(), o.coeffs.end());
    }
    return rhs < o.rhs;
  }
};

// Scale so the first nonzero coefficient has magnitude one; makes duplicates
// detectable.
Constraint normalized(Constraint c) {
  for (const auto& a : c.coeffs) {
    if (sgn(a) != 0) {
      mpq_class s = abs(a);
      for (auto& x : c.coeffs) x /= s;
      c.rhs /= s;
      break;
    }
  }
  return c;
}

std::vector<Constraint> eliminate(const std::vector<Constraint>& system, std::size_t var) {
  std::vector<const Constraint*> lower, upper;
  std::set<Constraint> out;
  for (const auto& c : system) {
    int s = sgn(c.coeffs[var]);
    if (s > 0) {
      lower.push_back(&c);
    } else if (s < 0) {
      upper.push_back(&c);
    } else {
      out.insert(c);
    }
  }
  for (const auto* lo : lower) {
    for (const auto* up : upper) {
      mpq_class wl = -up->coeffs[var];
      mpq_class wu = lo->coeffs[var];
      Constraint c;
      c.coeffs.resize(lo->coeffs.size());
      for (std::size_t j = 0; j < c.coeffs.size(); ++j) c.coeffs[j] = wl * lo->coeffs[j] + wu * up->coeffs[j];
      c.coeffs[var] = 0;
      c.rhs = wl * lo->rhs + wu * up->rhs;
      out.insert(normalized(std::move(c)));
    }
  }
  return {out.begin(), out.end()};
}

// Value for `var` given later variables already fixed in x: the largest lower
// bound if any, else the smallest upper bound, else zero.
mpq_class back_substitute(const std::vector<Constraint>& system, std::size_t var, const std::vector<mpq_class>& x) {
  std::optional<mpq_class> lo, hi;
  for (const auto& c : system) {
    const mpq_class& a = c.coeffs[var];
    if (sgn(a) == 0) continue;
    mpq_class rest = c.rhs;
    for (std::size_t j = var + 1; j < x.size(); ++j) rest -= c.coeffs[j] * x[j];
    mpq_class bound = rest / a;
    if (sgn(a) > 0) {
      if (!lo || *lo < bound) lo = bound;
    } else {
      if (!hi || bound < *hi) hi = bound;
    }
  }
  if (lo) return *lo;
  if (hi) return *hi;
  return 0;
}

}  // namespace

std::optional<DriftData> find_drifting_direction(const Permutation& sigma) {
  const auto n = static_cast<std::size_t>(sigma.size());
  if (n < 2) return std::nullopt;
  const std::size_t m = n - 1;  // free variables d_1..d_{n-1}; d_n = -sum
  // Coefficient of d_j in v_i.
  auto coeff = [&](std::size_t i, std::size_t j) {
    int c = 0;
    if (sigma(static_cast<int>(j) + 1) < sigma(static_cast<int>(i) + 1)) ++c;
    if (j < i) --c;
    return c;
  };
  std::vector<Constraint> system;
  for (std::size_t i = 0; i < n; ++i) {
    Constraint c;
    c.coeffs.resize(m);
    for (std::size_t j = 0; j < m; ++j) c.coeffs[j] = coeff(i, j) - coeff(i, m);
    c.rhs = 1;
    system.push_back(std::move(c));
  }
  std::vector<std::vector<Constraint>> stages{system};
  for (std::size_t var = 0; var < m; ++var) stages.push_back(eliminate(stages.back(), var));
  for (const auto& c : stages.back()) {
    if (sgn(c.rhs) > 0) return std::nullopt;  // 0 >= rhs violated
  }
  std::vector<mpq_class> x(m);
  for (std::size_t var = m; var-- > 0;) x[var] = back_substitute(stages[var], var, x);

  std::vector<mpq_class> d(x);
  mpq_class last = 0;
  for (const auto& xi : x) last -= xi;
  d.push_back(last);
  mpq_class scale = 0;
  for (const auto& di : d) scale = std::max(scale, mpq_class(abs(di)));
  DriftData out;
  for (auto& di : d) out.direction.emplace_back(mpq_class(di / scale));
  out.vector = translation_change(sigma, out.direction);
  for (const auto& vi : out.vector) {
    if (vi.sign() <= 0) throw std::logic_error("Fourier-Motzkin witness is not a drifting direction");
  }
  out.ratio = out.v_max() / out.v_min();
  return out;
}

bool drift_data_consistent(const Permutation& sigma, const DriftData& drift) {
  if (static_cast<int>(drift.direction.size()) != sigma.size()) return false;
  Scalar sum(0);
  for (const auto& d : drift.direction) sum += d;
  if (!sum.is_zero()) return false;
  if (translation_change(sigma, drift.direction) != drift.vector) return false;
  for (const auto& v : drift.vector) {
    if (v.sign() <= 0) return false;
  }
  return drift.ratio == drift.v_max() / drift.v_min();
}

Iet drifted_iet(const Iet& t0, const std::vector<Scalar>& u, const Scalar& theta) {
  if (u.size() != t0.lengths().size()) throw std::invalid_argument("direction size mismatch");
  Scalar sum(0);
  for (const auto& x : u) sum += x;
  if (!sum.is_zero()) throw std::invalid_argument("direction must sum to zero");
  std::vector<Scalar> lengths;
  lengths.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    lengths.push_back(t0.lengths()[i] + theta * u[i]);
    if (lengths.back().sign() <= 0) throw MathError("theta too large");
  }
  return Iet(std::move(lengths), t0.permutation());
}

bool translations_in_window(const Iet& t, long q, const Scalar& lo, const Scalar& hi) {
  for (const auto& w : t.translations()) {
    Scalar r = mod_grid(w, q);
    if (r < lo || hi < r) return false;
  }
  return true;
}

std::int64_t find_drift_power(const Iet& t, long q, const Scalar& eps, const Scalar& alpha,
                              const std::optional<DriftHint>& hint) {
  const Scalar lo = Scalar(2) * eps;
  const Scalar hi = alpha - Scalar(2) * eps;
  if (!(lo < hi)) throw MathError("empty drift window: need eps < alpha/4");

  if (!hint) {
    std::int64_t factorial = 1;
    for (int i = 2; i <= t.size(); ++i) factorial *= i;
    const std::int64_t cap = 10 * q * factorial;
    Iet p = t;
    for (std::int64_t k = 1; k <= cap; ++k) {
      if (translations_in_window(p, q, lo, hi)) return k;
      p = compose(p, t);
    }
    throw MathError("no drift power found up to k = " + std::to_string(cap));
  }

  const Scalar step = hint->theta * hint->v_min;
  if (step.sign() <= 0) throw std::invalid_argument("drift hint must have theta * v_min > 0");
  const Scalar start_real = Scalar(4) * eps / step;
  mpz_class start = start_real.floor() + 1;
  mpz_class cap = -(-(Scalar(10) / step)).floor();
  if (!start.fits_slong_p()) throw MathError("drift power start exceeds integer range");
  const std::int64_t k0 = start.get_si();
  const std::int64_t kcap = cap.fits_slong_p() ? cap.get_si() : INT64_MAX;

  Iet forward = power(t, k0);
  if (translations_in_window(forward, q, lo, hi)) return k0;
  const Iet t_inv = inverse(t);
  Iet backward = forward;
  for (std::int64_t offset = 1;; ++offset) {
    bool any = false;
    if (k0 + offset <= kcap) {
      any = true;
      forward = compose(forward, t);
      if (translations_in_window(forward, q, lo, hi)) return k0 + offset;
    }
    if (k0 - offset >= 1) {
      any = true;
      backward = compose(backward, t_inv);
      if (translations_in_window(backward, q, lo, hi)) return k0 - offset;
    }
    if (!any) break;
  }
  throw MathError("no drift power found within the cap k <= " + cap.get_str());
}

}  // namespace ietrel
