#include "ietrel/relation.hpp"

#include <algorithm>
#include <stdexcept>

#include "ietrel/errors.hpp"
#include "ietrel/neighborhoods.hpp"
#include "ietrel/rational_tools.hpp"

namespace ietrel {

std::int64_t factorial(long q) {
  if (q < 0 || q > 20) throw std::out_of_range("factorial argument out of range");
  std::int64_t f = 1;
  for (long i = 2; i <= q; ++i) f *= i;
  return f;
}

Schedule choose_parameters(const Iet& s, long q, const DriftData& drift) {
  const Scalar alpha = alpha_q(s, q);
  if (alpha.is_zero()) throw MathError("rational case delegated: S is q-rational for q = " + std::to_string(q));
  const Scalar two(2);
  const Scalar qf(factorial(q));
  const Scalar v_min = drift.v_min();
  Schedule p;
  p.delta = alpha / two;
  p.eps = p.delta / (Scalar(11) * drift.ratio) / two;
  p.eta = p.eps / (Scalar(4) * qf) / two;
  p.theta = min(p.eps / v_min, p.eta / (two * drift.direction_l1())) / two;
  p.mu = min(p.theta * v_min / Scalar(4), p.eta / two) / two;
  if (!schedule_satisfied(p, alpha, q, drift)) throw std::logic_error("parameter schedule violates its own bounds");
  return p;
}

bool schedule_satisfied(const Schedule& p, const Scalar& alpha, long q, const DriftData& drift) {
  const Scalar v_min = drift.v_min();
  const Scalar qf(factorial(q));
  return p.mu.sign() > 0 && p.delta < alpha && p.eps < p.delta / (Scalar(11) * drift.ratio) &&
         p.eta < p.eps / (Scalar(4) * qf) && p.theta < p.eps / v_min &&
         p.theta < p.eta / (Scalar(2) * drift.direction_l1()) && p.mu < p.theta * v_min / Scalar(4) &&
         p.mu < p.eta / Scalar(2);
}

bool check_small_translations(const Iet& f, const IntervalSet& excluded, const Scalar& eps) {
  const auto& starts = f.starts();
  const IntervalSet kept = excluded.complement();
  for (const auto& c : kept.parts()) {
    std::size_t i = f.piece_index(c.lo);
    const Scalar& shift = f.translations()[i];
    if (!(shift.abs() < eps)) return false;
    for (++i; i < starts.size() && starts[i] < c.hi; ++i) {
      if (f.translations()[i] != shift) return false;
    }
  }
  return true;
}

Iet commutator_u(const Iet& s, const Iet& t, std::int64_t e) {
  if (e < 1) throw std::invalid_argument("commutator exponent must be positive");
  const Iet te = power(t, e);
  const Iet te_inv = inverse(te);
  const Iet s_inv = inverse(s);
  const Iet conj = compose(s, compose(te, s_inv));
  const Iet conj_inv = compose(s, compose(te_inv, s_inv));
  return compose(te, compose(conj, compose(te_inv, conj_inv)));
}

Word basic_relation_word(std::int64_t e) {
  using L = Letter;
  return Word({{L::t, e}, {L::r, 1}, {L::t, e}, {L::r, -1}, {L::t, -e}, {L::r, 1}, {L::t, -e}, {L::r, -1}});
}

Word drift_relation_word(std::int64_t e, std::int64_t k) {
  const Word u = basic_relation_word(e);
  const Word tk = Word::letter(Letter::t, k);
  return commutator(u, tk * u * tk.inverse());
}

bool disjoint_support_commutation(const Iet& u, const Iet& v) {
  if (support(u).intersects(support(v))) return false;
  if (!(compose(u, v) == compose(v, u))) throw std::logic_error("disjointly supported IETs failed to commute");
  return true;
}

bool in_mu_ball(const Iet& t, const Iet& center, const Scalar& mu) {
  auto d = distance(t, center);
  return d && *d < mu;
}

bool Certificate::all_passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Certificate certify_relation(const Iet& s, const Iet& t0, long q) {
  if (q < 1) throw std::invalid_argument("q must be a positive integer");
  if (q > 10) throw MathError("q! exponents beyond q = 10 are out of reach");
  if (!is_q_rational(t0, q)) throw MathError("T0 is not q-rational");
  if (!is_admissible(t0.permutation())) throw MathError("T0 is not admissible");
  auto drift = find_drifting_direction(t0.permutation());
  if (!drift) throw std::logic_error("admissible permutation without drifting direction");

  Certificate cert;
  cert.q = q;
  cert.s = s;
  cert.t0 = t0;
  cert.drift = *drift;
  cert.params = choose_parameters(s, q, cert.drift);
  const Schedule& p = cert.params;
  const Scalar alpha = alpha_q(s, q);
  const std::int64_t e = factorial(q);

  cert.t = drifted_iet(t0, cert.drift.direction, p.theta);
  const Iet& t = cert.t;
  auto& checks = cert.checks;
  checks.push_back({"t0_q_rational", true});
  checks.push_back({"t0_admissible", true});
  checks.push_back({"drift_consistent", drift_data_consistent(t0.permutation(), cert.drift)});
  checks.push_back({"schedule_inequalities", schedule_satisfied(p, alpha, q, cert.drift)});
  auto d = distance(t, t0);
  checks.push_back({"distance_t_t0_below_eta", d && *d < p.eta});

  const Iet u = commutator_u(s, t, e);
  const IntervalSet supp_u = support(u);
  checks.push_back({"support_u_in_neighborhood_xq", supp_u.is_subset_of(neighborhood(x_q(s, q), p.eps))});

  cert.k = find_drift_power(t, q, p.eps, p.delta, DriftHint{p.theta, cert.drift.v_min()});
  const Iet tk = power(t, cert.k);
  checks.push_back({"drift_window_on_t_power_k",
                    translations_in_window(tk, q, Scalar(2) * p.eps, p.delta - Scalar(2) * p.eps)});
  checks.push_back({"drift_separates_support", !image_set(tk, supp_u).intersects(supp_u)});

  cert.commuting = u.is_identity();
  if (cert.commuting) {
    cert.word = basic_relation_word(e);
  } else {
    cert.word = drift_relation_word(e, cert.k);
    const Iet conj = compose(tk, compose(u, inverse(tk)));
    checks.push_back({"u_commutes_with_drifted_copy", disjoint_support_commutation(u, conj)});
  }
  checks.push_back({"word_reduced", is_reduced(cert.word.blocks())});
  checks.push_back({"word_nontrivial", !cert.word.is_trivial()});
  const Iet value = evaluate_word(cert.word, s, t);
  checks.push_back({"relation_identity_canonical", value.is_identity()});
  checks.push_back({"relation_identity_pointwise", pointwise_equal(value, Iet::identity())});
  return cert;
}

std::vector<Check> verify_certificate(const Certificate& cert) {
  std::vector<Check> out;
  Certificate fresh;
  try {
    fresh = certify_relation(cert.s, cert.t0, cert.q);
  } catch (const std::exception& e) {
    out.push_back({std::string("recompute: ") + e.what(), false});
    return out;
  }
  out.push_back({"stored_drift_matches", fresh.drift == cert.drift});
  out.push_back({"stored_parameters_match", fresh.params == cert.params});
  out.push_back({"stored_t_matches", fresh.t == cert.t});
  out.push_back({"stored_k_matches", fresh.k == cert.k});
  out.push_back({"stored_word_matches", fresh.word == cert.word});
  out.push_back({"stored_commuting_flag_matches", fresh.commuting == cert.commuting});
  for (const auto& c : fresh.checks) out.push_back(c);
  // Independent replay of the stored witness itself.
  const Iet value = evaluate_word(cert.word, cert.s, cert.t);
  out.push_back({"stored_word_evaluates_to_identity", value.is_identity() && pointwise_equal(value, Iet())});
  out.push_back({"stored_word_nontrivial_reduced", !cert.word.is_trivial() && is_reduced(cert.word.blocks())});
  return out;
}

}  // namespace ietrel
