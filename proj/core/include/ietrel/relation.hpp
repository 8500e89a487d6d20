#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ietrel/drift.hpp"
#include "ietrel/iet.hpp"
#include "ietrel/interval_set.hpp"
#include "ietrel/scalar.hpp"
#include "ietrel/word.hpp"

namespace ietrel {

/// Parameters of the perturbation argument. Each one is half of its strict
/// upper bound:
///   delta < alpha_q(S), eps < delta / (11 rho), eta < eps / (4 q!),
///   theta < min(eps / v_min, eta / (2 |d|_1)), mu < min(theta v_min / 4, eta / 2).
struct Schedule {
  Scalar delta;
  Scalar eps;
  Scalar eta;
  Scalar theta;
  Scalar mu;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

std::int64_t factorial(long q);

/// Throws MathError("rational case delegated") when alpha_q(s, q) = 0.
Schedule choose_parameters(const Iet& s, long q, const DriftData& drift);

/// The five strict inequalities (and positivity) of the schedule.
bool schedule_satisfied(const Schedule& p, const Scalar& alpha, long q, const DriftData& drift);

/// On every component of [0,1) minus `excluded`, f is a single translation of
/// length strictly less than eps.
bool check_small_translations(const Iet& f, const IntervalSet& excluded, const Scalar& eps);

/// U = T^e (S T^e S^-1) T^-e (S T^-e S^-1).
Iet commutator_u(const Iet& s, const Iet& t, std::int64_t e);

/// u = t^e r t^e r^-1 t^-e r t^-e r^-1, the word with u(S, T) = U.
Word basic_relation_word(std::int64_t e);
/// [u, t^k u t^-k], freely reduced.
Word drift_relation_word(std::int64_t e, std::int64_t k);

/// supp(u) and supp(v) are disjoint; when they are, also confirms u and v
/// commute (throws std::logic_error if they do not).
bool disjoint_support_commutation(const Iet& u, const Iet& v);

/// Membership of t in the open mu-ball around `center` (same permutation).
bool in_mu_ball(const Iet& t, const Iet& center, const Scalar& mu);

struct Check {
  std::string name;
  bool passed = false;

  friend bool operator==(const Check&, const Check&) = default;
};

/// Machine-checkable witness that a nontrivial word vanishes on (S, T).
struct Certificate {
  long q = 0;
  Iet s;
  Iet t0;
  Iet t;
  Schedule params;
  DriftData drift;
  std::int64_t k = 0;
  Word word;
  /// U = id: the certificate's word is u itself.
  bool commuting = false;
  std::vector<Check> checks;

  [[nodiscard]] bool all_passed() const;
};

/// Runs the full construction for S, a q-rational T0 with admissible
/// permutation, and q. Throws MathError on unmet preconditions.
Certificate certify_relation(const Iet& s, const Iet& t0, long q);

/// Re-derives the certificate from (S, T0, q), compares every stored field
/// with the recomputed one and re-runs every check. Stored booleans are not
/// consulted.
std::vector<Check> verify_certificate(const Certificate& cert);

}  // namespace ietrel
