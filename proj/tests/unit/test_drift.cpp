#include "doctest.h"
#include "ietrel/drift.hpp"
#include "ietrel/errors.hpp"
#include "oracles.hpp"

using namespace ietrel;

namespace {

std::vector<Scalar> sv(std::initializer_list<Scalar> xs) { return xs; }

}  // namespace

TEST_CASE("admissibility examples") {
  CHECK(is_admissible(Permutation({2, 1})));
  CHECK(!is_admissible(Permutation({1, 3, 2})));
  CHECK(!is_admissible(Permutation({2, 1, 3})));
  CHECK(is_admissible(Permutation({3, 2, 1})));
  CHECK(!is_admissible(Permutation({1})));
  // Setwise-fixed prefix without a fixed point still counts as admissible.
  CHECK(is_admissible(Permutation({2, 1, 4, 3})));
}

TEST_CASE("drifting data for (2 1)") {
  auto d = find_drifting_direction(Permutation({2, 1}));
  REQUIRE(d);
  CHECK(d->direction == sv({Scalar(-1), Scalar(1)}));
  CHECK(d->vector == sv({Scalar(1), Scalar(1)}));
  CHECK(d->ratio == Scalar(1));
}

TEST_CASE("drifting data for (3 2 1)") {
  auto d = find_drifting_direction(Permutation({3, 2, 1}));
  REQUIRE(d);
  CHECK(drift_data_consistent(Permutation({3, 2, 1}), *d));
  // Pinned back-substitution point.
  CHECK(d->direction == sv({Scalar(-1), Scalar(0), Scalar(1)}));
  CHECK(d->vector == sv({Scalar(1), Scalar(2), Scalar(1)}));
  CHECK(d->ratio == Scalar(2));
  // The alternative direction from the worked example is also a drifting one.
  auto v = translation_change(Permutation({3, 2, 1}), sv({Scalar(-1), Scalar(1, 2), Scalar(1, 2)}));
  CHECK(v == sv({Scalar(1), Scalar(3, 2), Scalar(1, 2)}));
}

TEST_CASE("no drifting data for (1 3 2)") { CHECK(!find_drifting_direction(Permutation({1, 3, 2}))); }

TEST_CASE("admissible iff driftable for every canonical permutation up to n = 5") {
  int admissible = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& sigma : oracle::canonical_permutations(n)) {
      const bool adm = is_admissible(sigma);
      CHECK(adm == oracle::admissible_by_definition(sigma));
      auto d = find_drifting_direction(sigma);
      CHECK(d.has_value() == adm);
      if (d) {
        ++admissible;
        CHECK(drift_data_consistent(sigma, *d));
        Scalar mx(0);
        for (const auto& x : d->direction) mx = max(mx, x.abs());
        CHECK(mx == Scalar(1));
      }
    }
  }
  CHECK(admissible > 0);
}

TEST_CASE("consistency rejects tampered drift data") {
  const Permutation sigma({3, 2, 1});
  auto d = *find_drifting_direction(sigma);
  auto bad = d;
  bad.vector[1] += Scalar(1, 100);
  CHECK(!drift_data_consistent(sigma, bad));
  bad = d;
  bad.direction[0] += Scalar(1, 100);
  CHECK(!drift_data_consistent(sigma, bad));
  bad = d;
  bad.ratio = Scalar(3);
  CHECK(!drift_data_consistent(sigma, bad));
}

TEST_CASE("drifted IETs") {
  const Iet t0 = Iet::rotation(Scalar(1, 5));
  const Iet t = drifted_iet(t0, sv({Scalar(-1), Scalar(1)}), Scalar(1, 100));
  CHECK(t.lengths() == sv({Scalar(79, 100), Scalar(21, 100)}));
  CHECK(t.permutation() == Permutation({2, 1}));
  CHECK(drifted_iet(t0, sv({Scalar(-1), Scalar(1)}), Scalar(0)) == t0);
  CHECK(t.translations()[0] - t0.translations()[0] == Scalar(1, 100));
  CHECK(t.translations()[1] - t0.translations()[1] == Scalar(1, 100));
  CHECK_THROWS_AS(drifted_iet(t0, sv({Scalar(-1), Scalar(1)}), Scalar(4, 5)), MathError);
  CHECK_THROWS_AS(drifted_iet(t0, sv({Scalar(1), Scalar(1)}), Scalar(1, 100)), std::invalid_argument);
}

TEST_CASE("drift moves translations linearly on random admissible maps") {
  Rng rng(8080);
  int tested = 0;
  for (int i = 0; i < 200 && tested < 50; ++i) {
    const int n = static_cast<int>(std::uniform_int_distribution<int>(2, 5)(rng));
    Iet t0 = random_iet(rng, n, i % 2 == 0);
    if (!is_admissible(t0.permutation())) continue;
    auto d = *find_drifting_direction(t0.permutation());
    Scalar shortest = t0.lengths()[0];
    for (const auto& l : t0.lengths()) shortest = min(shortest, l);
    const Scalar theta = shortest / Scalar(7);
    const Iet t = drifted_iet(t0, d.direction, theta);
    REQUIRE(t.permutation() == t0.permutation());
    for (std::size_t j = 0; j < d.vector.size(); ++j) {
      CHECK(t.translations()[j] == t0.translations()[j] + theta * d.vector[j]);
    }
    ++tested;
  }
  CHECK(tested >= 30);
}

TEST_CASE("drift power search") {
  const Scalar theta(1, 100);
  const Iet t({Scalar(4, 5) - theta, Scalar(1, 5) + theta}, Permutation({2, 1}));
  CHECK(find_drift_power(t, 5, theta / Scalar(3), Scalar(1, 10)) == 1);
  CHECK(find_drift_power(t, 5, theta, Scalar(1, 10)) == 2);
  CHECK_THROWS_AS(find_drift_power(t, 5, Scalar(1, 40), Scalar(1, 10)), MathError);
  // Window still nonempty but never reached by a q-rational map.
  CHECK_THROWS_AS(find_drift_power(Iet::rotation(Scalar(1, 5)), 5, Scalar(1, 100), Scalar(1, 10)), MathError);
  const std::int64_t k = find_drift_power(t, 5, theta, Scalar(1, 10), DriftHint{theta, Scalar(1)});
  CHECK(translations_in_window(power(t, k), 5, Scalar(2) * theta, Scalar(1, 10) - Scalar(2) * theta));
}
