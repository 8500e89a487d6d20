#include "doctest.h"
#include "ietrel/iet.hpp"
#include "ietrel/rational_tools.hpp"
#include "ietrel/relation.hpp"
#include "oracles.hpp"

using namespace ietrel;

namespace {

Iet rot(long num, long den) { return Iet::rotation(Scalar(num, den)); }
Iet three_swap() { return Iet({Scalar(3, 10), Scalar(1, 5), Scalar(1, 2)}, Permutation({2, 1, 3})); }

}  // namespace

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
  Permutation p({3, 1, 2});
  CHECK(p.inverse() == Permutation({2, 3, 1}));
  CHECK(!p.is_canonical());
  CHECK(Permutation({2, 1, 3}).is_canonical());
}

TEST_CASE("construction validates lengths") {
  CHECK_THROWS_AS(Iet({Scalar(1, 2), Scalar(1, 3)}, Permutation({2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(Iet({Scalar(0), Scalar(1)}, Permutation({2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(Iet({Scalar(1)}, Permutation({2, 1})), std::invalid_argument);
}

TEST_CASE("canonical form merges equal translations") {
  // (3 1 2) moves intervals 2 and 3 together: a rotation.
  Iet t({Scalar(1, 4), Scalar(1, 2), Scalar(1, 4)}, Permutation({3, 1, 2}));
  CHECK(t == rot(3, 4));
  CHECK(t.size() == 2);
  CHECK(Iet({Scalar(1, 2), Scalar(1, 2)}, Permutation({1, 2})).is_identity());
}

TEST_CASE("structure maps of the rotation by 1/3") {
  auto m = structure_maps(rot(1, 3));
  CHECK(m.lengths == std::vector<Scalar>{Scalar(2, 3), Scalar(1, 3)});
  CHECK(m.permutation == Permutation({2, 1}));
  CHECK(m.translations == std::vector<Scalar>{Scalar(1, 3), Scalar(-2, 3)});
  CHECK(m.breakpoints == std::vector<Scalar>{Scalar(2, 3)});
  CHECK(m.discontinuities == std::vector<Scalar>{Scalar(2, 3)});
}

TEST_CASE("structure maps of the three-interval example") {
  auto m = structure_maps(three_swap());
  CHECK(m.translations == std::vector<Scalar>{Scalar(1, 5), Scalar(-3, 10), Scalar(0)});
  CHECK(m.breakpoints == std::vector<Scalar>{Scalar(3, 10), Scalar(1, 2)});
}

TEST_CASE("identity has no breakpoints") {
  auto m = structure_maps(Iet());
  CHECK(m.translations == std::vector<Scalar>{Scalar(0)});
  CHECK(m.breakpoints.empty());
}

TEST_CASE("evaluation") {
  CHECK(rot(1, 3)(Scalar(1, 2)) == Scalar(5, 6));
  CHECK(rot(1, 3)(Scalar(2, 3)) == Scalar(0));
  CHECK(Iet()(Scalar(3, 7)) == Scalar(3, 7));
  CHECK_THROWS_AS((void)rot(1, 3)(Scalar(1)), std::domain_error);
  CHECK_THROWS_AS((void)rot(1, 3)(Scalar(-1, 9)), std::domain_error);
}

TEST_CASE("inverse") {
  CHECK(inverse(rot(1, 3)) == rot(2, 3));
  CHECK(inverse(Iet()).is_identity());
  Iet s = three_swap();
  CHECK(inverse(inverse(s)) == s);
  auto inv = structure_maps(inverse(s));
  CHECK(inv.breakpoints == std::vector<Scalar>{Scalar(1, 5), Scalar(1, 2)});
}

TEST_CASE("composition") {
  CHECK(compose(rot(1, 3), rot(1, 3)) == rot(2, 3));
  CHECK(compose(three_swap(), inverse(three_swap())).is_identity());
  CHECK(equals(rot(1, 3), compose(rot(1, 6), rot(1, 6))));
  CHECK(!equals(rot(1, 3), rot(2, 3)));
  // s o t means s after t.
  Iet s = three_swap();
  Iet t = rot(1, 10);
  CHECK(compose(s, t)(Scalar(1, 10)) == s(t(Scalar(1, 10))));
}

TEST_CASE("power") {
  CHECK(power(rot(1, 5), 5).is_identity());
  CHECK(power(three_swap(), 0).is_identity());
  CHECK(power(rot(1, 5), -1) == rot(4, 5));
  CHECK(power(rot(1, 5), 7) == rot(2, 5));
}

TEST_CASE("support and distance") {
  CHECK(support(Iet()).empty());
  CHECK(support(three_swap()) == IntervalSet({Interval{Scalar(0), Scalar(1, 2)}}));
  CHECK(support(rot(1, 3)) == IntervalSet::full());
  CHECK(distance(rot(1, 3), rot(2, 5)) == Scalar(2, 15));
  CHECK(distance(three_swap(), three_swap()) == Scalar(0));
  CHECK(!distance(rot(1, 3), three_swap()).has_value());
}

TEST_CASE("pointwise oracle examples") {
  CHECK(pointwise_equal(compose(rot(1, 6), rot(1, 6)), rot(1, 3)));
  CHECK(pointwise_equal(Iet(), Iet()));
  CHECK(!pointwise_equal(rot(1, 3), rot(1, 2)));
}

TEST_CASE("from_pieces rejects overlapping images") {
  CHECK_THROWS_AS(Iet::from_pieces({Scalar(0), Scalar(1, 2)}, {Scalar(0), Scalar(-1, 4)}), std::invalid_argument);
  Iet t = Iet::from_pieces({Scalar(0), Scalar(1, 2)}, {Scalar(1, 2), Scalar(-1, 2)});
  CHECK(t == rot(1, 2));
}

TEST_CASE("power of a q-rational map at q! is the identity") {
  Rng rng(77);
  for (long q = 1; q <= 7; ++q) {
    for (int rep = 0; rep < 6; ++rep) {
      const int n = static_cast<int>(std::uniform_int_distribution<long>(1, std::min(q, 5L))(rng));
      Iet t0 = random_q_rational(rng, q, n);
      CHECK(power(t0, factorial(q)).is_identity());
    }
  }
}

TEST_CASE("group laws against the oracle on random maps") {
  Rng rng(4242);
  for (int i = 0; i < 120; ++i) {
    const bool cubic = i % 2 == 1;
    auto draw = [&] {
      return random_iet(rng, static_cast<int>(std::uniform_int_distribution<int>(1, 5)(rng)), cubic);
    };
    Iet r = draw(), s = draw(), t = draw();
    CHECK(compose(compose(r, s), t) == compose(r, compose(s, t)));
    CHECK(compose(s, inverse(s)).is_identity());
    CHECK(inverse(inverse(s)) == s);
    CHECK(Iet(s.lengths(), s.permutation()) == s);

    std::vector<Scalar> probes;
    if (cubic) {
      probes = oracle::mixed_probes({&s, &t}, rng, 40);
    } else {
      probes = oracle::grid_probes(oracle::lcm_of_denominators({&s, &t}));
    }
    const Iet st = compose(s, t);
    for (const auto& x : probes) {
      CHECK(oracle::apply(st, x) == oracle::apply(s, oracle::apply(t, x)));
      CHECK(s(x) == oracle::apply(s, x));
    }
    CHECK((s == t) == pointwise_equal(s, t));
    CHECK(pointwise_equal(st, st));
  }
}
