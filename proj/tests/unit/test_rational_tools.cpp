#include "doctest.h"
#include "ietrel/rational_tools.hpp"
#include "ietrel/relation.hpp"
#include "oracles.hpp"

using namespace ietrel;

namespace {

Iet rot(long num, long den) { return Iet::rotation(Scalar(num, den)); }
Iet three_swap() { return Iet({Scalar(3, 10), Scalar(1, 5), Scalar(1, 2)}, Permutation({2, 1, 3})); }

}  // namespace

TEST_CASE("q-rationality and grid permutations") {
  CHECK(is_q_rational(rot(1, 5), 5));
  CHECK(grid_permutation(rot(1, 5), 5).cycles() == std::vector<std::vector<long>>{{0, 1, 2, 3, 4}});
  CHECK(!is_q_rational(three_swap(), 5));
  CHECK(is_q_rational(three_swap(), 10));
  const auto g = grid_permutation(three_swap(), 10);
  CHECK(g.cycles() == std::vector<std::vector<long>>{{0, 2, 4, 1, 3}, {5}, {6}, {7}, {8}, {9}});
  CHECK(!is_q_rational(rot(1, 3), 5));
  CHECK(!is_q_rational(Iet::rotation(Scalar::a() - Scalar(1, 2)), 10));
  CHECK_THROWS_AS(grid_permutation(rot(1, 3), 5), std::invalid_argument);
}

TEST_CASE("orders") {
  CHECK(order(rot(1, 5), 5) == 5);
  CHECK(order(three_swap(), 10) == 5);
  CHECK(order(Iet(), 7) == 1);
  CHECK_THROWS_AS(order(rot(1, 3), 5), std::invalid_argument);
}

TEST_CASE("order agrees with repeated composition and divides q!") {
  Rng rng(1001);
  for (long q = 1; q <= 8; ++q) {
    for (int rep = 0; rep < 5; ++rep) {
      Iet t0 = random_q_rational(rng, q, static_cast<int>(std::uniform_int_distribution<long>(1, std::min(q, 5L))(rng)));
      const mpz_class o = order(t0, q);
      CHECK(power(t0, o.get_si()).is_identity());
      CHECK(oracle::brute_order(t0, factorial(q)) == o.get_si());
      CHECK(mpz_class(factorial(q)) % o == 0);
    }
  }
}

TEST_CASE("nearest q-rational approximations") {
  auto exact = nearest_q_rational(rot(1, 3), 3);
  CHECK(exact.t0 == rot(1, 3));
  CHECK(exact.delta == Scalar(0));
  auto five = nearest_q_rational(rot(1, 3), 5);
  CHECK(five.t0.lengths() == std::vector<Scalar>{Scalar(3, 5), Scalar(2, 5)});
  CHECK(five.delta == Scalar(2, 15));
  CHECK_THROWS_AS(nearest_q_rational(three_swap(), 2), std::invalid_argument);
}

TEST_CASE("nearest approximation matches exhaustive search") {
  Rng rng(606);
  for (int i = 0; i < 150; ++i) {
    const int n = static_cast<int>(std::uniform_int_distribution<int>(1, 4)(rng));
    const long q = std::uniform_int_distribution<long>(n, 12)(rng);
    Iet s = random_iet(rng, n, i % 2 == 0);
    auto approx = nearest_q_rational(s, q);
    CHECK(approx.delta == oracle::exhaustive_nearest(s.lengths(), q));
    CHECK(is_q_rational(approx.t0, q));
    // Same-permutation approximant unless merging collapsed intervals.
    Scalar d(0);
    for (std::size_t j = 0; j < s.lengths().size(); ++j) d += (s.lengths()[j] - approx.t0.lengths()[j]).abs();
    if (approx.t0.size() == s.size()) CHECK(d == approx.delta);
  }
}

TEST_CASE("the Arnoux-Yoccoz maps") {
  const auto ay = arnoux_yoccoz();
  const Scalar a = Scalar::a();
  Scalar sum(0);
  for (const auto& l : ay.g.lengths()) sum += l;
  CHECK(sum == Scalar(1));
  CHECK(a + a * a + a * a * a == Scalar(1));
  CHECK(ay.h == rot(1, 2));
  CHECK(ay.f == compose(ay.h, ay.g));
  CHECK(ay.f == arnoux_yoccoz_f_expected());
  CHECK(ay.f.lengths()[0] == (Scalar(1) - a) / Scalar(2));
  CHECK(ay.f.permutation() == Permutation({7, 1, 6, 3, 2, 5, 4}));
}

TEST_CASE("sweep rows on a short range") {
  const auto rows = ay_sweep(20, 80, 2);
  REQUIRE(rows.size() == 61);
  const Iet f = arnoux_yoccoz().f;
  for (const auto& row : rows) {
    CHECK(row.delta <= Scalar(5, row.q));
    CHECK(row.bound == Scalar(40 * row.q) * Scalar(mpq_class(row.order + 2)) * row.delta);
    CHECK(!row.bound_below_one());
  }
  // Threaded and serial runs agree row for row.
  const auto serial = ay_sweep(20, 80, 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].q == serial[i].q);
    CHECK(rows[i].delta == serial[i].delta);
    CHECK(rows[i].order == serial[i].order);
  }
  CHECK_THROWS_AS(ay_sweep(6, 10), std::invalid_argument);
}
