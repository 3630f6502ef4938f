#include <doctest.h>

#include <random>
#include <thread>

#include "klrpoly/bruhat.hpp"
#include "klrpoly/error.hpp"
#include "klrpoly/rpoly.hpp"
#include "oracles.hpp"

using namespace klrpoly;

namespace {
Permutation P(const char *s) { return parse_permutation(s); }
const IntPolynomial one = IntPolynomial::constant(1);
} // namespace

TEST_CASE("rtilde examples") {
  RTable table;
  CHECK(rtilde(P("2413"), P("2413"), table) == one);
  CHECK(rtilde(P("2354167"), P("3456172"), table) == IntPolynomial::monomial(4));
  CHECK(rtilde(P("2354167"), P("3564172"), table) == IntPolynomial::monomial(6) + IntPolynomial::monomial(4));
  CHECK(rtilde(P("321"), P("123"), table).is_zero());
  CHECK(rtilde(P("132"), P("213"), table).is_zero());
  CHECK(table.size(RTable::Kind::RTilde) > 0);
  CHECK_THROWS_AS(rtilde(P("12"), P("123"), table), DomainError);
}

TEST_CASE("R examples") {
  CHECK(rpoly_r(P("231"), P("231")) == one);
  CHECK(rpoly_r(P("123"), P("213")) == IntPolynomial({-1, 1}));
  CHECK(rpoly_r(P("123"), P("321")) == IntPolynomial({-1, 2, -2, 1}));
  CHECK(rpoly_r(P("321"), P("123")).is_zero());

  RTable table;
  CHECK(rpoly_from_rtilde(P("231"), P("231"), table) == one);
  CHECK(rpoly_from_rtilde(P("123"), P("213"), table) == IntPolynomial({-1, 1}));
  CHECK(rpoly_from_rtilde(P("123"), P("321"), table) == IntPolynomial({-1, 2, -2, 1}));
  CHECK_THROWS_AS(rpoly_from_rtilde(P("132"), P("213"), table), DomainError);
}

TEST_CASE("rtilde and R share one table without interference") {
  RTable table;
  CHECK(rtilde(P("123"), P("321"), table) == IntPolynomial({0, 1, 0, 1}));
  CHECK(rpoly_r(P("123"), P("321"), table) == IntPolynomial({-1, 2, -2, 1}));
  CHECK(rtilde(P("123"), P("321"), table) == IntPolynomial({0, 1, 0, 1}));
}

TEST_CASE("rtilde_by_paths examples") {
  CHECK(rtilde_by_paths(P("312"), P("312"), Direction::Increasing) == one);
  CHECK(rtilde_by_paths(P("123"), P("321"), Direction::Increasing) == IntPolynomial({0, 1, 0, 1}));
  CHECK(rtilde_by_paths(P("123"), P("321"), Direction::Decreasing) == IntPolynomial({0, 1, 0, 1}));
  CHECK(rtilde_by_paths(P("132"), P("213"), Direction::Increasing).is_zero());
}

TEST_CASE("inversion_sum examples") {
  RTable table;
  CHECK(inversion_sum(P("2143"), P("2143"), table) == one);
  CHECK(inversion_sum(P("123"), P("213"), table).is_zero());
  CHECK(inversion_sum(P("123"), P("321"), table).is_zero());
  CHECK_THROWS_AS(inversion_sum(P("213"), P("132"), table), DomainError);
}

TEST_CASE("recurrence agrees with the unpruned path-count oracle on S_4") {
  RTable table;
  const auto group = all_permutations(4);
  for (const auto &u : group) {
    for (const auto &v : group) {
      const auto r = rtilde(u, v, table);
      REQUIRE(r == oracle::path_polynomial(u, v, true));
      REQUIRE(r == oracle::path_polynomial(u, v, false));
      REQUIRE(rtilde_by_paths(u, v, Direction::Increasing) == r);
      REQUIRE(rtilde_by_paths(u, v, Direction::Decreasing) == r);
    }
  }
}

TEST_CASE("descent choice does not matter: S_4 exhaustive, S_5 sampled") {
  RTable table;
  for (const auto &u : all_permutations(4)) {
    for (const auto &v : all_permutations(4)) {
      REQUIRE(rtilde_with_descent(u, v, DescentChoice::Largest) == rtilde(u, v, table));
    }
  }
  const auto s5 = all_permutations(5);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const auto &u = s5[rng() % s5.size()];
    const auto &v = s5[rng() % s5.size()];
    CHECK(rtilde_with_descent(u, v, DescentChoice::Largest) == rtilde_with_descent(u, v, DescentChoice::Smallest));
  }
}

TEST_CASE("degree, sign and vanishing laws on S_4") {
  RTable table;
  for (const auto &u : all_permutations(4)) {
    for (const auto &v : all_permutations(4)) {
      const auto r = rtilde(u, v, table);
      REQUIRE(r.is_zero() == !bruhat_leq(u, v));
      if (!bruhat_less(u, v)) continue;
      const int d = length(v) - length(u);
      CHECK(r.degree() == d);
      CHECK(r.coefficient(d) == 1);
      for (int k = 0; k <= d; ++k) {
        CHECK(r.coefficient(k) >= 0);
        if ((d - k) % 2 != 0) CHECK(r.coefficient(k) == 0);
      }
    }
  }
}

TEST_CASE("change of variable on S_4") {
  RTable table;
  for (const auto &u : all_permutations(4)) {
    for (const auto &v : all_permutations(4)) {
      if (bruhat_leq(u, v)) {
        REQUIRE(rpoly_r(u, v, table) == rpoly_from_rtilde(u, v, table));
      } else {
        REQUIRE(rpoly_r(u, v, table).is_zero());
      }
    }
  }
}

TEST_CASE("inversion formula on S_4") {
  RTable table;
  for (const auto &u : all_permutations(4)) {
    for (const auto &v : all_permutations(4)) {
      if (!bruhat_leq(u, v)) continue;
      REQUIRE(inversion_sum(u, v, table) == (u == v ? one : IntPolynomial{}));
    }
  }
}

TEST_CASE("a table shared by concurrent workers gives the sequential values") {
  const auto group = all_permutations(5);
  RTable shared;
  std::vector<std::jthread> pool;
  for (int w = 0; w < 4; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < group.size(); i += 4) {
        for (const auto &v : group) (void)rtilde(group[i], v, shared);
      }
    });
  }
  pool.clear();

  RTable sequential;
  for (const auto &u : group) {
    for (const auto &v : group) REQUIRE(rtilde(u, v, shared) == rtilde(u, v, sequential));
  }
  CHECK(shared.size(RTable::Kind::RTilde) == sequential.size(RTable::Kind::RTilde));
  CHECK(shared.hits() > 0);
}
