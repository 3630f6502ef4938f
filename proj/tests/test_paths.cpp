#include <doctest.h>

#include <set>

#include "klrpoly/bruhat.hpp"
#include "klrpoly/error.hpp"
#include "klrpoly/paths.hpp"
#include "klrpoly/rpoly.hpp"
#include "oracles.hpp"

using namespace klrpoly;

namespace {
Permutation P(const char *s) { return parse_permutation(s); }
Transposition T(int i, int j) { return Transposition(i, j); }
} // namespace

TEST_CASE("lex_compare") {
  CHECK(lex_compare(T(1, 3), T(2, 3)) == std::strong_ordering::less);
  CHECK(lex_compare(T(1, 2), T(1, 2)) == std::strong_ordering::equal);
  CHECK(lex_compare(T(1, 4), T(2, 3)) == std::strong_ordering::less);
  CHECK(lex_compare(T(3, 4), T(2, 5)) == std::strong_ordering::greater);
}

TEST_CASE("BruhatPath nodes and text") {
  const BruhatPath p(P("2314"), {T(1, 2), T(1, 4), T(2, 4)});
  CHECK(p.end() == P("4312"));
  CHECK(p.nodes().size() == 4);
  CHECK(p.is_bruhat_path());
  CHECK(p.is_monotone(Direction::Increasing));
  CHECK_FALSE(p.is_monotone(Direction::Decreasing));
  CHECK(to_string(p) == "2314 -(1,2)-> 3214 -(1,4)-> 4213 -(2,4)-> 4312");
  CHECK(to_string(BruhatPath(P("123"))) == "123");

  const BruhatPath down(P("321"), {T(1, 2)});
  CHECK_FALSE(down.is_bruhat_path());
}

TEST_CASE("monotone_paths examples") {
  const auto single = monotone_paths(P("123"), P("123"), Direction::Increasing);
  REQUIRE(single.size() == 1);
  CHECK(single[0].empty());

  const auto s3 = monotone_paths(P("123"), P("321"), Direction::Increasing);
  REQUIRE(s3.size() == 2);
  CHECK(s3[0].labels() == std::vector{T(1, 2), T(1, 3), T(2, 3)});
  CHECK(s3[1].labels() == std::vector{T(1, 3)});

  const auto found_paths = monotone_paths(P("2314"), P("4312"), Direction::Increasing);
  bool found = false;
  for (const auto &p : found_paths) found |= to_string(p) == "2314 -(1,2)-> 3214 -(1,4)-> 4213 -(2,4)-> 4312";
  CHECK(found);

  CHECK(monotone_paths(P("132"), P("213"), Direction::Increasing).empty());
  CHECK_THROWS_AS(monotone_paths(P("12"), P("123"), Direction::Increasing), DomainError);
}

TEST_CASE("unique_maximal_path") {
  CHECK(unique_maximal_path(P("312"), P("312"), Direction::Increasing).empty());
  CHECK(unique_maximal_path(P("123"), P("321"), Direction::Increasing).labels() ==
        std::vector{T(1, 2), T(1, 3), T(2, 3)});
  const auto p = unique_maximal_path(P("1234"), P("4312"), Direction::Increasing);
  CHECK(p.length() == 5);
  CHECK(to_string(p) == "1234 -(1,2)-> 2134 -(1,3)-> 3124 -(1,4)-> 4123 -(2,3)-> 4213 -(2,4)-> 4312");
  CHECK_THROWS_AS(unique_maximal_path(P("132"), P("213"), Direction::Increasing), DomainError);
}

TEST_CASE("monotone paths on S_4 are valid, distinct, sorted and complete") {
  const auto group = all_permutations(4);
  for (const auto &u : group) {
    for (const auto &v : group) {
      for (const auto dir : {Direction::Increasing, Direction::Decreasing}) {
        const auto paths = monotone_paths(u, v, dir);
        std::set<std::vector<Transposition>> seen;
        for (std::size_t i = 0; i < paths.size(); ++i) {
          const auto &p = paths[i];
          REQUIRE(p.start() == u);
          REQUIRE(p.end() == v);
          REQUIRE(p.is_bruhat_path());
          REQUIRE(p.is_monotone(dir));
          REQUIRE(seen.insert(p.labels()).second);
          if (i > 0) REQUIRE(paths[i - 1].labels() < p.labels());
        }
        const auto oracle_count = oracle::path_polynomial(u, v, dir == Direction::Increasing);
        std::int64_t total = 0;
        for (const auto c : oracle_count.coefficients()) total += c;
        REQUIRE(static_cast<std::int64_t>(paths.size()) == total);
        if (bruhat_leq(u, v)) {
          REQUIRE(unique_maximal_path(u, v, dir).length() == length(v) - length(u));
        }
      }
    }
  }
}

TEST_CASE("VPath construction and text") {
  const BruhatPath leg1(P("1234"), {T(2, 3), T(1, 3)});
  const BruhatPath leg2(P("2314"), {T(1, 2), T(1, 4), T(2, 4)});
  const VPath p(leg1, leg2);
  CHECK(p.source() == P("1234"));
  CHECK(p.bottom() == P("2314"));
  CHECK(p.target() == P("4312"));
  CHECK(p.total_length() == 5);
  CHECK(p.sign() == 1);
  CHECK(p.is_valid());
  CHECK(to_string(p) == "1234 -(2,3)-> 1324 -(1,3)-> *2314* -(1,2)-> 3214 -(1,4)-> 4213 -(2,4)-> 4312");

  CHECK_THROWS_AS(VPath(leg1, BruhatPath(P("3214"))), InvariantViolation);
  CHECK_FALSE(VPath(leg2, BruhatPath(P("4312"))).is_valid());
}

TEST_CASE("vpaths examples") {
  const auto trivial = vpaths(P("2413"), P("2413"));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].total_length() == 0);

  const auto cover = vpaths(P("123"), P("213"));
  REQUIRE(cover.size() == 2);
  CHECK(cover[0].bottom() == P("123"));
  CHECK(cover[1].bottom() == P("213"));
  CHECK(cover[0].sign() == -cover[1].sign());

  CHECK(vpaths(P("1234"), P("4312")).size() == 32);
  CHECK(vpath_signed_sum(P("123"), P("213")).is_zero());
  CHECK(vpath_signed_sum(P("1234"), P("4312")).is_zero());
  CHECK(vpath_signed_sum(P("231"), P("231")) == IntPolynomial::constant(1));
  CHECK_THROWS_AS(vpaths(P("213"), P("132")), DomainError);
}

TEST_CASE("V-path regrouping equals the inversion sum on S_4") {
  RTable table;
  for (const auto &u : all_permutations(4)) {
    for (const auto &v : all_permutations(4)) {
      if (!bruhat_leq(u, v)) continue;
      for (const auto &p : vpaths(u, v)) REQUIRE(p.is_valid());
      REQUIRE(vpath_signed_sum(u, v) == inversion_sum(u, v, table));
    }
  }
}
