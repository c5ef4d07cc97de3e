#include <doctest.h>

#include <algorithm>

#include "oddset/exact_arith.hpp"
#include "oddset/geometry.hpp"
#include "test_support.hpp"

using namespace oddset;
using oddset::testing::q;
using oddset::testing::Rng;

namespace {

PointSet two_dim_set() {
  return PointSet(2, {make_point({q(3, 2), q(1, 2)}), make_point({q(1), q(1)}), make_point({q(3), q(2)}),
                      make_point({q(5, 2), q(5, 2)})});
}

}  // namespace

TEST_CASE("l1_distance examples") {
  CHECK(l1_distance(make_point({q(0)}), make_point({q(1)})) == q(1));
  CHECK(l1_distance(make_point({q(3, 2), q(1, 2)}), make_point({q(1), q(1)})) == q(1));
  const Point p = make_point({q(7, 3), q(-2)});
  CHECK(l1_distance(p, p) == q(0));
  CHECK_THROWS_AS(l1_distance(make_point({q(0)}), make_point({q(0), q(1)})), std::invalid_argument);
}

TEST_CASE("l1_distance is a metric") {
  Rng rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const Eigen::Index n = oddset::testing::uniform(rng, 1, 5);
    const Point a = oddset::testing::random_point(rng, n);
    const Point b = oddset::testing::random_point(rng, n);
    const Point c = oddset::testing::random_point(rng, n);
    const Point t = oddset::testing::random_point(rng, n);
    const Rational ab = l1_distance(a, b);
    CHECK(ab == oddset::testing::naive_l1(a, b));
    CHECK(ab == l1_distance(b, a));
    CHECK(ab >= q(0));
    CHECK((ab == q(0)) == (lex_compare(a, b) == 0));
    CHECK(l1_distance(a, c) <= ab + l1_distance(b, c));
    CHECK(l1_distance(Point(a + t), Point(b + t)) == ab);
  }
}

TEST_CASE("integer triangle parity holds for all integer triples") {
  Rng rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const Eigen::Index n = oddset::testing::uniform(rng, 1, 6);
    const Point a = oddset::testing::random_integer_point(rng, n, 30);
    const Point b = oddset::testing::random_integer_point(rng, n, 30);
    const Point c = oddset::testing::random_integer_point(rng, n, 30);
    const Rational lhs = l1_distance(a, b) + l1_distance(b, c);
    const Rational rhs = l1_distance(a, c);
    CHECK(classify_rational(lhs - rhs) == RationalClass::even_integer);
  }
}

TEST_CASE("PointSet validation") {
  CHECK_THROWS_WITH_AS(PointSet(1, {make_point({q(0)}), make_point({q(1), q(2)})}), "point 2 has dimension 2, expected 1",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(PointSet(1, {make_point({q(0)}), make_point({q(1)}), make_point({q(0)})}),
                       "points 1 and 3 coincide", std::invalid_argument);
  CHECK_THROWS_AS(PointSet(0, {}), std::invalid_argument);
  CHECK(PointSet(3, {}).empty());
}

TEST_CASE("verify_odd_set examples") {
  SUBCASE("base set {0, 1}") {
    const auto cert = verify_odd_set(PointSet(1, {make_point({q(0)}), make_point({q(1)})}));
    CHECK(cert.verdict);
    REQUIRE(cert.pair_results.size() == 1);
    CHECK(cert.pair_results[0].distance == q(1));
  }
  SUBCASE("{0, 1, 2} fails on the even pair") {
    const auto cert = verify_odd_set(PointSet(1, {make_point({q(0)}), make_point({q(1)}), make_point({q(2)})}));
    CHECK_FALSE(cert.verdict);
    const PairResult* bad = cert.first_failure();
    REQUIRE(bad != nullptr);
    CHECK(bad->i == 0);
    CHECK(bad->j == 2);
    CHECK(bad->distance == q(2));
  }
  SUBCASE("two-dimensional four point set") {
    // Hand-summed: |3/2-1|+|1/2-1| = 1, |3/2-3|+|1/2-2| = 3, |3/2-5/2|+|1/2-5/2| = 3,
    // |1-3|+|1-2| = 3, |1-5/2|+|1-5/2| = 3, |3-5/2|+|2-5/2| = 1.
    const auto cert = verify_odd_set(two_dim_set());
    CHECK(cert.verdict);
    std::vector<Rational> got;
    for (const auto& r : cert.pair_results) got.push_back(r.distance);
    CHECK(got == std::vector<Rational>{q(1), q(3), q(3), q(3), q(3), q(1)});
  }
  SUBCASE("vacuous cases") {
    CHECK(verify_odd_set(PointSet(2, {})).verdict);
    CHECK(verify_odd_set(PointSet(2, {make_point({q(1, 3), q(0)})})).verdict);
  }
  SUBCASE("non-integer distance") {
    const auto cert = verify_odd_set(PointSet(1, {make_point({q(0)}), make_point({q(1, 2)})}));
    CHECK_FALSE(cert.verdict);
    CHECK(cert.pair_results[0].distance == q(1, 2));
  }
}

TEST_CASE("certificate covers every pair once in (i, j) order") {
  Rng rng(8);
  const PointSet ps = oddset::testing::random_half_set(rng, 3, 25, 6);
  const auto cert = verify_odd_set(ps);
  REQUIRE(cert.pair_results.size() == 25 * 24 / 2);
  std::size_t k = 0;
  bool all = true;
  for (std::uint32_t i = 0; i < 25; ++i) {
    for (std::uint32_t j = i + 1; j < 25; ++j, ++k) {
      CHECK(cert.pair_results[k].i == i);
      CHECK(cert.pair_results[k].j == j);
      CHECK(cert.pair_results[k].distance == oddset::testing::naive_l1(ps[i], ps[j]));
      all = all && cert.pair_results[k].is_odd_integer;
    }
  }
  CHECK(cert.verdict == all);
}

TEST_CASE("integer fast path, rational path and thread count agree") {
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Point> pts;
    const Eigen::Index n = oddset::testing::uniform(rng, 1, 4);
    while (pts.size() < 40) {
      Point p = oddset::testing::random_point(rng, n, 20, 4);
      if (std::none_of(pts.begin(), pts.end(), [&](const Point& x) { return lex_compare(x, p) == 0; })) {
        pts.push_back(std::move(p));
      }
    }
    const PointSet ps(n, std::move(pts));
    const auto fast = verify_odd_set(ps, {1, false});
    const auto slow = verify_odd_set(ps, {1, true});
    const auto threaded = verify_odd_set(ps, {7, false});
    REQUIRE(fast.pair_results.size() == slow.pair_results.size());
    for (std::size_t k = 0; k < fast.pair_results.size(); ++k) {
      CHECK(fast.pair_results[k].distance == slow.pair_results[k].distance);
      CHECK(fast.pair_results[k].is_odd_integer == slow.pair_results[k].is_odd_integer);
      CHECK(fast.pair_results[k].distance == threaded.pair_results[k].distance);
      CHECK(fast.pair_results[k].i == threaded.pair_results[k].i);
      CHECK(fast.pair_results[k].j == threaded.pair_results[k].j);
    }
    CHECK(fast.verdict == slow.verdict);
  }
}

TEST_CASE("huge coordinates fall back to the rational path") {
  const Rational big = Rational::parse("1000000000000000000000001");
  const PointSet ps(1, {make_point({q(0)}), make_point({big})});
  CHECK_FALSE(integer_embedding(ps.points()).has_value());
  const auto cert = verify_odd_set(ps);
  CHECK(cert.verdict);
  CHECK(cert.pair_results[0].distance == big);
}

TEST_CASE("odd scaling preserves the odd-distance property") {
  const PointSet base = two_dim_set();
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const std::int64_t c = 2 * oddset::testing::uniform(rng, -500, 500) + 1;
    CHECK(verify_odd_set(scale(base, q(c))).verdict);
  }
  CHECK_FALSE(verify_odd_set(scale(base, q(2))).verdict);
}

TEST_CASE("phi_fingerprint") {
  CHECK(phi_fingerprint(make_point({q(3, 2), q(1, 2)})) == Fingerprint{true, true});
  CHECK(phi_fingerprint(make_point({q(1), q(1)})) == Fingerprint{false, false});
  CHECK(phi_fingerprint(make_point({q(5, 2), q(2)})) == Fingerprint{true, false});
  CHECK(phi_fingerprint(make_point({q(-1, 2)})) == Fingerprint{true});
  CHECK_THROWS_AS(phi_fingerprint(make_point({q(1), q(1, 4)})), std::invalid_argument);
}

TEST_CASE("parity_audit examples") {
  SUBCASE("four point set") {
    const auto audit = parity_audit(two_dim_set());
    CHECK(audit.fiber_sizes.size() == 2);
    CHECK(audit.fiber_sizes.at(Fingerprint{true, true}) == 2);
    CHECK(audit.fiber_sizes.at(Fingerprint{false, false}) == 2);
    CHECK(std::all_of(audit.weight_parities.begin(), audit.weight_parities.end(),
                      [](Parity p) { return p == Parity::even; }));
    CHECK(audit.passes());
  }
  SUBCASE("mixed weight parities") {
    const auto audit = parity_audit(PointSet(1, {make_point({q(0)}), make_point({q(1, 2)}), make_point({q(1)})}));
    CHECK(audit.weight_parities == std::vector<Parity>{Parity::even, Parity::odd, Parity::even});
    CHECK(audit.fibers_at_most_two);
    CHECK_FALSE(audit.uniform_weight_parity);
    CHECK_FALSE(audit.passes());
  }
  SUBCASE("three points in one fiber") {
    const auto audit = parity_audit(PointSet(1, {make_point({q(0)}), make_point({q(1)}), make_point({q(2)})}));
    CHECK(audit.uniform_weight_parity);
    CHECK_FALSE(audit.fibers_at_most_two);
  }
  SUBCASE("singleton") {
    CHECK(parity_audit(PointSet(3, {make_point({q(1, 2), q(0), q(7)})})).passes());
  }
  SUBCASE("coordinate off the half lattice") {
    CHECK_THROWS_AS(parity_audit(PointSet(1, {make_point({q(1, 3)})})), std::invalid_argument);
  }
}

TEST_CASE("odd-distance sets on the half lattice pass the parity audit") {
  // Random small half-lattice sets: whenever one happens to be odd-distance,
  // both necessary conditions must hold and its size must respect 2^n.
  Rng rng(31);
  int odd_sets = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const Eigen::Index n = oddset::testing::uniform(rng, 1, 3);
    const auto size = static_cast<std::size_t>(oddset::testing::uniform(rng, 2, 5));
    const PointSet ps = oddset::testing::random_half_set(rng, n, size, 2);
    if (!verify_odd_set(ps, {1, false}).verdict) continue;
    ++odd_sets;
    CHECK(parity_audit(ps).passes());
    CHECK(ps.size() <= (std::size_t{1} << n));
  }
  CHECK(odd_sets > 50);
}
