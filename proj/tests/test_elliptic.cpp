#include "qtlab/elliptic.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qtlab;

TEST_CASE("brute force point scans") {
  // k = 5, |X| <= 2000: the four known points
  std::vector<ECPoint> pts = ec_points_bruteforce(5, 2000);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0] == ECPoint{-4, 8, 5});
  CHECK(pts[1] == ECPoint{8, 16, 5});
  CHECK(pts[2] == ECPoint{9, 21, 5});  // 9^3 - 32*9 = 441 = 21^2
  CHECK(pts[3] == ECPoint{1352, 49712, 5});
  for (const ECPoint& p : pts) CHECK(on_curve(p));

  // k = 3 mod 4: empty
  CHECK(ec_points_bruteforce(3, 1'000'000).empty());

  // k = 1: three points
  pts = ec_points_bruteforce(1, 1'000'000);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == ECPoint{-1, 1, 1});
  CHECK(pts[1] == ECPoint{2, 2, 1});
  CHECK(pts[2] == ECPoint{338, 6214, 1});  // (2*13^2, 2*13*239)

  CHECK_THROWS_AS(ec_points_bruteforce(0, 100), std::invalid_argument);
  CHECK_THROWS_AS(ec_points_bruteforce(5, 0), std::invalid_argument);
}

TEST_CASE("bigint path agrees with the word-size path") {
  // force the generic path by exceeding the fast-path k threshold
  std::vector<ECPoint> fast = ec_points_bruteforce(5, 2000);
  std::vector<ECPoint> slow;
  for (bigint x = -2000; x <= 2000; ++x) {
    bigint rhs = x * x * x - 32 * x;
    if (rhs <= 0) continue;
    bigint r = int_sqrt(rhs);
    if (r * r == rhs) slow.push_back({x, r, 5});
  }
  CHECK(fast == slow);

  // a large-k scan runs through the bigint branch: 2^41 * X dominates
  std::vector<ECPoint> big = ec_points_bruteforce(41, 3000);
  for (const ECPoint& p : big) CHECK(on_curve(p));
}

TEST_CASE("expected point sets") {
  ECSolutionSet s = ec_expected_points(5);
  CHECK(s.k_mod4 == 1);
  REQUIRE(s.points.size() == 4);
  CHECK(s.points[0] == ECPoint{-4, 8, 5});
  CHECK(s.points[1] == ECPoint{8, 16, 5});
  CHECK(s.points[2] == ECPoint{9, 21, 5});
  CHECK(s.points[3] == ECPoint{1352, 49712, 5});

  s = ec_expected_points(9);
  bool has_36_168 = false;
  for (const ECPoint& p : s.points) has_36_168 = has_36_168 || p == ECPoint{36, 168, 9};
  CHECK(has_36_168);  // (2^2 * 3^2, 2^3 * 3 * 7)

  CHECK(ec_expected_points(4).points.empty());
  for (unsigned k : {2u, 3u, 4u, 6u, 7u, 8u, 10u, 11u, 12u}) {
    CHECK(ec_expected_points(k).points.empty());
  }
  CHECK(ec_expected_points(1).points.size() == 3);
  CHECK_THROWS_AS(ec_expected_points(0), std::invalid_argument);
}

TEST_CASE("bounded scans match the expected table for k = 1..13") {
  for (unsigned k = 1; k <= 13; ++k) {
    std::vector<ECPoint> brute = ec_points_bruteforce(k, 2'000'000);
    std::vector<ECPoint> expected;
    for (const ECPoint& p : ec_expected_points(k).points)
      if (boost::multiprecision::abs(p.X) <= 2'000'000) expected.push_back(p);
    INFO("k = " << k);
    CHECK(brute == expected);
  }
}

TEST_CASE("coefficient pullbacks") {
  // k=1, (2,2): d = 1/2, not integral
  auto c = ec_point_to_coefficients(ECPoint{2, 2, 1});
  REQUIRE(c.has_value());
  CHECK(c->t == -1);
  CHECK(c->c == 1);
  CHECK(c->d == Rational(1, 2));
  CHECK_FALSE(c->d_integral);

  // k=1, (-1,1): X odd, no integer t
  CHECK_FALSE(ec_point_to_coefficients(ECPoint{-1, 1, 1}).has_value());

  // k=1, (338, 6214): t = -169, d = (3*169^2 - 1)/4 = 42841/2
  c = ec_point_to_coefficients(ECPoint{338, 6214, 1});
  REQUIRE(c.has_value());
  CHECK(c->t == -169);
  CHECK(c->c == 3107);  // 13 * 239
  CHECK(c->d == Rational(42841, 2));
  CHECK_FALSE(c->d_integral);

  // k=5, (-4,8): the (2, 16, -1) triple
  c = ec_point_to_coefficients(ECPoint{-4, 8, 5});
  REQUIRE(c.has_value());
  CHECK(c->t == 2);
  CHECK(c->c == 4);
  CHECK(c->c * c->c == 16);
  CHECK(c->d == Rational(-1, 1));
  CHECK(c->d_integral);

  // k=9, (36,168): the (-18, 7056, 179) triple
  c = ec_point_to_coefficients(ECPoint{36, 168, 9});
  REQUIRE(c.has_value());
  CHECK(c->t == -18);
  CHECK(c->c == 84);
  CHECK(c->c * c->c == 7056);
  CHECK(c->d == Rational(179, 1));
  CHECK(c->d_integral);

  CHECK_THROWS_AS(ec_point_to_coefficients(ECPoint{3, 3, 5}), std::invalid_argument);
}

TEST_CASE("pullback identities across the table") {
  for (unsigned k = 1; k <= 13; ++k) {
    for (const ECPoint& p : ec_expected_points(k).points) {
      auto c = ec_point_to_coefficients(p);
      if (!c) continue;
      // c^2 = -2t^3 + 2^(k-1) t
      bigint lhs = c->c * c->c;
      bigint rhs = -2 * c->t * c->t * c->t + (bigint(1) << (k - 1)) * c->t;
      CHECK(lhs == rhs);
      if (c->d_integral) {
        // 3t^2 - 4d = 2^(k-1)
        bigint size = 3 * c->t * c->t - 4 * c->d.num;
        bigint pow2 = bigint(1) << (k - 1);
        CHECK(size == pow2);
        // no integral triple satisfies the cyclic sign conditions
        bool cyclic_signs = c->t > 0 && c->d.num > 0;
        CHECK_FALSE(cyclic_signs);
      }
    }
  }
}

TEST_CASE("Rational reduction") {
  CHECK(Rational(4, 8) == Rational(1, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(6, -4).num == -3);
  CHECK(Rational(6, -4).den == 2);
  CHECK(Rational(8, 4).is_integral());
  CHECK(Rational(716, 4).str() == "179");
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}
