#include "qtlab/polynomial.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qtlab;

TEST_CASE("IntPoly arithmetic") {
  IntPoly f{1, 2, 1};   // x^2 + 2x + 1
  IntPoly g{-1, 1};     // x - 1
  CHECK((f * g) == IntPoly{-1, -1, 1, 1});
  CHECK((f + g) == IntPoly{0, 3, 1});
  CHECK((f - f).is_zero());
  CHECK(f.degree() == 2);
  CHECK(f.eval(3) == 16);
  CHECK(f.derivative() == IntPoly{2, 2});
  CHECK(IntPoly{0, 0, 0}.is_zero());

  auto [q, r] = IntPoly{-1, 0, 1}.divide_linear(1);  // x^2 - 1 = (x-1)(x+1)
  CHECK(q == IntPoly{1, 1});
  CHECK(r == 0);
  auto [q2, r2] = IntPoly{3, 1}.divide_linear(5);
  CHECK(r2 == 8);

  CHECK(IntPoly{-1, -4, 0, 1}.str() == "x^3 - 4x - 1");
  CHECK(IntPoly{5, 1, 0, 0, 1}.str() == "x^4 + x + 5");
  CHECK(IntPoly{}.str() == "0");
}

TEST_CASE("integer_roots exact cases") {
  // (x-2)^2 (x+1)
  IntPoly p = IntPoly{-2, 1} * IntPoly{-2, 1} * IntPoly{1, 1};
  CHECK(integer_roots(p) == std::vector<bigint>{-1, 2, 2});
  // (x-1)^4
  IntPoly q = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{-1, 1};
  CHECK(integer_roots(q) == std::vector<bigint>{1, 1, 1, 1});
  // (x-3)^2 (x^2+1): even multiplicity, no sign change
  IntPoly s = IntPoly{-3, 1} * IntPoly{-3, 1} * IntPoly{1, 0, 1};
  CHECK(integer_roots(s) == std::vector<bigint>{3, 3});
  // x^3 - 4x = x(x-2)(x+2): zero constant term
  CHECK(integer_roots(IntPoly{0, -4, 0, 1}) == std::vector<bigint>{-2, 0, 2});
  // no integer roots
  CHECK(integer_roots(IntPoly{-1, -4, 0, 1}).empty());  // x^3 - 4x - 1
  CHECK(integer_roots(IntPoly{2, 0, 1}).empty());       // x^2 + 2
  // degree 1, non-monic
  CHECK(integer_roots(IntPoly{-6, 3}) == std::vector<bigint>{2});
  CHECK(integer_roots(IntPoly{-5, 3}).empty());
  CHECK_THROWS_AS(integer_roots(IntPoly{}), std::domain_error);
}

TEST_CASE("integer_roots agrees with divisor-scan oracle") {
  std::mt19937_64 rng(123);
  auto coeff = [&](int bound) { return bigint(rng() % (2 * bound + 1)) - bound; };
  for (int i = 0; i < 10000; ++i) {
    // random monic cubic or quartic
    std::vector<bigint> c;
    int deg = 3 + static_cast<int>(rng() % 2);
    for (int j = 0; j < deg; ++j) c.push_back(coeff(50));
    c.push_back(1);
    IntPoly p(c);
    CHECK(integer_roots(p) == oracles::divisor_scan_roots(p));
  }
  // planted large roots
  for (int i = 0; i < 500; ++i) {
    bigint r1 = bigint(rng() % 2000000) - 1000000;
    bigint r2 = bigint(rng() % 2000000) - 1000000;
    IntPoly p = IntPoly{-r1, 1} * IntPoly{-r2, 1} * IntPoly{coeff(10), coeff(10), 1};
    std::vector<bigint> roots = integer_roots(p);
    CHECK(std::count(roots.begin(), roots.end(), r1) >= 1);
    CHECK(std::count(roots.begin(), roots.end(), r2) >= 1);
    for (const bigint& r : roots) CHECK(p.eval(r) == 0);
  }
}

TEST_CASE("modp polynomial arithmetic") {
  const std::uint64_t p = 7;
  modp::Poly a{6, 0, 1};  // x^2 - 1
  modp::Poly b{6, 1};     // x - 1
  CHECK(modp::gcd(a, b, p) == modp::Poly{6, 1});
  CHECK(modp::mod(a, b, p).empty());
  CHECK(modp::div_exact(a, b, p) == modp::Poly{1, 1});
  CHECK(modp::mul(b, modp::Poly{1, 1}, p) == a);

  // x^7 mod (x^2 + 1) over F_7: x^2 = -1 -> x^7 = (x^2)^3 x = -x = 6x
  CHECK(modp::powmod(modp::Poly{0, 1}, 7, modp::Poly{1, 0, 1}, p) == modp::Poly{0, 6});

  // derivative of x^4 + 3x^2 + 5 mod 7
  CHECK(modp::derivative(modp::Poly{5, 0, 3, 0, 1}, p) == modp::Poly{0, 6, 0, 4});
}

TEST_CASE("modp exhaustive factorization at tiny p") {
  // x^4 + x^2 + 1 = (x^2 + x + 1)^2 mod 2
  auto f = modp::reduce(IntPoly{1, 0, 1, 0, 1}, 2);
  auto factors = modp::factor_exhaustive(f, 2);
  REQUIRE(factors.size() == 1);
  CHECK(factors[0].first == modp::Poly{1, 1, 1});
  CHECK(factors[0].second == 2);

  // x^4 mod 3 = x^4
  factors = modp::factor_exhaustive(modp::Poly{0, 0, 0, 0, 1}, 3);
  REQUIRE(factors.size() == 1);
  CHECK(factors[0].first == modp::Poly{0, 1});
  CHECK(factors[0].second == 4);

  // x^4 - x = x(x-1)(x^2+x+1) mod 2
  factors = modp::factor_exhaustive(modp::Poly{0, 1, 0, 0, 1}, 2);
  CHECK(factors.size() == 3);

  // product of factors reconstructs f, for random quartics mod 2 and 3
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t p = (rng() % 2) ? 2 : 3;
    modp::Poly g{rng() % p, rng() % p, rng() % p, rng() % p, 1};
    modp::Poly prod{1};
    for (const auto& [fac, e] : modp::factor_exhaustive(g, p))
      for (unsigned j = 0; j < e; ++j) prod = modp::mul(prod, fac, p);
    CHECK(prod == g);
  }
}
