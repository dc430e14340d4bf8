#pragma once

// Integral points with Y > 0 on E_k: Y^2 = X^3 - 2^k X, found by bounded
// brute force and checked against the closed-form point sets the integral-
// point literature gives for these curves. Points map back to trinomial
// data via X = -2t, Y = 2c, 4d = 3t^2 - 2^(k-1).

#include "qtlab/exact_arith.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qtlab {

struct ECPoint {
  bigint X;
  bigint Y;  // > 0
  unsigned k = 0;

  friend bool operator==(const ECPoint&, const ECPoint&) = default;
};

inline bool on_curve(const ECPoint& p) {
  return p.Y > 0 && p.Y * p.Y == p.X * p.X * p.X - (bigint(1) << p.k) * p.X;
}

struct ECSolutionSet {
  unsigned k = 0;
  unsigned k_mod4 = 0;
  std::vector<ECPoint> points;  // ascending by X; empty when k mod 4 in {0,2,3}
};

/// All integral points with |X| <= xbound and Y > 0, ascending by X.
inline std::vector<ECPoint> ec_points_bruteforce(unsigned k, const bigint& xbound) {
  if (k < 1 || xbound < 1)
    throw std::invalid_argument("ec_points_bruteforce: k and xbound must be >= 1");
  std::vector<ECPoint> points;

  // word-size path: |X^3 - 2^k X| stays below 2^63 for the bounds we scan
  if (k <= 40 && xbound <= 2'000'000) {
    std::int64_t bound = xbound.convert_to<std::int64_t>();
    std::int64_t twok = std::int64_t(1) << k;
    for (std::int64_t x = -bound; x <= bound; ++x) {
      std::int64_t rhs = x * x * x - twok * x;
      if (rhs <= 0) continue;
      std::uint64_t root = 0;
      if (detail::is_square_u64(static_cast<std::uint64_t>(rhs), &root))
        points.push_back({bigint(x), bigint(root), k});
    }
    return points;
  }

  bigint twok = bigint(1) << k;
  for (bigint x = -xbound; x <= xbound; ++x) {
    bigint rhs = x * x * x - twok * x;
    if (rhs <= 0) continue;
    bigint r = boost::multiprecision::sqrt(rhs);
    if (r * r == rhs) points.push_back({x, r, k});
  }
  return points;
}

/// The closed-form set S of integral points on E_k with Y > 0: empty unless
/// k mod 4 = 1; three fixed points for k = 1; four two-power-scaled points
/// for k >= 5. Every constructed point is checked against the curve.
inline ECSolutionSet ec_expected_points(unsigned k) {
  if (k < 1) throw std::invalid_argument("ec_expected_points: k must be >= 1");
  ECSolutionSet s;
  s.k = k;
  s.k_mod4 = k % 4;
  if (s.k_mod4 != 1) return s;

  auto pow2 = [](unsigned e) { return bigint(1) << e; };
  if (k == 1) {
    s.points = {{bigint(-1), bigint(1), k},
                {bigint(2), bigint(2), k},
                {bigint(2) * 13 * 13, bigint(2) * 13 * 239, k}};
  } else {
    s.points = {{-pow2((k - 1) / 2), pow2(3 * (k - 1) / 4), k},
                {pow2((k + 1) / 2), pow2((3 * k + 1) / 4), k},
                {pow2((k + 1) / 2) * 13 * 13, pow2((3 * k + 1) / 4) * 13 * 239, k},
                {pow2((k - 5) / 2) * 3 * 3, pow2(3 * (k - 5) / 4) * 3 * 7, k}};
  }
  for (const ECPoint& p : s.points)
    if (!on_curve(p)) throw std::logic_error("ec_expected_points: point fails curve equation");
  std::sort(s.points.begin(), s.points.end(),
            [](const ECPoint& a, const ECPoint& b) { return a.X < b.X; });
  return s;
}

// Exact rational with positive, reduced denominator.
struct Rational {
  bigint num;
  bigint den = 1;

  Rational() = default;
  Rational(bigint n, bigint d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    bigint g = boost::multiprecision::gcd(num < 0 ? bigint(-num) : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integral() const { return den == 1; }
  std::string str() const { return den == 1 ? num.str() : num.str() + "/" + den.str(); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

struct ECCoefficients {
  bigint t;    // -X/2
  bigint c;    // Y/2
  Rational d;  // (3t^2 - 2^(k-1)) / 4
  bool d_integral = false;
};

/// Pulls (t, c, d) back from a curve point; nullopt when X or Y is odd
/// (t or c would not be integers). d is returned exactly as a rational.
inline std::optional<ECCoefficients> ec_point_to_coefficients(const ECPoint& p) {
  if (!on_curve(p)) throw std::invalid_argument("ec_point_to_coefficients: point not on curve");
  if (p.X % 2 != 0 || p.Y % 2 != 0) return std::nullopt;
  ECCoefficients out;
  out.t = -p.X / 2;
  out.c = p.Y / 2;
  out.d = Rational(3 * out.t * out.t - (bigint(1) << (p.k - 1)), 4);
  out.d_integral = out.d.is_integral();
  return out;
}

}  // namespace qtlab
