#pragma once

// General monic integer quartics x^4 + ax^3 + bx^2 + cx + d: discriminant,
// resolvent cubic, exact irreducibility, and the resolvent-cubic Galois
// classification. The search harness runs the x^4+bx^2+d and x^4+ax^3+d
// families through this path; for the C4/D4 branch the field-theoretic
// "splits over L" test is realized as integer square tests against the
// discriminant of the resolvent's irreducible quadratic cofactor.

#include "qtlab/exact_arith.hpp"
#include "qtlab/galois.hpp"
#include "qtlab/polynomial.hpp"
#include "qtlab/trinomial.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qtlab {

struct MonicQuartic {
  bigint a, b, c, d;  // x^4 + a x^3 + b x^2 + c x + d

  IntPoly to_poly() const { return IntPoly{d, c, b, a, 1}; }

  friend bool operator==(const MonicQuartic&, const MonicQuartic&) = default;
};

inline MonicQuartic to_quartic(const Trinomial& T) { return {0, 0, T.c, T.d}; }

// y^3 + A y^2 + B y + C
struct MonicCubic {
  bigint A, B, C;

  bigint eval(const bigint& y) const { return ((y + A) * y + B) * y + C; }
  IntPoly to_poly() const { return IntPoly{C, B, A, 1}; }

  /// 18ABC - 4A^3C + A^2B^2 - 4B^3 - 27C^2
  bigint discriminant() const {
    return 18 * A * B * C - 4 * A * A * A * C + A * A * B * B - 4 * B * B * B - 27 * C * C;
  }
};

/// Resolvent cubic with roots x1x2+x3x4, x1x3+x2x4, x1x4+x2x3:
/// y^3 - b y^2 + (ac - 4d) y - (a^2 d + c^2 - 4bd).
inline MonicCubic resolvent_cubic(const MonicQuartic& f) {
  return {-f.b, f.a * f.c - 4 * f.d, 4 * f.b * f.d - f.a * f.a * f.d - f.c * f.c};
}

inline bigint discriminant(const MonicQuartic& f) {
  const bigint &a = f.a, &b = f.b, &c = f.c, &d = f.d;
  bigint a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d;
  return 256 * d2 * d - 192 * a * c * d2 - 128 * b2 * d2 + 144 * a2 * b * d2 -
         27 * a2 * a2 * d2 + 144 * b * c2 * d - 6 * a2 * c2 * d - 80 * a * b2 * c * d +
         18 * a2 * a * b * c * d + 16 * b2 * b2 * d - 4 * a2 * b2 * b * d - 27 * c2 * c2 +
         18 * a * b * c2 * c - 4 * a2 * a * c2 * c - 4 * b2 * b * c2 + a2 * b2 * c2;
}

namespace detail {

// Factorization into two monic integer quadratics (x^2+ux+v)(x^2+wx+z),
// found by divisor-pair enumeration over vz = d. Needs d factored.
inline std::optional<std::vector<IntPoly>> quartic_quadratic_split(const MonicQuartic& f,
                                                                   const FactorBudget& budget) {
  FactoredInteger fd = factorize(f.d, budget);
  if (!fd.complete)
    throw incomplete_factorization_error("quartic_quadratic_split: cannot enumerate divisors", fd);
  auto try_pair = [&](const bigint& v, const bigint& z) -> std::optional<std::vector<IntPoly>> {
    bigint u, w;
    if (v == z) {
      if (f.c != f.a * v) return std::nullopt;
      bigint disc = f.a * f.a - 4 * (f.b - 2 * v);
      if (disc < 0 || !is_perfect_square(disc)) return std::nullopt;
      bigint s = int_sqrt(disc);
      if ((f.a + s) % 2 != 0) return std::nullopt;
      u = (f.a + s) / 2;
      w = f.a - u;
    } else {
      bigint num = f.c - f.a * v;
      bigint den = z - v;
      if (num % den != 0) return std::nullopt;
      u = num / den;
      w = f.a - u;
    }
    if (v + z + u * w != f.b) return std::nullopt;
    IntPoly f1{v, u, 1};
    IntPoly f2{z, w, 1};
    if (f1 * f2 != f.to_poly())
      throw std::logic_error("quartic_quadratic_split: re-expansion mismatch");
    return std::vector<IntPoly>{f1, f2};
  };
  for (const bigint& dv : divisors(fd)) {
    for (const bigint& v : {dv, bigint(-dv)}) {
      if (auto split = try_pair(v, f.d / v)) return split;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Exact irreducibility over Q for a monic integer quartic with d != 0.
inline IrreducibilityVerdict is_irreducible(const MonicQuartic& f,
                                            const FactorBudget& budget = {}) {
  if (f.d == 0) throw std::invalid_argument("is_irreducible: zero constant term");
  IrreducibilityVerdict v;
  v.separable = discriminant(f) != 0;

  std::vector<bigint> roots = integer_roots(f.to_poly());
  if (!roots.empty()) {
    const bigint& r = roots.front();
    auto [quot, rem] = f.to_poly().divide_linear(r);
    if (rem != 0) throw std::logic_error("is_irreducible: root division failed");
    v.irreducible = false;
    v.witness = std::vector<IntPoly>{IntPoly{-r, 1}, quot};
    return v;
  }
  if (auto split = detail::quartic_quadratic_split(f, budget)) {
    v.irreducible = false;
    v.witness = std::move(split);
    return v;
  }
  v.irreducible = v.separable;
  return v;
}

/// Resolvent-cubic Galois classification of an irreducible separable monic
/// quartic. For the unique-integer-root branch, the two auxiliary quadratics
/// x^2 - tx + d and x^2 + ax + (b - t) split over the resolvent's splitting
/// field iff their discriminants are zero, perfect squares, or lie in the
/// same quadratic field as the cofactor discriminant.
inline GaloisVerdict classify_galois(const MonicQuartic& f, const IrreducibilityVerdict& irr) {
  if (!irr.separable)
    throw std::invalid_argument("classify_galois: discriminant is zero (inseparable)");
  if (!irr.irreducible)
    throw std::invalid_argument("classify_galois: quartic is reducible");

  MonicCubic r = resolvent_cubic(f);
  bigint disc = discriminant(f);
  if (r.discriminant() != disc)
    throw std::logic_error("classify_galois: quartic/resolvent discriminant mismatch");

  GaloisVerdict v;
  v.discriminant_is_square = is_perfect_square(disc);
  v.resolvent_integer_roots = integer_roots(r.to_poly());

  switch (v.resolvent_integer_roots.size()) {
    case 0:
      v.group = v.discriminant_is_square ? GaloisGroup::A4 : GaloisGroup::S4;
      break;
    case 3:
      v.group = GaloisGroup::V4;
      break;
    case 1: {
      const bigint& t = v.resolvent_integer_roots.front();
      // cofactor of (y - t) in the resolvent: y^2 + (A+t) y + (t^2 + At + B)
      bigint cof_disc = (r.A + t) * (r.A + t) - 4 * (t * t + r.A * t + r.B);
      if (cof_disc == 0 || is_perfect_square(cof_disc))
        throw std::logic_error("classify_galois: resolvent cofactor should be irreducible");
      auto splits_over_L = [&](const bigint& delta) {
        if (delta == 0 || is_perfect_square(delta)) return true;
        return is_perfect_square(delta * cof_disc);
      };
      bigint delta_a = t * t - 4 * f.d;
      bigint delta_b = f.a * f.a - 4 * f.b + 4 * t;
      v.group = splits_over_L(delta_a) && splits_over_L(delta_b) ? GaloisGroup::C4
                                                                 : GaloisGroup::D4;
      break;
    }
    default:
      throw std::logic_error("classify_galois: impossible resolvent root count");
  }
  return v;
}

inline GaloisVerdict classify_galois(const MonicQuartic& f, const FactorBudget& budget = {}) {
  return classify_galois(f, is_irreducible(f, budget));
}

}  // namespace qtlab
