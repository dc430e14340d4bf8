#pragma once

// The quartic trinomial x^4 + cx + d (cd != 0): discriminant, cubic
// resolvent, and exact irreducibility testing over Q.

#include "qtlab/exact_arith.hpp"
#include "qtlab/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace qtlab {

struct Trinomial {
  bigint c;
  bigint d;

  Trinomial(bigint c_, bigint d_) : c(std::move(c_)), d(std::move(d_)) {
    if (c == 0 || d == 0)
      throw std::invalid_argument("Trinomial: both coefficients must be nonzero");
  }

  IntPoly to_poly() const { return IntPoly{d, c, 0, 0, 1}; }

  friend bool operator==(const Trinomial&, const Trinomial&) = default;
};

/// Delta(f) = 256 d^3 - 27 c^4.
inline bigint discriminant(const Trinomial& T) {
  return 256 * T.d * T.d * T.d - 27 * T.c * T.c * T.c * T.c;
}

// r(x) = x^3 + linear * x + constant with linear = -4d, constant = -c^2.
struct ResolventCubic {
  bigint linear;
  bigint constant;

  bigint eval(const bigint& x) const { return x * x * x + linear * x + constant; }
  IntPoly to_poly() const { return IntPoly{constant, linear, 0, 1}; }

  /// Discriminant of x^3 + px + q: -4p^3 - 27q^2.
  bigint discriminant() const {
    return -4 * linear * linear * linear - 27 * constant * constant;
  }
};

/// The cubic resolvent of x^4 + cx + d. Its discriminant equals the
/// trinomial's (checked).
inline ResolventCubic resolvent(const Trinomial& T) {
  ResolventCubic r{-4 * T.d, -T.c * T.c};
  if (r.discriminant() != discriminant(T))
    throw std::logic_error("resolvent: discriminant identity violated");
  return r;
}

/// Integer roots of the resolvent, ascending, repeated per multiplicity
/// (multiplicity > 1 only occurs when Delta = 0).
inline std::vector<bigint> integer_resolvent_roots(const Trinomial& T) {
  return integer_roots(resolvent(T).to_poly());
}

struct IrreducibilityVerdict {
  bool irreducible = false;
  bool separable = true;
  // Monic integer factors multiplying exactly to f, when reducible.
  std::optional<std::vector<IntPoly>> witness;
};

namespace detail {

// A split f = (x^2 - sx + b1)(x^2 + sx + b2) exists iff some integer
// resolvent root t and t^2 - 4d are both perfect squares; then s = sqrt(t),
// b1 = (t + c/s)/2, b2 = (t - c/s)/2. Re-expanded before being returned.
inline std::optional<std::vector<IntPoly>> trinomial_quadratic_split(const Trinomial& T) {
  bigint prev_t;
  bool have_prev = false;
  for (const bigint& t : integer_resolvent_roots(T)) {
    if (have_prev && t == prev_t) continue;
    prev_t = t;
    have_prev = true;
    if (t <= 0 || !is_perfect_square(t)) continue;
    if (!is_perfect_square(t * t - 4 * T.d)) continue;
    bigint s = int_sqrt(t);
    if (T.c % s != 0) continue;  // cannot happen; keeps the search safe
    bigint ratio = T.c / s;
    if ((t + ratio) % 2 != 0) continue;  // likewise
    bigint b1 = (t + ratio) / 2;
    bigint b2 = (t - ratio) / 2;
    IntPoly f1{b1, -s, 1};
    IntPoly f2{b2, s, 1};
    if (f1 * f2 != T.to_poly())
      throw std::logic_error("trinomial_quadratic_split: re-expansion mismatch");
    return std::vector<IntPoly>{f1, f2};
  }
  return std::nullopt;
}

}  // namespace detail

/// Exact irreducibility over Q. Reducible separable inputs carry a witness
/// factorization; Delta = 0 inputs are flagged inseparable (an irreducible
/// quartic over Q is separable, so they are never irreducible).
inline IrreducibilityVerdict is_irreducible(const Trinomial& T) {
  IrreducibilityVerdict v;
  v.separable = discriminant(T) != 0;

  if (auto split = detail::trinomial_quadratic_split(T)) {
    v.irreducible = false;
    v.witness = std::move(split);
    return v;
  }
  std::vector<bigint> roots = integer_roots(T.to_poly());
  if (!roots.empty()) {
    const bigint& r = roots.front();
    auto [quot, rem] = T.to_poly().divide_linear(r);
    if (rem != 0) throw std::logic_error("is_irreducible: root division failed");
    v.irreducible = false;
    v.witness = std::vector<IntPoly>{IntPoly{-r, 1}, quot};
    return v;
  }
  v.irreducible = v.separable;
  return v;
}

}  // namespace qtlab
