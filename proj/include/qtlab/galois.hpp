#pragma once

// Galois group of irreducible x^4 + cx + d over Q, decided exactly from the
// cubic resolvent: no integer root -> S4/A4 by the discriminant square test,
// three integer roots -> V4, one integer root -> C4/D4 by whether
// delta1 = t(16d - 3t^2) and delta2 = (t^2 - 4d)(16d - 3t^2) are nonzero
// squares. A Frobenius factorization-shape sampler doubles as an independent
// statistical cross-check.

#include "qtlab/exact_arith.hpp"
#include "qtlab/polynomial.hpp"
#include "qtlab/trinomial.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace qtlab {

enum class GaloisGroup { C4, D4, V4, A4, S4 };

inline std::string_view to_string(GaloisGroup g) {
  switch (g) {
    case GaloisGroup::C4: return "C4";
    case GaloisGroup::D4: return "D4";
    case GaloisGroup::V4: return "V4";
    case GaloisGroup::A4: return "A4";
    case GaloisGroup::S4: return "S4";
  }
  return "?";
}

/// True iff Q(sqrt(A)) = Q(sqrt(B)). Requires A, B nonzero nonsquares;
/// equivalent to AB being a perfect square (equal squarefree parts).
inline bool same_quadratic_field(const bigint& A, const bigint& B) {
  if (A == 0 || B == 0)
    throw std::invalid_argument("same_quadratic_field: arguments must be nonzero");
  if (is_perfect_square(A) || is_perfect_square(B))
    throw std::invalid_argument("same_quadratic_field: arguments must be nonsquares");
  return is_perfect_square(A * B);
}

struct ResolventAnalysis {
  bigint t;
  bigint delta1;  // t (16d - 3t^2)
  bigint delta2;  // (t^2 - 4d)(16d - 3t^2)
  bool delta1_is_nonzero_square = false;
  bool delta2_is_nonzero_square = false;
};

/// delta quantities at an integer resolvent root t.
inline ResolventAnalysis resolvent_analysis(const Trinomial& T, const bigint& t) {
  if (resolvent(T).eval(t) != 0)
    throw std::invalid_argument("resolvent_analysis: t is not a resolvent root");
  ResolventAnalysis a;
  a.t = t;
  bigint scale = 16 * T.d - 3 * t * t;
  a.delta1 = t * scale;
  a.delta2 = (t * t - 4 * T.d) * scale;
  a.delta1_is_nonzero_square = a.delta1 != 0 && is_perfect_square(a.delta1);
  a.delta2_is_nonzero_square = a.delta2 != 0 && is_perfect_square(a.delta2);
  if (a.delta1 * a.delta2 != T.c * T.c * scale * scale)
    throw std::logic_error("resolvent_analysis: delta product identity violated");
  if (a.delta1_is_nonzero_square != a.delta2_is_nonzero_square)
    throw std::logic_error("resolvent_analysis: mixed square state (impossible)");
  return a;
}

struct GaloisVerdict {
  GaloisGroup group;
  bool discriminant_is_square = false;
  std::vector<bigint> resolvent_integer_roots;
  std::optional<ResolventAnalysis> analysis;  // present for the C4/D4 branch
};

/// Galois group of an irreducible separable trinomial. The two-argument
/// form takes a verdict the caller already computed with is_irreducible.
inline GaloisVerdict classify_galois(const Trinomial& T, const IrreducibilityVerdict& irr) {
  if (!irr.separable)
    throw std::invalid_argument("classify_galois: discriminant is zero (inseparable)");
  if (!irr.irreducible)
    throw std::invalid_argument("classify_galois: trinomial is reducible");

  GaloisVerdict v;
  v.discriminant_is_square = is_perfect_square(discriminant(T));
  v.resolvent_integer_roots = integer_resolvent_roots(T);

  switch (v.resolvent_integer_roots.size()) {
    case 0:
      v.group = v.discriminant_is_square ? GaloisGroup::A4 : GaloisGroup::S4;
      break;
    case 3:
      v.group = GaloisGroup::V4;
      break;
    case 1: {
      v.analysis = resolvent_analysis(T, v.resolvent_integer_roots.front());
      v.group = v.analysis->delta1_is_nonzero_square && v.analysis->delta2_is_nonzero_square
                    ? GaloisGroup::C4
                    : GaloisGroup::D4;
      break;
    }
    default:
      // a monic cubic with two rational roots has three
      throw std::logic_error("classify_galois: impossible resolvent root count");
  }
  return v;
}

inline GaloisVerdict classify_galois(const Trinomial& T) {
  return classify_galois(T, is_irreducible(T));
}

// ---------------------------------------------------------------------------
// Frobenius factorization shapes

struct FrobeniusHistogram {
  std::uint64_t n1111 = 0;  // four roots
  std::uint64_t n112 = 0;   // two roots + irreducible quadratic
  std::uint64_t n22 = 0;    // two irreducible quadratics
  std::uint64_t n13 = 0;    // one root + irreducible cubic
  std::uint64_t n4 = 0;     // irreducible

  std::uint64_t total() const { return n1111 + n112 + n22 + n13 + n4; }
};

namespace detail {

inline std::uint64_t next_prime_above(std::uint64_t n) {
  std::uint64_t p = n + 1;
  if (p <= 2) return 2;
  if (p % 2 == 0) ++p;
  while (!miller_rabin_u64(p)) p += 2;
  return p;
}

// Degree multiset of squarefree monic quartic f mod p, via
// gcd(x^p - x, f) and an x^(p^2) fixed-point test. 1+1+1+3 is impossible.
inline void tally_shape_mod_p(const IntPoly& f, std::uint64_t p, FrobeniusHistogram& h) {
  modp::Poly fp = modp::reduce(f, p);
  modp::Poly xp = modp::powmod(modp::Poly{0, 1}, p, fp, p);
  modp::Poly xp_minus_x = xp;
  if (xp_minus_x.size() < 2) xp_minus_x.resize(2, 0);
  xp_minus_x[1] = (xp_minus_x[1] + p - 1) % p;
  modp::normalize(xp_minus_x);
  modp::Poly g = modp::gcd(xp_minus_x, fp, p);
  switch (modp::degree(g)) {
    case 4: ++h.n1111; return;
    case 2: ++h.n112; return;
    case 1: ++h.n13; return;
    case 0: {
      modp::Poly xp2 = modp::powmod(xp, p, fp, p);
      if (xp2 == modp::Poly{0, 1})
        ++h.n22;
      else
        ++h.n4;
      return;
    }
    default:
      throw std::logic_error("tally_shape_mod_p: impossible root count");
  }
}

}  // namespace detail

/// Samples factorization shapes of f mod p over `prime_count` primes > 100
/// not dividing Delta(f)*c*d. seed = 0 takes the first qualifying primes
/// (reproducible); a nonzero seed inserts seeded random gaps.
inline FrobeniusHistogram frobenius_pattern_sample(const Trinomial& T, std::size_t prime_count,
                                                   std::uint64_t seed = 0) {
  if (!is_irreducible(T).irreducible)
    throw std::invalid_argument("frobenius_pattern_sample: trinomial must be irreducible");
  FrobeniusHistogram h;
  bigint excluded = discriminant(T) * T.c * T.d;
  IntPoly f = T.to_poly();
  std::mt19937_64 rng(seed);
  std::uint64_t p = 100;
  std::size_t taken = 0;
  while (taken < prime_count) {
    p = detail::next_prime_above(p);
    if (excluded % p == 0) continue;
    if (seed != 0 && rng() % 4 != 0) continue;  // seeded thinning
    detail::tally_shape_mod_p(f, p, h);
    ++taken;
  }
  return h;
}

}  // namespace qtlab
