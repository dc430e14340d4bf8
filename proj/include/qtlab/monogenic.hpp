#pragma once

// Monogenicity of irreducible x^4 + cx + d: a prime q | Delta(f) divides the
// index [Z_K : Z[theta]] exactly when the matching divisibility condition
// below fails. Condition shapes depend on which of c, d the prime divides:
//
//   (1) q|c, q|d   : q^2 must not divide d
//   (2) q|c, q∤d   : either q|c2 and q∤d1, or q ∤ c2(d c2^4 + d1^4),
//                    c2 = c/q, d1 = (d + (-d)^(q^j))/q, q^j || 4
//   (3) q∤c, q|d   : either q|c1 and q∤d2, or q ∤ c1(c c1^3 - d2^3),
//                    c1 = (c + (-c)^(q^l))/q, q^l || 3, d2 = d/q
//   (4) q∤cd       : q^2 must not divide 256d^3 - 27c^4
//
// f is monogenic iff every prime factor of Delta(f) passes. A general
// Dedekind-criterion check for arbitrary monic quartics serves as the
// independent oracle and covers the x^4+bx^2+d / x^4+ax^3+d families.

#include "qtlab/exact_arith.hpp"
#include "qtlab/polynomial.hpp"
#include "qtlab/quartic.hpp"
#include "qtlab/trinomial.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace qtlab {

enum class JksCase { both_divide, c_only, d_only, neither };

inline std::string_view to_string(JksCase c) {
  switch (c) {
    case JksCase::both_divide: return "both_divide";
    case JksCase::c_only: return "c_only";
    case JksCase::d_only: return "d_only";
    case JksCase::neither: return "neither";
  }
  return "?";
}

struct JksPrimeCheck {
  bigint q;
  JksCase condition_case = JksCase::neither;
  bool passes = false;
  // intermediates, populated where the matching condition defines them
  std::optional<bigint> c1, c2, d1, d2;
  unsigned j = 0;    // q^j || 4 (case c_only)
  unsigned ell = 0;  // q^ell || 3 (case d_only)
  std::optional<bool> q_squared_divides_d;  // case both_divide
};

namespace detail {

inline JksPrimeCheck jks_prime_check_unchecked(const Trinomial& T, const bigint& q) {
  JksPrimeCheck chk;
  chk.q = q;
  bool qc = T.c % q == 0;
  bool qd = T.d % q == 0;
  if (qc && qd) {
    chk.condition_case = JksCase::both_divide;
    bool q2d = T.d % (q * q) == 0;
    chk.q_squared_divides_d = q2d;
    chk.passes = !q2d;
  } else if (qc) {
    chk.condition_case = JksCase::c_only;
    chk.j = q == 2 ? 2 : 0;
    bigint c2 = T.c / q;
    // (-d)^(q^j): exponent 4 when q = 2, else 1
    bigint d1 = q == 2 ? (T.d + T.d * T.d * T.d * T.d) / 2 : bigint(0);
    chk.c2 = c2;
    chk.d1 = d1;
    bool branch1 = c2 % q == 0 && d1 % q != 0;
    bool branch2 = (c2 * (T.d * c2 * c2 * c2 * c2 + d1 * d1 * d1 * d1)) % q != 0;
    chk.passes = branch1 || branch2;
  } else if (qd) {
    chk.condition_case = JksCase::d_only;
    chk.ell = q == 3 ? 1 : 0;
    // (-c)^(q^ell): exponent 3 when q = 3, else 1
    bigint c1 = q == 3 ? (T.c - T.c * T.c * T.c) / 3 : bigint(0);
    bigint d2 = T.d / q;
    chk.c1 = c1;
    chk.d2 = d2;
    bool branch1 = c1 % q == 0 && d2 % q != 0;
    bool branch2 = (c1 * (T.c * c1 * c1 * c1 - d2 * d2 * d2)) % q != 0;
    chk.passes = branch1 || branch2;
  } else {
    chk.condition_case = JksCase::neither;
    chk.passes = discriminant(T) % (q * q) != 0;
  }
  return chk;
}

}  // namespace detail

/// Evaluates the index condition for one prime factor q of Delta(f).
inline JksPrimeCheck jks_prime_check(const Trinomial& T, const bigint& q) {
  if (!is_prime(q)) throw std::invalid_argument("jks_prime_check: q must be prime");
  if (!is_irreducible(T).irreducible)
    throw std::invalid_argument("jks_prime_check: trinomial must be irreducible");
  if (discriminant(T) % q != 0)
    throw std::invalid_argument("jks_prime_check: q does not divide the discriminant");
  return detail::jks_prime_check_unchecked(T, q);
}

enum class MonogenicityStatus { monogenic, not_monogenic, unknown };

inline std::string_view to_string(MonogenicityStatus s) {
  switch (s) {
    case MonogenicityStatus::monogenic: return "monogenic";
    case MonogenicityStatus::not_monogenic: return "not_monogenic";
    case MonogenicityStatus::unknown: return "unknown";
  }
  return "?";
}

struct MonogenicityVerdict {
  MonogenicityStatus status = MonogenicityStatus::unknown;
  std::vector<bigint> failing_primes;  // index divisors found
  FactoredInteger discriminant;
};

/// Aggregates the per-prime checks over the factorization of Delta(f).
/// Incomplete factorizations degrade to `unknown` unless some known prime
/// already fails.
inline MonogenicityVerdict is_monogenic(const Trinomial& T, const FactorBudget& budget = {}) {
  if (!is_irreducible(T).irreducible)
    throw std::invalid_argument("is_monogenic: trinomial must be irreducible");
  MonogenicityVerdict v;
  v.discriminant = factorize(discriminant(T), budget);
  for (const auto& [p, e] : v.discriminant.factors) {
    if (!detail::jks_prime_check_unchecked(T, p).passes) v.failing_primes.push_back(p);
  }
  if (!v.failing_primes.empty())
    v.status = MonogenicityStatus::not_monogenic;
  else
    v.status = v.discriminant.complete ? MonogenicityStatus::monogenic
                                       : MonogenicityStatus::unknown;
  return v;
}

/// Prime factors of Delta(f) that divide the index. Requires the
/// discriminant to factor completely within the budget.
inline std::set<bigint> index_divisor_primes(const Trinomial& T, const FactorBudget& budget = {}) {
  MonogenicityVerdict v = is_monogenic(T, budget);
  if (!v.discriminant.complete)
    throw incomplete_factorization_error("index_divisor_primes: discriminant not fully factored",
                                         v.discriminant);
  return {v.failing_primes.begin(), v.failing_primes.end()};
}

// ---------------------------------------------------------------------------
// Dedekind criterion (independent oracle, arbitrary monic quartic)

namespace detail {

inline constexpr std::uint64_t kDedekindPrimeLimit = 10'000'000;

// Radical (product of distinct irreducible factors) of monic f mod q.
inline modp::Poly radical_mod_q(const modp::Poly& f, std::uint64_t q) {
  if (q <= 3) {
    modp::Poly rad{1};
    for (const auto& [g, e] : modp::factor_exhaustive(f, q)) rad = modp::mul(rad, g, q);
    return rad;
  }
  // q > deg f, so no factor multiplicity is divisible by q and the
  // squarefree part is f / gcd(f, f').
  modp::Poly g = modp::gcd(f, modp::derivative(f, q), q);
  return modp::div_exact(f, g, q);
}

inline IntPoly lift(const modp::Poly& p) {
  std::vector<bigint> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = p[i];
  return IntPoly(std::move(c));
}

}  // namespace detail

/// True iff q does not divide [Z_K : Z[theta]] for the field defined by the
/// (irreducible) quartic: factor f mod q, lift the radical g and cofactor h,
/// and test gcd((gh - f)/q mod q, g, h) = 1.
inline bool dedekind_check(const MonicQuartic& f, const bigint& q) {
  if (!is_prime(q)) throw std::invalid_argument("dedekind_check: q must be prime");
  if (q > detail::kDedekindPrimeLimit)
    throw budget_error("dedekind_check: prime exceeds the mod-q factoring budget");
  std::uint64_t qq = q.convert_to<std::uint64_t>();

  modp::Poly fbar = modp::reduce(f.to_poly(), qq);
  modp::Poly g = detail::radical_mod_q(fbar, qq);
  modp::Poly h = modp::div_exact(fbar, g, qq);

  IntPoly prod = detail::lift(g) * detail::lift(h);
  IntPoly diff = prod - f.to_poly();
  std::vector<bigint> fc(diff.coeffs());
  for (bigint& coeff : fc) {
    if (coeff % q != 0) throw std::logic_error("dedekind_check: lift is not divisible by q");
    coeff /= q;
  }
  modp::Poly fq = modp::reduce(IntPoly(std::move(fc)), qq);

  modp::Poly common = modp::gcd(modp::gcd(g, h, qq), fq, qq);
  return modp::degree(common) <= 0;
}

/// Monogenicity of a general monic quartic via the Dedekind criterion over
/// every prime factor of its discriminant.
inline MonogenicityVerdict is_monogenic_via_dedekind(const MonicQuartic& f,
                                                     const FactorBudget& budget = {}) {
  MonogenicityVerdict v;
  v.discriminant = factorize(discriminant(f), budget);
  for (const auto& [p, e] : v.discriminant.factors) {
    if (!dedekind_check(f, p)) v.failing_primes.push_back(p);
  }
  if (!v.failing_primes.empty())
    v.status = MonogenicityStatus::not_monogenic;
  else
    v.status = v.discriminant.complete ? MonogenicityStatus::monogenic
                                       : MonogenicityStatus::unknown;
  return v;
}

}  // namespace qtlab
