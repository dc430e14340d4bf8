#pragma once

// Dense univariate polynomials over Z (exact, bigint coefficients) plus the
// small amount of F_q[x] arithmetic the classifiers need (degree <= 4
// throughout). Includes an exact integer-root finder that needs no
// factorization: real roots of the derivative are bracketed recursively and
// each monotone stretch is bisected over Z.

#include "qtlab/exact_arith.hpp"

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qtlab {

class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<bigint> coeffs_low_to_high)
      : c_(coeffs_low_to_high) {
    normalize();
  }
  explicit IntPoly(std::vector<bigint> coeffs_low_to_high)
      : c_(std::move(coeffs_low_to_high)) {
    normalize();
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  const bigint& coeff(std::size_t i) const {
    static const bigint kZero = 0;
    return i < c_.size() ? c_[i] : kZero;
  }
  const std::vector<bigint>& coeffs() const { return c_; }
  const bigint& leading() const { return c_.back(); }

  bigint eval(const bigint& x) const {
    bigint acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  IntPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<bigint> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = bigint(i) * c_[i];
    return IntPoly(std::move(d));
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<bigint> s(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(s));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<bigint> s(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(s));
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<bigint> s(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) s[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(s));
  }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Synthetic division by (x - r): {quotient, remainder}.
  std::pair<IntPoly, bigint> divide_linear(const bigint& r) const {
    if (c_.empty()) return {IntPoly{}, bigint(0)};
    std::vector<bigint> q(c_.size() - 1);
    bigint carry = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
      if (i + 1 <= q.size() && i < q.size()) q[i] = carry;
      carry = carry * r + c_[i];
    }
    return {IntPoly(std::move(q)), carry};
  }

  std::string str(std::string_view var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const bigint& a = c_[i];
      if (a == 0) continue;
      bigint mag = boost::multiprecision::abs(a);
      if (first) {
        if (a < 0) out << "-";
        first = false;
      } else {
        out << (a < 0 ? " - " : " + ");
      }
      if (i == 0 || mag != 1) out << mag.str();
      if (i >= 1) {
        out << var;
        if (i >= 2) out << "^" << i;
      }
    }
    return out.str();
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<bigint> c_;  // low to high, no trailing zeros
};

namespace detail {

inline bigint floor_div(const bigint& a, const bigint& b) {
  bigint q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

// Cauchy bound: every real root of p lies in [-M, M].
inline bigint root_bound(const IntPoly& p) {
  bigint lead = boost::multiprecision::abs(p.leading());
  bigint m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    bigint a = boost::multiprecision::abs(p.coeff(i));
    bigint q = (a + lead - 1) / lead;  // ceil(|a_i| / |lead|)
    m = std::max(m, q);
  }
  return m + 1;
}

inline int sign_of(const bigint& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

// floor(z) for every real root z of p, sorted, deduplicated. Roots where p
// only touches zero may be skipped; that is fine for the callers, which use
// these as monotonicity breakpoints.
inline std::vector<bigint> real_root_floors(const IntPoly& p);

// Splits [-M, M] at the derivative's root floors into integer intervals on
// which p is monotone.
inline std::vector<std::pair<bigint, bigint>> monotone_intervals(const IntPoly& p) {
  bigint M = root_bound(p);
  std::vector<bigint> breaks = real_root_floors(p.derivative());
  std::vector<std::pair<bigint, bigint>> out;
  bigint lo = -M;
  for (const bigint& b : breaks) {
    if (b < lo) continue;
    if (b > M) break;
    out.emplace_back(lo, b);
    lo = b + 1;
  }
  if (lo <= M) out.emplace_back(lo, M);
  return out;
}

inline std::vector<bigint> real_root_floors(const IntPoly& p) {
  std::vector<bigint> floors;
  if (p.degree() <= 0) return floors;
  if (p.degree() == 1) {
    floors.push_back(floor_div(-p.coeff(0), p.coeff(1)));
    return floors;
  }
  for (auto& [lo, hi] : monotone_intervals(p)) {
    int slo = sign_of(p.eval(lo));
    int shi = sign_of(p.eval(hi));
    if (slo == 0) {
      floors.push_back(lo);
      continue;
    }
    if (slo == shi) continue;  // monotone, same nonzero sign: no root here
    // binary search the last point still on the lo side
    bigint a = lo, b = hi;
    while (b - a > 1) {
      bigint mid = floor_div(a + b, 2);
      int sm = sign_of(p.eval(mid));
      if (sm == slo)
        a = mid;
      else
        b = mid;
    }
    floors.push_back(sign_of(p.eval(b)) == 0 ? b : a);
  }
  std::sort(floors.begin(), floors.end());
  floors.erase(std::unique(floors.begin(), floors.end()), floors.end());
  return floors;
}

}  // namespace detail

/// All integer roots of p (degree >= 1), ascending, repeated per
/// multiplicity. Exact; no factorization involved.
inline std::vector<bigint> integer_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("integer_roots: zero polynomial");
  std::set<bigint> distinct;
  for (auto& [lo, hi] : detail::monotone_intervals(p)) {
    int slo = detail::sign_of(p.eval(lo));
    int shi = detail::sign_of(p.eval(hi));
    if (slo == 0) distinct.insert(lo);
    if (shi == 0) distinct.insert(hi);
    if (slo == 0 || shi == 0 || slo == shi) continue;
    bigint a = lo, b = hi;
    while (b - a > 1) {
      bigint mid = detail::floor_div(a + b, 2);
      int sm = detail::sign_of(p.eval(mid));
      if (sm == 0) {
        distinct.insert(mid);
        break;
      }
      if (sm == slo)
        a = mid;
      else
        b = mid;
    }
  }
  std::vector<bigint> roots;
  for (const bigint& r : distinct) {
    IntPoly q = p;
    while (true) {
      auto [quot, rem] = q.divide_linear(r);
      if (rem != 0 || quot.is_zero()) break;
      roots.push_back(r);
      q = std::move(quot);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// ---------------------------------------------------------------------------
// F_q[x] for small fixed degree; coefficients in [0, q), q an odd or even
// prime below 2^32.

namespace modp {

using Poly = std::vector<std::uint64_t>;  // low to high, no trailing zeros

inline void normalize(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly reduce(const IntPoly& p, std::uint64_t q) {
  Poly out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    bigint r = p.coeff(i) % q;
    if (r < 0) r += q;
    out[i] = r.convert_to<std::uint64_t>();
  }
  normalize(out);
  return out;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) {
  return detail::powmod_u64(a, q - 2, q);  // q prime, a != 0
}

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + detail::mulmod_u64(a[i], b[j], q)) % q;
  normalize(out);
  return out;
}

/// Remainder of a mod m (m nonzero).
inline Poly mod(Poly a, const Poly& m, std::uint64_t q) {
  normalize(a);
  std::uint64_t lead_inv = inv_mod(m.back(), q);
  while (degree(a) >= degree(m)) {
    std::uint64_t f = detail::mulmod_u64(a.back(), lead_inv, q);
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::uint64_t sub = detail::mulmod_u64(f, m[i], q);
      a[i + shift] = (a[i + shift] + q - sub) % q;
    }
    normalize(a);
    if (a.empty()) break;
  }
  return a;
}

/// Exact quotient a / m (remainder must vanish).
inline Poly div_exact(Poly a, const Poly& m, std::uint64_t q) {
  normalize(a);
  Poly quot(a.size() >= m.size() ? a.size() - m.size() + 1 : 0, 0);
  std::uint64_t lead_inv = inv_mod(m.back(), q);
  while (degree(a) >= degree(m)) {
    std::uint64_t f = detail::mulmod_u64(a.back(), lead_inv, q);
    std::size_t shift = a.size() - m.size();
    quot[shift] = f;
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::uint64_t sub = detail::mulmod_u64(f, m[i], q);
      a[i + shift] = (a[i + shift] + q - sub) % q;
    }
    normalize(a);
  }
  assert(a.empty() && "div_exact: nonzero remainder");
  normalize(quot);
  return quot;
}

inline Poly monic(Poly a, std::uint64_t q) {
  if (a.empty() || a.back() == 1) return a;
  std::uint64_t inv = inv_mod(a.back(), q);
  for (auto& c : a) c = detail::mulmod_u64(c, inv, q);
  return a;
}

inline Poly gcd(Poly a, Poly b, std::uint64_t q) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    Poly r = mod(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), q);
}

inline Poly derivative(const Poly& a, std::uint64_t q) {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = detail::mulmod_u64(a[i], i % q, q);
  normalize(d);
  return d;
}

/// base^exp mod (m, q) by square-and-multiply.
inline Poly powmod(Poly base, std::uint64_t exp, const Poly& m, std::uint64_t q) {
  Poly result{1};
  base = mod(std::move(base), m, q);
  while (exp > 0) {
    if (exp & 1) result = mod(mul(result, base, q), m, q);
    base = mod(mul(base, base, q), m, q);
    exp >>= 1;
  }
  return result;
}

/// Full factorization by exhaustive divisor search; only sane for tiny q.
inline std::vector<std::pair<Poly, unsigned>> factor_exhaustive(Poly f, std::uint64_t q) {
  std::vector<std::pair<Poly, unsigned>> out;
  f = monic(std::move(f), q);
  auto strip = [&](const Poly& g) {
    unsigned e = 0;
    while (degree(f) >= degree(g) && mod(f, g, q).empty()) {
      f = div_exact(std::move(f), g, q);
      ++e;
    }
    if (e > 0) out.emplace_back(g, e);
  };
  for (std::uint64_t r = 0; r < q && degree(f) >= 1; ++r) strip(Poly{(q - r) % q, 1});
  // remaining factors have degree >= 2; scan monic quadratics, then whatever
  // is left of degree 2 or 3 is irreducible
  for (std::uint64_t b0 = 0; b0 < q && degree(f) >= 4; ++b0)
    for (std::uint64_t b1 = 0; b1 < q && degree(f) >= 4; ++b1) strip(Poly{b0, b1, 1});
  if (degree(f) >= 2) out.emplace_back(f, 1);
  return out;
}

}  // namespace modp

}  // namespace qtlab
