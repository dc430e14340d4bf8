#pragma once

// Arbitrary-precision integer utilities: integer square root, perfect-square
// tests, q-adic valuations, primality, and budgeted factorization.
//
// Storage is boost::multiprecision::cpp_int; everything that can run in
// 64-bit words does, values only spill into multi-limb arithmetic when they
// must.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtlab {

using bigint = boost::multiprecision::cpp_int;

// Thrown when an operation needs a complete factorization but the work
// budget ran out; carries the partial result.
class incomplete_factorization_error;

// Thrown by oracle-grade routines when an input exceeds their configured
// work limit (e.g. mod-q factoring for huge q).
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

struct FactorBudget {
  std::uint64_t trial_division_bound = 1'000'000;
  std::uint64_t rho_iteration_cap = 10'000'000;  // per cofactor
};

struct PrimePower {
  bigint prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct FactoredInteger {
  bigint value;
  int sign = 0;  // -1, 0, +1
  std::vector<PrimePower> factors;  // primes strictly increasing
  bool complete = true;
  bigint unfactored_cofactor = 1;  // 1 iff complete

  // sign * prod(p^e) * unfactored_cofactor; equals value by construction.
  bigint reconstruct() const {
    bigint m = unfactored_cofactor;
    for (const auto& [p, e] : factors)
      for (unsigned i = 0; i < e; ++i) m *= p;
    return sign * m;
  }
};

class incomplete_factorization_error : public std::runtime_error {
 public:
  incomplete_factorization_error(const std::string& what, FactoredInteger partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}

  const FactoredInteger& partial() const { return partial_; }

 private:
  FactoredInteger partial_;
};

namespace detail {

inline bool fits_u64(const bigint& n) {
  return n >= 0 && n <= bigint(UINT64_MAX);
}

inline std::uint64_t to_u64(const bigint& n) {
  return n.convert_to<std::uint64_t>();
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Deterministic Miller-Rabin for all n < 2^64 with the 12-prime witness set.
inline bool miller_rabin_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Miller-Rabin with the first `count` primes as bases. Composite verdicts
// are proofs; "prime" is probabilistic once n exceeds 2^64.
inline bool miller_rabin_big(const bigint& n, int count = 40) {
  if (n < 2) return false;
  static const int kBases[] = {2,   3,   5,   7,   11,  13,  17,  19,  23,  29,
                               31,  37,  41,  43,  47,  53,  59,  61,  67,  71,
                               73,  79,  83,  89,  97,  101, 103, 107, 109, 113,
                               127, 131, 137, 139, 149, 151, 157, 163, 167, 173};
  for (int i = 0; i < count && i < 40; ++i) {
    if (n % kBases[i] == 0) return n == kBases[i];
  }
  bigint d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (int i = 0; i < count && i < 40; ++i) {
    bigint x = boost::multiprecision::powm(bigint(kBases[i]), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int j = 1; j < r; ++j) {
      x = (x * x) % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Fast u64 perfect-square test: residue prefilters, then an exact isqrt.
inline bool is_square_u64(std::uint64_t n, std::uint64_t* root = nullptr) {
  static constexpr std::uint64_t kMask64 = [] {
    std::uint64_t m = 0;
    for (unsigned i = 0; i < 64; ++i) m |= std::uint64_t(1) << ((i * i) % 64);
    return m;
  }();
  if (!((kMask64 >> (n % 64)) & 1)) return false;
  static constexpr auto kMod63 = [] {
    std::array<bool, 63> t{};
    for (unsigned i = 0; i < 63; ++i) t[(i * i) % 63] = true;
    return t;
  }();
  if (!kMod63[n % 63]) return false;
  static constexpr auto kMod65 = [] {
    std::array<bool, 65> t{};
    for (unsigned i = 0; i < 65; ++i) t[(i * i) % 65] = true;
    return t;
  }();
  if (!kMod65[n % 65]) return false;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<__uint128_t>(r) * r > n) --r;
  while (static_cast<__uint128_t>(r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

// Brent-cycle Pollard rho; returns a nontrivial factor of composite odd n,
// or 0 if the iteration cap runs out. Deterministic (fixed parameter walk).
inline std::uint64_t brent_rho_u64(std::uint64_t n, std::uint64_t iteration_cap) {
  if (n % 2 == 0) return 2;
  std::uint64_t iterations = 0;
  for (std::uint64_t c = 1; iterations < iteration_cap; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    std::uint64_t power = 1, lam = 1;
    while (d == 1 && iterations < iteration_cap) {
      if (power == lam) {
        x = y;
        power <<= 1;
        lam = 0;
      }
      // batch gcd in blocks of 64
      std::uint64_t q = 1;
      std::uint64_t block = std::min<std::uint64_t>(64, power - lam);
      for (std::uint64_t i = 0; i < block; ++i) {
        y = mulmod_u64(y, y, n);
        y = (y + c) % n;
        ++lam;
        ++iterations;
        std::uint64_t diff = x > y ? x - y : y - x;
        if (diff == 0) diff = 1;
        q = mulmod_u64(q, diff, n);
      }
      d = std::gcd(q, n);
      if (d == n) {
        // backtrack one by one
        d = 1;
        std::uint64_t ys = x;
        while (d == 1) {
          ys = mulmod_u64(ys, ys, n);
          ys = (ys + c) % n;
          std::uint64_t diff = x > ys ? x - ys : ys - x;
          if (diff == 0) break;
          d = std::gcd(diff, n);
        }
        break;
      }
    }
    if (d != 1 && d != n) return d;
  }
  return 0;
}

inline bigint brent_rho_big(const bigint& n, std::uint64_t iteration_cap) {
  if (fits_u64(n)) {
    std::uint64_t f = brent_rho_u64(to_u64(n), iteration_cap);
    return bigint(f);
  }
  if (n % 2 == 0) return bigint(2);
  std::uint64_t iterations = 0;
  for (std::uint64_t c = 1; iterations < iteration_cap; ++c) {
    bigint x = 2, y = 2, d = 1, q = 1;
    std::uint64_t power = 1, lam = 1;
    bigint xs = x;
    while (d == 1 && iterations < iteration_cap) {
      if (power == lam) {
        x = y;
        power <<= 1;
        lam = 0;
      }
      std::uint64_t block = std::min<std::uint64_t>(64, power - lam);
      for (std::uint64_t i = 0; i < block; ++i) {
        y = (y * y + c) % n;
        ++lam;
        ++iterations;
        bigint diff = x > y ? x - y : y - x;
        if (diff == 0) diff = 1;
        q = (q * diff) % n;
      }
      d = boost::multiprecision::gcd(q, n);
      if (d == n) {
        d = 1;
        bigint ys = x;
        while (d == 1) {
          ys = (ys * ys + c) % n;
          bigint diff = x > ys ? x - ys : ys - x;
          if (diff == 0) break;
          d = boost::multiprecision::gcd(diff, n);
        }
        break;
      }
    }
    if (d != 1 && d != n) return d;
  }
  return bigint(0);
}

}  // namespace detail

/// floor(sqrt(n)); n must be nonnegative.
inline bigint int_sqrt(const bigint& n) {
  if (n < 0) throw std::domain_error("int_sqrt: negative input");
  return boost::multiprecision::sqrt(n);
}

/// True iff n is a square in Z. Zero counts as a square; callers that need
/// "nonzero square" must test n != 0 themselves.
inline bool is_perfect_square(const bigint& n) {
  if (n < 0) return false;
  if (detail::fits_u64(n)) return detail::is_square_u64(detail::to_u64(n));
  bigint r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

/// Primality. Deterministic for |n| < 2^64 (fixed witness set); above that
/// the answer is a strong probable-prime verdict with negligible error.
/// Nonpositive inputs and 1 are not prime.
inline bool is_prime(const bigint& n) {
  if (n < 2) return false;
  if (detail::fits_u64(n)) return detail::miller_rabin_u64(detail::to_u64(n));
  return detail::miller_rabin_big(n);
}

struct Valuation {
  unsigned exponent = 0;
  bigint cofactor;
};

/// Exact power of the prime q dividing n: q^k || n, cofactor = n / q^k.
inline Valuation valuation(const bigint& n, const bigint& q) {
  if (n == 0) throw std::domain_error("valuation: n must be nonzero");
  if (!is_prime(q)) throw std::domain_error("valuation: q must be prime");
  Valuation v;
  v.cofactor = n;
  while (v.cofactor % q == 0) {
    v.cofactor /= q;
    ++v.exponent;
  }
  return v;
}

namespace detail {

// Trial division by 2, 3 and the 6k+-1 wheel over candidates in [from, to].
// Divides found factors out of m and records them.
inline void wheel_trial_division(bigint& m, std::uint64_t from, std::uint64_t to,
                                 std::map<bigint, unsigned>& out) {
  auto strip = [&](std::uint64_t p) {
    while (m % p == 0) {
      m /= p;
      ++out[bigint(p)];
    }
  };
  if (from <= 2 && to >= 2) strip(2);
  if (from <= 3 && to >= 3) strip(3);
  std::uint64_t k = std::max<std::uint64_t>(5, from);
  for (std::uint64_t j = k / 6 * 6;; j += 6) {
    for (std::uint64_t p : {j + 5, j + 7}) {
      if (p < from) continue;
      if (p > to) return;
      if (fits_u64(m)) {
        if (static_cast<__uint128_t>(p) * p > to_u64(m)) return;
      } else if (bigint(p) * p > m) {
        return;
      }
      strip(p);
    }
  }
}

// Splits composite m into prime factors using rho; primes land in `out`,
// cofactors that resist the budget land in `failed`.
inline void rho_decompose(bigint m, const FactorBudget& budget,
                          std::map<bigint, unsigned>& out, std::vector<bigint>& failed) {
  std::vector<bigint> pending{std::move(m)};
  while (!pending.empty()) {
    bigint cur = std::move(pending.back());
    pending.pop_back();
    if (cur == 1) continue;
    if (is_prime(cur)) {
      ++out[cur];
      continue;
    }
    bigint f = brent_rho_big(cur, budget.rho_iteration_cap);
    if (f == 0 || f == cur) {
      failed.push_back(cur);
      continue;
    }
    pending.push_back(cur / f);
    pending.push_back(std::move(f));
  }
}

}  // namespace detail

/// Factors nonzero n within the given work budget. Complete whenever trial
/// division to the bound plus rho splitting within the iteration cap
/// suffices; otherwise `complete` is false and the composite remainder is
/// left in `unfactored_cofactor`.
inline FactoredInteger factorize(const bigint& n, const FactorBudget& budget = {}) {
  if (n == 0) throw std::domain_error("factorize: n must be nonzero");
  FactoredInteger result;
  result.value = n;
  result.sign = n < 0 ? -1 : 1;
  bigint m = boost::multiprecision::abs(n);

  std::map<bigint, unsigned> found;
  std::vector<bigint> failed;

  // Small-prime stage first; rho handles the rest far faster than grinding
  // the whole wheel, so the full trial bound is only walked if rho gives up.
  std::uint64_t small_bound = std::min<std::uint64_t>(budget.trial_division_bound, 1000);
  detail::wheel_trial_division(m, 2, small_bound, found);

  if (m > 1) {
    if (is_prime(m)) {
      ++found[m];
      m = 1;
    } else {
      std::vector<bigint> resist;
      detail::rho_decompose(m, budget, found, resist);
      // Last resort: walk the remaining wheel range for budget-resistant
      // cofactors, then give up honestly.
      for (bigint& r : resist) {
        if (budget.trial_division_bound > small_bound) {
          detail::wheel_trial_division(r, small_bound + 1, budget.trial_division_bound, found);
        }
        if (r == 1) continue;
        if (is_prime(r)) {
          ++found[r];
        } else {
          failed.push_back(r);
        }
      }
      m = 1;
    }
  }

  for (auto& [p, e] : found) result.factors.push_back({p, e});
  for (const bigint& f : failed) result.unfactored_cofactor *= f;
  result.complete = result.unfactored_cofactor == 1;
  return result;
}

/// Product of the primes dividing n to an odd power, carrying n's sign;
/// n / squarefree_part(n) is a positive perfect square.
inline bigint squarefree_part(const FactoredInteger& f) {
  if (!f.complete)
    throw incomplete_factorization_error("squarefree_part: factorization incomplete", f);
  bigint s = f.sign;
  for (const auto& [p, e] : f.factors)
    if (e % 2 == 1) s *= p;
  return s;
}

inline bigint squarefree_part(const bigint& n, const FactorBudget& budget = {}) {
  if (n == 0) throw std::domain_error("squarefree_part: n must be nonzero");
  return squarefree_part(factorize(n, budget));
}

/// All positive divisors of the factored value, ascending. Requires a
/// complete factorization.
inline std::vector<bigint> divisors(const FactoredInteger& f) {
  if (!f.complete)
    throw incomplete_factorization_error("divisors: factorization incomplete", f);
  std::vector<bigint> divs{1};
  for (const auto& [p, e] : f.factors) {
    std::size_t n = divs.size();
    bigint pe = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < n; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace qtlab
