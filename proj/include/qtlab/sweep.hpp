#pragma once

// Exhaustive verification sweeps over coefficient boxes, plus the
// machine-checked identity, parity, congruence and oracle-equivalence
// suites. Sweeps partition the box into disjoint outer-coefficient chunks,
// run them concurrently, and merge results in canonical order, so output is
// identical for any worker count.

#include "qtlab/classify.hpp"
#include "qtlab/exact_arith.hpp"
#include "qtlab/galois.hpp"
#include "qtlab/monogenic.hpp"
#include "qtlab/quartic.hpp"
#include "qtlab/trinomial.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace qtlab {

struct SweepConfig {
  FactorBudget budget;
  unsigned workers = 1;
  std::atomic<std::uint64_t>* progress = nullptr;  // optional item counter
};

struct SweepHit {
  bigint coeff1;
  bigint coeff2;
  ClassificationReport report;
};

struct SweepResult {
  Family family = Family::linear_tail;
  std::uint64_t bound1 = 0;  // max |first coefficient|
  std::uint64_t bound2 = 0;  // max |d|
  std::vector<SweepHit> hits;
  std::uint64_t scanned = 0;
  std::uint64_t skipped_unknown = 0;
  // coefficient pairs whose monogenicity could not be decided in budget
  std::vector<std::pair<bigint, bigint>> unknown_coefficients;
};

namespace detail {

// Canonical coefficient order: magnitude-major, negative before positive.
inline std::vector<std::int64_t> signed_coefficient_order(std::uint64_t bound) {
  if (bound < 1 || bound > (std::uint64_t(1) << 31))
    throw std::invalid_argument("sweep: bound must be in [1, 2^31]");
  std::vector<std::int64_t> order;
  order.reserve(2 * bound);
  for (std::uint64_t m = 1; m <= bound; ++m) {
    order.push_back(-static_cast<std::int64_t>(m));
    order.push_back(static_cast<std::int64_t>(m));
  }
  return order;
}

struct SweepChunk {
  std::vector<SweepHit> hits;
  std::vector<std::pair<bigint, bigint>> unknown;
  std::uint64_t scanned = 0;
};

inline void sweep_item(Family family, std::int64_t c1, std::int64_t c2,
                       const FactorBudget& budget, SweepChunk& out) {
  ++out.scanned;
  MonogenicityStatus status;
  if (family == Family::linear_tail) {
    Trinomial t(c1, c2);
    IrreducibilityVerdict irr = is_irreducible(t);
    if (!irr.irreducible) return;
    if (classify_galois(t, irr).group != GaloisGroup::C4) return;
    MonogenicityVerdict mono = is_monogenic(t, budget);
    status = mono.status;
  } else {
    MonicQuartic q = family_polynomial(family, c1, c2);
    IrreducibilityVerdict irr = is_irreducible(q, budget);
    if (!irr.irreducible) return;
    if (classify_galois(q, irr).group != GaloisGroup::C4) return;
    MonogenicityVerdict mono = is_monogenic_via_dedekind(q, budget);
    status = mono.status;
  }
  if (status == MonogenicityStatus::unknown) {
    out.unknown.emplace_back(c1, c2);
    return;
  }
  if (status != MonogenicityStatus::monogenic) return;

  // Hit. Rebuild the full report and re-verify through the independent
  // route before accepting it.
  ClassificationReport rep = classify(family, c1, c2, budget);
  if (!rep.galois || rep.galois->group != GaloisGroup::C4 || !rep.monogenicity ||
      rep.monogenicity->status != MonogenicityStatus::monogenic)
    throw std::logic_error("sweep: hit does not re-verify");
  if (family == Family::linear_tail) {
    MonogenicityVerdict oracle =
        is_monogenic_via_dedekind(family_polynomial(family, c1, c2), budget);
    if (oracle.status != MonogenicityStatus::monogenic)
      throw std::logic_error("sweep: JKS and Dedekind disagree on a hit");
  }
  out.hits.push_back({bigint(c1), bigint(c2), std::move(rep)});
}

}  // namespace detail

/// Scans every coefficient pair in the box (both coefficients nonzero) and
/// collects the polynomials that are simultaneously cyclic (C4) and
/// monogenic. Budget-exhausted items are reported, never dropped.
inline SweepResult sweep(Family family, std::uint64_t bound1, std::uint64_t bound2,
                         const SweepConfig& config = {}) {
  SweepResult result;
  result.family = family;
  result.bound1 = bound1;
  result.bound2 = bound2;

  std::vector<std::int64_t> outer = detail::signed_coefficient_order(bound1);
  std::vector<std::int64_t> inner = detail::signed_coefficient_order(bound2);

  unsigned workers = std::max(1u, config.workers);
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, outer.size()));
  std::size_t block = (outer.size() + workers - 1) / workers;

  std::vector<detail::SweepChunk> chunks(workers);
  std::vector<std::exception_ptr> errors(workers);

  auto run_chunk = [&](unsigned w) {
    try {
      std::size_t lo = w * block, hi = std::min(outer.size(), lo + block);
      for (std::size_t i = lo; i < hi; ++i) {
        for (std::int64_t c2 : inner)
          detail::sweep_item(family, outer[i], c2, config.budget, chunks[w]);
        if (config.progress) config.progress->fetch_add(inner.size());
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
    for (auto& th : pool) th.join();
  }
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);

  for (auto& chunk : chunks) {
    result.scanned += chunk.scanned;
    for (auto& hit : chunk.hits) result.hits.push_back(std::move(hit));
    for (auto& u : chunk.unknown) result.unknown_coefficients.push_back(std::move(u));
  }
  result.skipped_unknown = result.unknown_coefficients.size();
  return result;
}

// ---------------------------------------------------------------------------
// Identity and congruence suites

struct IdentitySuiteReport {
  std::uint64_t pairs_scanned = 0;
  std::uint64_t instances_checked = 0;  // (c, d, t) triples with r(t) = 0
};

namespace detail {

template <typename Fn>
inline IdentitySuiteReport for_each_resolvent_instance(std::uint64_t bound_c,
                                                       std::uint64_t bound_d, Fn&& check) {
  IdentitySuiteReport rep;
  std::vector<std::int64_t> cs = signed_coefficient_order(bound_c);
  std::vector<std::int64_t> ds = signed_coefficient_order(bound_d);
  for (std::int64_t c : cs) {
    for (std::int64_t d : ds) {
      ++rep.pairs_scanned;
      Trinomial t(c, d);
      bigint prev;
      bool have_prev = false;
      for (const bigint& root : integer_resolvent_roots(t)) {
        if (have_prev && root == prev) continue;
        prev = root;
        have_prev = true;
        ++rep.instances_checked;
        check(t, root);
      }
    }
  }
  return rep;
}

inline std::string instance_label(const Trinomial& t, const bigint& root) {
  std::ostringstream out;
  out << "(c, d, t) = (" << t.c << ", " << t.d << ", " << root << ")";
  return out.str();
}

}  // namespace detail

/// Checks, over every integer resolvent root instance in the box:
///   256d^3 - 27c^4 = Delta(r) = (16d - 3t^2)(3t^2 - 4d)^2
///   t(t^2 - 4d) = c^2
///   delta1 * delta2 = c^2 (16d - 3t^2)^2
/// Any failure aborts with the counterexample.
inline IdentitySuiteReport verify_identities(std::uint64_t bound_c, std::uint64_t bound_d) {
  return detail::for_each_resolvent_instance(bound_c, bound_d, [](const Trinomial& t,
                                                                  const bigint& root) {
    bigint disc = discriminant(t);
    if (resolvent(t).discriminant() != disc)
      throw std::logic_error("identity Delta(f)=Delta(r) failed at " +
                             detail::instance_label(t, root));
    bigint scale = 16 * t.d - 3 * root * root;
    bigint other = 3 * root * root - 4 * t.d;
    if (disc != scale * other * other)
      throw std::logic_error("identity Delta=(16d-3t^2)(3t^2-4d)^2 failed at " +
                             detail::instance_label(t, root));
    if (root * (root * root - 4 * t.d) != t.c * t.c)
      throw std::logic_error("identity t(t^2-4d)=c^2 failed at " +
                             detail::instance_label(t, root));
    ResolventAnalysis a = resolvent_analysis(t, root);
    if (a.delta1 * a.delta2 != t.c * t.c * scale * scale)
      throw std::logic_error("identity delta1*delta2=c^2(16d-3t^2)^2 failed at " +
                             detail::instance_label(t, root));
  });
}

inline IdentitySuiteReport verify_identities(std::uint64_t bound) {
  return verify_identities(bound, bound);
}

/// Checks both divisibility chains link by link on every instance:
///   2 | Delta(f) <=> 4 | (3t^2-4d) <=> 4 | (16d-3t^2) <=> 2 | t
///   3 | Delta(f) <=> 3 | (3t^2-4d) <=> 3 | (16d-3t^2) <=> 3 | d
inline IdentitySuiteReport parity_observations_check(std::uint64_t bound_c,
                                                     std::uint64_t bound_d) {
  return detail::for_each_resolvent_instance(bound_c, bound_d, [](const Trinomial& t,
                                                                  const bigint& root) {
    bigint disc = discriminant(t);
    bigint lhs = 3 * root * root - 4 * t.d;
    bigint rhs = 16 * t.d - 3 * root * root;
    bool chain2[] = {disc % 2 == 0, lhs % 4 == 0, rhs % 4 == 0, root % 2 == 0};
    bool chain3[] = {disc % 3 == 0, lhs % 3 == 0, rhs % 3 == 0, t.d % 3 == 0};
    for (bool link : chain2)
      if (link != chain2[0])
        throw std::logic_error("parity chain (mod 2) broken at " +
                               detail::instance_label(t, root));
    for (bool link : chain3)
      if (link != chain3[0])
        throw std::logic_error("divisibility chain (mod 3) broken at " +
                               detail::instance_label(t, root));
  });
}

inline IdentitySuiteReport parity_observations_check(std::uint64_t bound) {
  return parity_observations_check(bound, bound);
}

/// Enumerates residue pairs (c mod 9, d mod 9) with 3 not dividing c and
/// d in {3, 6}, keeping those where t(t^2 - 4d) = c^2 (mod 9) is solvable.
/// The result must be exactly {(2,6),(4,3),(5,3),(7,6)}, and each member
/// must satisfy c^4 - c^2 + d = 0 (mod 9).
inline std::set<std::pair<int, int>> verify_mod9_table() {
  std::set<std::pair<int, int>> found;
  for (int c = 1; c < 9; ++c) {
    if (c % 3 == 0) continue;
    for (int d : {3, 6}) {
      for (int t = 0; t < 9; ++t) {
        int lhs = ((t * (t * t - 4 * d)) % 9 + 9) % 9;
        if (lhs == c * c % 9) {
          found.insert({c, d});
          break;
        }
      }
    }
  }
  const std::set<std::pair<int, int>> expected{{2, 6}, {4, 3}, {5, 3}, {7, 6}};
  if (found != expected) {
    std::ostringstream out;
    out << "mod-9 table mismatch; got {";
    for (auto [c, d] : found) out << " (" << c << "," << d << ")";
    out << " }";
    throw std::logic_error(out.str());
  }
  for (auto [c, d] : found) {
    int c2 = c * c;
    if ((c2 * c2 - c2 + d) % 9 != 0) {
      std::ostringstream out;
      out << "pair (" << c << "," << d << ") fails c^4-c^2+d = 0 (mod 9)";
      throw std::logic_error(out.str());
    }
  }
  return found;
}

// ---------------------------------------------------------------------------
// Oracle equivalence and Frobenius consistency

struct OracleEquivalenceReport {
  std::uint64_t trinomials_checked = 0;  // irreducible ones in the box
  std::uint64_t prime_checks = 0;
};

/// For every irreducible trinomial in the box and every prime q | Delta(f)
/// with q <= prime_limit, the per-prime index condition and the Dedekind
/// criterion must agree exactly.
inline OracleEquivalenceReport jks_vs_dedekind_check(std::uint64_t bound_c, std::uint64_t bound_d,
                                                     std::uint64_t prime_limit = 100'000) {
  OracleEquivalenceReport rep;
  std::vector<std::int64_t> cs = detail::signed_coefficient_order(bound_c);
  std::vector<std::int64_t> ds = detail::signed_coefficient_order(bound_d);
  for (std::int64_t c : cs) {
    for (std::int64_t d : ds) {
      Trinomial t(c, d);
      if (!is_irreducible(t).irreducible) continue;
      ++rep.trinomials_checked;
      FactoredInteger disc = factorize(discriminant(t));
      if (!disc.complete)
        throw std::logic_error("jks_vs_dedekind_check: discriminant did not factor");
      for (const auto& [q, e] : disc.factors) {
        if (q > prime_limit) continue;
        ++rep.prime_checks;
        bool jks = detail::jks_prime_check_unchecked(t, q).passes;
        bool dedekind = dedekind_check(to_quartic(t), q);
        if (jks != dedekind) {
          std::ostringstream out;
          out << "oracle disagreement at (c, d, q) = (" << c << ", " << d << ", " << q
              << "): jks=" << jks << " dedekind=" << dedekind;
          throw std::logic_error(out.str());
        }
      }
    }
  }
  return rep;
}

/// Every C4 trinomial with |c| <= bound_c and |d| <= bound_d, in canonical
/// sweep order. A C4 group forces t > 0, d > 0 and 3t^2/16 < d < t^2/4 at
/// the unique resolvent root t with c^2 = t(t^2 - 4d), so candidates are
/// enumerated directly from (t, d) instead of scanning the whole box; each
/// candidate is then classified for real. Equivalent to (and tested
/// against) a full box scan.
inline std::vector<Trinomial> c4_trinomials_in_box(std::uint64_t bound_c,
                                                   std::uint64_t bound_d) {
  std::vector<Trinomial> c4;
  bigint bc = bound_c, bd = bound_d;
  for (bigint t = 1; 3 * t * t < 16 * bd; ++t) {
    bigint dlo = 3 * t * t / 16 + 1;             // smallest d with 16d - 3t^2 > 0
    bigint dhi = std::min(bd, bigint((t * t - 1) / 4));  // largest d with t^2 - 4d > 0
    for (bigint d = dlo; d <= dhi; ++d) {
      bigint csq = t * (t * t - 4 * d);
      if (!is_perfect_square(csq)) continue;
      bigint c = int_sqrt(csq);
      if (c == 0 || c > bc) continue;
      for (const bigint& sc : {bigint(-c), c}) {
        Trinomial cand(sc, d);
        IrreducibilityVerdict irr = is_irreducible(cand);
        if (irr.irreducible && classify_galois(cand, irr).group == GaloisGroup::C4)
          c4.push_back(cand);
      }
    }
  }
  auto key = [](const Trinomial& t) {
    return std::make_tuple(bigint(boost::multiprecision::abs(t.c)), t.c > 0,
                           bigint(boost::multiprecision::abs(t.d)), t.d > 0);
  };
  std::sort(c4.begin(), c4.end(),
            [&](const Trinomial& a, const Trinomial& b) { return key(a) < key(b); });
  return c4;
}

struct FrobeniusConsistencyReport {
  std::uint64_t c4_in_box = 0;
  std::uint64_t samples_used = 0;
  std::size_t primes_per_sample = 0;
  std::uint64_t transposition_shapes = 0;  // must stay 0
};

/// Collects the C4 trinomials in the box, draws a seeded sample, and
/// verifies that no sampled Frobenius pattern has the 1+1+2 shape a C4
/// group cannot produce. Hard check: a single occurrence aborts.
inline FrobeniusConsistencyReport frobenius_consistency_check(std::uint64_t bound_c,
                                                              std::uint64_t bound_d,
                                                              std::uint64_t samples = 50,
                                                              std::size_t primes_per_sample = 200,
                                                              std::uint64_t seed = 1) {
  std::vector<Trinomial> c4 = c4_trinomials_in_box(bound_c, bound_d);
  FrobeniusConsistencyReport rep;
  rep.c4_in_box = c4.size();
  rep.primes_per_sample = primes_per_sample;

  // portable seeded Fisher-Yates; std::shuffle is not cross-implementation
  // reproducible
  std::mt19937_64 rng(seed);
  for (std::size_t i = c4.size(); i > 1; --i) std::swap(c4[i - 1], c4[rng() % i]);

  std::uint64_t use = std::min<std::uint64_t>(samples, c4.size());
  for (std::uint64_t i = 0; i < use; ++i) {
    FrobeniusHistogram h = frobenius_pattern_sample(c4[i], primes_per_sample, 0);
    rep.transposition_shapes += h.n112;
    ++rep.samples_used;
    if (h.n112 != 0) {
      std::ostringstream out;
      out << "C4-classified trinomial (c, d) = (" << c4[i].c << ", " << c4[i].d
          << ") produced a 1+1+2 Frobenius shape";
      throw std::logic_error(out.str());
    }
  }
  return rep;
}

}  // namespace qtlab
