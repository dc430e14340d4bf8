#pragma once

// Machine-readable output: stable-ordered JSON, fixed-column CSV, and the
// human text rendering. Big integers serialize as decimal strings so values
// survive any JSON consumer intact.

#include "qtlab/classify.hpp"
#include "qtlab/elliptic.hpp"
#include "qtlab/exact_arith.hpp"
#include "qtlab/sweep.hpp"

#include <nlohmann/json.hpp>

#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qtlab {

using json = nlohmann::ordered_json;

inline json to_json(const FactoredInteger& f) {
  json factors = json::array();
  for (const auto& [p, e] : f.factors) factors.push_back({{"prime", p.str()}, {"exponent", e}});
  json out;
  out["value"] = f.value.str();
  out["factors"] = std::move(factors);
  out["complete"] = f.complete;
  if (!f.complete) out["unfactored_cofactor"] = f.unfactored_cofactor.str();
  return out;
}

inline std::string factorization_str(const FactoredInteger& f) {
  std::ostringstream out;
  if (f.sign < 0) out << "-1";
  bool first = f.sign >= 0;
  for (const auto& [p, e] : f.factors) {
    if (!first) out << " * ";
    first = false;
    out << p;
    if (e > 1) out << "^" << e;
  }
  if (!f.complete) {
    if (!first) out << " * ";
    out << f.unfactored_cofactor << " (composite)";
    first = false;
  }
  if (first) out << "1";
  return out.str();
}

inline json to_json(const GaloisVerdict& g) {
  json witness;
  json roots = json::array();
  for (const bigint& r : g.resolvent_integer_roots) roots.push_back(r.str());
  witness["resolvent_integer_roots"] = std::move(roots);
  if (g.analysis) {
    witness["delta_analysis"] = {{"t", g.analysis->t.str()},
                                 {"delta1", g.analysis->delta1.str()},
                                 {"delta2", g.analysis->delta2.str()},
                                 {"delta1_is_nonzero_square", g.analysis->delta1_is_nonzero_square},
                                 {"delta2_is_nonzero_square", g.analysis->delta2_is_nonzero_square}};
  }
  witness["discriminant_is_square"] = g.discriminant_is_square;
  return json{{"group", std::string(to_string(g.group))}, {"witness", std::move(witness)}};
}

inline json to_json(const MonogenicityVerdict& m) {
  json primes = json::array();
  for (const bigint& p : m.failing_primes) primes.push_back(p.str());
  return json{{"status", std::string(to_string(m.status))}, {"failing_primes", std::move(primes)}};
}

inline json to_json(const ClassificationReport& r) {
  json input;
  input["family"] = std::string(to_string(r.family));
  input[std::string(coeff_name(r.family))] = r.coeff1.str();
  input["d"] = r.coeff2.str();
  input["polynomial"] = r.poly.to_poly().str();

  json out;
  out["input"] = std::move(input);
  out["irreducible"] = r.irreducibility.irreducible;
  out["separable"] = r.irreducibility.separable;
  if (r.irreducibility.witness) {
    json factors = json::array();
    for (const IntPoly& f : *r.irreducibility.witness) factors.push_back(f.str());
    out["factorization_witness"] = std::move(factors);
  }
  if (r.discriminant_factored) {
    out["discriminant"] = to_json(*r.discriminant_factored);
  } else {
    out["discriminant"] = {{"value", r.discriminant_value.str()},
                           {"factors", json::array()},
                           {"complete", false}};
  }
  out["galois"] = r.galois ? to_json(*r.galois) : json(nullptr);
  out["monogenic"] = r.monogenicity ? to_json(*r.monogenicity) : json(nullptr);
  out["timing_ms"] = r.timing_ms;
  return out;
}

inline json to_json(const SweepResult& s) {
  json hits = json::array();
  for (const SweepHit& h : s.hits) {
    hits.push_back({{"coefficients", {h.coeff1.str(), h.coeff2.str()}},
                    {"report", to_json(h.report)}});
  }
  json unknown = json::array();
  for (const auto& [c1, c2] : s.unknown_coefficients)
    unknown.push_back({c1.str(), c2.str()});
  json out;
  out["family"] = std::string(to_string(s.family));
  out["bounds"] = {{std::string(coeff_name(s.family)) + "max", s.bound1}, {"dmax", s.bound2}};
  out["scanned"] = s.scanned;
  out["hits"] = std::move(hits);
  out["hit_count"] = s.hits.size();
  out["skipped_unknown"] = s.skipped_unknown;
  out["unknown_coefficients"] = std::move(unknown);
  return out;
}

inline json to_json(const ECPoint& p) {
  return json{{"X", p.X.str()}, {"Y", p.Y.str()}};
}

/// Brute-forced points vs. the expected set restricted to the bound.
struct ECVerification {
  unsigned k = 0;
  bigint xbound;
  std::vector<ECPoint> found;
  std::vector<ECPoint> expected_within_bound;
  bool match = false;
};

inline ECVerification verify_ec_points(unsigned k, const bigint& xbound) {
  ECVerification v;
  v.k = k;
  v.xbound = xbound;
  v.found = ec_points_bruteforce(k, xbound);
  for (const ECPoint& p : ec_expected_points(k).points)
    if (boost::multiprecision::abs(p.X) <= xbound) v.expected_within_bound.push_back(p);
  v.match = v.found == v.expected_within_bound;
  return v;
}

inline json to_json(const ECVerification& v) {
  json found = json::array(), expected = json::array(), coeffs = json::array();
  for (const ECPoint& p : v.found) found.push_back(to_json(p));
  for (const ECPoint& p : v.expected_within_bound) expected.push_back(to_json(p));
  for (const ECPoint& p : v.found) {
    if (auto c = ec_point_to_coefficients(p)) {
      coeffs.push_back({{"X", p.X.str()},
                        {"t", c->t.str()},
                        {"c", c->c.str()},
                        {"c_squared", bigint(c->c * c->c).str()},
                        {"d", c->d.str()},
                        {"d_integral", c->d_integral}});
    } else {
      coeffs.push_back({{"X", p.X.str()}, {"integral", false}});
    }
  }
  json out;
  out["k"] = v.k;
  out["k_mod_4"] = v.k % 4;
  out["xbound"] = v.xbound.str();
  out["points_found"] = std::move(found);
  out["points_expected_within_bound"] = std::move(expected);
  out["match"] = v.match;
  out["coefficient_pullbacks"] = std::move(coeffs);
  return out;
}

inline json to_json(const IdentitySuiteReport& r) {
  return json{{"pairs_scanned", r.pairs_scanned},
              {"instances_checked", r.instances_checked},
              {"failures", 0}};
}

inline json to_json(const OracleEquivalenceReport& r) {
  return json{{"trinomials_checked", r.trinomials_checked},
              {"prime_checks", r.prime_checks},
              {"disagreements", 0}};
}

inline json to_json(const FrobeniusConsistencyReport& r) {
  return json{{"c4_in_box", r.c4_in_box},
              {"samples_used", r.samples_used},
              {"primes_per_sample", r.primes_per_sample},
              {"transposition_shapes", r.transposition_shapes}};
}

inline json mod9_table_to_json(const std::set<std::pair<int, int>>& table) {
  json pairs = json::array();
  for (auto [c, d] : table) pairs.push_back({c, d});
  return json{{"pairs", std::move(pairs)}, {"count", table.size()}};
}

// ---------------------------------------------------------------------------
// CSV (fixed column order)

inline std::string csv_header() {
  return "family,coeff1,coeff2,irreducible,separable,discriminant,discriminant_factors,"
         "discriminant_complete,galois_group,monogenic_status,failing_primes,timing_ms";
}

inline std::string csv_row(const ClassificationReport& r) {
  std::ostringstream out;
  out << to_string(r.family) << "," << r.coeff1 << "," << r.coeff2 << ","
      << (r.irreducibility.irreducible ? "true" : "false") << ","
      << (r.irreducibility.separable ? "true" : "false") << "," << r.discriminant_value << ",";
  if (r.discriminant_factored) {
    const auto& f = *r.discriminant_factored;
    out << "\"" << factorization_str(f) << "\"," << (f.complete ? "true" : "false") << ",";
  } else {
    out << ",false,";
  }
  out << (r.galois ? to_string(r.galois->group) : std::string_view{}) << ","
      << (r.monogenicity ? to_string(r.monogenicity->status) : std::string_view{}) << ",\"";
  if (r.monogenicity) {
    bool first = true;
    for (const bigint& p : r.monogenicity->failing_primes) {
      if (!first) out << ";";
      first = false;
      out << p;
    }
  }
  out << "\"," << r.timing_ms;
  return out.str();
}

// ---------------------------------------------------------------------------
// Text rendering

inline std::string to_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "f(x) = " << r.poly.to_poly().str() << "\n";
  if (!r.irreducibility.separable)
    out << "  separable:    no (discriminant is zero)\n";
  out << "  irreducible:  " << (r.irreducibility.irreducible ? "yes" : "no") << "\n";
  if (r.irreducibility.witness) {
    out << "  factorization:";
    for (const IntPoly& f : *r.irreducibility.witness) out << " (" << f.str() << ")";
    out << "\n";
  }
  out << "  discriminant: " << r.discriminant_value;
  if (r.discriminant_factored) out << " = " << factorization_str(*r.discriminant_factored);
  out << "\n";
  if (r.galois) {
    out << "  galois group: " << to_string(r.galois->group);
    if (r.galois->analysis) {
      out << "  (t = " << r.galois->analysis->t << ", delta1 = " << r.galois->analysis->delta1
          << ", delta2 = " << r.galois->analysis->delta2 << ")";
    }
    out << "\n";
  }
  if (r.monogenicity) {
    out << "  monogenic:    " << to_string(r.monogenicity->status);
    if (!r.monogenicity->failing_primes.empty()) {
      out << "  (index divisors:";
      for (const bigint& p : r.monogenicity->failing_primes) out << " " << p;
      out << ")";
    }
    out << "\n";
  }
  return out.str();
}

inline std::string to_text(const SweepResult& s) {
  std::ostringstream out;
  out << "sweep family=" << to_string(s.family) << " " << coeff_name(s.family)
      << "max=" << s.bound1 << " dmax=" << s.bound2 << "\n"
      << "  scanned:         " << s.scanned << "\n"
      << "  hits:            " << s.hits.size() << "\n"
      << "  skipped_unknown: " << s.skipped_unknown << "\n";
  for (const SweepHit& h : s.hits) {
    out << "  hit (" << h.coeff1 << ", " << h.coeff2 << "): "
        << h.report.poly.to_poly().str() << "\n";
  }
  for (const auto& [c1, c2] : s.unknown_coefficients)
    out << "  UNDECIDED (" << c1 << ", " << c2 << ")\n";
  return out.str();
}

}  // namespace qtlab
