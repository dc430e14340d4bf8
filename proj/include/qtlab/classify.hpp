#pragma once

// Full classification of one polynomial from any of the three trinomial
// families: irreducibility (with witness), discriminant and its
// factorization, Galois group, monogenicity with index divisors.

#include "qtlab/exact_arith.hpp"
#include "qtlab/galois.hpp"
#include "qtlab/monogenic.hpp"
#include "qtlab/quartic.hpp"
#include "qtlab/trinomial.hpp"

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace qtlab {

enum class Family { linear_tail, biquadratic, cubic_tail };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::linear_tail: return "linear";
    case Family::biquadratic: return "biquadratic";
    case Family::cubic_tail: return "cubic";
  }
  return "?";
}

/// Name of the leading free coefficient for a family (c, b or a).
inline std::string_view coeff_name(Family f) {
  switch (f) {
    case Family::linear_tail: return "c";
    case Family::biquadratic: return "b";
    case Family::cubic_tail: return "a";
  }
  return "?";
}

inline MonicQuartic family_polynomial(Family f, const bigint& coeff1, const bigint& coeff2) {
  if (coeff1 == 0 || coeff2 == 0)
    throw std::invalid_argument("family_polynomial: coefficients must be nonzero");
  switch (f) {
    case Family::linear_tail: return {0, 0, coeff1, coeff2};
    case Family::biquadratic: return {0, coeff1, 0, coeff2};
    case Family::cubic_tail: return {coeff1, 0, 0, coeff2};
  }
  throw std::invalid_argument("family_polynomial: unknown family");
}

struct ClassificationReport {
  Family family = Family::linear_tail;
  bigint coeff1;
  bigint coeff2;
  MonicQuartic poly{0, 0, 0, 0};
  IrreducibilityVerdict irreducibility;
  bigint discriminant_value;
  std::optional<FactoredInteger> discriminant_factored;
  std::optional<GaloisVerdict> galois;
  std::optional<MonogenicityVerdict> monogenicity;
  double timing_ms = 0.0;
};

/// Runs the whole pipeline. For the linear family this uses the trinomial
/// resolvent/delta classifier and per-prime index conditions; the other
/// families go through the general quartic classifier with the Dedekind
/// criterion deciding monogenicity.
inline ClassificationReport classify(Family family, const bigint& coeff1, const bigint& coeff2,
                                     const FactorBudget& budget = {}) {
  auto start = std::chrono::steady_clock::now();
  ClassificationReport rep;
  rep.family = family;
  rep.coeff1 = coeff1;
  rep.coeff2 = coeff2;
  rep.poly = family_polynomial(family, coeff1, coeff2);

  if (family == Family::linear_tail) {
    Trinomial t(coeff1, coeff2);
    rep.irreducibility = is_irreducible(t);
    rep.discriminant_value = discriminant(t);
    if (rep.discriminant_value != 0)
      rep.discriminant_factored = factorize(rep.discriminant_value, budget);
    if (rep.irreducibility.irreducible) {
      rep.galois = classify_galois(t);
      rep.monogenicity = is_monogenic(t, budget);
    }
  } else {
    rep.irreducibility = is_irreducible(rep.poly, budget);
    rep.discriminant_value = discriminant(rep.poly);
    if (rep.discriminant_value != 0)
      rep.discriminant_factored = factorize(rep.discriminant_value, budget);
    if (rep.irreducibility.irreducible) {
      rep.galois = classify_galois(rep.poly, budget);
      rep.monogenicity = is_monogenic_via_dedekind(rep.poly, budget);
    }
  }

  rep.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace qtlab
