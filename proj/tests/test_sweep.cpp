#include "qtlab/sweep.hpp"

#include "oracles.hpp"
#include "qtlab/report.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qtlab;

TEST_CASE("linear sweep at bound 50 finds nothing") {
  SweepResult r = sweep(Family::linear_tail, 50, 50);
  CHECK(r.hits.empty());
  CHECK(r.scanned == 4 * 50 * 50);
  CHECK(r.skipped_unknown == 0);
  CHECK(r.unknown_coefficients.empty());
}

TEST_CASE("biquadratic sweep at bound 10 finds exactly the known three") {
  SweepResult r = sweep(Family::biquadratic, 10, 10);
  REQUIRE(r.hits.size() == 3);
  CHECK(r.hits[0].coeff1 == -4);
  CHECK(r.hits[0].coeff2 == 2);
  CHECK(r.hits[1].coeff1 == 4);
  CHECK(r.hits[1].coeff2 == 2);
  CHECK(r.hits[2].coeff1 == -5);
  CHECK(r.hits[2].coeff2 == 5);
  CHECK(r.scanned == 400);
  for (const SweepHit& h : r.hits) {
    REQUIRE(h.report.galois.has_value());
    CHECK(h.report.galois->group == GaloisGroup::C4);
    REQUIRE(h.report.monogenicity.has_value());
    CHECK(h.report.monogenicity->status == MonogenicityStatus::monogenic);
    // cross-family spot check: hit discriminants match the independent
    // resultant-based formula
    CHECK(h.report.discriminant_value == oracles::discriminant_oracle(h.report.poly.to_poly()));
  }
}

TEST_CASE("cubic sweep at bound 20 finds nothing") {
  SweepResult r = sweep(Family::cubic_tail, 20, 20);
  CHECK(r.hits.empty());
  CHECK(r.scanned == 1600);
  CHECK(r.skipped_unknown == 0);
}

TEST_CASE("sweep output is identical for any worker count") {
  for (Family family : {Family::biquadratic, Family::linear_tail}) {
    SweepResult one = sweep(family, 12, 12, {.workers = 1});
    SweepResult three = sweep(family, 12, 12, {.workers = 3});
    SweepResult eight = sweep(family, 12, 12, {.workers = 8});
    auto strip = [](const SweepResult& r) {
      json j = to_json(r);
      for (auto& hit : j["hits"]) hit["report"]["timing_ms"] = 0;
      return j.dump();
    };
    CHECK(strip(one) == strip(three));
    CHECK(strip(one) == strip(eight));
  }
}

TEST_CASE("budget-starved sweep surfaces undecided items") {
  // (±5, 5) are C4 and their discriminant 15125 = 5^3 * 11^2 cannot be
  // factored with trial division capped at 3 and rho disabled
  SweepConfig config;
  config.budget = {3, 0};
  SweepResult r = sweep(Family::linear_tail, 5, 5, config);
  CHECK(r.hits.empty());
  CHECK(r.skipped_unknown == 2);
  REQUIRE(r.unknown_coefficients.size() == 2);
  CHECK(r.unknown_coefficients[0] == std::pair<bigint, bigint>{-5, 5});
  CHECK(r.unknown_coefficients[1] == std::pair<bigint, bigint>{5, 5});
}

TEST_CASE("sweep rejects nonsense bounds") {
  CHECK_THROWS_AS(sweep(Family::linear_tail, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(sweep(Family::linear_tail, 5, 0), std::invalid_argument);
}

TEST_CASE("identity suite") {
  IdentitySuiteReport rep = verify_identities(50);
  CHECK(rep.pairs_scanned == 10000);
  CHECK(rep.instances_checked == 148);

  // worked instances: (5,5,t=5): 15125 = 5*25^2 = (80-75)(75-20)^2
  CHECK(bigint(15125) == bigint(80 - 75) * (75 - 20) * (75 - 20));
  // (4,-1,t=2): -7168 = (-16-12)(12+4)^2 = -28 * 256
  CHECK(bigint(-7168) == bigint(-16 - 12) * (12 + 4) * (12 + 4));
}

TEST_CASE("parity suite") {
  IdentitySuiteReport rep = parity_observations_check(50);
  CHECK(rep.pairs_scanned == 10000);
  CHECK(rep.instances_checked == 148);

  // (5,5,5): Delta odd and t odd; (4,-1,2): Delta even, 4 | 16, 2 | t
  CHECK(discriminant(Trinomial(5, 5)) % 2 != 0);
  CHECK(discriminant(Trinomial(4, -1)) % 2 == 0);
  CHECK((3 * 2 * 2 - 4 * -1) % 4 == 0);
}

TEST_CASE("mod-9 table") {
  std::set<std::pair<int, int>> table = verify_mod9_table();
  CHECK(table == std::set<std::pair<int, int>>{{2, 6}, {4, 3}, {5, 3}, {7, 6}});
  // (2,6): 16 - 4 + 6 = 18 = 0 (mod 9)
  CHECK((16 - 4 + 6) % 9 == 0);
  // (1,3) excluded: no residue t has t(t^2 - 12) = 1 (mod 9)
  for (int t = 0; t < 9; ++t) CHECK(((t * (t * t - 12)) % 9 + 9) % 9 != 1);
}

TEST_CASE("oracle equivalence sweep runs clean") {
  OracleEquivalenceReport rep = jks_vs_dedekind_check(20, 20);
  CHECK(rep.trinomials_checked > 1000);
  CHECK(rep.prime_checks > 2000);
}

TEST_CASE("C4 box enumeration equals the brute scan") {
  std::vector<Trinomial> fast = c4_trinomials_in_box(120, 120);
  std::vector<Trinomial> slow;
  for (std::int64_t c : detail::signed_coefficient_order(120)) {
    for (std::int64_t d : detail::signed_coefficient_order(120)) {
      Trinomial t(c, d);
      IrreducibilityVerdict irr = is_irreducible(t);
      if (irr.irreducible && classify_galois(t, irr).group == GaloisGroup::C4)
        slow.push_back(t);
    }
  }
  CHECK(fast == slow);
  CHECK(fast.size() == 10);
}

TEST_CASE("frobenius consistency check") {
  FrobeniusConsistencyReport rep = frobenius_consistency_check(200, 200, 8, 50, 7);
  CHECK(rep.samples_used == 8);
  CHECK(rep.transposition_shapes == 0);

  // same seed, same picks
  FrobeniusConsistencyReport again = frobenius_consistency_check(200, 200, 8, 50, 7);
  CHECK(again.c4_in_box == rep.c4_in_box);
}
