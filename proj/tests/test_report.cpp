#include "qtlab/report.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace qtlab;

TEST_CASE("classification report JSON schema") {
  ClassificationReport rep = classify(Family::linear_tail, 5, 5);
  json j = to_json(rep);

  std::vector<std::string> keys;
  for (auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"input", "irreducible", "separable", "discriminant",
                                         "galois", "monogenic", "timing_ms"});

  CHECK(j["input"]["family"] == "linear");
  CHECK(j["input"]["c"] == "5");
  CHECK(j["input"]["d"] == "5");
  CHECK(j["irreducible"] == true);
  CHECK(j["separable"] == true);
  CHECK(j["discriminant"]["value"] == "15125");
  CHECK(j["discriminant"]["complete"] == true);
  REQUIRE(j["discriminant"]["factors"].size() == 2);
  CHECK(j["discriminant"]["factors"][0]["prime"] == "5");
  CHECK(j["discriminant"]["factors"][0]["exponent"] == 3);
  CHECK(j["galois"]["group"] == "C4");
  CHECK(j["monogenic"]["status"] == "not_monogenic");
  CHECK(j["monogenic"]["failing_primes"] == json::array({"11"}));
  CHECK(j["timing_ms"].is_number());
}

TEST_CASE("reducible report carries the witness and nulls") {
  ClassificationReport rep = classify(Family::linear_tail, -4, 3);
  json j = to_json(rep);
  CHECK(j["irreducible"] == false);
  CHECK(j["galois"].is_null());
  CHECK(j["monogenic"].is_null());
  REQUIRE(j.contains("factorization_witness"));
  CHECK(j["factorization_witness"][0] == "x^2 - 2x + 1");
  CHECK(j["factorization_witness"][1] == "x^2 + 2x + 3");
}

TEST_CASE("reports are byte-stable modulo timing") {
  auto stripped = [](const ClassificationReport& r) {
    json j = to_json(r);
    j["timing_ms"] = 0;
    return j.dump();
  };
  CHECK(stripped(classify(Family::linear_tail, 5, 5)) ==
        stripped(classify(Family::linear_tail, 5, 5)));
  CHECK(stripped(classify(Family::biquadratic, -4, 2)) ==
        stripped(classify(Family::biquadratic, -4, 2)));
}

TEST_CASE("csv layout") {
  CHECK(csv_header() ==
        "family,coeff1,coeff2,irreducible,separable,discriminant,discriminant_factors,"
        "discriminant_complete,galois_group,monogenic_status,failing_primes,timing_ms");
  std::string row = csv_row(classify(Family::linear_tail, 5, 5));
  CHECK(row.find("linear,5,5,true,true,15125,\"5^3 * 11^2\",true,C4,not_monogenic,\"11\",") == 0);

  std::string reducible_row = csv_row(classify(Family::linear_tail, -4, 3));
  CHECK(reducible_row.find("linear,-4,3,false,true,") == 0);
}

TEST_CASE("sweep result JSON") {
  SweepResult r = sweep(Family::biquadratic, 10, 10);
  json j = to_json(r);
  CHECK(j["family"] == "biquadratic");
  CHECK(j["bounds"]["bmax"] == 10);
  CHECK(j["bounds"]["dmax"] == 10);
  CHECK(j["scanned"] == 400);
  CHECK(j["hit_count"] == 3);
  CHECK(j["skipped_unknown"] == 0);
  CHECK(j["hits"][0]["coefficients"] == json::array({"-4", "2"}));
}

TEST_CASE("ec verification JSON") {
  ECVerification v = verify_ec_points(5, 2000);
  CHECK(v.match);
  json j = to_json(v);
  CHECK(j["k"] == 5);
  CHECK(j["match"] == true);
  CHECK(j["points_found"].size() == 4);
  CHECK(j["points_found"][0]["X"] == "-4");
  // pullback of (-4, 8) is the integral triple (2, 16, -1)
  CHECK(j["coefficient_pullbacks"][0]["t"] == "2");
  CHECK(j["coefficient_pullbacks"][0]["c_squared"] == "16");
  CHECK(j["coefficient_pullbacks"][0]["d"] == "-1");
  CHECK(j["coefficient_pullbacks"][0]["d_integral"] == true);
}

TEST_CASE("text rendering") {
  std::string text = to_text(classify(Family::linear_tail, 5, 5));
  CHECK(text.find("C4") != std::string::npos);
  CHECK(text.find("not_monogenic") != std::string::npos);
  CHECK(text.find("15125") != std::string::npos);
  CHECK(text.find("5^3 * 11^2") != std::string::npos);

  std::string sweep_text = to_text(sweep(Family::biquadratic, 10, 10));
  CHECK(sweep_text.find("hits:            3") != std::string::npos);
}

TEST_CASE("factorization rendering") {
  CHECK(factorization_str(factorize(bigint(15125))) == "5^3 * 11^2");
  CHECK(factorization_str(factorize(bigint(-7168))) == "-1 * 2^10 * 7");
  CHECK(factorization_str(factorize(bigint(229))) == "229");
  FactoredInteger partial = factorize(bigint(1'000'003) * 1'000'033, {10, 0});
  std::string s = factorization_str(partial);
  CHECK(s.find("(composite)") != std::string::npos);
}
