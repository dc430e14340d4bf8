// qtlab command line: classify one trinomial, run exhaustive family sweeps,
// run the verification suites, and check elliptic-curve point tables.
//
// Exit codes: 0 success, 1 verification/assertion failure (counterexample on
// stderr), 2 usage error.

#include "qtlab/classify.hpp"
#include "qtlab/elliptic.hpp"
#include "qtlab/report.hpp"
#include "qtlab/sweep.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

namespace {

struct GlobalOptions {
  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 1;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t trial_division_bound = 1'000'000;
  std::uint64_t rho_cap = 10'000'000;

  qtlab::FactorBudget budget() const { return {trial_division_bound, rho_cap}; }
};

void emit(const GlobalOptions& opt, const std::string& payload) {
  if (opt.out_path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + opt.out_path);
  out << payload;
}

qtlab::bigint parse_bigint(const std::string& text) {
  try {
    return qtlab::bigint(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError("not an integer: " + text);
  }
}

std::string suite_text(const std::string& name, const qtlab::json& body) {
  std::string line = name + ":";
  for (auto& [key, value] : body.items()) line += " " + key + "=" + value.dump();
  return line + " PASS";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification of quartic trinomials x^4+cx+d "
               "(irreducibility, discriminant, Galois group, monogenicity) "
               "with exhaustive verification sweeps"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--out", opt.out_path, "write the report to a file instead of stdout");
  app.add_option("--seed", opt.seed, "seed for seeded sampling (0 = fully deterministic picks)")
      ->capture_default_str();
  app.add_option("--workers", opt.workers, "worker threads for sweeps")
      ->envname("QTLAB_WORKERS")
      ->check(CLI::PositiveNumber);
  app.add_option("--trial-division-bound", opt.trial_division_bound,
                 "trial division bound for factorization")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--rho-cap", opt.rho_cap, "rho iteration cap per cofactor")
      ->capture_default_str();

  // classify
  auto* cls = app.add_subcommand("classify", "classify one polynomial from a trinomial family");
  std::string cls_c, cls_b, cls_a, cls_d;
  cls->add_option("--c", cls_c, "linear coefficient (family x^4+cx+d)");
  cls->add_option("--b", cls_b, "quadratic coefficient (family x^4+bx^2+d)");
  cls->add_option("--a", cls_a, "cubic coefficient (family x^4+ax^3+d)");
  cls->add_option("--d", cls_d, "constant coefficient")->required();

  // sweep
  auto* swp = app.add_subcommand("sweep", "scan a coefficient box for cyclic monogenic hits");
  std::string swp_family;
  std::uint64_t swp_cmax = 0, swp_bmax = 0, swp_amax = 0, swp_dmax = 0;
  swp->add_option("--family", swp_family, "trinomial family")
      ->check(CLI::IsMember({"linear", "biquadratic", "cubic"}))
      ->required();
  swp->add_option("--cmax", swp_cmax, "max |c| (linear family)");
  swp->add_option("--bmax", swp_bmax, "max |b| (biquadratic family)");
  swp->add_option("--amax", swp_amax, "max |a| (cubic family)");
  swp->add_option("--dmax", swp_dmax, "max |d|")->required();

  // verify
  auto* ver = app.add_subcommand("verify", "run a machine-checked verification suite");
  std::string ver_suite;
  std::uint64_t ver_cmax = 0, ver_dmax = 0, ver_trials = 50;
  ver->add_option("--suite", ver_suite, "suite to run")
      ->check(CLI::IsMember({"identities", "mod9", "parity", "jks-vs-dedekind", "frobenius"}))
      ->required();
  ver->add_option("--cmax", ver_cmax, "box bound for the first coefficient");
  ver->add_option("--dmax", ver_dmax, "box bound for d");
  ver->add_option("--trials", ver_trials, "sample count (frobenius suite)")
      ->capture_default_str();

  // ec
  auto* ec = app.add_subcommand("ec", "brute-force integral points on Y^2 = X^3 - 2^k X");
  unsigned ec_k = 0;
  std::string ec_xbound = "2000000";
  ec->add_option("--k", ec_k, "curve exponent k >= 1")->required()->check(CLI::PositiveNumber);
  ec->add_option("--xbound", ec_xbound, "scan |X| up to this bound")->capture_default_str();

  // report
  auto* rpt = app.add_subcommand(
      "report", "run the full verification battery (sweeps, suites, curves, worked instances)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cls) {
      int given = (!cls_c.empty()) + (!cls_b.empty()) + (!cls_a.empty());
      if (given != 1)
        throw CLI::ValidationError("classify: give exactly one of --c, --b, --a");
      qtlab::Family family = !cls_c.empty()   ? qtlab::Family::linear_tail
                             : !cls_b.empty() ? qtlab::Family::biquadratic
                                              : qtlab::Family::cubic_tail;
      const std::string& coeff = !cls_c.empty() ? cls_c : (!cls_b.empty() ? cls_b : cls_a);
      qtlab::ClassificationReport rep =
          qtlab::classify(family, parse_bigint(coeff), parse_bigint(cls_d), opt.budget());
      if (opt.format == "json")
        emit(opt, qtlab::to_json(rep).dump(2));
      else if (opt.format == "csv")
        emit(opt, qtlab::csv_header() + "\n" + qtlab::csv_row(rep) + "\n");
      else
        emit(opt, qtlab::to_text(rep));
      return 0;
    }

    if (*swp) {
      qtlab::Family family = swp_family == "linear"        ? qtlab::Family::linear_tail
                             : swp_family == "biquadratic" ? qtlab::Family::biquadratic
                                                           : qtlab::Family::cubic_tail;
      std::uint64_t bound1 = 0;
      int given = 0;
      for (std::uint64_t b : {swp_cmax, swp_bmax, swp_amax}) {
        if (b > 0) {
          bound1 = b;
          ++given;
        }
      }
      if (given != 1)
        throw CLI::ValidationError("sweep: give exactly one of --cmax, --bmax, --amax");
      qtlab::SweepConfig config{opt.budget(), opt.workers, nullptr};
      qtlab::SweepResult result = qtlab::sweep(family, bound1, swp_dmax, config);
      if (opt.format == "json") {
        emit(opt, qtlab::to_json(result).dump(2));
      } else if (opt.format == "csv") {
        std::string payload = qtlab::csv_header() + "\n";
        for (const qtlab::SweepHit& h : result.hits) payload += qtlab::csv_row(h.report) + "\n";
        emit(opt, payload);
      } else {
        emit(opt, qtlab::to_text(result));
      }
      return 0;
    }

    if (*ver) {
      if (opt.format == "csv")
        throw CLI::ValidationError("verify: csv output is not defined for suites");
      qtlab::json body;
      std::string name = ver_suite;
      if (ver_suite == "identities") {
        body = qtlab::to_json(qtlab::verify_identities(ver_cmax ? ver_cmax : 100,
                                                       ver_dmax ? ver_dmax : 100));
      } else if (ver_suite == "parity") {
        body = qtlab::to_json(qtlab::parity_observations_check(ver_cmax ? ver_cmax : 100,
                                                               ver_dmax ? ver_dmax : 100));
      } else if (ver_suite == "mod9") {
        body = qtlab::mod9_table_to_json(qtlab::verify_mod9_table());
      } else if (ver_suite == "jks-vs-dedekind") {
        body = qtlab::to_json(qtlab::jks_vs_dedekind_check(ver_cmax ? ver_cmax : 60,
                                                           ver_dmax ? ver_dmax : 60));
      } else {
        body = qtlab::to_json(qtlab::frobenius_consistency_check(
            ver_cmax ? ver_cmax : 1000, ver_dmax ? ver_dmax : 3000, ver_trials, 200, opt.seed));
      }
      if (opt.format == "json") {
        qtlab::json out{{"suite", name}, {"result", body}, {"pass", true}};
        emit(opt, out.dump(2));
      } else {
        emit(opt, suite_text(name, body));
      }
      return 0;
    }

    if (*ec) {
      if (opt.format == "csv")
        throw CLI::ValidationError("ec: csv output is not defined");
      qtlab::ECVerification v = qtlab::verify_ec_points(ec_k, parse_bigint(ec_xbound));
      if (opt.format == "json") {
        emit(opt, qtlab::to_json(v).dump(2));
      } else {
        std::string text = "E_" + std::to_string(v.k) + ": " +
                           std::to_string(v.found.size()) + " points within |X| <= " +
                           v.xbound.str() + "\n";
        for (const qtlab::ECPoint& p : v.found)
          text += "  (" + p.X.str() + ", " + p.Y.str() + ")\n";
        text += v.match ? "matches expected set\n" : "MISMATCH against expected set\n";
        emit(opt, text);
      }
      return v.match ? 0 : 1;
    }

    if (*rpt) {
      if (opt.format == "csv")
        throw CLI::ValidationError("report: csv output is not defined");
      qtlab::json checks = qtlab::json::array();
      std::string text;
      bool all_pass = true;
      auto record = [&](const std::string& name, bool pass, const qtlab::json& body) {
        checks.push_back({{"check", name}, {"pass", pass}, {"result", body}});
        text += std::string(pass ? "PASS " : "FAIL ") + name + "\n";
        all_pass = all_pass && pass;
      };
      qtlab::SweepConfig config{opt.budget(), opt.workers, nullptr};

      auto lin = qtlab::sweep(qtlab::Family::linear_tail, 300, 300, config);
      record("sweep linear 300x300: no cyclic monogenic trinomial",
             lin.hits.empty() && lin.skipped_unknown == 0, qtlab::to_json(lin));

      auto biq = qtlab::sweep(qtlab::Family::biquadratic, 300, 300, config);
      bool biq_ok = biq.hits.size() == 3 && biq.skipped_unknown == 0;
      record("sweep biquadratic 300x300: exactly the three known hits", biq_ok,
             qtlab::to_json(biq));

      auto cub = qtlab::sweep(qtlab::Family::cubic_tail, 200, 200, config);
      record("sweep cubic 200x200: no cyclic monogenic trinomial",
             cub.hits.empty() && cub.skipped_unknown == 0, qtlab::to_json(cub));

      record("index criterion vs Dedekind criterion, |c|,|d| <= 60, q <= 1e5", true,
             qtlab::to_json(qtlab::jks_vs_dedekind_check(60, 60)));
      record("resolvent identities, box 100", true, qtlab::to_json(qtlab::verify_identities(100)));
      record("parity chains, box 100", true,
             qtlab::to_json(qtlab::parity_observations_check(100)));
      record("mod-9 residue table", true, qtlab::mod9_table_to_json(qtlab::verify_mod9_table()));

      bool ec_all = true;
      qtlab::json ec_list = qtlab::json::array();
      for (unsigned k = 1; k <= 13; ++k) {
        qtlab::ECVerification v = qtlab::verify_ec_points(k, qtlab::bigint(2'000'000));
        ec_all = ec_all && v.match;
        ec_list.push_back(qtlab::to_json(v));
      }
      record("integral points on E_k, k = 1..13, |X| <= 2e6", ec_all, ec_list);

      record("Frobenius shapes: no transpositions for C4 classifications", true,
             qtlab::to_json(qtlab::frobenius_consistency_check(1000, 3000, 50, 200, opt.seed)));

      if (opt.format == "json") {
        qtlab::json out{{"checks", checks}, {"pass", all_pass}};
        emit(opt, out.dump(2));
      } else {
        emit(opt, text);
      }
      return all_pass ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
