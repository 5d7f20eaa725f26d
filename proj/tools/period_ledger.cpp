// Batch front end: reads JSON scenarios, runs the combinatorial and ledger
// engines, and emits deterministic reports.  Exit codes: 0 all checks pass,
// 1 a verification failed, 2 input error.

#include <atomic>
#include <functional>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "periods/driver.hpp"

namespace {

using periods::VerifyReport;

nlohmann::json report_json(const VerifyReport& r, bool timings) {
  nlohmann::json j;
  j["claim"] = r.claim_id;
  j["params"] = r.params;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["certificate"] = r.certificate;
  j["anchor"] = r.anchor;
  j["steps"] = r.steps;
  if (timings) j["wall_ms"] = r.wall_ms;
  return j;
}

void print_reports(const std::vector<VerifyReport>& reports, bool as_json, bool timings) {
  if (as_json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(report_json(r, timings));
    std::cout << arr.dump(2) << "\n";
    return;
  }
  for (const auto& r : reports) {
    std::cout << r.line(timings) << "\n";
    for (const auto& s : r.steps) std::cout << "    " << s << "\n";
  }
}

// Runs independent tasks over a small pool; results land in input order.
std::vector<VerifyReport> run_jobs(const std::vector<std::function<VerifyReport()>>& tasks,
                                   int jobs) {
  std::vector<VerifyReport> out(tasks.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
    return out;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) out[i] = tasks[i]();
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact period-ledger toolkit for unitary-group critical values"};
  app.require_subcommand(1);

  std::string scenario_path;
  bool as_json = false, timings = false;

  auto* critical = app.add_subcommand("critical", "critical-set report for a scenario");
  critical->add_option("scenario", scenario_path, "scenario JSON file")->required();
  critical->add_flag("--json", as_json, "structured output");

  auto* weyl = app.add_subcommand("weyl", "Weyl component table for a scenario");
  weyl->add_option("scenario", scenario_path, "scenario JSON file")->required();
  weyl->add_flag("--json", as_json, "structured output");

  auto* verify = app.add_subcommand("verify", "verification sweeps");
  std::string kind;
  int dmax = 4, vd = -1, vr = -1, vn = 3, ve = 1, count = 50, jobs = 1;
  long long vm = -1, vw = 1;
  unsigned long long seed = 42;
  bool no_deligne = false;
  verify->add_option("kind", kind, "duality|cplusminus|thmfact|maintheorem|prediction|tate|ledger")
      ->required();
  verify->add_option("--dmax", dmax, "rank bound for sweeps");
  verify->add_option("--d", vd, "single rank");
  verify->add_option("--r", vr, "signature parameter for thmfact");
  verify->add_option("--n", vn, "group rank n");
  verify->add_option("--e", ve, "number of places");
  verify->add_option("--m", vm, "twist integer m (default n+2)");
  verify->add_option("--w", vw, "character weight w");
  verify->add_option("--count", count, "number of seeded ledger tuples");
  verify->add_option("--seed", seed, "random seed (PERIOD_LEDGER_SEED overrides)");
  verify->add_option("--jobs", jobs, "parallel sweep workers");
  verify->add_flag("--json", as_json, "structured output");
  verify->add_flag("--timings", timings, "include wall-clock times (not byte-stable)");
  verify->add_flag("--no-deligne", no_deligne, "report the residual without the conjecture");

  CLI11_PARSE(app, argc, argv);

  if (const char* env = std::getenv("PERIOD_LEDGER_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (...) {
      std::cerr << "error: PERIOD_LEDGER_SEED must be an unsigned integer\n";
      return 2;
    }
  }

  try {
    if (critical->parsed()) {
      periods::Scenario sc = periods::load_scenario_file(scenario_path);
      std::string text = periods::report_critical(sc);
      if (as_json) {
        nlohmann::json j;
        j["report"] = text;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << text;
      }
      return text.find("MISMATCH") == std::string::npos ? 0 : 1;
    }
    if (weyl->parsed()) {
      periods::Scenario sc = periods::load_scenario_file(scenario_path);
      std::string text = periods::report_weyl(sc);
      if (as_json) {
        nlohmann::json j;
        j["report"] = text;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << text;
      }
      return 0;
    }

    // verify sweeps
    const int rank_cap = kind == "duality" ? 64 : 12;  // determinant engines are sized for d <= 12
    if (dmax > rank_cap || vd > rank_cap) {
      std::cerr << "input error: rank " << std::max(dmax, vd) << " unsupported for '" << kind
                << "' (cap " << rank_cap << ")\n";
      return 2;
    }
    std::vector<std::function<VerifyReport()>> tasks;
    if (kind == "duality") {
      for (int d = 1; d <= (vd > 0 ? vd : dmax); ++d) {
        if (vd > 0 && d != vd) continue;
        for (int r = 0; 2 * r < d; ++r)
          tasks.push_back([d, r] { return periods::verify_duality_lemma(d, r, d - r); });
      }
    } else if (kind == "cplusminus") {
      for (int d = (vd > 0 ? vd : 1); d <= (vd > 0 ? vd : dmax); ++d)
        for (const auto& [dp, eps] : periods::admissible_splits(d))
          for (bool a_trivial : {true, false})
            for (long long w : {0LL, 1LL})
              tasks.push_back([d, dp, eps, a_trivial, w] {
                return periods::verify_cplus_cminus(d, dp, eps, a_trivial, w);
              });
    } else if (kind == "thmfact") {
      for (int d = (vd > 0 ? vd : 1); d <= (vd > 0 ? vd : dmax); ++d)
        for (const auto& [dp, eps] : periods::admissible_splits(d))
          for (int r = (vr >= 0 ? vr : d / 2 + 1); r <= (vr >= 0 ? vr : d); ++r) {
            if (vr >= 0 && r != vr) continue;
            for (long long w : {1LL, 2LL})
              tasks.push_back(
                  [d, dp, eps, r, w] { return periods::verify_thmfact(d, dp, eps, r, w, 3); });
          }
    } else if (kind == "maintheorem" || kind == "prediction" || kind == "tate") {
      std::vector<std::pair<int, int>> places;
      for (int t = 0; t < ve; ++t) places.emplace_back(vn - 1 > 0 ? vn - 1 : vn, vn - 1 > 0 ? 1 : 0);
      periods::CompactShape shape(vn, places);
      long long m = vm > 0 ? vm : vn + 2;
      if (kind == "maintheorem") {
        tasks.push_back([=] { return periods::derive_maintheorem(vn, ve, m, 0, shape); });
      } else if (kind == "prediction") {
        periods::PredictionOptions opts;
        opts.deligne_on = !no_deligne;
        tasks.push_back([=] { return periods::derive_prediction(vn, ve, vw, m, shape, opts); });
      } else {
        tasks.push_back([=] { return periods::check_tate_equivalence(vn, ve, shape); });
      }
    } else if (kind == "ledger") {
      auto sweep = periods::sweep_ledger(count, seed);
      print_reports(sweep.reports, as_json, timings);
      if (!as_json)
        std::cout << (sweep.pass ? "ALL PASS" : "FAILURES PRESENT") << " (" << sweep.tuples
                  << " tuples, " << sweep.negative_controls << " negative controls, "
                  << sweep.negative_failures << " controls unexpectedly derivable)\n";
      return sweep.pass ? 0 : 1;
    } else {
      std::cerr << "error: unknown verification kind '" << kind << "'\n";
      return 2;
    }

    std::vector<VerifyReport> reports = run_jobs(tasks, jobs);
    print_reports(reports, as_json, timings);
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;
    if (!as_json) std::cout << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << " (" << reports.size()
                            << " checks)\n";
    return all_pass ? 0 : 1;
  } catch (const periods::ScenarioError& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return 2;
  } catch (const std::domain_error& ex) {
    std::cerr << "precondition error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
