// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: acceptance <golden-dir> <scenario-dir>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "periods/driver.hpp"

using namespace periods;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << idx << ": " << what << " -- "
            << detail << "\n";
  if (!pass) ++failures;
}

double run_ms(const std::function<bool(std::string&)>& body, bool& pass, std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  pass = body(detail);
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string golden_dir = argc > 1 ? argv[1] : "tests/golden";
  const std::string scenario_dir = argc > 2 ? argv[2] : "scenarios";

  // 1. c+ c- factorization across every admissible tuple, d <= 5, < 10 s
  {
    bool pass;
    std::string detail;
    double ms = run_ms(
        [&](std::string& d) {
          auto reports = sweep_cplusminus(5);
          int n_pass = 0;
          for (const auto& r : reports) n_pass += r.pass ? 1 : 0;
          std::ostringstream os;
          os << n_pass << "/" << reports.size() << " tuples";
          d = os.str();
          return n_pass == static_cast<int>(reports.size());
        },
        pass, detail);
    std::ostringstream os;
    os << detail << ", " << static_cast<long long>(ms) << " ms";
    report(1, "propc+c- determinant verification (d <= 5)", pass && ms < 10000.0, os.str());
  }

  // 2. thmfact across every admissible tuple, d <= 4, < 60 s
  {
    bool pass;
    std::string detail;
    double ms = run_ms(
        [&](std::string& d) {
          auto reports = sweep_thmfact(4);
          int n_pass = 0;
          for (const auto& r : reports) n_pass += r.pass ? 1 : 0;
          std::ostringstream os;
          os << n_pass << "/" << reports.size() << " tuples";
          d = os.str();
          return n_pass == static_cast<int>(reports.size());
        },
        pass, detail);
    std::ostringstream os;
    os << detail << ", " << static_cast<long long>(ms) << " ms";
    report(2, "thmfact determinant verification (d <= 4)", pass && ms < 60000.0, os.str());
  }

  // 3. duality lemma, d <= 8, < 1 s
  {
    bool pass;
    std::string detail;
    double ms = run_ms(
        [&](std::string& d) {
          auto reports = sweep_duality(8);
          int n_pass = 0;
          for (const auto& r : reports) n_pass += r.pass ? 1 : 0;
          std::ostringstream os;
          os << n_pass << "/" << reports.size() << " pairs";
          d = os.str();
          return n_pass == static_cast<int>(reports.size());
        },
        pass, detail);
    std::ostringstream os;
    os << detail << ", " << static_cast<long long>(ms) << " ms";
    report(3, "quadratic-period duality (d <= 8)", pass && ms < 1000.0, os.str());
  }

  // 4. critical-set engine == Gamma-pole oracle
  {
    OracleSweepResult grid = oracle_exhaustive(4, -6, 6, 12);
    OracleSweepResult rnd = oracle_random(200, 20250810, 6);
    std::ostringstream os;
    os << grid.instances << " grid + " << rnd.instances << " random instances, "
       << grid.mismatches + rnd.mismatches << " mismatches";
    report(4, "critical-set engine vs oracle", grid.pass() && rnd.pass(), os.str());
  }

  // 5. Weyl suite
  {
    bool ok = true;
    std::ostringstream os;
    long long checked = 0;
    for (int n = 1; n <= 5 && ok; ++n)
      for (int e = 1; e <= 2 && ok; ++e) {
        std::vector<int> r(static_cast<size_t>(e), 0);
        while (ok) {
          std::vector<std::pair<int, int>> places;
          long long expect = 1;
          for (int t = 0; t < e; ++t) {
            int rt = r[static_cast<size_t>(t)];
            places.emplace_back(rt, n - rt);
            long long binom = 1;
            for (int i = 1; i <= rt; ++i) binom = binom * (n - rt + i) / i;
            expect *= binom;
          }
          CompactShape shape(n, places);
          auto w1 = enumerate_W1(shape);
          ok = ok && static_cast<long long>(w1.size()) == expect;
          const int d = shape.dim();
          for (const auto& w : w1) {
            WeylElem wf = flat(w, shape);
            ok = ok && flat(wf, shape) == w && length(wf) == d - length(w);
          }
          ++checked;
          int t = 0;
          while (t < e && ++r[static_cast<size_t>(t)] > n) {
            r[static_cast<size_t>(t)] = 0;
            ++t;
          }
          if (t == e) break;
        }
      }
    // flat compatibility and dominance on seeded self-conjugate weights
    std::mt19937_64 rng(814);
    for (int trial = 0; trial < 100 && ok; ++trial) {
      int n = 2 + static_cast<int>(rng() % 3);
      int rt = static_cast<int>(rng() % (n + 1));
      CompactShape shape(n, {{rt, n - rt}});
      WeightVector mu;
      std::vector<long long> row(static_cast<size_t>(n), 0);
      for (int i = 0; i < n / 2; ++i) {
        row[static_cast<size_t>(i)] = (n / 2 - i) * 10 + static_cast<long long>(rng() % 7);
        row[static_cast<size_t>(n - 1 - i)] = -row[static_cast<size_t>(i)];
      }
      mu.rows = {row};
      mu.a0 = static_cast<long long>(rng() % 5) - 2;
      ok = ok && conj_weight(mu) == mu;
      for (const auto& w : enumerate_W1(shape)) {
        WeightVector lam = dot_action(w, mu, shape);
        ok = ok && is_dominant(lam, shape, Dominance::compact);
        ok = ok && xi(lam) == xi(mu);
        ok = ok && lambda_flat(lam, shape) == dot_action(flat(w, shape), mu, shape);
      }
    }
    os << checked << " shapes exhaustive, 100 seeded weights";
    report(5, "Weyl suite", ok, os.str());
  }

  // 6. worked scenario golden file
  {
    bool ok = false;
    std::string detail;
    try {
      Scenario sc = load_scenario_file(scenario_dir + "/worked_n3.json");
      std::string text = report_critical(sc);
      std::string golden = slurp(golden_dir + "/worked_n3.out");
      ok = !golden.empty() && text == golden;
      detail = ok ? "byte-identical"
                  : (golden.empty() ? "golden file missing" : "report differs from golden file");
      bool content = text.find("r=2 s=1") != std::string::npos &&
                     text.find("motivic m: {1,2}") != std::string::npos &&
                     text.find("admissible m: {2}") != std::string::npos &&
                     text.find("-> ok") != std::string::npos;
      ok = ok && content;
      if (!content) detail += "; expected invariants missing";
    } catch (const std::exception& ex) {
      detail = ex.what();
    }
    report(6, "worked n=3 scenario golden file", ok, detail);
  }

  // 7. ledger derivations with negative controls, < 5 s
  {
    bool pass;
    std::string detail;
    double ms = run_ms(
        [&](std::string& d) {
          LedgerSweepResult res = sweep_ledger(50, 20250810);
          std::ostringstream os;
          os << res.tuples << " tuples, " << res.negative_controls << " controls, "
             << res.negative_failures << " controls unexpectedly derivable";
          d = os.str();
          return res.pass && res.negative_failures == 0;
        },
        pass, detail);
    std::ostringstream os;
    os << detail << ", " << static_cast<long long>(ms) << " ms";
    report(7, "ledger derivations + negative controls", pass && ms < 5000.0, os.str());
  }

  // 8. exponent reconciliation
  {
    bool ok = exponent_grid_check(20250810);
    report(8, "exponent reconciliation identities", ok, "grid + 200 seeded tuples");
  }

  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass"
                              : "ACCEPTANCE: failures present")
            << "\n";
  return failures == 0 ? 0 : 1;
}
