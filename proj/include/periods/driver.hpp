#ifndef PERIODS_DRIVER_HPP
#define PERIODS_DRIVER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "periods/proof.hpp"
#include "periods/scenario.hpp"

namespace periods {

// Deterministic text reports for the scenario commands.  Identical scenario
// and seed produce byte-identical output.
std::string report_critical(const Scenario& sc);
std::string report_weyl(const Scenario& sc);

// Parameter sweeps behind `verify`.
std::vector<VerifyReport> sweep_duality(int dmax);
std::vector<VerifyReport> sweep_cplusminus(int dmax);
std::vector<VerifyReport> sweep_thmfact(int dmax);

// Seeded random main-theorem/prediction derivations with their negative
// controls (criterion: dropped axiom and perturbed discriminant exponent
// must leave a nonzero residual).
struct LedgerSweepResult {
  std::vector<VerifyReport> reports;
  int tuples = 0;
  int negative_controls = 0;
  int negative_failures = 0;  // controls that came back derivable (bad)
  bool pass = false;
};
LedgerSweepResult sweep_ledger(int count, std::uint64_t seed);

// Critical-set engine vs Gamma-pole oracle.
struct OracleSweepResult {
  long long instances = 0;
  long long mismatches = 0;
  bool pass() const { return mismatches == 0 && instances > 0; }
};
OracleSweepResult oracle_exhaustive(int dmax, long long pmin, long long pmax, long long tmax);
OracleSweepResult oracle_random(int count, std::uint64_t seed, int dmax);

// Exponent bookkeeping identities over a small grid plus seeded tuples.
bool exponent_grid_check(std::uint64_t seed);

}  // namespace periods

#endif
