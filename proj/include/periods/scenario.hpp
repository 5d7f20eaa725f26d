#ifndef PERIODS_SCENARIO_HPP
#define PERIODS_SCENARIO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "periods/hecke.hpp"
#include "periods/weights.hpp"

namespace periods {

// Input-schema violation; the message carries the offending field path.
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ScenarioOptions {
  unsigned long long seed = 42;
  bool deligne = true;
  int dmax = 4;
  int jobs = 1;
};

struct Scenario {
  int n = 0;
  int e = 1;
  long long a0 = 0;
  std::vector<std::vector<long long>> weights;  // per-sigma rows, weakly decreasing
  HeckeCharacterData psi;
  std::optional<CompactShape> shape;
  ScenarioOptions options;

  WeightVector mu() const;
};

Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario_file(const std::string& path);

}  // namespace periods

#endif
