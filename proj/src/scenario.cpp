#include "periods/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace periods {

using nlohmann::json;

WeightVector Scenario::mu() const {
  WeightVector out;
  out.rows = weights;
  out.a0 = a0;
  return out;
}

namespace {

long long get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer())
    throw ScenarioError("field '" + path + "': expected an integer");
  return j.get<long long>();
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& ex) {
    throw ScenarioError(std::string("invalid JSON: ") + ex.what());
  }
  if (!root.is_object()) throw ScenarioError("scenario root must be an object");

  Scenario sc;
  if (!root.contains("n")) throw ScenarioError("field 'n': missing");
  sc.n = static_cast<int>(get_int(root["n"], "n"));
  if (sc.n < 1) throw ScenarioError("field 'n': must be >= 1");
  sc.e = root.contains("e") ? static_cast<int>(get_int(root["e"], "e")) : 1;
  if (sc.e < 1) throw ScenarioError("field 'e': must be >= 1");
  sc.a0 = root.contains("a0") ? get_int(root["a0"], "a0") : 0;

  if (!root.contains("weights") || !root["weights"].is_array())
    throw ScenarioError("field 'weights': expected an array of per-place rows");
  {
    const auto& w = root["weights"];
    if (static_cast<int>(w.size()) != sc.e)
      throw ScenarioError("field 'weights': expected exactly e rows");
    for (size_t t = 0; t < w.size(); ++t) {
      std::ostringstream path;
      path << "weights[" << t << "]";
      if (!w[t].is_array() || static_cast<int>(w[t].size()) != sc.n)
        throw ScenarioError("field '" + path.str() + "': expected " + std::to_string(sc.n) +
                            " integers");
      std::vector<long long> row;
      for (size_t i = 0; i < w[t].size(); ++i) {
        std::ostringstream p2;
        p2 << path.str() << "[" << i << "]";
        row.push_back(get_int(w[t][i], p2.str()));
      }
      for (size_t i = 0; i + 1 < row.size(); ++i)
        if (row[i] < row[i + 1])
          throw ScenarioError("field '" + path.str() + "': row must be weakly decreasing");
      sc.weights.push_back(std::move(row));
    }
  }

  if (!root.contains("psi") || !root["psi"].is_object())
    throw ScenarioError("field 'psi': expected an object {pairs, weight}");
  {
    const auto& p = root["psi"];
    if (!p.contains("pairs") || !p["pairs"].is_array() ||
        static_cast<int>(p["pairs"].size()) != sc.e)
      throw ScenarioError("field 'psi.pairs': expected e pairs [m_tau, m_taubar]");
    sc.psi.name = "psi";
    for (size_t t = 0; t < p["pairs"].size(); ++t) {
      std::ostringstream path;
      path << "psi.pairs[" << t << "]";
      const auto& pr = p["pairs"][t];
      if (!pr.is_array() || pr.size() != 2)
        throw ScenarioError("field '" + path.str() + "': expected a pair of integers");
      sc.psi.infinity.pairs.emplace_back(get_int(pr[0], path.str() + "[0]"),
                                         get_int(pr[1], path.str() + "[1]"));
    }
    if (!p.contains("weight")) throw ScenarioError("field 'psi.weight': missing");
    sc.psi.weight = get_int(p["weight"], "psi.weight");
    try {
      sc.psi.validate();
    } catch (const std::exception& ex) {
      throw ScenarioError(std::string("field 'psi': ") + ex.what());
    }
    if (!is_critical_character(sc.psi))
      throw ScenarioError(
          "field 'psi': m_tau = m_taubar at some place; the twisting character must be critical "
          "(\"we call chi critical\")");
  }

  if (root.contains("shape")) {
    const auto& s = root["shape"];
    if (!s.is_array() || static_cast<int>(s.size()) != sc.e)
      throw ScenarioError("field 'shape': expected e pairs [r, s]");
    std::vector<std::pair<int, int>> places;
    for (size_t t = 0; t < s.size(); ++t) {
      std::ostringstream path;
      path << "shape[" << t << "]";
      if (!s[t].is_array() || s[t].size() != 2)
        throw ScenarioError("field '" + path.str() + "': expected a pair [r, s]");
      int r = static_cast<int>(get_int(s[t][0], path.str() + "[0]"));
      int ss = static_cast<int>(get_int(s[t][1], path.str() + "[1]"));
      if (r < 0 || ss < 0 || r + ss != sc.n)
        throw ScenarioError("field '" + path.str() + "': need r,s >= 0 with r+s=n");
      places.emplace_back(r, ss);
    }
    sc.shape = CompactShape(sc.n, std::move(places));
  }

  if (root.contains("options")) {
    const auto& o = root["options"];
    if (!o.is_object()) throw ScenarioError("field 'options': expected an object");
    if (o.contains("seed")) sc.options.seed = static_cast<unsigned long long>(get_int(o["seed"], "options.seed"));
    if (o.contains("deligne")) {
      if (!o["deligne"].is_boolean()) throw ScenarioError("field 'options.deligne': expected a boolean");
      sc.options.deligne = o["deligne"].get<bool>();
    }
    if (o.contains("dmax")) sc.options.dmax = static_cast<int>(get_int(o["dmax"], "options.dmax"));
    if (o.contains("jobs")) sc.options.jobs = static_cast<int>(get_int(o["jobs"], "options.jobs"));
  }
  if (const char* env = std::getenv("PERIOD_LEDGER_SEED")) {
    try {
      sc.options.seed = std::stoull(env);
    } catch (...) {
      throw ScenarioError("PERIOD_LEDGER_SEED: expected an unsigned integer");
    }
  }
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace periods
