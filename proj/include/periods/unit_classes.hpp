#ifndef PERIODS_UNIT_CLASSES_HPP
#define PERIODS_UNIT_CLASSES_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace periods {

// Canonical unit-class labels used throughout the ledger.  A label names a
// coefficient ring in which a tagged symbol is invertible; "x ~ y in C"
// means x/y lies in the group of C-units.
namespace unit_class {
inline const std::string RATIONAL = "RATIONAL";
inline const std::string E_TENSOR_K = "E_TENSOR_K";        // (E (x) K)^x via a fixed sigma
inline const std::string E_TENSOR_KGAL = "E_TENSOR_KGAL";  // (E (x) K')^x, K' Galois closure of K
inline const std::string K_GALOIS = "K_GALOIS";
inline const std::string L_GALOIS = "L_GALOIS";
inline const std::string E_PSI_E = "E_PSI_E";              // E(psi)E, no Galois closure of L
inline const std::string E_PSI_E_LGAL = "E_PSI_E_LGAL";    // E(psi)EL'
inline const std::string TRANSCENDENTAL = "TRANSCENDENTAL";
}  // namespace unit_class

// Containment DAG on unit-class labels.  An edge sub -> super declares that
// every sub-unit is also a super-unit.  Containment queries are
// reflexive-transitive reachability.
class ClassDag {
 public:
  void add_class(const std::string& label) {
    if (label.empty()) throw std::invalid_argument("empty class label");
    edges_.emplace(label, std::set<std::string>{});
  }

  bool has_class(const std::string& label) const { return edges_.count(label) != 0; }

  // Throws if either label is unknown or if the edge would create a cycle.
  void add_containment(const std::string& sub, const std::string& super) {
    if (!has_class(sub) || !has_class(super))
      throw std::invalid_argument("unknown class label in containment edge");
    if (sub == super) return;
    if (contains(super, sub))
      throw std::invalid_argument("containment edge " + sub + " -> " + super + " creates a cycle");
    edges_[sub].insert(super);
  }

  // True iff every sub-unit is a super-unit.
  bool contains(const std::string& sub, const std::string& super) const {
    if (sub == super) return has_class(sub);
    auto it = edges_.find(sub);
    if (it == edges_.end()) return false;
    std::set<std::string> seen{sub};
    std::vector<std::string> stack(it->second.begin(), it->second.end());
    while (!stack.empty()) {
      std::string cur = stack.back();
      stack.pop_back();
      if (cur == super) return true;
      if (!seen.insert(cur).second) continue;
      auto jt = edges_.find(cur);
      if (jt != edges_.end())
        for (const auto& nxt : jt->second) stack.push_back(nxt);
    }
    return false;
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : edges_) out.push_back(k);
    return out;
  }

  // The configuration used by every engine in this project.
  static ClassDag standard() {
    using namespace unit_class;
    ClassDag dag;
    for (const auto& l : {RATIONAL, E_TENSOR_K, E_TENSOR_KGAL, K_GALOIS, L_GALOIS,
                          E_PSI_E, E_PSI_E_LGAL, TRANSCENDENTAL}) {
      dag.add_class(l);
    }
    dag.add_containment(RATIONAL, E_TENSOR_K);
    dag.add_containment(RATIONAL, K_GALOIS);
    dag.add_containment(RATIONAL, E_PSI_E);
    dag.add_containment(E_TENSOR_K, E_TENSOR_KGAL);
    dag.add_containment(K_GALOIS, E_TENSOR_KGAL);
    dag.add_containment(K_GALOIS, L_GALOIS);
    dag.add_containment(L_GALOIS, E_PSI_E_LGAL);
    dag.add_containment(E_TENSOR_KGAL, E_PSI_E_LGAL);
    dag.add_containment(E_PSI_E, E_PSI_E_LGAL);
    return dag;
  }

 private:
  std::map<std::string, std::set<std::string>> edges_;
};

}  // namespace periods

#endif
