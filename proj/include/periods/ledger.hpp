#ifndef PERIODS_LEDGER_HPP
#define PERIODS_LEDGER_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "periods/symtab.hpp"

namespace periods {

// Monomial in named period symbols with integer exponents.  Q^x-constants
// are discarded throughout the ledger, so a PeriodExpr is just its exponent
// vector; composition is exponent addition.
class PeriodExpr {
 public:
  PeriodExpr() = default;

  PeriodExpr& times(int symbol, long long exp) {
    if (exp != 0) {
      auto [it, fresh] = e_.emplace(symbol, exp);
      if (!fresh) {
        it->second += exp;
        if (it->second == 0) e_.erase(it);
      }
    }
    return *this;
  }

  PeriodExpr mul(const PeriodExpr& o) const {
    PeriodExpr r = *this;
    for (const auto& [s, k] : o.e_) r.times(s, k);
    return r;
  }

  PeriodExpr inv() const {
    PeriodExpr r;
    for (const auto& [s, k] : e_) r.e_.emplace(s, -k);
    return r;
  }

  PeriodExpr pow(long long k) const {
    PeriodExpr r;
    if (k != 0)
      for (const auto& [s, e] : e_) r.e_.emplace(s, e * k);
    return r;
  }

  long long exponent(int symbol) const {
    auto it = e_.find(symbol);
    return it == e_.end() ? 0 : it->second;
  }

  bool is_one() const { return e_.empty(); }
  const std::map<int, long long>& exponents() const { return e_; }
  bool operator==(const PeriodExpr& o) const { return e_ == o.e_; }

  std::string to_string(const SymbolTable& tab) const;

 private:
  std::map<int, long long> e_;
};

// A cited "~"-fact: the relation monomial is a unit in the stated context.
struct Axiom {
  std::string name;
  PeriodExpr relation;
  std::string unit_context;
  std::string anchor;  // nonempty citation label
};

Axiom make_axiom(std::string name, PeriodExpr relation, std::string unit_context,
                 std::string anchor);

struct LatticeCertificate {
  bool member = false;
  // target = sum coeff * axiom + unit part, as exponent vectors
  std::vector<std::pair<std::string, long long>> combination;  // axiom name -> coefficient
  std::vector<std::pair<std::string, long long>> unit_part;    // unit symbol -> exponent
  PeriodExpr residual;                                         // nonzero iff !member
  std::string to_string(const SymbolTable& tab) const;
};

// Decides whether `target` lies in the Z-lattice spanned by the axiom
// relations together with the unit symbols of `unit_context`.  Exact integer
// linear algebra (column Hermite-style elimination over Z); on success the
// certificate gives the integer combination, on failure a nonzero residual.
LatticeCertificate lattice_check(const PeriodExpr& target, const std::vector<Axiom>& axioms,
                                 const std::string& unit_context, const SymbolTable& tab);

// A claimed membership: the verdict is whether the target lies in the
// lattice spanned by the axiom relations and the context units.
struct Derivation {
  PeriodExpr target;
  std::vector<Axiom> axioms;
  std::string unit_context;

  LatticeCertificate check(const SymbolTable& tab) const {
    return lattice_check(target, axioms, unit_context, tab);
  }
};

}  // namespace periods

#endif
