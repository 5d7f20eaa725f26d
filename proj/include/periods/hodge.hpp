#ifndef PERIODS_HODGE_HPP
#define PERIODS_HODGE_HPP

#include <set>
#include <utility>
#include <vector>

#include "periods/laurent.hpp"
#include "periods/ledger.hpp"

namespace periods {

// Per-embedding strictly decreasing Hodge numbers of a regular structure.
struct HodgeProfile {
  int d = 0;
  long long w = 0;
  std::vector<std::vector<long long>> p;  // one strictly decreasing vector per sigma

  void validate() const;
  int places() const { return static_cast<int>(p.size()); }
};

// Frobenius scalars of a regular special instance: lambda_j with
// lambda_j * lambda_{d+1-j} = 1 and middle value epsilon for odd rank.
struct FrobeniusData {
  int d = 0;
  int epsilon = +1;
  std::vector<int> lambda_syms;  // ids of the free lambda_j, j = 1..floor(d/2)
};

// Generic symbolic regular special A-polarized instance of rank d, built
// from the free coordinates of its comparison matrix: free transcendentals
// a^{+-}_{ij} on the leading ceil(d/2) columns, the remaining columns
// determined by the Frobenius relation, unit scalars mu_j, and the Artin
// determinant deltaA for non-trivial A.  All symbols are registered in the
// supplied table; values are immutable after construction.
class PolarizedInstance {
 public:
  PolarizedInstance(int d, int d_plus, int epsilon, bool a_trivial, SymbolTable& tab,
                    const std::string& prefix = "");

  int d() const { return d_; }
  int d_plus() const { return d_plus_; }
  int d_minus() const { return d_ - d_plus_; }
  int epsilon() const { return epsilon_; }
  bool a_trivial() const { return a_trivial_; }
  const SymbolTable& table() const { return *tab_; }

  // lambda_j as a monomial in the free lambda symbols (epsilon sign for the
  // middle index of odd rank), 1-based j.
  Monomial lambda_mono(int j) const;
  int lambda_sym(int j) const;  // free symbol id, 1 <= j <= floor(d/2)
  int mu_sym(int j) const;      // 1 <= j <= d
  int deltaA_sym() const;       // -1 when A is trivial

  // Entry of the comparison coordinate matrix: sign = +1/-1 selects the
  // basis block, i is the row within the block (1..d^{+-}), j the column
  // (1..d).  Columns past ceil(d/2) are expanded via the Frobenius
  // relation; the middle column of odd rank has a zero block fixed by
  // epsilon.
  LaurentPoly a_entry(int sign, int i, int j) const;

  // Full d x d matrix, d^+ plus-rows stacked over d^- minus-rows.
  std::vector<std::vector<LaurentPoly>> p_tilde() const;
  // Leading d^{+-} x d^{+-} block of the sign rows.
  std::vector<std::vector<LaurentPoly>> p_tilde_block(int sign) const;

  FrobeniusData frobenius() const;

 private:
  int d_, d_plus_, epsilon_;
  bool a_trivial_;
  SymbolTable* tab_;
  std::vector<std::vector<int>> a_plus_, a_minus_;  // free symbol ids, -1 = forced zero
  std::vector<int> lambda_syms_, mu_syms_;
  int deltaA_sym_ = -1;
};

// Validates the (d, d_plus, epsilon) combination for a regular special
// polarized instance and constructs it.  Throws std::domain_error when the
// parity/epsilon combination is inconsistent.
PolarizedInstance build_generic_instance(int d, int d_plus, int epsilon, bool a_trivial,
                                         SymbolTable& tab, const std::string& prefix = "");

// Admissible (d_plus, epsilon) combinations for rank d.
std::vector<std::pair<int, int>> admissible_splits(int d);

// delta = det(P~)^{-1}.  Throws std::domain_error when the symbolic
// determinant is identically zero (degenerate instance).
RatFunc delta_of(const PolarizedInstance& inst);

// det of the leading d^{+-} block; empty determinant is 1.
LaurentPoly c_dual_pm(const PolarizedInstance& inst, int sign);

// Q_j = lambda_j * mu_j * deltaA^{-1} as a ledger monomial over the
// instance symbols (1-based j; middle lambda of odd rank contributes only
// its rational sign, which the ledger discards).
PeriodExpr quadratic_period(const PolarizedInstance& inst, int j);
Monomial quadratic_period_mono(const PolarizedInstance& inst, int j);

// Tate/Artin twist rules as ledger axioms for rank d and split d_plus.
std::vector<Axiom> twist_rules(int d, int d_plus, long long t, int artin_eps, SymbolTable& tab);

// Hodge-Riemann support check for one embedding: the pairing support must
// avoid p_i + p_j > w and contain the full anti-diagonal.
bool check_hodge_riemann(const std::vector<long long>& p, long long w,
                         const std::set<std::pair<int, int>>& support);
bool check_hodge_riemann(const HodgeProfile& profile,
                         const std::set<std::pair<int, int>>& support);

// Yoshida factorizations of c^{+-} and delta through the places, as ledger
// axioms over {c/delta global, per-sigma c/delta, D_K^(1/2)}.
std::vector<Axiom> yoshida_axioms(int d, int d_plus, int e, SymbolTable& tab);

}  // namespace periods

#endif
