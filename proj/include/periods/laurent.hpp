#ifndef PERIODS_LAURENT_HPP
#define PERIODS_LAURENT_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "periods/symtab.hpp"

namespace periods {

using Rational = mpq_class;

// Exponent vector with finite support: (symbol id, exponent) pairs, ids
// strictly ascending, exponents nonzero.
using ExpVec = std::vector<std::pair<int, int>>;

// Total monomial order: lexicographic on symbol-table insertion order
// (earlier symbols weigh more).  Translation-invariant, hence leading-term
// extraction is compatible with monomial multiplication.
int compare_exps(const ExpVec& a, const ExpVec& b);

ExpVec mul_exps(const ExpVec& a, const ExpVec& b);
ExpVec inv_exps(const ExpVec& a);

struct Monomial {
  Rational coeff;  // nonzero when stored inside a polynomial
  ExpVec exps;     // ids strictly ascending, exponents nonzero

  Monomial() : coeff(0) {}
  Monomial(Rational c, ExpVec e) : coeff(std::move(c)), exps(std::move(e)) {
    std::erase_if(exps, [](const auto& p) { return p.second == 0; });
  }
};

Monomial mul_mono(const Monomial& a, const Monomial& b);
Monomial inv_mono(const Monomial& a);  // requires nonzero coefficient

// Sparse Laurent polynomial over Q: canonical term list, strictly
// descending in the monomial order, no zero coefficients, no duplicate
// exponent vectors.  The empty list is zero.  Immutable value type.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c);
  explicit LaurentPoly(long c);
  static LaurentPoly symbol(int id, int exp = 1, const Rational& c = 1);
  static LaurentPoly monomial(Monomial m);
  static LaurentPoly from_terms(std::vector<Monomial> terms);  // normalizes

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  const std::vector<Monomial>& terms() const { return terms_; }
  const Monomial& leading() const;  // requires nonzero

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly scaled(const Monomial& m) const;  // *this times a monomial

 private:
  std::vector<Monomial> terms_;
};

LaurentPoly pow(const LaurentPoly& p, unsigned k);

// Exact determinant by cofactor expansion with memoization over column
// subsets; 0x0 input yields 1.  Throws std::invalid_argument on non-square
// input.  Intended for n <= ~12.
LaurentPoly det(const std::vector<std::vector<LaurentPoly>>& m);

struct UnitQuotient {
  Rational coeff;  // rational part of lhs/rhs
  ExpVec unit;     // monomial part of lhs/rhs
};

// Quotient lhs/rhs when it is a single monomial times a rational, found by
// dividing leading terms and verified by exact multiplication.  No unit
// filtering.  Returns nullopt when lhs is zero or not a monomial multiple.
// Throws std::domain_error when rhs is zero.
std::optional<UnitQuotient> proportional_quotient(const LaurentPoly& lhs, const LaurentPoly& rhs);

// Same, but additionally requires every symbol of the quotient monomial to
// be a unit for `context` per its table tags.
std::optional<UnitQuotient> proportional_up_to_units(const LaurentPoly& lhs,
                                                     const LaurentPoly& rhs,
                                                     const SymbolTable& tab,
                                                     const std::string& context);

// Rational function with Laurent-polynomial numerator and denominator.  A
// monomial denominator is folded into the numerator on construction (it is
// a unit of the Laurent ring); otherwise the pair is kept unreduced -- no
// multivariate gcd is attempted.
class RatFunc {
 public:
  RatFunc() : num_(Rational(0)), den_(Rational(1)) {}
  explicit RatFunc(LaurentPoly num) : num_(std::move(num)), den_(Rational(1)) {}
  RatFunc(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool reduced() const { return den_.is_one(); }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator*(const RatFunc& o) const;
  RatFunc inverse() const;  // throws std::domain_error when zero
  bool equals(const RatFunc& o) const;  // cross-multiplied exact equality

 private:
  LaurentPoly num_, den_;
};

// a/b ~ c/d up to units iff a*d ~ c*b.
std::optional<UnitQuotient> proportional_up_to_units(const RatFunc& lhs, const RatFunc& rhs,
                                                     const SymbolTable& tab,
                                                     const std::string& context);

// Canonical serialization: terms in monomial order, factors in symbol-table
// order, e.g. "3*u^2*t^-1 + 1/2".
std::string to_string(const Monomial& m, const SymbolTable& tab);
std::string to_string(const LaurentPoly& p, const SymbolTable& tab);
std::string to_string(const RatFunc& f, const SymbolTable& tab);

}  // namespace periods

#endif
