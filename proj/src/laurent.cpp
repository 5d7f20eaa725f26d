#include "periods/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace periods {

int compare_exps(const ExpVec& a, const ExpVec& b) {
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int ida = i < a.size() ? a[i].first : -1;
    int idb = j < b.size() ? b[j].first : -1;
    int id;
    if (ida < 0)
      id = idb;
    else if (idb < 0)
      id = ida;
    else
      id = std::min(ida, idb);
    int ea = (i < a.size() && a[i].first == id) ? a[i].second : 0;
    int eb = (j < b.size() && b[j].first == id) ? b[j].second : 0;
    if (ea != eb) return ea > eb ? 1 : -1;
    if (i < a.size() && a[i].first == id) ++i;
    if (j < b.size() && b[j].first == id) ++j;
  }
  return 0;
}

ExpVec mul_exps(const ExpVec& a, const ExpVec& b) {
  ExpVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else if (a[i].first > b[j].first) {
      out.push_back(b[j++]);
    } else {
      int e = a[i].second + b[j].second;
      if (e != 0) out.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return out;
}

ExpVec inv_exps(const ExpVec& a) {
  ExpVec out = a;
  for (auto& [id, e] : out) e = -e;
  return out;
}

Monomial mul_mono(const Monomial& a, const Monomial& b) {
  return Monomial(a.coeff * b.coeff, mul_exps(a.exps, b.exps));
}

Monomial inv_mono(const Monomial& a) {
  if (a.coeff == 0) throw std::domain_error("inverse of zero monomial");
  return Monomial(1 / a.coeff, inv_exps(a.exps));
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.push_back(Monomial(c, {}));
}

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

LaurentPoly LaurentPoly::symbol(int id, int exp, const Rational& c) {
  if (id < 0) throw std::invalid_argument("negative symbol id");
  LaurentPoly p;
  if (c == 0) return p;
  ExpVec e;
  if (exp != 0) e.emplace_back(id, exp);
  p.terms_.push_back(Monomial(c, std::move(e)));
  return p;
}

LaurentPoly LaurentPoly::monomial(Monomial m) {
  LaurentPoly p;
  if (m.coeff != 0) p.terms_.push_back(std::move(m));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Monomial& a, const Monomial& b) { return compare_exps(a.exps, b.exps) > 0; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (t.coeff == 0) continue;
    if (!p.terms_.empty() && compare_exps(p.terms_.back().exps, t.exps) == 0) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exps.empty() && terms_[0].coeff == 1;
}

const Monomial& LaurentPoly::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.front();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly p;
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = compare_exps(terms_[i].exps, o.terms_[j].exps);
    if (c > 0) {
      p.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      p.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) p.terms_.push_back(Monomial(s, terms_[i].exps));
      ++i;
      ++j;
    }
  }
  while (i < terms_.size()) p.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) p.terms_.push_back(o.terms_[j++]);
  return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  std::vector<Monomial> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back(mul_mono(a, b));
  return from_terms(std::move(prod));
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff != o.terms_[i].coeff) return false;
    if (compare_exps(terms_[i].exps, o.terms_[i].exps) != 0) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::scaled(const Monomial& m) const {
  if (m.coeff == 0) return LaurentPoly();
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(mul_mono(t, m));
  return p;  // order preserved: monomial scaling is order-preserving
}

LaurentPoly pow(const LaurentPoly& p, unsigned k) {
  LaurentPoly r{Rational(1)};
  LaurentPoly base = p;
  while (k) {
    if (k & 1u) r = r * base;
    base = base * base;
    k >>= 1u;
  }
  return r;
}

LaurentPoly det(const std::vector<std::vector<LaurentPoly>>& m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det: matrix is not square");
  if (n == 0) return LaurentPoly{Rational(1)};
  if (n > 31) throw std::invalid_argument("det: dimension too large");

  // minor over the last popcount(mask) rows and the columns in mask
  std::map<uint32_t, LaurentPoly> memo;
  const uint32_t full = (n == 31) ? 0x7fffffffu : ((1u << n) - 1u);

  auto rec = [&](auto&& self, uint32_t mask) -> LaurentPoly {
    if (mask == 0) return LaurentPoly{Rational(1)};
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    size_t row = n - static_cast<size_t>(__builtin_popcount(mask));
    LaurentPoly acc;
    int sign = 1;
    for (size_t col = 0; col < n; ++col) {
      if (!(mask & (1u << col))) continue;
      if (!m[row][col].is_zero()) {
        LaurentPoly sub = self(self, mask & ~(1u << col));
        LaurentPoly contrib = m[row][col] * sub;
        acc = (sign > 0) ? acc + contrib : acc - contrib;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, full);
}

std::optional<UnitQuotient> proportional_quotient(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (rhs.is_zero()) throw std::domain_error("proportional: rhs is zero");
  if (lhs.is_zero()) return std::nullopt;
  Monomial q(lhs.leading().coeff / rhs.leading().coeff,
             mul_exps(lhs.leading().exps, inv_exps(rhs.leading().exps)));
  if (rhs.scaled(q) != lhs) return std::nullopt;
  return UnitQuotient{q.coeff, q.exps};
}

std::optional<UnitQuotient> proportional_up_to_units(const LaurentPoly& lhs,
                                                     const LaurentPoly& rhs,
                                                     const SymbolTable& tab,
                                                     const std::string& context) {
  auto q = proportional_quotient(lhs, rhs);
  if (!q) return std::nullopt;
  for (const auto& [id, e] : q->unit)
    if (!tab.is_unit(id, context)) return std::nullopt;
  return q;
}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (den_.is_monomial()) {
    num_ = num_.scaled(inv_mono(den_.leading()));
    den_ = LaurentPoly{Rational(1)};
  }
}

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

bool RatFunc::equals(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }

std::optional<UnitQuotient> proportional_up_to_units(const RatFunc& lhs, const RatFunc& rhs,
                                                     const SymbolTable& tab,
                                                     const std::string& context) {
  if (rhs.is_zero()) throw std::domain_error("proportional: rhs is zero");
  return proportional_up_to_units(lhs.num() * rhs.den(), rhs.num() * lhs.den(), tab, context);
}

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string term_str(const Monomial& m, const SymbolTable& tab, bool abs_coeff) {
  Rational c = abs_coeff ? Rational(abs(m.coeff)) : m.coeff;
  std::ostringstream os;
  bool printed = false;
  if (m.exps.empty() || c != 1) {
    os << rational_str(c);
    printed = true;
  }
  for (const auto& [id, e] : m.exps) {
    if (printed) os << "*";
    os << tab.name(id);
    if (e != 1) os << "^" << e;
    printed = true;
  }
  return os.str();
}

}  // namespace

std::string to_string(const Monomial& m, const SymbolTable& tab) {
  if (m.coeff == 0) return "0";
  std::string s = term_str(m, tab, false);
  return s;
}

std::string to_string(const LaurentPoly& p, const SymbolTable& tab) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (first) {
      if (t.coeff < 0) os << "-";
      os << term_str(t, tab, true);
      first = false;
    } else {
      os << (t.coeff < 0 ? " - " : " + ") << term_str(t, tab, true);
    }
  }
  return os.str();
}

std::string to_string(const RatFunc& f, const SymbolTable& tab) {
  if (f.reduced()) return to_string(f.num(), tab);
  return "(" + to_string(f.num(), tab) + ") / (" + to_string(f.den(), tab) + ")";
}

}  // namespace periods
