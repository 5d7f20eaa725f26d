#include "periods/hodge.hpp"

#include <sstream>
#include <stdexcept>

#include "periods/hecke.hpp"

namespace periods {

void HodgeProfile::validate() const {
  if (p.empty()) throw std::invalid_argument("profile: no embeddings");
  for (const auto& row : p) {
    if (static_cast<int>(row.size()) != d) throw std::invalid_argument("profile: row length != d");
    for (size_t i = 0; i + 1 < row.size(); ++i)
      if (row[i] <= row[i + 1])
        throw std::invalid_argument("profile: Hodge numbers must be strictly decreasing");
  }
}

namespace {

std::string idx_name(const std::string& prefix, const std::string& base, int i, int j) {
  std::ostringstream os;
  os << prefix << base << "(" << i << "," << j << ")";
  return os.str();
}

std::string one_name(const std::string& prefix, const std::string& base, int j) {
  std::ostringstream os;
  os << prefix << base << "(" << j << ")";
  return os.str();
}

}  // namespace

PolarizedInstance::PolarizedInstance(int d, int d_plus, int epsilon, bool a_trivial,
                                     SymbolTable& tab, const std::string& prefix)
    : d_(d), d_plus_(d_plus), epsilon_(epsilon), a_trivial_(a_trivial), tab_(&tab) {
  if (d < 0 || d_plus < 0 || d_plus > d)
    throw std::domain_error("instance: need 0 <= d_plus <= d");
  if (d % 2 == 1) {
    const int up = (d + 1) / 2, down = d / 2;
    if (d_plus != up && d_plus != down)
      throw std::domain_error("instance: odd rank needs d_plus in {ceil(d/2), floor(d/2)}");
    if (epsilon != +1 && epsilon != -1) throw std::domain_error("instance: epsilon must be +-1");
    // The middle Hodge vector is a Frobenius eigenvector of eigenvalue
    // epsilon, so it sits in the eigenspace that is one larger.
    if ((epsilon == +1) != (d_plus == up))
      throw std::domain_error("instance: inconsistent parity/epsilon combination");
  } else {
    epsilon_ = +1;  // no middle piece; the scalar never enters
  }

  const int half = (d + 1) / 2;  // free columns 1..half
  const int mid = (d % 2 == 1) ? half : -1;

  for (int j = 1; j <= d / 2; ++j)
    lambda_syms_.push_back(tab.add(one_name(prefix, "lam", j)));
  for (int j = 1; j <= d; ++j)
    mu_syms_.push_back(tab.add(one_name(prefix, "mu", j), {unit_class::E_TENSOR_K}));
  if (!a_trivial) deltaA_sym_ = tab.add(prefix + "deltaA");

  auto make_block = [&](const char* base, int rows, bool zero_middle) {
    std::vector<std::vector<int>> blk(static_cast<size_t>(rows),
                                      std::vector<int>(static_cast<size_t>(half), -1));
    for (int i = 1; i <= rows; ++i)
      for (int j = 1; j <= half; ++j) {
        if (j == mid && zero_middle) continue;  // forced zero column block
        blk[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
            tab.add(idx_name(prefix, base, i, j));
      }
    return blk;
  };
  a_plus_ = make_block("a+", d_plus_, /*zero_middle=*/d % 2 == 1 && epsilon_ == -1);
  a_minus_ = make_block("a-", d_ - d_plus_, /*zero_middle=*/d % 2 == 1 && epsilon_ == +1);

  // Frobenius relation check: every dependent column must reproduce
  // +-lambda_j^{-1} times its partner, which holds by construction and is
  // re-verified here over the expanded entries.
  for (int j = 1; j <= d_; ++j) {
    int jp = d_ + 1 - j;
    if (jp <= j) break;
    Monomial lam_inv = inv_mono(lambda_mono(j));
    for (int sign : {+1, -1}) {
      int rows = sign > 0 ? d_plus_ : d_ - d_plus_;
      for (int i = 1; i <= rows; ++i) {
        LaurentPoly expect = a_entry(sign, i, j).scaled(lam_inv);
        if (sign < 0) expect = -expect;
        if (a_entry(sign, i, jp) != expect)
          throw std::logic_error("instance: Frobenius column relation violated");
      }
    }
  }
}

Monomial PolarizedInstance::lambda_mono(int j) const {
  if (j < 1 || j > d_) throw std::out_of_range("lambda index out of range");
  const int half = d_ / 2;
  if (j <= half) return Monomial(1, {{lambda_syms_[static_cast<size_t>(j - 1)], 1}});
  if (d_ % 2 == 1 && j == half + 1) return Monomial(epsilon_, {});
  return Monomial(1, {{lambda_syms_[static_cast<size_t>(d_ - j)], -1}});
}

int PolarizedInstance::lambda_sym(int j) const {
  if (j < 1 || j > d_ / 2) throw std::out_of_range("free lambda index out of range");
  return lambda_syms_[static_cast<size_t>(j - 1)];
}

int PolarizedInstance::mu_sym(int j) const {
  if (j < 1 || j > d_) throw std::out_of_range("mu index out of range");
  return mu_syms_[static_cast<size_t>(j - 1)];
}

int PolarizedInstance::deltaA_sym() const { return deltaA_sym_; }

LaurentPoly PolarizedInstance::a_entry(int sign, int i, int j) const {
  const auto& blk = sign > 0 ? a_plus_ : a_minus_;
  const int rows = sign > 0 ? d_plus_ : d_ - d_plus_;
  if (i < 1 || i > rows || j < 1 || j > d_) throw std::out_of_range("entry index out of range");
  const int half = (d_ + 1) / 2;
  if (j <= half) {
    int id = blk[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    return id < 0 ? LaurentPoly() : LaurentPoly::symbol(id);
  }
  // a^{+-}_{i,d+1-j'} = +-lambda_{j'}^{-1} a^{+-}_{i,j'} with j' = d+1-j
  int jp = d_ + 1 - j;
  int id = blk[static_cast<size_t>(i - 1)][static_cast<size_t>(jp - 1)];
  if (id < 0) return LaurentPoly();
  Monomial m = inv_mono(lambda_mono(jp));
  if (sign < 0) m.coeff = -m.coeff;
  return LaurentPoly::symbol(id).scaled(m);
}

std::vector<std::vector<LaurentPoly>> PolarizedInstance::p_tilde() const {
  std::vector<std::vector<LaurentPoly>> m;
  for (int i = 1; i <= d_plus_; ++i) {
    std::vector<LaurentPoly> row;
    for (int j = 1; j <= d_; ++j) row.push_back(a_entry(+1, i, j));
    m.push_back(std::move(row));
  }
  for (int i = 1; i <= d_ - d_plus_; ++i) {
    std::vector<LaurentPoly> row;
    for (int j = 1; j <= d_; ++j) row.push_back(a_entry(-1, i, j));
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<std::vector<LaurentPoly>> PolarizedInstance::p_tilde_block(int sign) const {
  const int k = sign > 0 ? d_plus_ : d_ - d_plus_;
  std::vector<std::vector<LaurentPoly>> m;
  for (int i = 1; i <= k; ++i) {
    std::vector<LaurentPoly> row;
    for (int j = 1; j <= k; ++j) row.push_back(a_entry(sign, i, j));
    m.push_back(std::move(row));
  }
  return m;
}

FrobeniusData PolarizedInstance::frobenius() const {
  return FrobeniusData{d_, epsilon_, lambda_syms_};
}

PolarizedInstance build_generic_instance(int d, int d_plus, int epsilon, bool a_trivial,
                                         SymbolTable& tab, const std::string& prefix) {
  return PolarizedInstance(d, d_plus, epsilon, a_trivial, tab, prefix);
}

std::vector<std::pair<int, int>> admissible_splits(int d) {
  if (d % 2 == 0) return {{d / 2, +1}};
  return {{(d + 1) / 2, +1}, {d / 2, -1}};
}

RatFunc delta_of(const PolarizedInstance& inst) {
  LaurentPoly dd = det(inst.p_tilde());
  if (dd.is_zero())
    throw std::domain_error("delta_of: comparison determinant vanishes identically (degenerate)");
  return RatFunc(LaurentPoly{Rational(1)}, dd);
}

LaurentPoly c_dual_pm(const PolarizedInstance& inst, int sign) {
  return det(inst.p_tilde_block(sign));
}

PeriodExpr quadratic_period(const PolarizedInstance& inst, int j) {
  if (j < 1 || j > inst.d()) throw std::out_of_range("quadratic period index out of range");
  PeriodExpr q;
  Monomial lam = inst.lambda_mono(j);
  for (const auto& [id, e] : lam.exps) q.times(id, e);
  q.times(inst.mu_sym(j), 1);
  if (inst.deltaA_sym() >= 0) q.times(inst.deltaA_sym(), -1);
  return q;
}

Monomial quadratic_period_mono(const PolarizedInstance& inst, int j) {
  Monomial m = inst.lambda_mono(j);
  m = mul_mono(m, Monomial(1, {{inst.mu_sym(j), 1}}));
  if (inst.deltaA_sym() >= 0) m = mul_mono(m, Monomial(1, {{inst.deltaA_sym(), -1}}));
  return m;
}

std::vector<Axiom> twist_rules(int d, int d_plus, long long t, int artin_eps, SymbolTable& tab) {
  using namespace unit_class;
  if (d < 0 || d_plus < 0 || d_plus > d) throw std::invalid_argument("twist_rules: bad split");
  const int d_minus = d - d_plus;
  int two_pi_i = tab.intern(sym::TwoPiI, {TRANSCENDENTAL});

  std::ostringstream mt;
  mt << "M(" << t << ")";
  int cp = tab.intern("c+(M)"), cm = tab.intern("c-(M)"), dl = tab.intern("delta(M)");
  int cpt = tab.intern("c+(" + mt.str() + ")"), cmt = tab.intern("c-(" + mt.str() + ")");
  int dlt = tab.intern("delta(" + mt.str() + ")");
  int deps = tab.intern("delta[eps]");
  int cpe = tab.intern("c+(M@[eps])"), cme = tab.intern("c-(M@[eps])");

  std::vector<Axiom> out;
  out.push_back(make_axiom(
      "delta-twist", PeriodExpr().times(dlt, 1).times(two_pi_i, -t * d).times(dl, -1), E_TENSOR_K,
      "rem:twist"));
  if (t % 2 == 0) {
    out.push_back(make_axiom(
        "c-twist+", PeriodExpr().times(cpt, 1).times(two_pi_i, -t * d_plus).times(cp, -1),
        E_TENSOR_K, "rem:twist"));
    out.push_back(make_axiom(
        "c-twist-", PeriodExpr().times(cmt, 1).times(two_pi_i, -t * d_minus).times(cm, -1),
        E_TENSOR_K, "rem:twist"));
  } else {
    out.push_back(make_axiom(
        "c-twist+", PeriodExpr().times(cpt, 1).times(two_pi_i, -t * d_minus).times(cm, -1),
        E_TENSOR_K, "rem:twist"));
    out.push_back(make_axiom(
        "c-twist-", PeriodExpr().times(cmt, 1).times(two_pi_i, -t * d_plus).times(cp, -1),
        E_TENSOR_K, "rem:twist"));
  }
  if (artin_eps > 0) {
    out.push_back(make_axiom("artin-twist+",
                             PeriodExpr().times(cpe, 1).times(cp, -1).times(deps, -d_plus),
                             E_TENSOR_K, "rem:twist"));
    out.push_back(make_axiom("artin-twist-",
                             PeriodExpr().times(cme, 1).times(cm, -1).times(deps, -d_minus),
                             E_TENSOR_K, "rem:twist"));
  } else {
    out.push_back(make_axiom("artin-twist+",
                             PeriodExpr().times(cpe, 1).times(cm, -1).times(deps, -d_minus),
                             E_TENSOR_K, "rem:twist"));
    out.push_back(make_axiom("artin-twist-",
                             PeriodExpr().times(cme, 1).times(cp, -1).times(deps, -d_plus),
                             E_TENSOR_K, "rem:twist"));
  }
  return out;
}

bool check_hodge_riemann(const std::vector<long long>& p, long long w,
                         const std::set<std::pair<int, int>>& support) {
  const int d = static_cast<int>(p.size());
  for (const auto& [i, j] : support) {
    if (i < 1 || i > d || j < 1 || j > d) throw std::out_of_range("support index out of range");
    if (p[static_cast<size_t>(i - 1)] + p[static_cast<size_t>(j - 1)] > w) return false;
  }
  for (int i = 1; i <= d; ++i)
    if (!support.count({i, d + 1 - i})) return false;
  return true;
}

bool check_hodge_riemann(const HodgeProfile& profile,
                         const std::set<std::pair<int, int>>& support) {
  profile.validate();
  for (const auto& row : profile.p)
    if (!check_hodge_riemann(row, profile.w, support)) return false;
  return true;
}

std::vector<Axiom> yoshida_axioms(int d, int d_plus, int e, SymbolTable& tab) {
  using namespace unit_class;
  if (d < 0 || d_plus < 0 || d_plus > d || e < 1)
    throw std::invalid_argument("yoshida_axioms: bad parameters");
  int disc = tab.intern(sym::DiscKHalf, {K_GALOIS});
  int cp = tab.intern("c+(M)"), cm = tab.intern("c-(M)"), dl = tab.intern("delta(M)");

  PeriodExpr relp = PeriodExpr().times(cp, 1).times(disc, -d_plus);
  PeriodExpr relm = PeriodExpr().times(cm, 1).times(disc, -(d - d_plus));
  PeriodExpr reld = PeriodExpr().times(dl, 1).times(disc, -d);
  for (int s = 0; s < e; ++s) {
    std::ostringstream sp, sm, sd;
    sp << "c+(M,s" << s + 1 << ")";
    sm << "c-(M,s" << s + 1 << ")";
    sd << "delta(M,s" << s + 1 << ")";
    relp.times(tab.intern(sp.str()), -1);
    relm.times(tab.intern(sm.str()), -1);
    reld.times(tab.intern(sd.str()), -1);
  }
  std::vector<Axiom> out;
  out.push_back(make_axiom("yoshida-c+", relp, E_TENSOR_KGAL, "form:yoshida1"));
  out.push_back(make_axiom("yoshida-c-", relm, E_TENSOR_KGAL, "form:yoshida1"));
  out.push_back(make_axiom("yoshida-delta", reld, E_TENSOR_KGAL, "form:yoshida2"));
  return out;
}

}  // namespace periods
