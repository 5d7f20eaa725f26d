#include "periods/hecke.hpp"

#include <sstream>
#include <stdexcept>

namespace periods {

void HeckeCharacterData::validate() const {
  if (infinity.pairs.empty()) throw std::invalid_argument(name + ": empty infinity type");
  for (const auto& [nt, ntb] : infinity.pairs)
    if (nt + ntb != weight)
      throw std::invalid_argument(name + ": infinity type violates n_tau + n_taubar = w");
}

bool is_critical_character(const HeckeCharacterData& chi) {
  for (const auto& [nt, ntb] : chi.infinity.pairs)
    if (nt == ntb) return false;
  return true;
}

CMTypeData cm_type_of(const InfinityType& eta) {
  CMTypeData phi;
  for (const auto& [nt, ntb] : eta.pairs) {
    if (nt == ntb) throw std::domain_error("cm_type_of: infinity type is not critical");
    phi.first_of_pair.push_back(nt > ntb);
  }
  return phi;
}

HeckeCharacterData chi_from_psi(const HeckeCharacterData& psi) {
  psi.validate();
  if (!is_critical_character(psi)) throw std::domain_error("chi_from_psi: psi is not critical");
  HeckeCharacterData chi;
  chi.name = psi.name.empty() ? "chi" : "chi(" + psi.name + ")";
  for (const auto& [mt, mtb] : psi.infinity.pairs) chi.infinity.pairs.emplace_back(2 * mt, 2 * mtb);
  chi.weight = 2 * psi.weight;
  chi.restriction_finite_order = "trivial";
  chi.coeff_field_label = psi.coeff_field_label;
  return chi;
}

namespace {

std::pair<long long, long long> pair_at(const HeckeCharacterData& chi, int place,
                                        CoeffEmbedding rho) {
  if (place < 0 || static_cast<size_t>(place) >= chi.infinity.pairs.size())
    throw std::out_of_range("place index out of range");
  auto [nt, ntb] = chi.infinity.pairs[static_cast<size_t>(place)];
  // n(tau, rho) = n_{rho^{-1} tau}: conjugating the embedding swaps the pair
  if (rho == CoeffEmbedding::conjugate) std::swap(nt, ntb);
  return {nt, ntb};
}

}  // namespace

RMHodgeTypes rm_hodge_types(const HeckeCharacterData& chi, int sigma, CoeffEmbedding rho) {
  if (!is_critical_character(chi)) throw std::domain_error("rm_hodge_types: chi is not critical");
  auto [nt, ntb] = pair_at(chi, sigma, rho);
  RMHodgeTypes out;
  out.p1 = std::max(nt, ntb);
  out.p2 = std::min(nt, ntb);
  out.t = out.p1 - out.p2;
  return out;
}

int e_sign(const HeckeCharacterData& chi, int place, bool conjugate_member, CoeffEmbedding rho) {
  if (!is_critical_character(chi)) throw std::domain_error("e_sign: chi is not critical");
  auto [nt, ntb] = pair_at(chi, place, rho);
  if (conjugate_member) std::swap(nt, ntb);
  return nt > ntb ? 1 : -1;
}

namespace sym {

std::string QChi(const std::string& chi) { return "Q(" + chi + ")"; }
std::string cPM(const std::string& chi, int sign) {
  return std::string("c") + (sign > 0 ? "+" : "-") + "(" + chi + ")";
}
std::string aPM(const std::string& chi, int sign) {
  return std::string("a") + (sign > 0 ? "+" : "-") + "(" + chi + ")";
}
std::string eTau(int place) {
  std::ostringstream os;
  os << "e(tau" << place + 1 << ")";
  return os.str();
}
std::string CMDet(const std::string& character, bool conjugate_datum) {
  return "p(" + character + ";det.x" + (conjugate_datum ? "bar" : "") + ")";
}
std::string CMTau(const std::string& character, int place) {
  std::ostringstream os;
  os << "p(" << character << ";tau" << place + 1 << ")";
  return os.str();
}
std::string QMot(int j, int sigma) {
  std::ostringstream os;
  os << "Q_(" << j << "," << sigma + 1 << ")";
  return os.str();
}
std::string QAut(int place, int j) {
  std::ostringstream os;
  os << "Q(pi_tau" << place + 1 << ";beta" << j << ")";
  return os.str();
}

}  // namespace sym

std::vector<Axiom> cm_axioms(const HeckeCharacterData& chi, const HeckeCharacterData& psi,
                             const CompactShape& shape, SymbolTable& tab) {
  using namespace unit_class;
  chi.validate();
  psi.validate();
  if (!is_critical_character(psi) || !(chi_from_psi(psi).infinity.pairs == chi.infinity.pairs))
    throw std::invalid_argument("cm_axioms: chi must be chi_from_psi(psi)");
  if (static_cast<size_t>(shape.e()) != psi.infinity.places())
    throw std::invalid_argument("cm_axioms: shape/psi place count mismatch");

  const std::string cn = chi.name.empty() ? "chi" : chi.name;
  const std::string pn = psi.name.empty() ? "psi" : psi.name;
  const std::string chicheck = cn + "_check";

  int two_pi_i = tab.intern(sym::TwoPiI, {TRANSCENDENTAL});
  int delta_eps = tab.intern(sym::DeltaEpsL, {L_GALOIS});
  int qchi = tab.intern(sym::QChi(cn));
  int cplus = tab.intern(sym::cPM(cn, +1));
  int cminus = tab.intern(sym::cPM(cn, -1));
  int aplus = tab.intern(sym::aPM(cn, +1));
  int aminus = tab.intern(sym::aPM(cn, -1));
  int e_tau = tab.intern(sym::eTau(0), {RATIONAL});
  int p_check = tab.intern(sym::CMTau(chicheck, 0));
  int p_det = tab.intern(sym::CMDet(pn, false));
  int p_det_bar = tab.intern(sym::CMDet(pn + "^-1", true));

  std::vector<Axiom> out;

  // (a) refined Blasius, assumption-grade
  out.push_back(make_axiom(
      "blasius[" + cn + "]",
      PeriodExpr().times(cplus, 1).times(p_check, -1), E_TENSOR_K,
      "formulaBlasius (assumed)"));

  // (b) Q_sigma(chi) ~ (2pi i)^{w(chi)} delta[chi0 eps_L]^{-2} e_tau c+^2
  out.push_back(make_axiom("q-chi-square[" + cn + "]",
                           PeriodExpr()
                               .times(qchi, 1)
                               .times(two_pi_i, -chi.weight)
                               .times(delta_eps, 2)
                               .times(e_tau, -1)
                               .times(cplus, -2),
                           E_TENSOR_K, "formulaQsigmachic2"));

  // (c) c^{+-} ~ (2pi i)^{-w(chi)} delta[chi0 eps_L] a^{-+}
  out.push_back(make_axiom("c-a-dual+[" + cn + "]",
                           PeriodExpr()
                               .times(cplus, 1)
                               .times(two_pi_i, chi.weight)
                               .times(delta_eps, -1)
                               .times(aminus, -1),
                           E_TENSOR_K, "propa+a-"));
  out.push_back(make_axiom("c-a-dual-[" + cn + "]",
                           PeriodExpr()
                               .times(cminus, 1)
                               .times(two_pi_i, chi.weight)
                               .times(delta_eps, -1)
                               .times(aplus, -1),
                           E_TENSOR_K, "propa+a-"));

  // (d) a- ~ e_tau a+
  out.push_back(make_axiom(
      "a-sign[" + cn + "]",
      PeriodExpr().times(aminus, 1).times(e_tau, -1).times(aplus, -1), E_TENSOR_K,
      "formulaasigmachisigno"));

  // (e) p(psi; det o x) ~ prod_tau p(psi^{r_tau} (psi^iota)^{s_tau}; tau)
  {
    PeriodExpr rel = PeriodExpr().times(p_det, 1);
    for (int t = 0; t < shape.e(); ++t) {
      const auto [r, s] = shape.places[static_cast<size_t>(t)];
      std::ostringstream nm;
      nm << pn << "^" << r << "*" << pn << "_iota^" << s;
      rel.times(tab.intern(sym::CMTau(nm.str(), t)), -1);
    }
    out.push_back(make_axiom("cm-det-fact[" + pn + "]", rel, E_PSI_E, "factpchi"));
  }

  // (f) p(psi;det o x) p(psi^{-1};det o xbar) ~ (2pi i)^{w sum(r-s)} prod p(chi_check;tau)^{r-s}
  {
    PeriodExpr rel = PeriodExpr().times(p_det, 1).times(p_det_bar, 1);
    long long rs = 0;
    for (int t = 0; t < shape.e(); ++t) {
      const auto [r, s] = shape.places[static_cast<size_t>(t)];
      rs += r - s;
      rel.times(tab.intern(sym::CMTau(chicheck, t)), -(r - s));
    }
    rel.times(two_pi_i, -psi.weight * rs);
    out.push_back(make_axiom("cm-det-pair[" + pn + "]", rel, E_PSI_E, "formpsidet"));
  }

  // (g) delta[eps_L] lies in L'
  out.push_back(make_axiom("eps-L-in-Lgal", PeriodExpr().times(delta_eps, 1), L_GALOIS,
                           "epsilonenL"));

  // (h) c- ~ e_tau c+
  out.push_back(make_axiom(
      "c-sign[" + cn + "]",
      PeriodExpr().times(cminus, 1).times(e_tau, -1).times(cplus, -1), E_TENSOR_K,
      "e-tau lemma"));

  return out;
}

}  // namespace periods
