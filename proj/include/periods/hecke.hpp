#ifndef PERIODS_HECKE_HPP
#define PERIODS_HECKE_HPP

#include <string>
#include <vector>

#include "periods/infinity_type.hpp"
#include "periods/ledger.hpp"
#include "periods/weights.hpp"

namespace periods {

// Combinatorial shadow of an algebraic Hecke character: its infinity type,
// weight, the finite-order part of its restriction to the base, and the
// unit-class label of its coefficient field.  Embedding sets are label
// sets; no number field is ever constructed.
struct HeckeCharacterData {
  std::string name;
  InfinityType infinity;
  long long weight = 0;
  std::string restriction_finite_order = "trivial";
  std::string coeff_field_label = unit_class::E_TENSOR_K;

  void validate() const;  // n_tau + n_taubar == weight at every pair
};

// CM type determined by the infinity type: one member of each conjugate
// pair; first_of_pair[k] says whether the pair's first label is in Phi.
struct CMTypeData {
  std::vector<bool> first_of_pair;
};

// Coefficient-field embeddings are modeled up to the conjugation action:
// the identity embedding and its complex conjugate.
enum class CoeffEmbedding { identity, conjugate };

bool is_critical_character(const HeckeCharacterData& chi);

// Phi_eta: the member with the larger infinity component.  Throws
// std::domain_error on non-critical input.
CMTypeData cm_type_of(const InfinityType& eta);

// chi = psi^2 (psi_0 o N)^{-1}: doubles the infinity type and the weight,
// and kills the finite-order restriction.  Requires psi critical.
HeckeCharacterData chi_from_psi(const HeckeCharacterData& psi);

struct RMHodgeTypes {
  long long p1, p2;  // p1 > p2
  long long t;       // p1 - p2
};

// Hodge types of RM(chi) at place sigma and coefficient embedding rho.
RMHodgeTypes rm_hodge_types(const HeckeCharacterData& chi, int sigma,
                            CoeffEmbedding rho = CoeffEmbedding::identity);

// e_{tau,rho} = +1 iff n(tau,rho) > n(taubar,rho); conjugate_member selects
// taubar in the pair at the given place.
int e_sign(const HeckeCharacterData& chi, int place, bool conjugate_member = false,
           CoeffEmbedding rho = CoeffEmbedding::identity);

// Ledger symbol names shared by the CM-period axiom catalogue and the
// derivation engines.
namespace sym {
inline const std::string TwoPiI = "2pi.i";
inline const std::string DiscKHalf = "D_K^(1/2)";
inline const std::string DeltaEpsL = "delta[eps_L]";
std::string QChi(const std::string& chi);
std::string cPM(const std::string& chi, int sign);
std::string aPM(const std::string& chi, int sign);
std::string eTau(int place);
std::string CMDet(const std::string& character, bool conjugate_datum);  // p(chi; det o x[bar])
std::string CMTau(const std::string& character, int place);             // p(chi; {tau_k})
inline const std::string QHol = "Q^hol(pi)";
inline const std::string QAhol = "Q^ahol(pi)";
std::string QMot(int j, int sigma);
std::string QAut(int place, int j);
inline const std::string LStd = "L^(S,mot)(m)";
}  // namespace sym

// The CM-period axiom catalogue for chi = chi_from_psi(psi) at signature
// `shape`: Blasius, the Q_sigma(chi)/c^+ square relation, the a^{+-}
// relations, the CM-period factorizations and the delta[eps_L] tagging
// fact.  Symbols are interned into `tab`.
std::vector<Axiom> cm_axioms(const HeckeCharacterData& chi, const HeckeCharacterData& psi,
                             const CompactShape& shape, SymbolTable& tab);

}  // namespace periods

#endif
