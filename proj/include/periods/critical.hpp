#ifndef PERIODS_CRITICAL_HPP
#define PERIODS_CRITICAL_HPP

#include <optional>
#include <vector>

#include "periods/hecke.hpp"
#include "periods/hodge.hpp"
#include "periods/weights.hpp"

namespace periods {

// Hodge numbers p_i(sigma) = a_{sigma,i} + n - i of weight n-1, from
// weakly decreasing cohomological weight rows.
HodgeProfile profile_from_gl_weights(const std::vector<std::vector<long long>>& a, int n);

// Entry of the tensor Hodge decomposition with its multiplicity.
struct TensorEntry {
  long long p, q;
  int h;
};

struct TensorHodgeProfile {
  long long weight;
  std::vector<std::vector<TensorEntry>> by_sigma;  // sorted by (p desc, q desc)
};

TensorHodgeProfile tensor_profile(const HodgeProfile& profile, const HeckeCharacterData& chi);

// True iff t_{sigma,rho}(chi) avoids every w - 2 p_i(sigma).
bool has_critical_values(const HodgeProfile& profile, const HeckeCharacterData& chi);

struct SignatureAssignment {
  int d;
  std::vector<int> r;  // one per sigma
  int s(int sigma) const { return d - r[static_cast<size_t>(sigma)]; }
  long long sum_r() const;
  long long sum_s() const;
};

// The unique interval index r per sigma with t in I_r.  Throws
// std::domain_error when some t collides with an interval boundary.
SignatureAssignment assign_signatures(const HodgeProfile& profile, const HeckeCharacterData& chi);

// Integers {m : lo < m <= hi}; empty iff lo >= hi.
struct IntInterval {
  long long lo = 0, hi = 0;
  bool empty() const { return lo >= hi; }
  long long count() const { return empty() ? 0 : hi - lo; }
};

// (upsilon1, upsilon2] from the signature assignment.
IntInterval critical_set(const HodgeProfile& profile, const HeckeCharacterData& chi,
                         const SignatureAssignment& assignment);

// Gamma_C shifts per sigma: m means a factor Gamma_C(s - m); d shifts per
// sigma, sorted descending.
std::vector<std::vector<long long>> gamma_factor(const HodgeProfile& profile,
                                                 const HeckeCharacterData& chi,
                                                 const SignatureAssignment& assignment);

// Independent brute-force oracle: scans the poles of the completed
// archimedean factor built directly from the tensor Hodge multiset (with
// Gamma_C(s) = 2 (2pi)^{-s} Gamma(s), poles at the nonpositive integers)
// and of the dual side at 1-s.  Returns nullopt when the tensor has a
// nonzero (p,p) component, i.e. no critical values exist.
std::optional<IntInterval> critical_set_oracle(const HodgeProfile& profile,
                                               const HeckeCharacterData& chi);

struct AdmissibleRange {
  long long lo;          // ceil(n/2)
  long long hi;          // min over places of the two bounds
  long long theorem_lo;  // n + 1 (strict m > n regime)
  bool empty() const { return hi < lo; }
  bool theorem_empty() const { return hi < theorem_lo; }
};

// Integer range of admissible twists m for (mu, eta, shape), with the
// stricter m > n subrange used by the main derivations.
AdmissibleRange admissible_m_range(const WeightVector& mu, const InfinityType& eta,
                                   const CompactShape& shape);

}  // namespace periods

#endif
