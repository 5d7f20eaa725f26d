#ifndef PERIODS_WEIGHTS_HPP
#define PERIODS_WEIGHTS_HPP

#include <string>
#include <utility>
#include <vector>

#include "periods/infinity_type.hpp"

namespace periods {

// Signature data of a similitude unitary group: one pair (r,s) with r+s=n
// per archimedean place of the totally real base field.
struct CompactShape {
  int n = 0;
  std::vector<std::pair<int, int>> places;  // (r_tau, s_tau)

  CompactShape() = default;
  CompactShape(int n_, std::vector<std::pair<int, int>> places_);

  int e() const { return static_cast<int>(places.size()); }
  int dim() const;  // d = sum of r_tau * s_tau
};

// mu = ((a_{tau,1..n})_tau ; a0)
struct WeightVector {
  std::vector<std::vector<long long>> rows;
  long long a0 = 0;

  bool operator==(const WeightVector& o) const { return rows == o.rows && a0 == o.a0; }
};

// Element of W = prod of symmetric groups, one permutation per place.
// perms[t][i] is the 0-based image of position i+1 under w_tau.
struct WeylElem {
  std::vector<std::vector<int>> perms;

  bool operator==(const WeylElem& o) const { return perms == o.perms; }
};

WeylElem identity_weyl(const CompactShape& shape);

long long xi(const WeightVector& mu);

enum class Dominance { full, compact };
bool is_dominant(const WeightVector& mu, const CompactShape& shape, Dominance kind);

// c(mu) = ((-a_{tau,n},...,-a_{tau,1}); a0 + sum a)
WeightVector conj_weight(const WeightVector& mu);
// mu^vee = -w0(mu) = ((-a_{tau,n},...,-a_{tau,1}); -a0)
WeightVector dual_weight(const WeightVector& mu);

// Minimal-length coset representatives: tuples whose components keep the
// value blocks {1..r_tau} and {r_tau+1..n} in increasing position order.
// Deterministic order: lexicographic on the position set of the first block,
// first place most significant.
std::vector<WeylElem> enumerate_W1(const CompactShape& shape);

// Sum over places of inversion counts.
int length(const WeylElem& w);

// w_flat = w_{0,c} w w_0 (per place); an involution.
WeylElem flat(const WeylElem& w, const CompactShape& shape);

// w*mu = w(mu + rho) - rho with rho = ((n-1)/2, (n-3)/2, ..., (1-n)/2; 0).
// Always integral on integral input.
WeightVector dot_action(const WeylElem& w, const WeightVector& mu, const CompactShape& shape);

// lambda_flat on compact-dominant weights; preserves xi.  Throws
// std::domain_error on non-compact-dominant input.
WeightVector lambda_flat(const WeightVector& lambda, const CompactShape& shape);

// (p_lambda, q_lambda); p + q = -xi(lambda).
std::pair<long long, long long> hodge_pq(const WeightVector& lambda, const CompactShape& shape);

// mu(eta) = ((n_tau - n_taubar, ..., n_tau - n_taubar)_tau ; n * sum n_taubar)
WeightVector mu_of_eta(const InfinityType& eta, int n);

struct HodgeIndexEntry {
  WeylElem w;
  int len;
  long long p, q;
};

// Indices of the degree-i Hodge decomposition: one entry per w in W^1 with
// p = p_{w*mu} and q = i - xi(mu) - p.  For i = d the identity
// q = p_{w_flat * mu} is asserted.
std::vector<HodgeIndexEntry> hodge_decomposition_indices(const WeightVector& mu,
                                                         const CompactShape& shape, int degree);

std::string to_string(const WeightVector& mu);
std::string to_string(const WeylElem& w);

}  // namespace periods

#endif
