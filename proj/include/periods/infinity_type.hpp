#ifndef PERIODS_INFINITY_TYPE_HPP
#define PERIODS_INFINITY_TYPE_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace periods {

// Infinity type of an algebraic Hecke character of a CM field: one integer
// per embedding, grouped into conjugate pairs (n_tau, n_taubar).  Place k of
// the list matches place k of a CompactShape over the same totally real
// base; the pairing tau <-> taubar is the fixed-point-free involution.
struct InfinityType {
  std::vector<std::pair<long long, long long>> pairs;

  size_t places() const { return pairs.size(); }
};

}  // namespace periods

#endif
