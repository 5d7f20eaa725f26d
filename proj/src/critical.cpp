#include "periods/critical.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace periods {

namespace {

constexpr long long kPlusInf = std::numeric_limits<long long>::max() / 4;
constexpr long long kMinusInf = -kPlusInf;

// p_i with the sentinel convention p_0 = +inf, p_{d+1} = -inf (1-based i).
long long p_at(const std::vector<long long>& p, int i) {
  if (i <= 0) return kPlusInf;
  if (i > static_cast<int>(p.size())) return kMinusInf;
  return p[static_cast<size_t>(i - 1)];
}

void check_places(const HodgeProfile& profile, const HeckeCharacterData& chi) {
  if (profile.p.size() != chi.infinity.pairs.size())
    throw std::invalid_argument("profile/character place count mismatch");
}

}  // namespace

HodgeProfile profile_from_gl_weights(const std::vector<std::vector<long long>>& a, int n) {
  if (n < 1) throw std::invalid_argument("profile_from_gl_weights: n < 1");
  HodgeProfile prof;
  prof.d = n;
  prof.w = n - 1;
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("profile_from_gl_weights: row length != n");
    for (size_t i = 0; i + 1 < row.size(); ++i)
      if (row[i] < row[i + 1])
        throw std::invalid_argument("profile_from_gl_weights: rows must be weakly decreasing");
    std::vector<long long> p(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) p[static_cast<size_t>(i - 1)] = row[static_cast<size_t>(i - 1)] + n - i;
    prof.p.push_back(std::move(p));
  }
  prof.validate();
  return prof;
}

TensorHodgeProfile tensor_profile(const HodgeProfile& profile, const HeckeCharacterData& chi) {
  profile.validate();
  check_places(profile, chi);
  TensorHodgeProfile out;
  out.weight = profile.w + chi.weight;
  for (int s = 0; s < profile.places(); ++s) {
    auto types = rm_hodge_types(chi, s);
    std::vector<TensorEntry> entries;
    for (long long pi : profile.p[static_cast<size_t>(s)]) {
      long long qi = profile.w - pi;
      entries.push_back({pi + types.p1, qi + types.p2, 1});
      entries.push_back({pi + types.p2, qi + types.p1, 1});
    }
    std::sort(entries.begin(), entries.end(), [](const TensorEntry& a, const TensorEntry& b) {
      return a.p != b.p ? a.p > b.p : a.q > b.q;
    });
    std::vector<TensorEntry> merged;
    for (const auto& e : entries) {
      if (!merged.empty() && merged.back().p == e.p && merged.back().q == e.q)
        merged.back().h += e.h;
      else
        merged.push_back(e);
    }
    out.by_sigma.push_back(std::move(merged));
  }
  return out;
}

bool has_critical_values(const HodgeProfile& profile, const HeckeCharacterData& chi) {
  profile.validate();
  check_places(profile, chi);
  if (!is_critical_character(chi)) throw std::domain_error("has_critical_values: chi not critical");
  for (int s = 0; s < profile.places(); ++s) {
    long long t = rm_hodge_types(chi, s).t;
    for (long long pi : profile.p[static_cast<size_t>(s)])
      if (t == profile.w - 2 * pi) return false;
  }
  return true;
}

long long SignatureAssignment::sum_r() const {
  long long acc = 0;
  for (int v : r) acc += v;
  return acc;
}

long long SignatureAssignment::sum_s() const {
  long long acc = 0;
  for (int v : r) acc += d - v;
  return acc;
}

SignatureAssignment assign_signatures(const HodgeProfile& profile, const HeckeCharacterData& chi) {
  profile.validate();
  check_places(profile, chi);
  SignatureAssignment out;
  out.d = profile.d;
  for (int s = 0; s < profile.places(); ++s) {
    long long t = rm_hodge_types(chi, s).t;
    const auto& p = profile.p[static_cast<size_t>(s)];
    // w - 2 p_i is strictly increasing in i; r counts the values below t
    int r = 0;
    for (long long pi : p) {
      long long bound = profile.w - 2 * pi;
      if (bound == t)
        throw std::domain_error("assign_signatures: t collides with an interval boundary");
      if (bound < t) ++r;
    }
    out.r.push_back(r);
  }
  return out;
}

IntInterval critical_set(const HodgeProfile& profile, const HeckeCharacterData& chi,
                         const SignatureAssignment& assignment) {
  profile.validate();
  check_places(profile, chi);
  IntInterval iv{kMinusInf, kPlusInf};
  for (int s = 0; s < profile.places(); ++s) {
    auto types = rm_hodge_types(chi, s);
    const auto& p = profile.p[static_cast<size_t>(s)];
    int r = assignment.r[static_cast<size_t>(s)];
    long long u1 = std::max(p_at(p, r + 1) == kMinusInf ? kMinusInf : p_at(p, r + 1) + types.p1,
                            p_at(p, profile.d + 1 - r) == kMinusInf
                                ? kMinusInf
                                : p_at(p, profile.d + 1 - r) + types.p2);
    long long u2 = std::min(
        p_at(p, r) == kPlusInf ? kPlusInf : p_at(p, r) + types.p1,
        p_at(p, profile.d - r) == kPlusInf ? kPlusInf : p_at(p, profile.d - r) + types.p2);
    iv.lo = std::max(iv.lo, u1);
    iv.hi = std::min(iv.hi, u2);
  }
  return iv;
}

std::vector<std::vector<long long>> gamma_factor(const HodgeProfile& profile,
                                                 const HeckeCharacterData& chi,
                                                 const SignatureAssignment& assignment) {
  profile.validate();
  check_places(profile, chi);
  std::vector<std::vector<long long>> out;
  for (int s = 0; s < profile.places(); ++s) {
    auto types = rm_hodge_types(chi, s);
    const auto& p = profile.p[static_cast<size_t>(s)];
    int r = assignment.r[static_cast<size_t>(s)];
    std::vector<long long> shifts;
    for (int i = r + 1; i <= profile.d; ++i) shifts.push_back(p_at(p, i) + types.p1);
    for (int i = profile.d + 1 - r; i <= profile.d; ++i) shifts.push_back(p_at(p, i) + types.p2);
    std::sort(shifts.rbegin(), shifts.rend());
    out.push_back(std::move(shifts));
  }
  return out;
}

namespace {

// Largest Gamma_C shift over all p < q entries of the tensor multiset; the
// completed factor prod Gamma_C(s - p)^h has poles exactly at s <= max p.
// Returns nullopt when a p == q entry exists (the factor recipe changes and
// criticality already fails by the h^{pp} != 0 criterion).
std::optional<long long> pole_max(const HodgeProfile& profile, const HeckeCharacterData& chi) {
  long long best = kMinusInf;
  for (int s = 0; s < profile.places(); ++s) {
    auto types = rm_hodge_types(chi, s);
    for (long long pi : profile.p[static_cast<size_t>(s)]) {
      long long qi = profile.w - pi;
      const std::pair<long long, long long> pairs[2] = {{pi + types.p1, qi + types.p2},
                                                        {pi + types.p2, qi + types.p1}};
      for (const auto& [pp, qq] : pairs) {
        if (pp == qq) return std::nullopt;
        if (pp < qq) best = std::max(best, pp);
      }
    }
  }
  return best;
}

}  // namespace

std::optional<IntInterval> critical_set_oracle(const HodgeProfile& profile,
                                               const HeckeCharacterData& chi) {
  profile.validate();
  check_places(profile, chi);
  auto direct = pole_max(profile, chi);
  if (!direct) return std::nullopt;

  // dual data: p_i^dual = -p_{d+1-i}, weight -w; chi^dual negates the type
  HodgeProfile dual;
  dual.d = profile.d;
  dual.w = -profile.w;
  for (const auto& row : profile.p) {
    std::vector<long long> rev(row.rbegin(), row.rend());
    for (auto& v : rev) v = -v;
    dual.p.push_back(std::move(rev));
  }
  HeckeCharacterData chidual = chi;
  chidual.name = chi.name + "^dual";
  chidual.weight = -chi.weight;
  for (auto& [nt, ntb] : chidual.infinity.pairs) {
    nt = -nt;
    ntb = -ntb;
  }
  auto dual_max = pole_max(dual, chidual);
  if (!dual_max) return std::nullopt;

  // L_inf(s) has poles at m <= direct; L_inf(dual, 1-s) at 1-m <= dual_max.
  return IntInterval{*direct, -*dual_max};
}

AdmissibleRange admissible_m_range(const WeightVector& mu, const InfinityType& eta,
                                   const CompactShape& shape) {
  if (static_cast<int>(mu.rows.size()) != shape.e() ||
      static_cast<int>(eta.pairs.size()) != shape.e())
    throw std::invalid_argument("admissible_m_range: place count mismatch");
  for (const auto& row : mu.rows)
    if (static_cast<int>(row.size()) != shape.n)
      throw std::invalid_argument("admissible_m_range: weight row length != n");
  AdmissibleRange out;
  out.lo = (shape.n + 1) / 2;  // smallest integer m with n/2 <= m
  out.theorem_lo = shape.n + 1;
  long long hi = kPlusInf;
  for (int t = 0; t < shape.e(); ++t) {
    const auto& row = mu.rows[static_cast<size_t>(t)];
    const auto [r, s] = shape.places[static_cast<size_t>(t)];
    const auto [mt, mtb] = eta.pairs[static_cast<size_t>(t)];
    auto a_at = [&](int i) {  // 1-based with +-inf sentinels outside 1..n
      if (i <= 0) return kPlusInf;
      if (i > shape.n) return kMinusInf;
      return row[static_cast<size_t>(i - 1)];
    };
    long long b1 = a_at(s + 1) == kMinusInf ? kPlusInf : -a_at(s + 1) + s + (mt - mtb);
    long long b2 = a_at(s) == kPlusInf ? kPlusInf : a_at(s) + r + (mtb - mt);
    hi = std::min(hi, std::min(b1, b2));
  }
  out.hi = hi;
  return out;
}

}  // namespace periods
