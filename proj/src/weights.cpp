#include "periods/weights.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace periods {

CompactShape::CompactShape(int n_, std::vector<std::pair<int, int>> places_)
    : n(n_), places(std::move(places_)) {
  if (n < 0) throw std::invalid_argument("shape: negative n");
  if (places.empty()) throw std::invalid_argument("shape: no places");
  for (const auto& [r, s] : places) {
    if (r < 0 || s < 0 || r + s != n)
      throw std::invalid_argument("shape: signature must satisfy r+s=n, r,s >= 0");
  }
}

int CompactShape::dim() const {
  int d = 0;
  for (const auto& [r, s] : places) d += r * s;
  return d;
}

namespace {

void check_compatible(const WeightVector& mu, const CompactShape& shape) {
  if (static_cast<int>(mu.rows.size()) != shape.e())
    throw std::invalid_argument("weight/shape place count mismatch");
  for (const auto& row : mu.rows)
    if (static_cast<int>(row.size()) != shape.n)
      throw std::invalid_argument("weight row length != n");
}

void check_compatible(const WeylElem& w, const CompactShape& shape) {
  if (static_cast<int>(w.perms.size()) != shape.e())
    throw std::invalid_argument("Weyl element/shape place count mismatch");
  for (const auto& p : w.perms)
    if (static_cast<int>(p.size()) != shape.n)
      throw std::invalid_argument("Weyl component size != n");
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  // (f o g)(i) = f(g(i))
  std::vector<int> out(g.size());
  for (size_t i = 0; i < g.size(); ++i) out[i] = f[static_cast<size_t>(g[i])];
  return out;
}

std::vector<int> inverse_perm(const std::vector<int>& f) {
  std::vector<int> out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[static_cast<size_t>(f[i])] = static_cast<int>(i);
  return out;
}

std::vector<int> w0_perm(int n) {
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = n - 1 - i;
  return p;
}

std::vector<int> w0c_perm(int n, int r) {
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < r; ++i) p[static_cast<size_t>(i)] = r - 1 - i;
  for (int i = r; i < n; ++i) p[static_cast<size_t>(i)] = n - 1 - (i - r);
  return p;
}

}  // namespace

WeylElem identity_weyl(const CompactShape& shape) {
  WeylElem w;
  for (int t = 0; t < shape.e(); ++t) {
    std::vector<int> p(static_cast<size_t>(shape.n));
    for (int i = 0; i < shape.n; ++i) p[static_cast<size_t>(i)] = i;
    w.perms.push_back(std::move(p));
  }
  return w;
}

long long xi(const WeightVector& mu) {
  long long s = 2 * mu.a0;
  for (const auto& row : mu.rows)
    for (long long a : row) s += a;
  return s;
}

bool is_dominant(const WeightVector& mu, const CompactShape& shape, Dominance kind) {
  check_compatible(mu, shape);
  for (int t = 0; t < shape.e(); ++t) {
    const auto& row = mu.rows[static_cast<size_t>(t)];
    int r = shape.places[static_cast<size_t>(t)].first;
    if (kind == Dominance::full) {
      for (int i = 0; i + 1 < shape.n; ++i)
        if (row[static_cast<size_t>(i)] < row[static_cast<size_t>(i + 1)]) return false;
    } else {
      for (int i = 0; i + 1 < r; ++i)
        if (row[static_cast<size_t>(i)] < row[static_cast<size_t>(i + 1)]) return false;
      for (int i = r; i + 1 < shape.n; ++i)
        if (row[static_cast<size_t>(i)] < row[static_cast<size_t>(i + 1)]) return false;
    }
  }
  return true;
}

WeightVector conj_weight(const WeightVector& mu) {
  WeightVector out;
  long long total = 0;
  for (const auto& row : mu.rows) {
    std::vector<long long> rev(row.rbegin(), row.rend());
    for (auto& a : rev) a = -a;
    for (long long a : row) total += a;
    out.rows.push_back(std::move(rev));
  }
  out.a0 = mu.a0 + total;
  return out;
}

WeightVector dual_weight(const WeightVector& mu) {
  WeightVector out;
  for (const auto& row : mu.rows) {
    std::vector<long long> rev(row.rbegin(), row.rend());
    for (auto& a : rev) a = -a;
    out.rows.push_back(std::move(rev));
  }
  out.a0 = -mu.a0;
  return out;
}

std::vector<WeylElem> enumerate_W1(const CompactShape& shape) {
  const int n = shape.n;
  // per place: all position sets of size r in lexicographic order
  std::vector<std::vector<std::vector<int>>> per_place;
  for (const auto& [r, s] : shape.places) {
    std::vector<std::vector<int>> perms;
    std::vector<int> comb(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) comb[static_cast<size_t>(i)] = i;
    while (true) {
      // positions in comb carry values 1..r in order, the rest r+1..n
      std::vector<int> perm(static_cast<size_t>(n), -1);
      int v = 0;
      for (int pos : comb) perm[static_cast<size_t>(pos)] = v++;
      for (int pos = 0; pos < n; ++pos)
        if (perm[static_cast<size_t>(pos)] < 0) perm[static_cast<size_t>(pos)] = v++;
      perms.push_back(std::move(perm));
      if (r == 0) break;
      // next combination
      int k = r - 1;
      while (k >= 0 && comb[static_cast<size_t>(k)] == n - r + k) --k;
      if (k < 0) break;
      ++comb[static_cast<size_t>(k)];
      for (int i = k + 1; i < r; ++i)
        comb[static_cast<size_t>(i)] = comb[static_cast<size_t>(i - 1)] + 1;
    }
    per_place.push_back(std::move(perms));
  }
  // cartesian product, first place most significant
  std::vector<WeylElem> out;
  std::vector<size_t> idx(per_place.size(), 0);
  while (true) {
    WeylElem w;
    for (size_t t = 0; t < per_place.size(); ++t) w.perms.push_back(per_place[t][idx[t]]);
    out.push_back(std::move(w));
    size_t t = per_place.size();
    bool advanced = false;
    while (t > 0) {
      --t;
      if (++idx[t] < per_place[t].size()) {
        advanced = true;
        break;
      }
      idx[t] = 0;
    }
    if (!advanced) return out;
  }
}

int length(const WeylElem& w) {
  int total = 0;
  for (const auto& p : w.perms) {
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++total;
  }
  return total;
}

WeylElem flat(const WeylElem& w, const CompactShape& shape) {
  check_compatible(w, shape);
  WeylElem out;
  for (int t = 0; t < shape.e(); ++t) {
    const auto w0 = w0_perm(shape.n);
    const auto w0c = w0c_perm(shape.n, shape.places[static_cast<size_t>(t)].first);
    out.perms.push_back(compose(w0c, compose(w.perms[static_cast<size_t>(t)], w0)));
  }
  return out;
}

WeightVector dot_action(const WeylElem& w, const WeightVector& mu, const CompactShape& shape) {
  check_compatible(mu, shape);
  check_compatible(w, shape);
  const int n = shape.n;
  WeightVector out;
  out.a0 = mu.a0;
  for (int t = 0; t < shape.e(); ++t) {
    const auto& row = mu.rows[static_cast<size_t>(t)];
    const auto winv = inverse_perm(w.perms[static_cast<size_t>(t)]);
    // doubled coordinates: 2*rho_i = n - 1 - 2i (0-based)
    std::vector<long long> doubled(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      doubled[static_cast<size_t>(i)] = 2 * row[static_cast<size_t>(i)] + (n - 1 - 2 * i);
    std::vector<long long> res(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      long long v = doubled[static_cast<size_t>(winv[static_cast<size_t>(i)])] - (n - 1 - 2 * i);
      res[static_cast<size_t>(i)] = v / 2;  // always even
    }
    out.rows.push_back(std::move(res));
  }
  return out;
}

WeightVector lambda_flat(const WeightVector& lambda, const CompactShape& shape) {
  check_compatible(lambda, shape);
  if (!is_dominant(lambda, shape, Dominance::compact))
    throw std::domain_error("lambda_flat: input is not compact-dominant");
  WeightVector out;
  for (int t = 0; t < shape.e(); ++t) {
    const auto& row = lambda.rows[static_cast<size_t>(t)];
    const auto [r, s] = shape.places[static_cast<size_t>(t)];
    std::vector<long long> res(static_cast<size_t>(shape.n));
    for (int k = 0; k < r; ++k) res[static_cast<size_t>(k)] = -row[static_cast<size_t>(r - 1 - k)] - s;
    for (int k = 0; k < s; ++k)
      res[static_cast<size_t>(r + k)] = -row[static_cast<size_t>(shape.n - 1 - k)] + r;
    out.rows.push_back(std::move(res));
  }
  out.a0 = xi(lambda) - lambda.a0;
  return out;
}

std::pair<long long, long long> hodge_pq(const WeightVector& lambda, const CompactShape& shape) {
  check_compatible(lambda, shape);
  long long p = -lambda.a0, q = -lambda.a0;
  for (int t = 0; t < shape.e(); ++t) {
    const auto& row = lambda.rows[static_cast<size_t>(t)];
    int r = shape.places[static_cast<size_t>(t)].first;
    for (int i = 0; i < shape.n; ++i) {
      if (i < r)
        p -= row[static_cast<size_t>(i)];
      else
        q -= row[static_cast<size_t>(i)];
    }
  }
  return {p, q};
}

WeightVector mu_of_eta(const InfinityType& eta, int n) {
  WeightVector out;
  long long bar_sum = 0;
  for (const auto& [nt, ntb] : eta.pairs) {
    out.rows.push_back(std::vector<long long>(static_cast<size_t>(n), nt - ntb));
    bar_sum += ntb;
  }
  out.a0 = n * bar_sum;
  return out;
}

std::vector<HodgeIndexEntry> hodge_decomposition_indices(const WeightVector& mu,
                                                         const CompactShape& shape, int degree) {
  if (!is_dominant(mu, shape, Dominance::full))
    throw std::domain_error("hodge decomposition: weight is not full-dominant");
  const long long x = xi(mu);
  const int d = shape.dim();
  std::vector<HodgeIndexEntry> out;
  for (const auto& w : enumerate_W1(shape)) {
    WeightVector lam = dot_action(w, mu, shape);
    long long p = hodge_pq(lam, shape).first;
    long long q = degree - x - p;
    if (degree == d) {
      long long pflat = hodge_pq(dot_action(flat(w, shape), mu, shape), shape).first;
      if (pflat != q) throw std::logic_error("hodge decomposition: q != p_{w_flat * mu}");
    }
    out.push_back(HodgeIndexEntry{w, length(w), p, q});
  }
  return out;
}

std::string to_string(const WeightVector& mu) {
  std::ostringstream os;
  os << "(";
  for (size_t t = 0; t < mu.rows.size(); ++t) {
    if (t) os << ",";
    os << "(";
    for (size_t i = 0; i < mu.rows[t].size(); ++i) {
      if (i) os << ",";
      os << mu.rows[t][i];
    }
    os << ")";
  }
  os << ";" << mu.a0 << ")";
  return os.str();
}

std::string to_string(const WeylElem& w) {
  std::ostringstream os;
  for (size_t t = 0; t < w.perms.size(); ++t) {
    if (t) os << "|";
    os << "[";
    for (size_t i = 0; i < w.perms[t].size(); ++i) {
      if (i) os << " ";
      os << w.perms[t][i] + 1;
    }
    os << "]";
  }
  return os.str();
}

}  // namespace periods
