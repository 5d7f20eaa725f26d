#include "periods/ledger.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace periods {

std::string PeriodExpr::to_string(const SymbolTable& tab) const {
  if (e_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, k] : e_) {
    if (!first) os << "*";
    os << tab.name(s);
    if (k != 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

Axiom make_axiom(std::string name, PeriodExpr relation, std::string unit_context,
                 std::string anchor) {
  if (anchor.empty()) throw std::invalid_argument("axiom without citation anchor: " + name);
  return Axiom{std::move(name), std::move(relation), std::move(unit_context), std::move(anchor)};
}

std::string LatticeCertificate::to_string(const SymbolTable& tab) const {
  std::ostringstream os;
  if (member) {
    os << "target =";
    if (combination.empty() && unit_part.empty()) os << " 0";
    bool first = true;
    for (const auto& [name, c] : combination) {
      if (c == 0) continue;
      os << (first ? " " : " + ") << c << "*[" << name << "]";
      first = false;
    }
    for (const auto& [name, c] : unit_part) {
      os << (first ? " " : " + ") << c << "*{" << name << "}";
      first = false;
    }
    if (first) os << " 0";
  } else {
    os << "residual " << residual.to_string(tab);
  }
  return os.str();
}

namespace {

// Solves A x = t over Z by column elimination with a unimodular transform.
// A is m x k in column-major order.  Returns x, or nullopt with `residual`
// set to t - A*x_partial for the best forward-substitution attempt.
std::optional<std::vector<mpz_class>> solve_integer(std::vector<std::vector<mpz_class>> cols,
                                                    std::vector<mpz_class> t,
                                                    std::vector<mpz_class>* residual_out) {
  const size_t k = cols.size();
  const size_t m = t.size();
  // transform U: k x k, columns of U track column ops on A
  std::vector<std::vector<mpz_class>> u(k, std::vector<mpz_class>(k, 0));
  for (size_t i = 0; i < k; ++i) u[i][i] = 1;

  auto colop = [&](size_t a, size_t b, const mpz_class& p, const mpz_class& q, const mpz_class& r,
                   const mpz_class& s) {
    // (col_a, col_b) <- (p*col_a + q*col_b, r*col_a + s*col_b), ps - qr = +-1
    for (size_t i = 0; i < m; ++i) {
      mpz_class na = p * cols[a][i] + q * cols[b][i];
      mpz_class nb = r * cols[a][i] + s * cols[b][i];
      cols[a][i] = na;
      cols[b][i] = nb;
    }
    for (size_t i = 0; i < k; ++i) {
      mpz_class na = p * u[a][i] + q * u[b][i];
      mpz_class nb = r * u[a][i] + s * u[b][i];
      u[a][i] = na;
      u[b][i] = nb;
    }
  };

  std::vector<long long> pivot_col_of_row(m, -1);
  size_t pivcol = 0;
  for (size_t row = 0; row < m && pivcol < k; ++row) {
    // bring a nonzero entry to (row, pivcol)
    size_t nz = pivcol;
    while (nz < k && cols[nz][row] == 0) ++nz;
    if (nz == k) continue;  // no pivot in this row
    if (nz != pivcol) {
      std::swap(cols[nz], cols[pivcol]);
      std::swap(u[nz], u[pivcol]);
    }
    // eliminate the row entries right of pivcol via gcd column ops
    for (size_t j = pivcol + 1; j < k; ++j) {
      if (cols[j][row] == 0) continue;
      mpz_class a = cols[pivcol][row], b = cols[j][row], g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      // (p*col_piv + q*col_j, -(b/g)*col_piv + (a/g)*col_j)
      colop(pivcol, j, p, q, -b / g, a / g);
    }
    if (cols[pivcol][row] < 0) {
      for (size_t i = 0; i < m; ++i) cols[pivcol][i] = -cols[pivcol][i];
      for (size_t i = 0; i < k; ++i) u[pivcol][i] = -u[pivcol][i];
    }
    pivot_col_of_row[row] = static_cast<long long>(pivcol);
    ++pivcol;
  }

  // forward substitution
  std::vector<mpz_class> y(k, 0);
  std::vector<mpz_class> rem = t;
  bool ok = true;
  for (size_t row = 0; row < m; ++row) {
    if (pivot_col_of_row[row] >= 0) {
      size_t c = static_cast<size_t>(pivot_col_of_row[row]);
      mpz_class g = cols[c][row];
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rem[row].get_mpz_t(), g.get_mpz_t());
      mpz_class r = rem[row] - q * g;
      if (r != 0) ok = false;
      y[c] = q;
      for (size_t i = 0; i < m; ++i) rem[i] -= q * cols[c][i];
    } else if (rem[row] != 0) {
      ok = false;
    }
  }
  if (!ok) {
    if (residual_out) *residual_out = rem;
    return std::nullopt;
  }
  // x = U y
  std::vector<mpz_class> x(k, 0);
  for (size_t c = 0; c < k; ++c) {
    if (y[c] == 0) continue;
    for (size_t i = 0; i < k; ++i) x[i] += u[c][i] * y[c];
  }
  return x;
}

long long to_ll(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("lattice certificate coefficient overflow");
  return z.get_si();
}

}  // namespace

LatticeCertificate lattice_check(const PeriodExpr& target, const std::vector<Axiom>& axioms,
                                 const std::string& unit_context, const SymbolTable& tab) {
  // symbol universe: target plus all axiom supports
  std::set<int> symbols;
  for (const auto& [s, k] : target.exponents()) symbols.insert(s);
  for (const auto& ax : axioms)
    for (const auto& [s, k] : ax.relation.exponents()) symbols.insert(s);

  std::vector<int> rows;  // non-unit symbols constrain membership
  for (int s : symbols)
    if (!tab.is_unit(s, unit_context)) rows.push_back(s);

  std::vector<std::vector<mpz_class>> cols;
  for (const auto& ax : axioms) {
    std::vector<mpz_class> col(rows.size(), 0);
    for (size_t i = 0; i < rows.size(); ++i)
      col[i] = static_cast<long>(ax.relation.exponent(rows[i]));
    cols.push_back(std::move(col));
  }
  std::vector<mpz_class> t(rows.size(), 0);
  for (size_t i = 0; i < rows.size(); ++i) t[i] = static_cast<long>(target.exponent(rows[i]));

  LatticeCertificate cert;
  std::vector<mpz_class> residual;
  auto x = solve_integer(cols, t, &residual);
  if (!x) {
    cert.member = false;
    for (size_t i = 0; i < rows.size(); ++i)
      if (residual[i] != 0) cert.residual.times(rows[i], to_ll(residual[i]));
    return cert;
  }
  cert.member = true;
  PeriodExpr used;
  for (size_t j = 0; j < axioms.size(); ++j) {
    long long c = to_ll((*x)[j]);
    if (c != 0) {
      cert.combination.emplace_back(axioms[j].name, c);
      used = used.mul(axioms[j].relation.pow(c));
    }
  }
  PeriodExpr unit = target.mul(used.inv());
  for (const auto& [s, k] : unit.exponents()) {
    if (!tab.is_unit(s, unit_context))
      throw std::logic_error("lattice_check: non-unit residue after exact solve");
    cert.unit_part.emplace_back(tab.name(s), k);
  }
  return cert;
}

}  // namespace periods
