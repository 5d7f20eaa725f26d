#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "periods/critical.hpp"
#include "periods/driver.hpp"

using namespace periods;

namespace {

HeckeCharacterData chi_of(std::vector<std::pair<long long, long long>> pairs, long long w) {
  HeckeCharacterData chi;
  chi.name = "chi";
  chi.infinity.pairs = std::move(pairs);
  chi.weight = w;
  chi.validate();
  return chi;
}

HodgeProfile prof3() { return profile_from_gl_weights({{1, 0, -1}}, 3); }

}  // namespace

TEST_CASE("profile_from_gl_weights") {
  HodgeProfile p = prof3();
  CHECK(p.w == 2);
  CHECK(p.p == std::vector<std::vector<long long>>{{3, 1, -1}});

  HodgeProfile trivial = profile_from_gl_weights({{0, 0, 0, 0}}, 4);
  CHECK(trivial.p == std::vector<std::vector<long long>>{{3, 2, 1, 0}});

  SUBCASE("self-dual weights give p_i + p_{n+1-i} = n-1") {
    HodgeProfile sd = profile_from_gl_weights({{2, 0, -2}, {5, 0, -5}}, 3);
    for (const auto& row : sd.p)
      for (size_t i = 0; i < row.size(); ++i) CHECK(row[i] + row[row.size() - 1 - i] == 2);
  }
  SUBCASE("non-decreasing input is rejected") {
    CHECK_THROWS_AS(profile_from_gl_weights({{0, 1}}, 2), std::invalid_argument);
  }
}

TEST_CASE("has_critical_values") {
  CHECK(has_critical_values(prof3(), chi_of({{2, 0}}, 2)));          // t=2 avoids {-4,0,4}
  CHECK_FALSE(has_critical_values(prof3(), chi_of({{3, -1}}, 2)));   // t=4 collides
  HodgeProfile rank1;
  rank1.d = 1;
  rank1.w = 0;
  rank1.p = {{0}};
  CHECK(has_critical_values(rank1, chi_of({{1, 0}}, 1)));
}

TEST_CASE("tensor profile multiplicities") {
  SUBCASE("no h^{pp} when critical values exist") {
    auto tp = tensor_profile(prof3(), chi_of({{2, 0}}, 2));
    for (const auto& e : tp.by_sigma[0]) {
      CHECK(e.p != e.q);
      CHECK((e.h == 1 || e.h == 2));
    }
  }
  SUBCASE("an h^{pp} appears exactly when criticality fails") {
    auto tp = tensor_profile(prof3(), chi_of({{3, -1}}, 2));
    bool has_pp = false;
    for (const auto& e : tp.by_sigma[0]) has_pp = has_pp || e.p == e.q;
    CHECK(has_pp);
  }
  SUBCASE("total multiplicity is 2d") {
    auto tp = tensor_profile(prof3(), chi_of({{2, 0}}, 2));
    int total = 0;
    for (const auto& e : tp.by_sigma[0]) total += e.h;
    CHECK(total == 6);
  }
}

TEST_CASE("assign_signatures") {
  auto a = assign_signatures(prof3(), chi_of({{2, 0}}, 2));
  CHECK(a.r == std::vector<int>{2});
  CHECK(a.s(0) == 1);

  auto big = assign_signatures(prof3(), chi_of({{5, -3}}, 2));  // t=8 > 4
  CHECK(big.r == std::vector<int>{3});
  CHECK(big.s(0) == 0);

  CHECK_THROWS_AS(assign_signatures(prof3(), chi_of({{3, -1}}, 2)), std::domain_error);
}

TEST_CASE("critical_set on the worked rank-3 example") {
  auto chi = chi_of({{2, 0}}, 2);
  auto assign = assign_signatures(prof3(), chi);
  IntInterval crit = critical_set(prof3(), chi, assign);
  CHECK(crit.lo == 1);
  CHECK(crit.hi == 3);  // critical m+w set {2,3}
  // motivic m for the psi of type (1,0): shift by -w(psi) = -1 -> {1,2}
  CHECK(crit.lo - 1 == 0);
  CHECK(crit.hi - 1 == 2);
  SUBCASE("empty interval when upsilon1 >= upsilon2") {
    IntInterval iv{3, 3};
    CHECK(iv.empty());
  }
}

TEST_CASE("gamma_factor") {
  auto chi = chi_of({{2, 0}}, 2);
  auto assign = assign_signatures(prof3(), chi);
  auto shifts = gamma_factor(prof3(), chi, assign);
  REQUIRE(shifts.size() == 1);
  CHECK(shifts[0] == std::vector<long long>{1, 1, -1});

  SUBCASE("r = d leaves only the second family, d terms") {
    auto big = chi_of({{5, -3}}, 2);
    auto ab = assign_signatures(prof3(), big);
    REQUIRE(ab.r[0] == 3);
    auto sh = gamma_factor(prof3(), big, ab);
    CHECK(sh[0].size() == 3);
    CHECK(sh[0] == std::vector<long long>{0, -2, -4});  // p_i + p2 = p_i - 3
  }
  SUBCASE("count is always d per place") {
    auto sh = gamma_factor(prof3(), chi, assign);
    CHECK(sh[0].size() == 3);
  }
}

TEST_CASE("oracle agrees on the worked example") {
  auto chi = chi_of({{2, 0}}, 2);
  auto oracle = critical_set_oracle(prof3(), chi);
  REQUIRE(oracle.has_value());
  CHECK(oracle->lo == 1);
  CHECK(oracle->hi == 3);

  SUBCASE("collision cases agree as no-critical-values") {
    CHECK_FALSE(critical_set_oracle(prof3(), chi_of({{3, -1}}, 2)).has_value());
  }
  SUBCASE("randomized oracle equivalence") {
    auto res = oracle_random(200, 20250810, 6);
    CHECK(res.instances == 200);
    CHECK(res.mismatches == 0);
  }
}

TEST_CASE("admissible_m_range") {
  SUBCASE("worked rank-3 range") {
    WeightVector mu{{{1, 0, -1}}, 0};
    InfinityType eta{{{1, 0}}};
    CompactShape shape(3, {{2, 1}});
    auto range = admissible_m_range(mu, eta, shape);
    CHECK(range.lo == 2);
    CHECK(range.hi == 2);
    CHECK_FALSE(range.empty());
    CHECK(range.theorem_empty());  // needs m > 3
  }
  SUBCASE("large character gap empties the range") {
    WeightVector mu{{{1, -1}}, 0};
    InfinityType eta{{{3, 0}}};
    CompactShape shape(2, {{1, 1}});
    auto range = admissible_m_range(mu, eta, shape);
    CHECK(range.hi == -1);
    CHECK(range.empty());
  }
  SUBCASE("upper bound equals upsilon2 - w under self-duality") {
    // cross-module identity via profile_from_gl_weights + chi_from_psi
    std::vector<std::vector<long long>> weights{{2, 0, -2}, {4, 0, -4}};
    const int n = 3;
    HeckeCharacterData psi;
    psi.name = "psi";
    psi.infinity.pairs = {{1, 0}, {2, -1}};
    psi.weight = 1;
    psi.validate();
    HodgeProfile prof = profile_from_gl_weights(weights, n);
    auto chi = chi_from_psi(psi);
    REQUIRE(has_critical_values(prof, chi));
    auto assign = assign_signatures(prof, chi);
    IntInterval crit = critical_set(prof, chi, assign);
    std::vector<std::pair<int, int>> places;
    for (int t = 0; t < 2; ++t) places.emplace_back(assign.r[static_cast<size_t>(t)], assign.s(t));
    CompactShape shape(n, places);
    WeightVector mu{weights, 0};
    auto range = admissible_m_range(mu, psi.infinity, shape);
    CHECK(range.hi == crit.hi - psi.weight);
  }
}
