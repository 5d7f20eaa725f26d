#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "periods/hecke.hpp"
#include "periods/hodge.hpp"

using namespace periods;

TEST_CASE("generic instance construction") {
  SUBCASE("rank 1, epsilon = +1: one free symbol, empty minus block") {
    SymbolTable tab;
    PolarizedInstance inst = build_generic_instance(1, 1, +1, true, tab);
    CHECK(inst.d_plus() == 1);
    CHECK(inst.d_minus() == 0);
    CHECK(inst.a_entry(+1, 1, 1) == LaurentPoly::symbol(tab.id("a+(1,1)")));
    CHECK(c_dual_pm(inst, -1).is_one());
  }
  SUBCASE("odd rank with epsilon = +1 zeroes the middle minus column") {
    SymbolTable tab;
    PolarizedInstance inst = build_generic_instance(3, 2, +1, true, tab);
    CHECK(inst.a_entry(-1, 1, 2).is_zero());
    CHECK_FALSE(inst.a_entry(+1, 1, 2).is_zero());
  }
  SUBCASE("odd rank with epsilon = -1 zeroes the middle plus column") {
    SymbolTable tab;
    PolarizedInstance inst = build_generic_instance(3, 1, -1, true, tab);
    CHECK(inst.a_entry(+1, 1, 2).is_zero());
    CHECK_FALSE(inst.a_entry(-1, 1, 2).is_zero());
  }
  SUBCASE("inconsistent parity and epsilon are rejected") {
    SymbolTable tab;
    CHECK_THROWS_AS(build_generic_instance(3, 2, -1, true, tab), std::domain_error);
    CHECK_THROWS_AS(build_generic_instance(3, 1, +1, true, tab), std::domain_error);
    CHECK_THROWS_AS(build_generic_instance(3, 3, +1, true, tab), std::domain_error);
  }
  SUBCASE("dependent columns satisfy the Frobenius relation") {
    SymbolTable tab;
    PolarizedInstance inst = build_generic_instance(4, 2, +1, false, tab);
    for (int j = 1; j <= 2; ++j) {
      Monomial lam_inv = inv_mono(inst.lambda_mono(j));
      CHECK(inst.a_entry(+1, 1, 5 - j) == inst.a_entry(+1, 1, j).scaled(lam_inv));
      CHECK(inst.a_entry(-1, 1, 5 - j) == -inst.a_entry(-1, 1, j).scaled(lam_inv));
    }
  }
}

TEST_CASE("delta_of") {
  SUBCASE("rank 2 generic value") {
    SymbolTable tab;
    PolarizedInstance inst = build_generic_instance(2, 1, +1, true, tab);
    // det(P~) = -2 lam(1)^-1 a+(1,1) a-(1,1)
    LaurentPoly expect = LaurentPoly::monomial(
        Monomial(-2, {{tab.id("lam(1)"), -1}, {tab.id("a+(1,1)"), 1}, {tab.id("a-(1,1)"), 1}}));
    CHECK(det(inst.p_tilde()) == expect);
    RatFunc delta = delta_of(inst);
    CHECK(delta.reduced());  // monomial denominator folds
    CHECK(delta.num() == LaurentPoly::monomial(Monomial(
                             Rational(-1, 2),
                             {{tab.id("lam(1)"), 1}, {tab.id("a+(1,1)"), -1}, {tab.id("a-(1,1)"), -1}})));
  }
  SUBCASE("identity comparison matrix has delta = 1") {
    // delta on a trivially-split instance pieces together from 1x1 blocks
    CHECK(det(std::vector<std::vector<LaurentPoly>>{}) == LaurentPoly(1L));
    RatFunc one(LaurentPoly(1L), LaurentPoly(1L));
    CHECK(one.reduced());
  }
  SUBCASE("even rank with unbalanced split is degenerate") {
    SymbolTable tab;
    PolarizedInstance inst = build_generic_instance(2, 2, +1, true, tab);
    CHECK_THROWS_AS(delta_of(inst), std::domain_error);
  }
  SUBCASE("rational-function proportionality via cross-multiplication") {
    SymbolTable tab;
    PolarizedInstance inst = build_generic_instance(2, 1, +1, true, tab);
    RatFunc delta = delta_of(inst);
    // delta ~ lam(1) * (a+ a-)^{-1} up to Q^x
    RatFunc rhs(LaurentPoly::monomial(Monomial(
        1, {{tab.id("lam(1)"), 1}, {tab.id("a+(1,1)"), -1}, {tab.id("a-(1,1)"), -1}})));
    auto q = proportional_up_to_units(delta, rhs, tab, unit_class::RATIONAL);
    REQUIRE(q.has_value());
    CHECK(q->coeff == Rational(-1, 2));
    CHECK(q->unit.empty());
  }
}

TEST_CASE("c_dual_pm block determinants") {
  SymbolTable tab;
  PolarizedInstance inst = build_generic_instance(2, 1, +1, true, tab);
  CHECK(c_dual_pm(inst, +1) == LaurentPoly::symbol(tab.id("a+(1,1)")));
  CHECK(c_dual_pm(inst, -1) == LaurentPoly::symbol(tab.id("a-(1,1)")));
  SymbolTable tab2;
  PolarizedInstance definite = build_generic_instance(1, 0, -1, true, tab2);
  CHECK(c_dual_pm(definite, +1).is_one());
}

TEST_CASE("quadratic periods") {
  SUBCASE("definition unfolds to lambda mu deltaA^-1") {
    SymbolTable tab;
    PolarizedInstance inst = build_generic_instance(2, 1, +1, false, tab);
    PeriodExpr q1 = quadratic_period(inst, 1);
    CHECK(q1.exponent(tab.id("lam(1)")) == 1);
    CHECK(q1.exponent(tab.id("mu(1)")) == 1);
    CHECK(q1.exponent(tab.id("deltaA")) == -1);
  }
  SUBCASE("paired product is a unit for trivial A") {
    SymbolTable tab;
    PolarizedInstance inst = build_generic_instance(4, 2, +1, true, tab);
    for (int j = 1; j <= 2; ++j) {
      PeriodExpr prod = quadratic_period(inst, j).mul(quadratic_period(inst, 5 - j));
      auto cert = lattice_check(prod, {}, unit_class::E_TENSOR_K, tab);
      CHECK(cert.member);
    }
  }
  SUBCASE("paired product with nontrivial A is deltaA^-2 times a unit") {
    SymbolTable tab;
    PolarizedInstance inst = build_generic_instance(4, 2, +1, false, tab);
    PeriodExpr prod = quadratic_period(inst, 1).mul(quadratic_period(inst, 4));
    CHECK(prod.exponent(tab.id("deltaA")) == -2);
    PeriodExpr rest = prod.mul(PeriodExpr().times(tab.id("deltaA"), 2));
    CHECK(lattice_check(rest, {}, unit_class::E_TENSOR_K, tab).member);
  }
  SUBCASE("middle period of odd rank is a unit for trivial A") {
    SymbolTable tab;
    PolarizedInstance inst = build_generic_instance(3, 2, +1, true, tab);
    CHECK(lattice_check(quadratic_period(inst, 2), {}, unit_class::E_TENSOR_K, tab).member);
  }
}

TEST_CASE("twist rules") {
  SymbolTable tab;
  SUBCASE("even twist") {
    auto axioms = twist_rules(2, 1, 2, +1, tab);
    REQUIRE(axioms.size() == 5);
    CHECK(axioms[1].relation.exponent(tab.id(sym::TwoPiI)) == -2);  // t d+ = 2
    CHECK(axioms[1].relation.exponent(tab.id("c+(M(2))")) == 1);
    CHECK(axioms[1].relation.exponent(tab.id("c+(M)")) == -1);
  }
  SUBCASE("odd twist swaps the signs") {
    SymbolTable t2;
    auto axioms = twist_rules(3, 2, 1, +1, t2);
    // c+(M(1)) relates to c-(M) with exponent t*d- = 1
    CHECK(axioms[1].relation.exponent(t2.id("c+(M(1))")) == 1);
    CHECK(axioms[1].relation.exponent(t2.id("c-(M)")) == -1);
    CHECK(axioms[1].relation.exponent(t2.id(sym::TwoPiI)) == -1);
  }
  SUBCASE("zero twist is an identity relation") {
    SymbolTable t3;
    auto axioms = twist_rules(2, 1, 0, +1, t3);
    CHECK(axioms[0].relation.exponent(t3.id(sym::TwoPiI)) == 0);
    CHECK(axioms[1].relation ==
          PeriodExpr().times(t3.id("c+(M(0))"), 1).times(t3.id("c+(M)"), -1));
  }
  SUBCASE("Artin twist with eps = -1 crosses the signs") {
    SymbolTable t4;
    auto axioms = twist_rules(3, 2, 0, -1, t4);
    const auto& plus = axioms[3];
    CHECK(plus.relation.exponent(t4.id("c+(M@[eps])")) == 1);
    CHECK(plus.relation.exponent(t4.id("c-(M)")) == -1);
    CHECK(plus.relation.exponent(t4.id("delta[eps]")) == -1);  // d^{-} = 1
  }
}

TEST_CASE("hodge-riemann support check") {
  std::vector<long long> p{3, 1, -1};
  const long long w = 2;
  std::set<std::pair<int, int>> antidiag{{1, 3}, {2, 2}, {3, 1}};
  CHECK(check_hodge_riemann(p, w, antidiag));

  SUBCASE("first-relation violation") {
    auto bad = antidiag;
    bad.insert({1, 1});  // p1 + p1 = 6 > 2
    CHECK_FALSE(check_hodge_riemann(p, w, bad));
  }
  SUBCASE("missing anti-diagonal pair means degeneracy") {
    std::set<std::pair<int, int>> missing{{1, 3}, {2, 2}};
    CHECK_FALSE(check_hodge_riemann(p, w, missing));
  }
  SUBCASE("monotone: shrinking below the anti-diagonal keeps acceptance only if intact") {
    auto extra = antidiag;
    extra.insert({2, 3});  // p2 + p3 = 0 <= 2, allowed
    CHECK(check_hodge_riemann(p, w, extra));
    CHECK(check_hodge_riemann(p, w, antidiag));      // shrunk to the anti-diagonal: ok
    auto broken = extra;
    broken.erase({1, 3});                            // shrunk through the anti-diagonal
    CHECK_FALSE(check_hodge_riemann(p, w, broken));
  }
  SUBCASE("profile-level overload") {
    HodgeProfile prof;
    prof.d = 3;
    prof.w = 2;
    prof.p = {p, p};
    CHECK(check_hodge_riemann(prof, antidiag));
  }
}

TEST_CASE("yoshida axioms") {
  SUBCASE("single place") {
    SymbolTable tab;
    auto axioms = yoshida_axioms(2, 1, 1, tab);
    REQUIRE(axioms.size() == 3);
    CHECK(axioms[0].relation.exponent(tab.id(sym::DiscKHalf)) == -1);  // d+ = 1
    CHECK(axioms[0].relation.exponent(tab.id("c+(M,s1)")) == -1);
  }
  SUBCASE("d_plus = 0 carries no discriminant power") {
    SymbolTable tab;
    auto axioms = yoshida_axioms(2, 0, 1, tab);
    CHECK(axioms[0].relation.exponent(tab.id(sym::DiscKHalf)) == 0);
  }
  SUBCASE("delta relation over two places") {
    SymbolTable tab;
    auto axioms = yoshida_axioms(2, 1, 2, tab);
    const auto& rel = axioms[2].relation;
    CHECK(rel.exponent(tab.id(sym::DiscKHalf)) == -2);  // D_K^{d/2} = (D_K^{1/2})^2
    CHECK(rel.exponent(tab.id("delta(M,s1)")) == -1);
    CHECK(rel.exponent(tab.id("delta(M,s2)")) == -1);
  }
}

TEST_CASE("exprdeltaQ determinant identity for all admissible small ranks") {
  for (int d = 1; d <= 5; ++d)
    for (const auto& [dp, eps] : admissible_splits(d))
      for (bool a_trivial : {true, false}) {
        SymbolTable tab;
        PolarizedInstance inst = build_generic_instance(d, dp, eps, a_trivial, tab);
        LaurentPoly lhs = det(inst.p_tilde());
        Monomial lam_inv(1, {});
        for (int j = 1; 2 * j <= d; ++j) lam_inv = mul_mono(lam_inv, inv_mono(inst.lambda_mono(j)));
        LaurentPoly rhs = (c_dual_pm(inst, +1) * c_dual_pm(inst, -1)).scaled(lam_inv);
        auto q = proportional_quotient(lhs, rhs);
        REQUIRE(q.has_value());
        CHECK(q->unit.empty());  // the ratio is the rational constant of the column operations
      }
}
