#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "periods/driver.hpp"
#include "periods/proof.hpp"

using namespace periods;

TEST_CASE("lattice_check basics") {
  SymbolTable tab;
  int q1 = tab.add("Q1"), q2 = tab.add("Q2");
  int two_pi_i = tab.add(sym::TwoPiI, {unit_class::TRANSCENDENTAL});
  int u = tab.add("u", {unit_class::E_TENSOR_K});

  SUBCASE("an axiom is a member with coefficient 1") {
    Axiom ax = make_axiom("pair", PeriodExpr().times(q1, 1).times(q2, 1),
                          unit_class::E_TENSOR_K, "lemmadualityQ");
    auto cert = lattice_check(ax.relation, {ax}, unit_class::E_TENSOR_K, tab);
    REQUIRE(cert.member);
    REQUIRE(cert.combination.size() == 1);
    CHECK(cert.combination[0].second == 1);
  }
  SUBCASE("a transcendental alone is not a member") {
    auto cert = lattice_check(PeriodExpr().times(two_pi_i, 1), {}, unit_class::E_TENSOR_K, tab);
    CHECK_FALSE(cert.member);
    CHECK(cert.residual.exponent(two_pi_i) == 1);
  }
  SUBCASE("unit symbols are absorbed") {
    auto cert = lattice_check(PeriodExpr().times(u, 3), {}, unit_class::E_TENSOR_K, tab);
    CHECK(cert.member);
    REQUIRE(cert.unit_part.size() == 1);
    CHECK(cert.unit_part[0].second == 3);
  }
  SUBCASE("Q1 Q2 with the pairing axiom") {
    Axiom ax = make_axiom("pair", PeriodExpr().times(q1, 1).times(q2, 1),
                          unit_class::E_TENSOR_K, "lemmadualityQ");
    auto cert = lattice_check(PeriodExpr().times(q1, 1).times(q2, 1), {ax},
                              unit_class::E_TENSOR_K, tab);
    CHECK(cert.member);
  }
  SUBCASE("integer combinations with negative coefficients") {
    Axiom a = make_axiom("a", PeriodExpr().times(q1, 2).times(q2, 1), unit_class::E_TENSOR_K, "x");
    Axiom b = make_axiom("b", PeriodExpr().times(q1, 1).times(q2, 1), unit_class::E_TENSOR_K, "x");
    auto cert = lattice_check(PeriodExpr().times(q1, 1), {a, b}, unit_class::E_TENSOR_K, tab);
    REQUIRE(cert.member);  // target = a - b
  }
  SUBCASE("divisibility matters over Z") {
    Axiom a = make_axiom("a", PeriodExpr().times(q1, 2), unit_class::E_TENSOR_K, "x");
    auto cert = lattice_check(PeriodExpr().times(q1, 1), {a}, unit_class::E_TENSOR_K, tab);
    CHECK_FALSE(cert.member);
  }
}

TEST_CASE("lattice_check round-trips random integer combinations") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    SymbolTable tab;
    const int nsym = 6;
    for (int s = 0; s < nsym; ++s)
      tab.add("g" + std::to_string(s),
              s == 0 ? std::set<std::string>{unit_class::E_TENSOR_K} : std::set<std::string>{});
    std::vector<Axiom> axioms;
    for (int a = 0; a < 4; ++a) {
      PeriodExpr rel;
      for (int s = 0; s < nsym; ++s) rel.times(s, static_cast<long long>(rng() % 7) - 3);
      axioms.push_back(make_axiom("ax" + std::to_string(a), rel, unit_class::E_TENSOR_K, "x"));
    }
    PeriodExpr target;
    for (const auto& ax : axioms)
      target = target.mul(ax.relation.pow(static_cast<long long>(rng() % 9) - 4));
    target.times(0, static_cast<long long>(rng() % 5));  // unit noise
    auto cert = lattice_check(target, axioms, unit_class::E_TENSOR_K, tab);
    REQUIRE(cert.member);
    // reconstruct and compare
    PeriodExpr rebuilt;
    for (const auto& [name, c] : cert.combination)
      for (const auto& ax : axioms)
        if (ax.name == name) rebuilt = rebuilt.mul(ax.relation.pow(c));
    for (const auto& [name, c] : cert.unit_part) rebuilt.times(tab.id(name), c);
    CHECK(rebuilt == target);
  }
}

TEST_CASE("delta2 enters as a consistent relation vector") {
  // the square of the comparison determinant is carried as a relation, not
  // recomputed; adding it must not collapse the lattice
  SymbolTable tab;
  int delta_m = tab.add("delta(M)");
  int delta_a = tab.add("deltaA");
  int two_pi_i = tab.add(sym::TwoPiI, {unit_class::TRANSCENDENTAL});
  const int d = 3;
  const long long w = 2;
  Derivation deriv;
  deriv.axioms.push_back(make_axiom(
      "delta2",
      PeriodExpr().times(delta_m, 2).times(delta_a, -d).times(two_pi_i, w * d),
      unit_class::E_TENSOR_K, "delta2"));
  deriv.unit_context = unit_class::E_TENSOR_K;
  deriv.target = deriv.axioms[0].relation;
  CHECK(deriv.check(tab).member);
  deriv.target = PeriodExpr().times(two_pi_i, 1);
  CHECK_FALSE(deriv.check(tab).member);
  deriv.target = PeriodExpr().times(delta_m, 1);  // half the relation is not integral
  CHECK_FALSE(deriv.check(tab).member);
}

TEST_CASE("duality lemma") {
  CHECK(verify_duality_lemma(3, 1, 2).pass);
  CHECK(verify_duality_lemma(2, 0, 2).pass);
  CHECK(verify_duality_lemma(4, 1, 3).pass);
  CHECK_THROWS_AS(verify_duality_lemma(4, 2, 2), std::domain_error);
  CHECK_THROWS_AS(verify_duality_lemma(3, 2, 1), std::domain_error);
  SUBCASE("full sweep d <= 8") {
    for (const auto& rep : sweep_duality(8)) CHECK(rep.pass);
  }
}

TEST_CASE("c+ c- factorization") {
  CHECK(verify_cplus_cminus(2, 1, +1, true).pass);
  CHECK(verify_cplus_cminus(3, 2, +1, false).pass);
  CHECK(verify_cplus_cminus(5, 2, -1, true).pass);
  SUBCASE("degenerate splits are rejected as inadmissible") {
    CHECK_THROWS_AS(verify_cplus_cminus(3, 0, +1, true), std::domain_error);
  }
}

TEST_CASE("thmfact factorization") {
  CHECK(verify_thmfact(2, 1, +1, 2).pass);
  CHECK(verify_thmfact(3, 2, +1, 2).pass);
  CHECK(verify_thmfact(3, 2, +1, 3).pass);
  CHECK(verify_thmfact(3, 1, -1, 2, 1, 2).pass);
  SUBCASE("precondition floor(d/2) < r <= d") {
    CHECK_THROWS_AS(verify_thmfact(4, 2, +1, 2), std::domain_error);
    CHECK_THROWS_AS(verify_thmfact(4, 2, +1, 5), std::domain_error);
  }
}

TEST_CASE("evaluate_dS") {
  SymbolTable tab;
  SUBCASE("n=3, m=4, e=1") {
    DSEval ds = evaluate_dS(3, 4, 1, tab);
    CHECK(ds.in_range);
    CHECK(ds.expr.exponent(tab.id(sym::DiscKHalf)) == 2);
    CHECK(ds.expr.exponent(tab.id(sym::DeltaEpsL)) == 1);
    CHECK(ds.expr.exponent(tab.id(sym::TwoPiI)) == 21);
    CHECK(ds.factors ==
          std::vector<std::pair<long long, bool>>{{8, false}, {7, true}, {6, false}});
  }
  SUBCASE("n=1, m=2, e=1") {
    DSEval ds = evaluate_dS(1, 2, 1, tab);
    CHECK(ds.expr.exponent(tab.id(sym::DiscKHalf)) == 1);
    CHECK(ds.expr.exponent(tab.id(sym::DeltaEpsL)) == 0);
    CHECK(ds.expr.exponent(tab.id(sym::TwoPiI)) == 4);
  }
  SUBCASE("n=2, m=3, e=2") {
    DSEval ds = evaluate_dS(2, 3, 2, tab);
    CHECK(ds.expr.exponent(tab.id(sym::DiscKHalf)) == 1);
    CHECK(ds.expr.exponent(tab.id(sym::DeltaEpsL)) == 1);
    CHECK(ds.expr.exponent(tab.id(sym::TwoPiI)) == 22);
  }
  SUBCASE("m <= n is flagged") {
    CHECK_FALSE(evaluate_dS(3, 3, 1, tab).in_range);
  }
}

TEST_CASE("main theorem derivation") {
  CompactShape shape(3, {{2, 1}});
  SUBCASE("n=3, e=1, m=4, xi=0 passes with the documented exponent") {
    VerifyReport rep = derive_maintheorem(3, 1, 4, 0, shape);
    CHECK(rep.pass);
    // e(mn - n(n-1)/2) - xi = 12 - 3 = 9 in the target
    CHECK(rep.params == "(n=3,e=1,m=4,xi=0)");
  }
  SUBCASE("nonzero xi shifts the exponent and still derives") {
    CHECK(derive_maintheorem(3, 1, 4, 2, shape).pass);
    CHECK(derive_maintheorem(3, 1, 4, -4, shape).pass);
  }
  SUBCASE("formulanueva variant") {
    MainTheoremOptions opts;
    opts.variant_formulanueva = true;
    CHECK(derive_maintheorem(3, 1, 4, 0, shape, opts).pass);
  }
  SUBCASE("dropping lemaqhol is a failing negative control") {
    MainTheoremOptions opts;
    opts.with_lemaqhol = false;
    VerifyReport rep = derive_maintheorem(3, 1, 4, 0, shape, opts);
    CHECK_FALSE(rep.pass);
  }
  SUBCASE("xi enters both sides consistently") {
    for (long long xi : {-3LL, -1LL, 1LL, 3LL}) CHECK(derive_maintheorem(3, 1, 4, xi, shape).pass);
  }
}

TEST_CASE("prediction derivation") {
  CompactShape shape(3, {{2, 1}});
  SUBCASE("n=3 passes and reduces to the quadratic-period relation") {
    VerifyReport rep = derive_prediction(3, 1, 1, 4, shape);
    CHECK(rep.pass);
  }
  SUBCASE("n even reduces the packaged factor via the alternating branch") {
    CompactShape shape4(4, {{3, 1}});
    CHECK(derive_prediction(4, 1, 1, 6, shape4).pass);
  }
  SUBCASE("n odd uses the exterior-power Tate input") {
    CompactShape shape5(5, {{4, 1}, {5, 0}});
    CHECK(derive_prediction(5, 2, 2, 7, shape5).pass);
  }
  SUBCASE("without the conjecture toggle the target is not derivable") {
    PredictionOptions opts;
    opts.deligne_on = false;
    VerifyReport rep = derive_prediction(3, 1, 1, 4, shape, opts);
    CHECK_FALSE(rep.pass);
  }
  SUBCASE("discriminant perturbation fails without the Galois closure") {
    PredictionOptions opts;
    opts.disc_perturb = 1;
    opts.context = unit_class::E_PSI_E;
    CHECK_FALSE(derive_prediction(3, 1, 1, 4, shape, opts).pass);
    PredictionOptions wide;
    wide.disc_perturb = 1;
    CHECK(derive_prediction(3, 1, 1, 4, shape, wide).pass);
  }
  SUBCASE("positive derivation works even in the narrow context") {
    PredictionOptions opts;
    opts.context = unit_class::E_PSI_E;
    CHECK(derive_prediction(3, 1, 1, 4, shape, opts).pass);
  }
}

TEST_CASE("tate equivalence") {
  CHECK(check_tate_equivalence(2, 1, CompactShape(2, {{1, 1}})).pass);
  SUBCASE("definite shape: empty product branch") {
    CHECK(check_tate_equivalence(3, 2, CompactShape(3, {{3, 0}, {3, 0}})).pass);
  }
  SUBCASE("mixed signatures") {
    CHECK(check_tate_equivalence(4, 2, CompactShape(4, {{2, 2}, {4, 0}})).pass);
  }
}

TEST_CASE("exponent reconciliation") {
  CHECK(exponent_reconciliation(3, 1, 4, 1, 0, {2}));
  CHECK(exponent_reconciliation(5, 2, 8, -2, 3, {1, 4}));
  CHECK(exponent_grid_check(20250810));
}

TEST_CASE("every verification is deterministic") {
  auto a = verify_thmfact(3, 2, +1, 2);
  auto b = verify_thmfact(3, 2, +1, 2);
  CHECK(a.certificate == b.certificate);
  CHECK(a.steps == b.steps);
  auto c = derive_prediction(3, 1, 1, 4, CompactShape(3, {{2, 1}}));
  auto d = derive_prediction(3, 1, 1, 4, CompactShape(3, {{2, 1}}));
  CHECK(c.certificate == d.certificate);
}
