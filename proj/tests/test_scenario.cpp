#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "periods/driver.hpp"
#include "periods/scenario.hpp"

using namespace periods;

namespace {

const char* kWorked = R"({
  "n": 3, "e": 1, "a0": 0,
  "weights": [[1, 0, -1]],
  "psi": {"pairs": [[1, 0]], "weight": 1},
  "shape": [[2, 1]],
  "options": {"seed": 1}
})";

}  // namespace

TEST_CASE("scenario parsing") {
  Scenario sc = parse_scenario(kWorked);
  CHECK(sc.n == 3);
  CHECK(sc.e == 1);
  CHECK(sc.weights == std::vector<std::vector<long long>>{{1, 0, -1}});
  CHECK(sc.psi.weight == 1);
  REQUIRE(sc.shape.has_value());
  CHECK(sc.shape->places == std::vector<std::pair<int, int>>{{2, 1}});
  CHECK(sc.options.seed == 1);
}

TEST_CASE("scenario validation errors carry the field path") {
  auto expect_error = [](const char* text, const char* needle) {
    try {
      parse_scenario(text);
      FAIL_CHECK("expected a ScenarioError for ", needle);
    } catch (const ScenarioError& ex) {
      CHECK(std::string(ex.what()).find(needle) != std::string::npos);
    }
  };
  expect_error(R"({"e": 1})", "'n'");
  expect_error(R"({"n": 2, "e": 1, "weights": [[0, 1]], "psi": {"pairs": [[1,0]], "weight": 1}})",
               "weakly decreasing");
  expect_error(R"({"n": 2, "e": 1, "weights": [[1, 0]], "psi": {"pairs": [[1,1]], "weight": 2}})",
               "critical");
  expect_error(R"({"n": 2, "e": 1, "weights": [[1, 0]], "psi": {"pairs": [[1,0]], "weight": 3}})",
               "psi");
  expect_error(R"({"n": 2, "e": 1, "weights": [[1, 0]], "psi": {"pairs": [[1,0]], "weight": 1},
                   "shape": [[3, 0]]})",
               "shape");
  expect_error("not json", "invalid JSON");
}

TEST_CASE("critical report on the worked scenario is stable") {
  Scenario sc = parse_scenario(kWorked);
  std::string a = report_critical(sc);
  std::string b = report_critical(sc);
  CHECK(a == b);
  CHECK(a.find("r=2 s=1") != std::string::npos);
  CHECK(a.find("motivic m: {1,2}") != std::string::npos);
  CHECK(a.find("admissible m: {2}") != std::string::npos);
  CHECK(a.find("theorem-grade (m>n): {}") != std::string::npos);
  CHECK(a.find("oracle agreement: exact") != std::string::npos);
  CHECK(a.find("MISMATCH") == std::string::npos);
}

TEST_CASE("definite scenario is flagged") {
  Scenario sc = parse_scenario(R"({
    "n": 3, "e": 1,
    "weights": [[1, 0, -1]],
    "psi": {"pairs": [[4, 0]], "weight": 4}
  })");
  std::string text = report_critical(sc);
  CHECK(text.find("t=8  r=3 s=0  (definite signature)") != std::string::npos);
  CHECK(text.find("critical m+w: {4,5,6,7}") != std::string::npos);
  CHECK(text.find("motivic m: {0,1,2,3}") != std::string::npos);
  CHECK(text.find("shape: (3,0)  [from signatures]") != std::string::npos);
  CHECK(text.find("oracle agreement: exact") != std::string::npos);
}

TEST_CASE("two places intersect the per-place windows") {
  Scenario sc = parse_scenario(R"({
    "n": 3, "e": 2,
    "weights": [[2, 0, -2], [4, 0, -4]],
    "psi": {"pairs": [[1, 0], [2, -1]], "weight": 1}
  })");
  std::string text = report_critical(sc);
  CHECK(text.find("sigma1: t=2  r=2 s=1") != std::string::npos);
  CHECK(text.find("sigma2: t=6  r=2 s=1") != std::string::npos);
  CHECK(text.find("upsilon1=1 upsilon2=3") != std::string::npos);
  CHECK(text.find("admissible m: {2}") != std::string::npos);
  CHECK(text.find("-> ok") != std::string::npos);
}

TEST_CASE("weyl report lists the coset table") {
  Scenario sc = parse_scenario(kWorked);
  std::string text = report_weyl(sc);
  CHECK(text.find("|W^1| = 3") != std::string::npos);
  CHECK(text.find("[hodgedecomp]") != std::string::npos);
  SUBCASE("non-dominant weights are diagnosed") {
    Scenario bad = sc;
    bad.weights = {{-1, 0, 1}};
    CHECK_THROWS_AS(report_weyl(bad), ScenarioError);
  }
  SUBCASE("shape is required") {
    Scenario noshape = sc;
    noshape.shape.reset();
    CHECK_THROWS_AS(report_weyl(noshape), ScenarioError);
  }
}
