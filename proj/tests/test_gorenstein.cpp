#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "dgar/catalog.hpp"
#include "dgar/errors.hpp"
#include "dgar/gorenstein.hpp"

using namespace dgar;

namespace {

const Field F = Field::rationals();

/* Small degree window keeps the residue-field resolutions shallow while still
 * certifying hom degrees well below zero. */
ResolutionBudget probe_budget() { return ResolutionBudget{40, -16, 16}; }

GradedSpace one_at(int n) {
  GradedSpace g;
  g.set_dim(n, 1);
  return g;
}

}  // namespace

TEST_CASE("spheres pass the residue probe with k in the top degree") {
  for (int d : {2, 3, 4, 7}) {
    auto a = sphere_algebra(F, d);
    Condition1Report rep = check_condition1(a, probe_budget());
    CHECK(rep.degree == d);
    CHECK(rep.verdict);
    for (const Condition1Side* side : {&rep.left, &rep.right}) {
      CHECK(side->dims == one_at(d));
      CHECK(side->window_lo <= 0);
      CHECK(side->concentrated);
      CHECK_FALSE(side->resolution_complete);
    }
  }
}

TEST_CASE("wedge fails the residue probe with a two-dimensional top class") {
  Condition1Report rep = check_condition1(wedge_algebra(F), probe_budget());
  CHECK(rep.degree == 2);
  CHECK_FALSE(rep.verdict);
  CHECK(rep.left.dims.dim(2) == 2);
  CHECK(rep.right.dims.dim(2) == 2);
  CHECK(rep.left.window_lo <= 0);
  CHECK_FALSE(rep.left.concentrated);
}

TEST_CASE("scalar algebra passes every check at degree zero") {
  auto a = std::make_shared<const DGAlgebra>(scalar_algebra(F));
  Condition1Report c1 = check_condition1(a, probe_budget());
  CHECK(c1.degree == 0);
  CHECK(c1.verdict);
  CHECK(c1.left.resolution_complete);
  CHECK(c1.left.dims == one_at(0));

  Condition2Report c2 = check_condition2(a);
  CHECK(c2.verdict);

  Condition5Report c5 = check_condition5(a, probe_budget());
  REQUIRE(c5.verdict.has_value());
  CHECK(*c5.verdict);

  GorensteinReport rep = gorenstein(a, probe_budget());
  CHECK(rep.verdict);
  CHECK(rep.agreement);
}

TEST_CASE("tiny generator budgets still certify a window when it reaches zero") {
  /* Two generators stop the sphere-3 resolution at cochain degree 4, which
   * certifies hom degrees >= 0: enough to see k concentrated at the top. */
  Condition1Report rep = check_condition1(sphere_algebra(F, 3), {2, -16, 16});
  CHECK(rep.left.window_lo == 0);
  CHECK(rep.left.dims == one_at(3));
  CHECK(rep.verdict);

  /* One generator stops at cochain degree 2 and certifies nothing at 0. */
  CHECK_THROWS_AS(check_condition1(sphere_algebra(F, 3), {1, -16, 16}), BudgetExceeded);
}

TEST_CASE("dual symmetry holds for spheres and products, fails for the wedge") {
  for (int d : {2, 3, 7}) {
    Condition2Report rep = check_condition2(sphere_algebra(F, d));
    CHECK(rep.degree == d);
    CHECK(rep.verdict);
    CHECK(rep.left.dims_match);
    CHECK(rep.left.iso_found);
    REQUIRE(rep.left.iso.count(0) == 1);
    CHECK_FALSE(F.is_zero(rep.left.iso.at(0).at(0, 0)));
    REQUIRE(rep.left.iso.count(-d) == 1);
    CHECK_FALSE(F.is_zero(rep.left.iso.at(-d).at(0, 0)));
  }

  Condition2Report cp2 = check_condition2(cp2_algebra(F));
  CHECK(cp2.degree == 4);
  CHECK(cp2.verdict);
  CHECK(cp2.left.source_dims == GradedSpace({{-4, 1}, {-2, 1}, {0, 1}}));

  Condition2Report prod = check_condition2(s2xs2_algebra(F));
  CHECK(prod.degree == 4);
  CHECK(prod.verdict);
  CHECK(prod.left.source_dims == GradedSpace({{-4, 1}, {-2, 2}, {0, 1}}));

  Condition2Report w = check_condition2(wedge_algebra(F));
  CHECK_FALSE(w.verdict);
  CHECK_FALSE(w.left.dims_match);
  CHECK(w.left.source_dims == GradedSpace({{-2, 2}, {0, 1}}));
  CHECK(w.left.target_dims == GradedSpace({{-2, 1}, {0, 2}}));
  CHECK_FALSE(w.left.iso_found);
}

TEST_CASE("dual symmetry isomorphisms are invertible in every degree") {
  for (const char* name : {"sphere-3", "cp2-like", "s2xs2"}) {
    Condition2Report rep = check_condition2(build_catalog_algebra(name, F));
    for (const Condition2Side* side : {&rep.left, &rep.right}) {
      REQUIRE(side->iso_found);
      for (const auto& [n, dim] : side->source_dims.dims()) {
        REQUIRE(side->iso.count(n) == 1);
        CHECK(side->iso.at(n).rank() == dim);
      }
    }
  }
}

TEST_CASE("the dual of a sphere algebra is compact with one generator") {
  for (int d : {2, 3, 4, 7}) {
    Condition5Report rep = check_condition5(sphere_algebra(F, d), probe_budget());
    REQUIRE(rep.verdict.has_value());
    CHECK(*rep.verdict);
    for (const CompactnessCertificate* cert : {&rep.left, &rep.right}) {
      CHECK(cert->verdict == "compact");
      CHECK(cert->generators == 1);
      CHECK(cert->generator_degrees == std::map<int, int>{{-d, 1}});
    }
  }
}

TEST_CASE("duals of the other finite catalog algebras are compact, the wedge is not settled") {
  for (const char* name : {"cp2-like", "s2xs2"}) {
    Condition5Report rep = check_condition5(build_catalog_algebra(name, F), probe_budget());
    REQUIRE(rep.verdict.has_value());
    CHECK(*rep.verdict);
    CHECK(rep.left.generators == 1);
    CHECK(rep.left.generator_degrees == std::map<int, int>{{-4, 1}});
  }

  Condition5Report w = check_condition5(wedge_algebra(F), probe_budget());
  CHECK_FALSE(w.verdict.has_value());
  CHECK(w.left.verdict == "not-within-budget");
  CHECK(w.right.verdict == "not-within-budget");
  CHECK_FALSE(w.left.stop_reason.empty());
}

TEST_CASE("combined verdicts match the catalog and never claim false compactness") {
  std::map<std::string, bool> expected = {
      {"sphere-2", true}, {"sphere-3", true}, {"sphere-4", true}, {"sphere-7", true},
      {"cp2-like", true}, {"s2xs2", true},    {"wedge", false},
  };
  for (const auto& [name, want] : expected) {
    GorensteinReport rep = gorenstein(build_catalog_algebra(name, F), probe_budget());
    CHECK(rep.agreement);
    CHECK(rep.verdict == want);
    if (want) {
      REQUIRE(rep.cond4_left.has_value());
      CHECK(*rep.cond4_left);
      REQUIRE(rep.cond4_right.has_value());
      CHECK(*rep.cond4_right);
    } else {
      CHECK_FALSE(rep.cond4_left.has_value());
      CHECK_FALSE(rep.cond5.verdict.has_value());
    }
  }
}

TEST_CASE("every check agrees with every other on all definite verdicts") {
  for (const std::string& name : catalog_names()) {
    auto a = build_catalog_algebra(name, F);
    Condition1Report c1 = check_condition1(a, probe_budget());
    Condition2Report c2 = check_condition2(a);
    Condition5Report c5 = check_condition5(a, probe_budget());
    CHECK(c1.verdict == c2.verdict);
    if (c5.verdict.has_value()) CHECK(*c5.verdict == c1.verdict);
  }
}
