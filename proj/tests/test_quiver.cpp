#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dgar/arengine.hpp"
#include "dgar/catalog.hpp"
#include "dgar/constructions.hpp"
#include "dgar/errors.hpp"
#include "dgar/ops.hpp"
#include "dgar/quiver.hpp"
#include "dgar/spherequiver.hpp"

using namespace dgar;

namespace {

const Field F = Field::rationals();

ResolutionBudget bud() { return ResolutionBudget{64, -24, 24}; }

std::map<int, int> hdims(const DGModule& m) { return cohomology(m).h.dims(); }

QuiverVertex vx(const std::string& id) {
  QuiverVertex v;
  v.id = id;
  v.phi_count = 1;
  v.amp = 2;
  return v;
}

bool message_contains(const Error& err, const char* needle) {
  return std::string(err.what()).find(needle) != std::string::npos;
}

long phi_of(const QuiverVertex& v) { return v.phi_count; }
long amp_of(const QuiverVertex& v) { return v.amp; }

}  // namespace

TEST_CASE("the d=3 window has two components and passes every structural check") {
  SphereQuiverResult sq = sphere_quiver(3, 6, 4);
  CHECK(sq.d == 3);
  CHECK(sq.components == 2);
  CHECK(sq.quiver.vertices.size() == 13 * 5);

  QuiverCheck st = check_stable(sq.quiver);
  CHECK(st.ok);
  CHECK(st.failures.empty());

  for (const QuiverArrow& a : sq.quiver.arrows) {
    CHECK(a.label.alpha == 1);
    CHECK(a.label.beta == 1);
  }

  /* components split by the parity of the shift */
  CHECK(sq.component_of.at("(0,0)") == sq.component_of.at("(2,0)"));
  CHECK(sq.component_of.at("(0,0)") == sq.component_of.at("(4,3)"));
  CHECK(sq.component_of.at("(0,0)") != sq.component_of.at("(1,0)"));
  CHECK(sq.component_of.at("(1,2)") == sq.component_of.at("(-3,1)"));

  /* stats follow the row formulas */
  const QuiverVertex* v = sq.quiver.find("(-2,1)");
  REQUIRE(v != nullptr);
  CHECK(v->inf == 0);
  CHECK(v->amp == 5);
  CHECK(v->phi_count == 2);
  CHECK(sq.quiver.tau.at("(-2,1)") == "(0,1)");
  CHECK(sq.quiver.tau.count("(5,0)") == 0);

  CHECK(check_additive(sq.quiver, phi_of).ok);

  /* amp is not additive on the bottom row */
  QuiverCheck amp_check = check_additive(sq.quiver, amp_of);
  CHECK_FALSE(amp_check.ok);
  REQUIRE_FALSE(amp_check.failures.empty());
  CHECK(amp_check.failures.front().find(",0)") != std::string::npos);

  QuiverCheck const_check = check_additive(sq.quiver, [](const QuiverVertex&) { return 1L; });
  CHECK_FALSE(const_check.ok);
}

TEST_CASE("every interior vertex of the d=3 window sits in the half grid") {
  SphereQuiverResult sq = sphere_quiver(3, 6, 4);
  int checked = 0;
  for (const QuiverVertex& v : sq.quiver.vertices) {
    if (!v.interior) continue;
    std::vector<std::string> win = neighborhood_window(sq.quiver, v.id);
    ZAWindowReport rep = check_za_infinity_window(sq.quiver, win);
    CHECK(rep.ok);
    CHECK_FALSE(rep.degenerate);
    if (v.object->m == 0) CHECK(rep.coords.at(v.id).second == 1);
    ++checked;
  }
  CHECK(checked == 13 + 3 * 11);

  /* the edge vertex and the row above it land on rows 1 and 2 */
  ZAWindowReport edge = check_za_infinity_window(sq.quiver, neighborhood_window(sq.quiver, "(0,0)"));
  REQUIRE(edge.ok);
  CHECK(edge.coords.at("(0,0)").second == 1);
  CHECK(edge.coords.at("(0,1)").second == 2);
}

TEST_CASE("component counts follow the shift step") {
  SphereQuiverResult four = sphere_quiver(4, 6, 4);
  CHECK(four.components == 3);
  CHECK(check_stable(four.quiver).ok);
  CHECK(check_additive(four.quiver, phi_of).ok);

  SphereQuiverResult two = sphere_quiver(2, 3, 2);
  CHECK(two.components == 1);
  CHECK(check_stable(two.quiver).ok);

  CHECK_THROWS_AS(sphere_quiver(1, 2, 2), Error);
  CHECK_THROWS_AS(sphere_quiver(3, -1, 2), Error);
}

TEST_CASE("grid recognition rejects a wrong translate and flags degenerate windows") {
  /* center of degree four whose translate points straight up */
  TranslationQuiver q;
  for (const char* id : {"c", "u", "d", "ul", "dr"}) q.vertices.push_back(vx(id));
  q.arrows.push_back({"u", "c", {1, 1}});
  q.arrows.push_back({"dr", "c", {1, 1}});
  q.arrows.push_back({"c", "d", {1, 1}});
  q.arrows.push_back({"c", "ul", {1, 1}});
  q.tau["c"] = "u";
  ZAWindowReport bad = check_za_infinity_window(q, {"c", "u", "d", "ul", "dr"});
  CHECK_FALSE(bad.ok);
  CHECK(bad.counterexample.has_value());

  TranslationQuiver lone;
  lone.vertices.push_back(vx("only"));
  ZAWindowReport solo = check_za_infinity_window(lone, {"only"});
  CHECK(solo.ok);
  CHECK(solo.degenerate);
  CHECK(solo.coords.at("only") == std::pair<int, int>(0, 1));

  /* translate-only windows carry no row information and are flagged */
  TranslationQuiver shift;
  shift.vertices.push_back(vx("x"));
  shift.vertices.push_back(vx("y"));
  shift.tau["x"] = "y";
  ZAWindowReport flat = check_za_infinity_window(shift, {"x", "y"});
  CHECK(flat.ok);
  CHECK(flat.degenerate);
  CHECK(flat.coords.at("y").first == flat.coords.at("x").first + 1);
  CHECK(flat.coords.at("y").second == flat.coords.at("x").second);

  TranslationQuiver pair;
  pair.vertices.push_back(vx("x"));
  pair.vertices.push_back(vx("y"));
  pair.arrows.push_back({"x", "y", {1, 1}});
  ZAWindowReport down = check_za_infinity_window(pair, {"x", "y"});
  CHECK(down.ok);
  CHECK_FALSE(down.degenerate);

  try {
    SphereQuiverResult sq = sphere_quiver(3, 6, 4);
    check_za_infinity_window(sq.quiver, {"(0,0)", "(5,3)"});
    CHECK(false);
  } catch (const Error& err) {
    CHECK(message_contains(err, "not arrow-closed"));
  }
  try {
    TranslationQuiver empty;
    check_za_infinity_window(empty, {});
    CHECK(false);
  } catch (const Error& err) {
    CHECK(message_contains(err, "not arrow-closed"));
  }
  try {
    TranslationQuiver one;
    one.vertices.push_back(vx("a"));
    check_za_infinity_window(one, {"a", "ghost"});
    CHECK(false);
  } catch (const Error& err) {
    CHECK(message_contains(err, "unknown vertex"));
  }
}

TEST_CASE("stability check failures name the offending vertex") {
  TranslationQuiver loops;
  loops.vertices.push_back(vx("a"));
  loops.arrows.push_back({"a", "a", {1, 1}});
  QuiverCheck lc = check_stable(loops);
  CHECK_FALSE(lc.ok);
  REQUIRE_FALSE(lc.failures.empty());
  CHECK(lc.failures.front().find("loop") != std::string::npos);

  TranslationQuiver dangle;
  dangle.vertices.push_back(vx("a"));
  dangle.arrows.push_back({"a", "b", {1, 1}});
  QuiverCheck dc = check_stable(dangle);
  CHECK_FALSE(dc.ok);
  CHECK(dc.failures.front().find("dangles") != std::string::npos);

  TranslationQuiver squeeze;
  for (const char* id : {"a", "b", "c"}) squeeze.vertices.push_back(vx(id));
  squeeze.tau["a"] = "c";
  squeeze.tau["b"] = "c";
  QuiverCheck sc = check_stable(squeeze);
  CHECK_FALSE(sc.ok);
  CHECK(sc.failures.front().find("not injective") != std::string::npos);

  TranslationQuiver broken;
  for (const char* id : {"n", "m", "t"}) broken.vertices.push_back(vx(id));
  broken.arrows.push_back({"m", "n", {1, 1}});
  broken.tau["n"] = "t";
  QuiverCheck bc = check_stable(broken);
  CHECK_FALSE(bc.ok);
  CHECK(bc.failures.front().find("symmetry broken at n") != std::string::npos);

  /* triangle-shaped quiver with swapped labels on the two sides */
  TranslationQuiver good;
  for (const char* id : {"n", "m", "t"}) good.vertices.push_back(vx(id));
  good.arrows.push_back({"m", "n", {2, 3}});
  good.arrows.push_back({"t", "m", {3, 2}});
  good.tau["n"] = "t";
  CHECK(check_stable(good).ok);
}

TEST_CASE("dot export is pinned and deterministic") {
  TranslationQuiver empty;
  CHECK(quiver_to_dot(empty) == "digraph quiver {\n}\n");

  TranslationQuiver one;
  QuiverVertex a = vx("a");
  a.amp = 3;
  QuiverVertex b = vx("b");
  b.amp = 5;
  b.phi_count = 2;
  one.vertices.push_back(a);
  one.vertices.push_back(b);
  one.arrows.push_back({"a", "b", {1, 1}});
  CHECK(quiver_to_dot(one) ==
        "digraph quiver {\n"
        "  rankdir=LR;\n"
        "  \"a\" [label=\"a phi=1 amp=3\"];\n"
        "  \"b\" [label=\"b phi=2 amp=5\"];\n"
        "  \"a\" -> \"b\" [label=\"(1,1)\"];\n"
        "}\n");

  std::string first = quiver_to_dot(sphere_quiver(3, 2, 1).quiver);
  std::string second = quiver_to_dot(sphere_quiver(3, 2, 1).quiver);
  CHECK(first == second);
  CHECK(first.find("\"(0,0)\"") != std::string::npos);
  CHECK(first.find("style=dashed") != std::string::npos);
}

TEST_CASE("catalog realization and lookup agree with the resolution engine") {
  auto a = sphere_algebra(F, 3);
  DGModule reg = regular_module(a, Side::Left);

  DGModule r00 = realize_sphere_object(a, {0, 0}, bud());
  CHECK(is_isomorphic(r00, reg, bud()) == IsoVerdict::Yes);

  DGModule r01 = realize_sphere_object(a, {0, 1}, bud());
  CHECK(hdims(r01) == std::map<int, int>{{-2, 1}, {3, 1}});
  CHECK(phi(r01, bud()) == 2);

  std::optional<SphereObject> back = identify_against_catalog(reg, 6, 4, bud());
  REQUIRE(back.has_value());
  CHECK(back->j == 0);
  CHECK(back->m == 0);

  /* the middle of the triangle at the free module is the length-two object */
  ARTriangle tri = ar_triangle_ending_at(reg, bud());
  std::optional<SphereObject> mid = identify_against_catalog(tri.middle, 6, 4, bud());
  REQUIRE(mid.has_value());
  CHECK(mid->j == 0);
  CHECK(mid->m == 1);

  /* the one-step cone construction lands on a shifted length-two object */
  SemifreeModule x1 = case1({minimal_semifree_resolution(reg, bud()).module, {}}, bud());
  std::optional<SphereObject> cased = identify_against_catalog(x1.realize(), 6, 4, bud());
  REQUIRE(cased.has_value());
  CHECK(cased->j == -2);
  CHECK(cased->m == 1);
  CHECK(phi(x1.realize(), bud()) == 2);

  /* translate of a realized object is the realized translate, three samples */
  for (SphereObject o : {SphereObject{0, 0}, SphereObject{-2, 1}, SphereObject{0, 1}}) {
    DGModule lhs = tau(realize_sphere_object(a, o, bud()), bud());
    DGModule rhs = realize_sphere_object(a, {o.j + 2, o.m}, bud());
    CHECK(is_isomorphic(lhs, rhs, bud()) == IsoVerdict::Yes);
  }

  /* middle summands at (0,1) are exactly the quiver in-neighbours */
  ARTriangle tri2 = ar_triangle_ending_at(r01, bud());
  std::vector<Summand> parts = split_summands(tri2.middle, bud());
  REQUIRE(parts.size() == 2);
  std::set<std::pair<int, int>> seen;
  for (const Summand& s : parts) {
    CHECK(s.multiplicity == 1);
    std::optional<SphereObject> o = identify_against_catalog(s.module, 6, 4, bud());
    REQUIRE(o.has_value());
    seen.insert({o->j, o->m});
  }
  CHECK(seen == std::set<std::pair<int, int>>{{0, 2}, {2, 0}});

  for (const auto& [mod, label] : arrow_labels(tri2, bud())) {
    CHECK(label.alpha == 1);
    CHECK(label.beta == 1);
  }

  /* a quiver assembled from that triangle is a legal stable patch */
  TranslationQuiver patch;
  for (const char* id : {"end", "mid0", "mid1", "back"}) patch.vertices.push_back(vx(id));
  patch.arrows.push_back({"mid0", "end", {1, 1}});
  patch.arrows.push_back({"mid1", "end", {1, 1}});
  patch.arrows.push_back({"back", "mid0", {1, 1}});
  patch.arrows.push_back({"back", "mid1", {1, 1}});
  patch.tau["end"] = "back";
  CHECK(check_stable(patch).ok);
}

TEST_CASE("lookup refuses wrong algebras and reports undersized windows") {
  auto a = sphere_algebra(F, 3);
  DGModule reg = regular_module(a, Side::Left);

  try {
    identify_against_catalog(suspend(reg, 5), 4, 4, bud());
    CHECK(false);
  } catch (const Error& err) {
    CHECK(message_contains(err, "window too small"));
  }

  CHECK_FALSE(identify_against_catalog(direct_sum(reg, reg).sum, 6, 4, bud()).has_value());

  auto w = wedge_algebra(F);
  try {
    identify_against_catalog(regular_module(w, Side::Left), 6, 4, bud());
    CHECK(false);
  } catch (const Error& err) {
    CHECK(message_contains(err, "one-line cohomology"));
  }
  try {
    realize_sphere_object(w, {0, 1}, bud());
    CHECK(false);
  } catch (const Error& err) {
    CHECK(message_contains(err, "one-line cohomology"));
  }
}
