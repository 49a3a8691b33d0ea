#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dgar/catalog.hpp"
#include "dgar/cohomology.hpp"
#include "dgar/errors.hpp"
#include "dgar/homtensor.hpp"
#include "dgar/ops.hpp"
#include "dgar/semifree.hpp"

using namespace dgar;

namespace {

const Field F = Field::rationals();

std::shared_ptr<const DGAlgebra> sphere3() {
  static auto a = sphere_algebra(F, 3);
  return a;
}

/* a, b in degree 3 with ab = c, ba = 0 */
std::shared_ptr<const DGAlgebra> noncomm() {
  DGAlgebra a;
  a.field = F;
  a.name = "noncomm";
  a.space.set_dim(0, 1);
  a.space.set_dim(3, 2);
  a.space.set_dim(6, 1);
  a.mul[{0, 0}] = Matrix::identity(F, 1);
  a.mul[{0, 3}] = Matrix::identity(F, 2);
  a.mul[{3, 0}] = Matrix::identity(F, 2);
  a.mul[{0, 6}] = Matrix::identity(F, 1);
  a.mul[{6, 0}] = Matrix::identity(F, 1);
  Matrix t(F, 1, 4);
  t.set(0, 1, F.one());
  a.mul[{3, 3}] = t;
  return std::make_shared<const DGAlgebra>(std::move(a));
}

/* g0 in degree 0 and g1 in degree 2 with d g1 = -x g0 */
SemifreeModule two_step(std::shared_ptr<const DGAlgebra> a) {
  SemifreeModule f;
  f.alg = a;
  SemifreeGenerator g0;
  g0.name = "g0";
  g0.degree = 0;
  SemifreeGenerator g1;
  g1.name = "g1";
  g1.degree = 2;
  Vec c = vec_zero(1);
  c[0] = F.from_long(-1);
  g1.dcoef[0] = c;
  f.gens = {g0, g1};
  return f;
}

SemifreeModule one_gen(std::shared_ptr<const DGAlgebra> a) {
  SemifreeModule f;
  f.alg = a;
  SemifreeGenerator g0;
  g0.name = "g0";
  g0.degree = 0;
  f.gens = {g0};
  return f;
}

DGMorphism x_mult(std::shared_ptr<const DGAlgebra> a) {
  DGModule reg = regular_module(a, Side::Left);
  DGMorphism f;
  f.src = suspend(reg, -3);
  f.dst = reg;
  f.degree = 0;
  Matrix one(F, 1, 1);
  one.set(0, 0, F.one());
  f.comp[3] = one;
  return f;
}

GradedSpace h_dims(const DGModule& m) { return cohomology(m).h; }

}  // namespace

TEST_CASE("semifree modules realize to validated free-type modules") {
  auto a = sphere3();
  SemifreeModule f = two_step(a);
  CHECK(validate_semifree(f).valid);
  CHECK(f.is_minimal());
  CHECK(f.generator_count() == 2);
  CHECK(f.dim_at(0) == 1);
  CHECK(f.dim_at(2) == 1);
  CHECK(f.dim_at(3) == 1);
  CHECK(f.dim_at(5) == 1);
  CHECK(f.dim_at(1) == 0);
  CHECK(f.block_offset(3, 1) == 1);
  CHECK(f.block_offset(5, 1) == 0);  // g0 contributes nothing in degree 5

  DGModule r = f.realize();
  CHECK(validate_module(r).valid);
  GradedSpace want;
  want.set_dim(0, 1);
  want.set_dim(2, 1);
  want.set_dim(3, 1);
  want.set_dim(5, 1);
  CHECK(r.space == want);
  CHECK(r.diff_at(2).at(0, 0) == F.from_long(-1));
  CHECK(r.diff_at(0).is_zero());

  GradedSpace h = h_dims(r);
  CHECK(h.dim(0) == 1);
  CHECK(h.dim(5) == 1);
  CHECK(h.total() == 2);
}

TEST_CASE("semifree edge shapes") {
  auto a = sphere3();
  SemifreeModule empty;
  empty.alg = a;
  CHECK(validate_semifree(empty).valid);
  CHECK(empty.realize().space.is_zero());

  /* unit coefficient: contractible, valid, not minimal */
  SemifreeModule c;
  c.alg = a;
  SemifreeGenerator g0;
  g0.name = "g0";
  g0.degree = 0;
  SemifreeGenerator g1;
  g1.name = "g1";
  g1.degree = -1;
  Vec one = vec_zero(1);
  one[0] = F.one();
  g1.dcoef[0] = one;
  c.gens = {g0, g1};
  CHECK(validate_semifree(c).valid);
  CHECK_FALSE(c.is_minimal());
  CHECK(h_dims(c.realize()).is_zero());

  /* coefficient on itself breaks the filtration */
  SemifreeModule bad = two_step(a);
  bad.gens[1].dcoef[1] = one;
  CHECK_FALSE(validate_semifree(bad).valid);
}

TEST_CASE("semifree comparison maps") {
  auto a = sphere3();
  SemifreeModule f = two_step(a);
  DGModule r = f.realize();
  Vec e = vec_zero(1);
  e[0] = F.one();
  DGMorphism id = semifree_map_to(f, r, {e, e});
  CHECK(validate_morphism(id).valid);
  for (const auto& [n, d] : r.space.dims()) {
    (void)d;
    CHECK(id.comp_at(n).equals(Matrix::identity(F, r.dim(n))));
  }
  CHECK_THROWS_AS(semifree_map_to(f, r, {e}), Error);
  CHECK_THROWS_AS(semifree_map_to(f, r, {e, vec_zero(2)}), Error);
}

TEST_CASE("hom complex from a semifree source matches the general route") {
  auto a = sphere3();
  SemifreeModule f = two_step(a);
  DGModule reg = regular_module(a, Side::Left);
  SemifreeHomComplex hc = hom_from_semifree(f, reg);
  CHECK(validate_module(hc.cx).valid);

  GradedSpace want;
  want.set_dim(-2, 1);
  want.set_dim(0, 1);
  want.set_dim(1, 1);
  want.set_dim(3, 1);
  CHECK(hc.cx.space == want);

  GeneralHomComplex gen = hom_complex(f.realize(), reg);
  CHECK(validate_module(gen.cx).valid);
  CHECK(gen.cx.space == hc.cx.space);
  CHECK(h_dims(gen.cx) == h_dims(hc.cx));
}

TEST_CASE("decoded homs are chain maps exactly for differential kernels") {
  auto a = sphere3();
  SemifreeModule f = two_step(a);
  DGModule reg = regular_module(a, Side::Left);
  SemifreeHomComplex hc = hom_from_semifree(f, reg);
  int checked = 0;
  for (const auto& [p, dim] : hc.cx.space.dims()) {
    Matrix d = hc.cx.diff_at(p);
    for (int j = 0; j < dim; ++j) {
      Vec e = vec_zero(dim);
      e[size_t(j)] = F.one();
      DGMorphism h = decode_semifree_hom(f, reg, p, e);
      bool cocycle = d.rows() == 0 || vec_is_zero(d.col(j));
      CHECK(validate_morphism(h).valid == cocycle);
      ++checked;
    }
  }
  CHECK(checked == 4);
  CHECK_THROWS_AS(decode_semifree_hom(f, reg, 0, vec_zero(5)), Error);
}

TEST_CASE("maps out of the regular module compute bottom cohomology") {
  auto a = sphere3();
  SemifreeModule fr = one_gen(a);
  Cone cx = cone(x_mult(a));
  for (const DGModule& n :
       {regular_module(a, Side::Left), cx.cone, suspend(regular_module(a, Side::Left), 2)}) {
    SemifreeHomComplex hc = hom_from_semifree(fr, n);
    Cohomology coh = cohomology(hc.cx);
    CHECK(coh.h.dim(0) == h_dims(n).dim(0));
  }
}

TEST_CASE("evaluation at the unit is an isomorphism of hom complexes") {
  auto a = sphere3();
  DGModule reg = regular_module(a, Side::Left);
  DGModule n = cone(x_mult(a)).cone;
  GeneralHomComplex hc = hom_complex(reg, n);

  DGMorphism ev;
  ev.src = hc.cx;
  ev.dst = as_complex(n);
  ev.degree = 0;
  for (const auto& [p, basis] : hc.basis) {
    int rows = n.dim(p);
    if (rows == 0) continue;
    Matrix c = Matrix::zero(F, rows, int(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j) {
      auto it = basis[j].find(0);
      if (it == basis[j].end()) continue;
      for (int i = 0; i < rows; ++i) c.set(i, int(j), it->second.at(i, 0));
    }
    if (!c.is_zero()) ev.comp[p] = c;
  }
  CHECK(validate_morphism(ev).valid);
  CHECK(is_strict_iso(ev));
}

TEST_CASE("dual regular bimodules validate") {
  for (auto a : {sphere3(), noncomm(), s2xs2_algebra(F), wedge_algebra(F)}) {
    DGBimodule bm = dr_bimodule(a);
    CHECK(validate_bimodule(bm).valid);
    auto top = a->space.top();
    REQUIRE(top);
    CHECK(bm.left.dim(-*top) == a->dim(*top));
    CHECK(bm.left.dim(0) == 1);
  }
}

TEST_CASE("tensoring with the regular module changes nothing") {
  auto a = sphere3();
  DGModule regr = regular_module(a, Side::Right);
  DGModule b = cone(x_mult(a)).cone;
  DGModule t = tensor_complex(regr, b);
  CHECK(validate_module(t).valid);
  CHECK(t.space == b.space);
  CHECK(h_dims(t) == h_dims(b));

  /* multiply out: the unit isomorphism onto b */
  auto basis = tensor_basis(regr, b);
  DGMorphism mu;
  mu.src = t;
  mu.dst = as_complex(b);
  mu.degree = 0;
  for (const auto& [n, els] : basis) {
    Matrix c = Matrix::zero(F, b.dim(n), int(els.size()));
    for (size_t k = 0; k < els.size(); ++k) {
      Vec ea = vec_zero(regr.dim(els[k].a_degree));
      ea[size_t(els[k].a_index)] = F.one();
      Vec eb = vec_zero(b.dim(n - els[k].a_degree));
      eb[size_t(els[k].b_index)] = F.one();
      Vec img = b.apply_act(els[k].a_degree, ea, n - els[k].a_degree, eb);
      for (size_t i = 0; i < img.size(); ++i) c.set(int(i), int(k), img[i]);
    }
    if (!c.is_zero()) mu.comp[n] = c;
  }
  CHECK(validate_morphism(mu).valid);
  CHECK(is_strict_iso(mu));
}

TEST_CASE("tensor routes agree on a semifree factor") {
  auto a = sphere3();
  SemifreeModule f = two_step(a);
  DGModule fr = f.realize();
  DGModule aright = dual(regular_module(a, Side::Left));
  REQUIRE(aright.side == Side::Right);

  DGModule t1 = tensor_semifree(aright, f);
  DGModule t2 = tensor_complex(aright, fr);
  CHECK(validate_module(t1).valid);
  CHECK(validate_module(t2).valid);
  CHECK(t1.space == t2.space);
  CHECK(h_dims(t1) == h_dims(t2));

  DGBimodule bm = dr_bimodule(a);
  DGModule b1 = tensor_semifree_bimodule(bm, f);
  DGModule b2 = tensor_bimodule(bm, fr);
  CHECK(b1.side == Side::Left);
  CHECK(validate_module(b1).valid);
  CHECK(validate_module(b2).valid);
  CHECK(b1.space == b2.space);
  CHECK(h_dims(b1) == h_dims(b2));
  CHECK(same_structure(*b1.alg, *a));
}

TEST_CASE("tensoring the dual regular bimodule with one generator returns it") {
  auto a = sphere3();
  DGBimodule bm = dr_bimodule(a);
  DGModule t = tensor_semifree_bimodule(bm, one_gen(a));
  CHECK(validate_module(t).valid);
  CHECK(t.dim(-3) == 1);
  CHECK(t.dim(0) == 1);
  InfSupAmp isa = inf_sup_amp(t);
  REQUIRE(isa.inf);
  CHECK(*isa.inf == -3);
  CHECK(*isa.sup == 0);
}

TEST_CASE("tensor factor sides are enforced") {
  auto a = sphere3();
  DGModule regl = regular_module(a, Side::Left);
  DGModule regr = regular_module(a, Side::Right);
  CHECK_THROWS_AS(tensor_complex(regl, regl), Error);
  CHECK_THROWS_AS(tensor_complex(regr, regr), Error);
  CHECK_THROWS_AS(hom_complex(regl, regr), Error);
}
