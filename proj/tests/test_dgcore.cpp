#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dgar/catalog.hpp"
#include "dgar/cohomology.hpp"
#include "dgar/errors.hpp"
#include "dgar/module.hpp"
#include "dgar/ops.hpp"

using namespace dgar;

namespace {

const Field F = Field::rationals();

/* Noncommutative fixture: a, b in degree 3 with ab = c, ba = 0. */
DGAlgebra noncomm_algebra() {
  DGAlgebra a;
  a.field = F;
  a.name = "noncomm";
  a.space.set_dim(0, 1);
  a.space.set_dim(3, 2);
  a.space.set_dim(6, 1);
  a.labels[0] = {"1"};
  a.labels[3] = {"a", "b"};
  a.labels[6] = {"c"};
  a.mul[{0, 0}] = Matrix::identity(F, 1);
  a.mul[{0, 3}] = Matrix::identity(F, 2);
  a.mul[{3, 0}] = Matrix::identity(F, 2);
  a.mul[{0, 6}] = Matrix::identity(F, 1);
  a.mul[{6, 0}] = Matrix::identity(F, 1);
  Matrix t(F, 1, 4);
  t.set(0, 1, F.one());  // a.b = c, all other products in degree 6 vanish
  a.mul[{3, 3}] = t;
  return a;
}

/* Invalid fixture: w^2 = s yet d(s) != dw.w + w.dw. */
DGAlgebra broken_leibniz_algebra() {
  DGAlgebra a;
  a.field = F;
  a.name = "broken";
  a.space.set_dim(0, 1);
  a.space.set_dim(2, 1);
  a.space.set_dim(3, 1);
  a.space.set_dim(4, 1);
  a.space.set_dim(5, 1);
  a.labels[0] = {"1"};
  a.labels[2] = {"w"};
  a.labels[3] = {"t"};
  a.labels[4] = {"s"};
  a.labels[5] = {"u"};
  for (int n : {2, 3, 4, 5}) {
    a.mul[{0, n}] = Matrix::identity(F, 1);
    a.mul[{n, 0}] = Matrix::identity(F, 1);
  }
  a.mul[{0, 0}] = Matrix::identity(F, 1);
  Matrix one(F, 1, 1);
  one.set(0, 0, F.one());
  a.diff[2] = one;  // d w = t
  a.diff[4] = one;  // d s = u
  a.mul[{2, 2}] = one;  // w.w = s
  return a;
}

/* Sphere-3 padded with an exact pair in degrees 4, 5. */
DGAlgebra padded_sphere3() {
  DGAlgebra a;
  a.field = F;
  a.name = "padded";
  a.space.set_dim(0, 1);
  a.space.set_dim(3, 1);
  a.space.set_dim(4, 1);
  a.space.set_dim(5, 1);
  a.labels[0] = {"1"};
  a.labels[3] = {"x"};
  a.labels[4] = {"p"};
  a.labels[5] = {"q"};
  for (int n : {3, 4, 5}) {
    a.mul[{0, n}] = Matrix::identity(F, 1);
    a.mul[{n, 0}] = Matrix::identity(F, 1);
  }
  a.mul[{0, 0}] = Matrix::identity(F, 1);
  Matrix one(F, 1, 1);
  one.set(0, 0, F.one());
  a.diff[4] = one;  // d p = q
  return a;
}

/* Top cohomology 3 with a nonzero differential out of degree 3. */
DGAlgebra cycle_plus_killer() {
  DGAlgebra a;
  a.field = F;
  a.name = "xpq";
  a.space.set_dim(0, 1);
  a.space.set_dim(3, 2);
  a.space.set_dim(4, 1);
  a.labels[0] = {"1"};
  a.labels[3] = {"x", "p"};
  a.labels[4] = {"q"};
  for (int n : {3, 4}) {
    a.mul[{0, n}] = Matrix::identity(F, a.dim(n));
    a.mul[{n, 0}] = Matrix::identity(F, a.dim(n));
  }
  a.mul[{0, 0}] = Matrix::identity(F, 1);
  Matrix d3(F, 1, 2);
  d3.set(0, 1, F.one());  // d x = 0, d p = q
  a.diff[3] = d3;
  return a;
}

bool same_module(const DGModule& a, const DGModule& b) {
  if (a.side != b.side || !(a.space == b.space)) return false;
  if (a.space.is_zero()) return true;
  int lo = *a.space.bottom(), hi = *a.space.top();
  for (int t = lo; t <= hi; ++t)
    if (!a.diff_at(t).equals(b.diff_at(t))) return false;
  for (auto& [p, dp] : a.alg->space.dims()) {
    (void)dp;
    for (int t = lo; t <= hi; ++t) {
      if (a.dim(t) == 0 || a.dim(p + t) == 0) continue;
      if (!a.act_at(p, t).equals(b.act_at(p, t))) return false;
    }
  }
  return true;
}

bool any_failure_mentions(const ValidationReport& rep, const std::string& word) {
  for (auto& s : rep.failures)
    if (s.find(word) != std::string::npos) return true;
  return false;
}

/* Multiplication-by-x morphism S^{-3}R -> R over the 3-sphere model. */
DGMorphism x_multiplication(const DGModule& reg) {
  DGModule src = suspend(reg, -3);
  DGMorphism f{src, reg, 0, {}};
  Matrix one(F, 1, 1);
  one.set(0, 0, F.one());
  f.comp[3] = one;
  return f;
}

/* Alternating-rank consequence of the triangle on cohomology:
 * dim H^n(cone) = corank H^n(f) + nullity H^{n+1}(f). */
void check_les_identity(const DGMorphism& f, const DGModule& cn) {
  Cohomology hs = cohomology(f.src), hd = cohomology(f.dst), hc = cohomology(cn);
  auto hf = h_map(f, hs, hd);
  int lo = 0, hi = 0;
  bool first = true;
  for (auto& c : {hs.h, hd.h, hc.h}) {
    if (c.is_zero()) continue;
    if (first || *c.bottom() - 1 < lo) lo = *c.bottom() - 1;
    if (first || *c.top() + 1 > hi) hi = *c.top() + 1;
    first = false;
  }
  auto rank_at = [&](int n) {
    auto it = hf.find(n);
    return it == hf.end() ? 0 : it->second.rank();
  };
  for (int n = lo; n <= hi; ++n) {
    int expect = (hd.h.dim(n) - rank_at(n)) + (hs.h.dim(n + 1) - rank_at(n + 1));
    CHECK(hc.h.dim(n) == expect);
  }
}

}  // namespace

TEST_CASE("algebra validation accepts the catalog and reports top degree") {
  for (auto& name : catalog_names()) {
    auto a = build_catalog_algebra(name, F);
    ValidationReport rep = validate_algebra(*a);
    CHECK(rep.valid);
  }
  CHECK(validate_algebra(*sphere_algebra(F, 3)).top_h == 3);
  CHECK(validate_algebra(*cp2_algebra(F)).top_h == 4);
  CHECK(validate_algebra(*s2xs2_algebra(F)).top_h == 4);
  CHECK(validate_algebra(*wedge_algebra(F)).top_h == 2);
  CHECK(validate_algebra(noncomm_algebra()).valid);
  CHECK(validate_algebra(padded_sphere3()).top_h == 3);
  CHECK(validate_algebra(cycle_plus_killer()).top_h == 3);
}

TEST_CASE("algebra validation refutes bad shapes and bad Leibniz") {
  DGAlgebra bad;
  bad.field = F;
  bad.space.set_dim(0, 1);
  bad.space.set_dim(1, 1);
  bad.mul[{0, 0}] = Matrix::identity(F, 1);
  bad.mul[{0, 1}] = Matrix::identity(F, 1);
  bad.mul[{1, 0}] = Matrix::identity(F, 1);
  ValidationReport r1 = validate_algebra(bad);
  CHECK_FALSE(r1.valid);
  CHECK(any_failure_mentions(r1, "connectivity"));

  ValidationReport r2 = validate_algebra(broken_leibniz_algebra());
  CHECK_FALSE(r2.valid);
  CHECK(any_failure_mentions(r2, "leibniz"));
  CHECK(any_failure_mentions(r2, "(w, w)"));
}

TEST_CASE("module builders validate on both sides") {
  for (auto& name : catalog_names()) {
    auto a = build_catalog_algebra(name, F);
    CHECK(validate_module(regular_module(a, Side::Left)).valid);
    CHECK(validate_module(regular_module(a, Side::Right)).valid);
    CHECK(validate_module(residue_field_module(a, Side::Left)).valid);
    CHECK(validate_module(residue_field_module(a, Side::Right)).valid);
  }
  auto s3 = sphere_algebra(F, 3);
  DGModule fm = free_module(s3, {0, 2}, Side::Left);
  CHECK(validate_module(fm).valid);
  CHECK(fm.space.dims() == std::map<int, int>{{0, 1}, {2, 1}, {3, 1}, {5, 1}});
  CHECK(validate_module(free_module(s3, {0, 2}, Side::Right)).valid);
  CHECK(same_module(free_module(s3, {0}, Side::Left), regular_module(s3, Side::Left)));
}

TEST_CASE("cohomology of the sphere model and of cones") {
  auto s3 = sphere_algebra(F, 3);
  DGModule reg = regular_module(s3, Side::Left);
  CHECK(cohomology(reg).h.dims() == std::map<int, int>{{0, 1}, {3, 1}});

  Cone contractible = cone(identity_morphism(reg));
  CHECK(validate_module(contractible.cone).valid);
  CHECK(cohomology(contractible.cone).h.is_zero());

  DGMorphism f = x_multiplication(reg);
  CHECK(validate_morphism(f).valid);
  Cone cx = cone(f);
  CHECK(validate_module(cx.cone).valid);
  CHECK(cohomology(cx.cone).h.dims() == std::map<int, int>{{0, 1}, {5, 1}});

  check_les_identity(identity_morphism(reg), contractible.cone);
  check_les_identity(f, cx.cone);
  DGModule k = residue_field_module(s3, Side::Left);
  Cone zc = cone(zero_morphism(k, reg));
  CHECK(validate_module(zc.cone).valid);
  CHECK(cohomology(zc.cone).h.dims() == std::map<int, int>{{-1, 1}, {0, 1}, {3, 1}});
  check_les_identity(zero_morphism(k, reg), zc.cone);
}

TEST_CASE("inf, sup and amplitude conventions") {
  auto s3 = sphere_algebra(F, 3);
  InfSupAmp z = inf_sup_amp(zero_module(s3, Side::Left));
  CHECK_FALSE(z.inf.has_value());
  CHECK_FALSE(z.sup.has_value());
  CHECK_FALSE(z.amp.has_value());
  DGModule reg = regular_module(s3, Side::Left);
  InfSupAmp r = inf_sup_amp(reg);
  CHECK(*r.inf == 0);
  CHECK(*r.sup == 3);
  CHECK(*r.amp == 3);
  InfSupAmp sr = inf_sup_amp(suspend(reg, 1));
  CHECK(*sr.inf == -1);
  CHECK(*sr.sup == 2);
  CHECK(*sr.amp == 3);
}

TEST_CASE("suspension laws") {
  auto s3 = sphere_algebra(F, 3);
  DGModule reg = regular_module(s3, Side::Left);
  CHECK(same_module(suspend(reg, 0), reg));
  CHECK(validate_module(suspend(reg, 1)).valid);
  CHECK(validate_module(suspend(reg, -3)).valid);
  CHECK(validate_module(suspend(regular_module(s3, Side::Right), 5)).valid);
  CHECK(same_module(suspend(suspend(reg, 1), -1), reg));
  CHECK(same_module(suspend(suspend(reg, 2), -5), suspend(reg, -3)));
  CHECK(cohomology(suspend(reg, 3)).h.dims() == std::map<int, int>{{-3, 1}, {0, 1}});
}

TEST_CASE("triangle maps around a cone compose to zero up to homotopy") {
  auto s3 = sphere_algebra(F, 3);
  DGModule reg = regular_module(s3, Side::Left);
  DGMorphism f = x_multiplication(reg);
  Cone cx = cone(f);
  CHECK(validate_morphism(cx.from_target).valid);
  CHECK(validate_morphism(cx.to_shifted_source).valid);

  DGMorphism pi = compose(cx.to_shifted_source, cx.from_target);
  for (auto& [t, mat] : pi.comp) CHECK(mat.is_zero());

  CHECK(is_null_homotopic(compose(cx.from_target, f)));
  DGMorphism connecting = compose(scale_morphism(F.from_long(-1), suspend_morphism(f, 1)),
                                  cx.to_shifted_source);
  CHECK(is_null_homotopic(connecting));
  CHECK_FALSE(is_null_homotopic(identity_morphism(reg)));
  CHECK(is_null_homotopic(zero_morphism(reg, reg)));
  CHECK(is_null_homotopic(identity_morphism(cone(identity_morphism(reg)).cone)));
}

TEST_CASE("truncation below strips exact low degrees") {
  auto s3 = sphere_algebra(F, 3);
  DGModule k = residue_field_module(s3, Side::Left);
  DGModule c = cone(identity_morphism(k)).cone;
  DGModule m = direct_sum(suspend(c, 5), k).sum;
  CHECK(m.space.dims() == std::map<int, int>{{-6, 1}, {-5, 1}, {0, 1}});
  Truncation tb = truncate_below(m);
  CHECK(tb.module.space.dims() == std::map<int, int>{{0, 1}});
  CHECK(validate_module(tb.module).valid);
  CHECK(validate_morphism(tb.map).valid);
  CHECK(is_quasi_iso(tb.map));

  Truncation ident = truncate_below(k);
  CHECK(same_module(ident.module, k));
  CHECK_THROWS_AS(truncate_below(zero_module(s3, Side::Left)), ValidationError);
  CHECK_THROWS_AS(truncate_below(c), ValidationError);
}

TEST_CASE("truncation above strips exact high degrees") {
  auto s3 = sphere_algebra(F, 3);
  DGModule k = residue_field_module(s3, Side::Left);
  DGModule c = cone(identity_morphism(k)).cone;
  DGModule m = direct_sum(k, suspend(c, -4)).sum;
  CHECK(m.space.dims() == std::map<int, int>{{0, 1}, {3, 1}, {4, 1}});
  Truncation ta = truncate_above(m);
  CHECK(ta.module.space.dims() == std::map<int, int>{{0, 1}});
  CHECK(validate_module(ta.module).valid);
  CHECK(validate_morphism(ta.map).valid);
  CHECK(is_quasi_iso(ta.map));
  CHECK(same_module(truncate_above(k).module, k));
  CHECK_THROWS_AS(truncate_above(zero_module(s3, Side::Left)), ValidationError);
}

TEST_CASE("truncations that cut through a nonzero degree") {
  auto xpq = std::make_shared<const DGAlgebra>(cycle_plus_killer());
  DGModule reg = regular_module(xpq, Side::Left);
  Truncation ta = truncate_above(reg);
  CHECK(ta.module.space.dims() == std::map<int, int>{{0, 1}, {3, 1}});
  CHECK(validate_module(ta.module).valid);
  CHECK(validate_morphism(ta.map).valid);
  CHECK(is_quasi_iso(ta.map));

  DGModule dreg = dual(reg);
  CHECK(validate_module(dreg).valid);
  Truncation tb = truncate_below(dreg);
  CHECK(tb.module.space.dims() == std::map<int, int>{{-3, 1}, {0, 1}});
  CHECK(validate_module(tb.module).valid);
  CHECK(validate_morphism(tb.map).valid);
  CHECK(is_quasi_iso(tb.map));
}

TEST_CASE("algebra truncation") {
  auto s3 = sphere_algebra(F, 3);
  AlgebraTruncation same = truncate_algebra(*s3);
  CHECK(same_structure(same.algebra, *s3));

  AlgebraTruncation padded = truncate_algebra(padded_sphere3());
  CHECK(validate_algebra(padded.algebra).valid);
  CHECK(same_structure(padded.algebra, *s3));

  AlgebraTruncation cut = truncate_algebra(cycle_plus_killer());
  CHECK(validate_algebra(cut.algebra).valid);
  CHECK(same_structure(cut.algebra, *s3));
  const Matrix& pr = cut.projection.at(3);
  CHECK(pr.rows() == 1);
  CHECK(pr.cols() == 2);
  CHECK(F.eq(pr.at(0, 0), F.one()));
  CHECK(F.is_zero(pr.at(0, 1)));
}

TEST_CASE("duality flips degrees and sides") {
  auto s3 = sphere_algebra(F, 3);
  DGModule reg = regular_module(s3, Side::Left);
  DGModule dreg = dual(reg);
  CHECK(dreg.side == Side::Right);
  CHECK(validate_module(dreg).valid);
  CHECK(cohomology(dreg).h.dims() == std::map<int, int>{{-3, 1}, {0, 1}});

  DGModule k = residue_field_module(s3, Side::Left);
  DGModule dk = dual(k);
  CHECK(dk.space.dims() == std::map<int, int>{{0, 1}});
  CHECK(validate_module(dk).valid);

  DGModule a = suspend(reg, 1);
  CHECK(dual(a).space.dims() == suspend(dual(reg), -1).space.dims());

  DGModule dd = dual(dual(reg));
  CHECK(validate_module(dd).valid);
  DGMorphism ev{reg, dd, 0, {}};
  for (auto& [t, d] : reg.space.dims()) {
    Matrix m = Matrix::identity(F, d);
    if (((t % 2) + 2) % 2 != 0) m = m.neg();
    ev.comp[t] = m;
  }
  CHECK(validate_morphism(ev).valid);
  CHECK(is_strict_iso(ev));

  DGModule dxpq = dual(regular_module(std::make_shared<const DGAlgebra>(cycle_plus_killer()),
                                      Side::Right));
  CHECK(dxpq.side == Side::Left);
  CHECK(validate_module(dxpq).valid);
}

TEST_CASE("opposite algebra") {
  auto s3 = sphere_algebra(F, 3);
  CHECK(same_structure(opposite(*s3), *s3));
  DGAlgebra nc = noncomm_algebra();
  DGAlgebra op = opposite(nc);
  CHECK(validate_algebra(op).valid);
  CHECK(same_structure(opposite(op), nc));
  // reversed products with the odd-degree sign: b*a = -c, a*b = 0
  const Matrix& t = op.mul.at({3, 3});
  CHECK(F.is_zero(t.at(0, 1)));
  CHECK(F.eq(t.at(0, 2), F.from_long(-1)));
  CHECK(F.is_zero(t.at(0, 0)));
  CHECK(F.is_zero(t.at(0, 3)));
}

TEST_CASE("side switching over the opposite algebra") {
  auto s3 = sphere_algebra(F, 3);
  auto op = std::make_shared<const DGAlgebra>(opposite(*s3));
  DGModule dreg = dual(regular_module(s3, Side::Left));  // right module
  DGModule sw = switch_side_over_opposite(dreg, op);
  CHECK(sw.side == Side::Left);
  CHECK(validate_module(sw).valid);
  DGModule back = switch_side_over_opposite(sw, s3);
  CHECK(back.side == Side::Right);
  CHECK(same_module(back, dreg));

  auto nc = std::make_shared<const DGAlgebra>(noncomm_algebra());
  auto ncop = std::make_shared<const DGAlgebra>(opposite(*nc));
  DGModule r = regular_module(nc, Side::Right);
  DGModule swl = switch_side_over_opposite(r, ncop);
  CHECK(validate_module(swl).valid);
}

TEST_CASE("graded linear maps between modules") {
  auto s3 = sphere_algebra(F, 3);
  DGModule reg = regular_module(s3, Side::Left);
  DGModule k = residue_field_module(s3, Side::Left);
  CHECK(linear_hom_basis(reg, reg, 0).size() == 1);
  CHECK(linear_hom_basis(reg, reg, 3).size() == 1);
  CHECK(linear_hom_basis(k, reg, 0).empty());
  CHECK(linear_hom_basis(reg, k, 0).size() == 1);
}

TEST_CASE("cohomology algebra and module structure") {
  auto s3 = sphere_algebra(F, 3);
  HAlgebra ha = h_algebra(*s3);
  CHECK(validate_algebra(*ha.algebra).valid);
  CHECK(same_structure(*ha.algebra, *s3));
  HAlgebra hp = h_algebra(padded_sphere3());
  CHECK(same_structure(*hp.algebra, *s3));

  DGModule reg = regular_module(s3, Side::Left);
  DGModule cx = cone(x_multiplication(reg)).cone;
  DGModule hm = h_module(cx, ha);
  CHECK(hm.space.dims() == std::map<int, int>{{0, 1}, {5, 1}});
  CHECK(validate_module(hm).valid);
}
