#include "dgar/arengine.hpp"

#include "dgar/homtensor.hpp"

namespace dgar {

namespace {

void gate_gorenstein(std::shared_ptr<const DGAlgebra> a, const ResolutionBudget& budget) {
  GorensteinReport rep = gorenstein(a, budget);
  if (!rep.verdict)
    throw NotGorenstein("algebra " + a->name +
                        " fails the Gorenstein checks, so no translate exists");
}

Elem dot(const Field& f, const Vec& a, const Vec& b) {
  Elem s = f.zero();
  for (size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

/* same graded dimensions, differentials and action tables (names aside) */
bool same_structure(const DGModule& x, const DGModule& y) {
  if (x.side != y.side || !(x.space == y.space)) return false;
  for (const auto& [n, dn] : x.space.dims()) {
    (void)dn;
    if (!x.diff_at(n).equals(y.diff_at(n))) return false;
    for (const auto& [p, dp] : x.alg->space.dims()) {
      (void)dp;
      if (!x.act_at(p, n).equals(y.act_at(p, n))) return false;
    }
  }
  return true;
}

/* The inverse dualizing bimodule, realized freely.  The dual of the algebra,
 * made a left module over the opposite algebra, must resolve onto a single
 * generator; its degree t0 identifies the dual with the t0-fold desuspension
 * of the algebra, so maps from the dual into the algebra form a copy of the
 * algebra suspended by t0.  Both actions are plain multiplication read at
 * shifted degrees. */
DGBimodule inverse_dualizer(std::shared_ptr<const DGAlgebra> a, const ResolutionBudget& budget) {
  auto aop = std::make_shared<const DGAlgebra>(opposite(*a));
  DGModule dr_right = switch_side_over_opposite(dual(regular_module(a, Side::Left)), aop);
  SemifreeResolution r = minimal_semifree_resolution(dr_right, budget);
  if (r.module.generator_count() != 1)
    throw Error("dual of " + a->name +
                " did not resolve onto a single generator; no free inverse dualizer");
  int t0 = r.module.gens[0].degree;

  DGBimodule w;
  w.left = suspend(regular_module(a, Side::Left), t0);
  DGModule rr = regular_module(a, Side::Right);
  for (const auto& [key, mat] : rr.act)
    w.right_act[{key.first, key.second - t0}] = mat;
  ValidationReport vr = validate_bimodule(w);
  if (!vr.valid) throw Error("inverse dualizer failed validation: " + vr.failures.front());
  return w;
}

}  // namespace

DGModule tau(const DGModule& m, const ResolutionBudget& budget) {
  if (m.side != Side::Left) throw Error("tau expects a left module");
  gate_gorenstein(m.alg, budget);
  SemifreeResolution res = minimal_semifree_resolution(m, budget);
  DGModule t = suspend(tensor_semifree_bimodule(dr_bimodule(m.alg), res.module), -1);
  t.name = "tau(" + m.name + ")";
  return t;
}

DGModule tau_inverse(const DGModule& m, const ResolutionBudget& budget) {
  if (m.side != Side::Left) throw Error("tau_inverse expects a left module");
  gate_gorenstein(m.alg, budget);
  DGBimodule w = inverse_dualizer(m.alg, budget);
  SemifreeResolution res = minimal_semifree_resolution(m, budget);
  DGModule t = suspend(tensor_semifree_bimodule(w, res.module), 1);
  t.name = "tau_inverse(" + m.name + ")";
  return t;
}

ARTriangle ar_triangle_ending_at(const DGModule& p, const ResolutionBudget& budget) {
  if (p.side != Side::Left) throw Error("ar_triangle_ending_at expects a left module");
  gate_gorenstein(p.alg, budget);
  EndContext ctx = end_context(p, budget);
  if (!ctx.algebra.local)
    throw Error("ar_triangle_ending_at needs an indecomposable end term; End(" + p.name +
                ") is not local");
  const Field& f = p.alg->field;
  int ed = ctx.algebra.dimension;

  DGBimodule dr = dr_bimodule(p.alg);
  DGModule sp = tensor_semifree_bimodule(dr, ctx.res);
  sp.name = "serre(" + p.name + ")";
  SemifreeHomComplex homs = hom_from_semifree(ctx.res, sp);
  Cohomology hco = cohomology(homs.cx);
  if (hco.h.dim(0) != ed)
    throw Error("maps into the twisted module do not match End(" + p.name + ") in dimension");

  /* Evaluation functional on degree-0 maps: for each generator g, its image
   * decomposes over the twisted module's generator blocks; read the
   * coefficient of g's own block at the counit slot, with sign alternating
   * in the generator degree.  Chainness is certified below, not assumed. */
  Vec ev = vec_zero(homs.cx.dim(0));
  for (size_t g = 0; g < ctx.res.gens.size(); ++g) {
    int t = ctx.res.gens[g].degree;
    int off = 0;
    for (size_t l = 0; l < g; ++l) off += dr.left.dim(t - ctx.res.gens[l].degree);
    Elem sg = (t % 2 != 0) ? f.neg(f.one()) : f.one();
    ev[size_t(homs.block_offset(0, int(g)) + off)] = sg;
  }
  {
    Matrix dlow = homs.cx.diff_at(-1);
    for (int c = 0; c < homs.cx.dim(-1); ++c)
      if (!f.is_zero(dot(f, ev, dlow.col(c))))
        throw Error("evaluation functional is not a cochain functional");
  }

  std::vector<DGMorphism> endphis;
  for (const Vec& r : ctx.reps)
    endphis.push_back(decode_semifree_hom(ctx.res, ctx.realized, 0, r));
  std::vector<DGMorphism> duals;
  for (int s = 0; s < ed; ++s)
    duals.push_back(decode_semifree_hom(ctx.res, sp, 0, hco.reps.at(0).col(s)));

  /* pairing[e][s] evaluates the composite of the s-th dual class after the
   * e-th endomorphism class; nondegeneracy is the duality made concrete */
  Matrix pairing = Matrix::zero(f, ed, ed);
  for (int s = 0; s < ed; ++s)
    for (int e = 0; e < ed; ++e) {
      Vec enc = encode_semifree_hom(ctx.res, homs,
                                    compose(duals[size_t(s)], endphis[size_t(e)]));
      pairing.set(e, s, dot(f, ev, enc));
    }
  if (!pairing.kernel_basis().empty())
    throw Error("duality pairing between End(" + p.name + ") and its twisted maps degenerated");

  /* the connecting functional: zero on the radical, one on the identity */
  const std::vector<Vec>& radrows = ctx.algebra.radical.basis();
  int rows = int(radrows.size()) + 1;
  Matrix sys = Matrix::zero(f, rows, ed);
  for (size_t j = 0; j < radrows.size(); ++j)
    for (int i = 0; i < ed; ++i) sys.set(int(j), i, radrows[j][size_t(i)]);
  for (int i = 0; i < ed; ++i) sys.set(rows - 1, i, ctx.algebra.unit_coords[size_t(i)]);
  Vec rhs = vec_zero(rows);
  rhs[size_t(rows - 1)] = f.one();
  auto lam = sys.solve_matrix(Matrix::from_cols(f, {rhs}, rows));
  if (!lam) throw Error("no functional kills the radical and takes 1 on the identity");

  auto csol = pairing.solve_matrix(Matrix::from_cols(f, {lam->col(0)}, ed));
  if (!csol) throw Error("connecting class system is inconsistent");
  Vec c = csol->col(0);
  if (vec_is_zero(c)) throw Error("connecting class vanished");

  Vec picoords = vec_zero(homs.cx.dim(0));
  for (int s = 0; s < ed; ++s)
    for (size_t i = 0; i < picoords.size(); ++i)
      picoords[i] = f.add(picoords[i], f.mul(c[size_t(s)], hco.reps.at(0).col(s)[i]));
  DGMorphism pi = decode_semifree_hom(ctx.res, sp, 0, picoords);
  require_valid(pi);
  if (!same_structure(pi.src, ctx.realized)) throw Error("resolution realization drifted");
  pi.src = ctx.realized;

  Cone co = cone(pi);
  ARTriangle t;
  t.mu = suspend_morphism(co.from_target, -1);
  t.nu = suspend_morphism(co.to_shifted_source, -1);
  if (!same_structure(t.nu.dst, ctx.realized)) throw Error("suspension round trip drifted");
  t.nu.dst = ctx.realized;
  t.tau_term = t.mu.src;
  t.tau_term.name = "tau(" + p.name + ")";
  t.middle = t.mu.dst;
  t.middle.name = "middle(" + p.name + ")";
  t.end = ctx.realized;
  t.pi = pi;

  int phi_end = ctx.res.generator_count();
  int phi_tau = phi(t.tau_term, budget);
  if (phi_tau != phi_end) throw Error("translate changed the generator count");
  if (phi(t.middle, budget) != phi_tau + phi_end)
    throw Error("middle generator count broke additivity");
  return t;
}

std::vector<std::pair<DGModule, ArrowLabel>> arrow_labels(const ARTriangle& t,
                                                          const ResolutionBudget& budget) {
  std::vector<std::pair<DGModule, ArrowLabel>> out;
  for (const Summand& x : split_summands(t.middle, budget)) {
    ArrowLabel lab;
    lab.alpha = x.multiplicity;
    ARTriangle back = ar_triangle_ending_at(tau_inverse(x.module, budget), budget);
    for (const Summand& y : split_summands(back.middle, budget))
      if (is_isomorphic(y.module, t.end, budget) == IsoVerdict::Yes) lab.beta += y.multiplicity;
    out.emplace_back(x.module, lab);
  }
  return out;
}

}  // namespace dgar
