#include "dgar/endalg.hpp"

#include <algorithm>
#include <numeric>

#include "dgar/invertible.hpp"

namespace dgar {

namespace {

bool vec_equal(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!f.eq(a[i], b[i])) return false;
  return true;
}

Vec unit_at(const Field& f, int n, int i) {
  Vec v = vec_zero(n);
  v[size_t(i)] = f.one();
  return v;
}

Vec alg_mult(const std::vector<Matrix>& table, const Field& f, const Vec& u, const Vec& v) {
  Vec out = vec_zero(int(v.size()));
  for (size_t i = 0; i < u.size(); ++i) {
    if (f.is_zero(u[i])) continue;
    out = vec_add(f, out, vec_scale(f, u[i], table[i].apply(v)));
  }
  return out;
}

struct TableAlgebra {
  Field fld = Field::rationals();
  int dim = 0;
  std::vector<Matrix> table;
  Vec unit;

  Vec mult(const Vec& u, const Vec& v) const { return alg_mult(table, fld, u, v); }
};

/* End modulo radical, with maps between the ambient and quotient coordinates.
 * Complement coordinates are the non-pivot positions of the radical's rref
 * basis, so reduction is elimination against those rows. */
struct QuotientData {
  TableAlgebra q;
  std::vector<Vec> rad_rows;
  std::vector<int> rad_pivots;
  std::vector<int> comp_pos;
  int ambient = 0;

  Vec reduce(Vec v) const {
    const Field& f = q.fld;
    for (size_t r = 0; r < rad_rows.size(); ++r) {
      Elem c = v[size_t(rad_pivots[r])];
      if (!f.is_zero(c)) v = vec_sub(f, v, vec_scale(f, c, rad_rows[r]));
    }
    Vec out = vec_zero(int(comp_pos.size()));
    for (size_t j = 0; j < comp_pos.size(); ++j) out[j] = v[size_t(comp_pos[j])];
    return out;
  }
  Vec embed(const Vec& qv) const {
    Vec out = vec_zero(ambient);
    for (size_t j = 0; j < comp_pos.size(); ++j) out[size_t(comp_pos[j])] = qv[j];
    return out;
  }
};

QuotientData quotient_by_radical(const EndAlgebra& a) {
  const Field& f = a.radical.field();
  QuotientData qd;
  qd.ambient = a.dimension;
  qd.q.fld = f;
  qd.rad_rows = a.radical.basis();
  for (const Vec& row : qd.rad_rows) {
    int p = 0;
    while (f.is_zero(row[size_t(p)])) ++p;
    qd.rad_pivots.push_back(p);
  }
  std::vector<bool> pivot(size_t(a.dimension), false);
  for (int p : qd.rad_pivots) pivot[size_t(p)] = true;
  for (int j = 0; j < a.dimension; ++j)
    if (!pivot[size_t(j)]) qd.comp_pos.push_back(j);

  qd.q.dim = int(qd.comp_pos.size());
  qd.q.unit = qd.reduce(a.unit_coords);
  for (int j = 0; j < qd.q.dim; ++j) {
    Vec ej = qd.embed(unit_at(f, qd.q.dim, j));
    std::vector<Vec> cols;
    for (int l = 0; l < qd.q.dim; ++l) {
      Vec el = qd.embed(unit_at(f, qd.q.dim, l));
      cols.push_back(qd.reduce(alg_mult(a.table, f, ej, el)));
    }
    qd.q.table.push_back(Matrix::from_cols(f, cols, qd.q.dim));
  }
  return qd;
}

/* Monic minimal polynomial of x, low coefficients first. */
std::vector<Elem> min_poly(const TableAlgebra& q, const Vec& x) {
  std::vector<Vec> powers{q.unit};
  Vec cur = q.unit;
  for (int k = 1; k <= q.dim + 1; ++k) {
    cur = q.mult(x, cur);
    Matrix span = Matrix::from_cols(q.fld, powers, q.dim);
    if (auto c = span.solve(cur)) {
      std::vector<Elem> poly(size_t(k) + 1, q.fld.zero());
      poly[size_t(k)] = q.fld.one();
      for (size_t i = 0; i < c->size(); ++i) poly[i] = q.fld.neg((*c)[i]);
      return poly;
    }
    powers.push_back(cur);
  }
  throw Error("minimal polynomial search failed to terminate");
}

Elem eval_poly_scalar(const Field& f, const std::vector<Elem>& poly, const Elem& x) {
  Elem acc = f.zero();
  for (size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
  return acc;
}

Vec eval_poly(const TableAlgebra& q, const std::vector<Elem>& poly, const Vec& x) {
  Vec acc = vec_zero(q.dim);
  for (size_t i = poly.size(); i-- > 0;) {
    acc = q.mult(x, acc);
    acc = vec_add(q.fld, acc, vec_scale(q.fld, poly[i], q.unit));
  }
  return acc;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  return out;
}

/* All rational roots, found exactly from divisor candidates of the
 * integerized polynomial; an oversized coefficient just yields no candidates. */
std::vector<Elem> rational_roots(const Field& f, const std::vector<Elem>& poly) {
  std::vector<Elem> roots;
  if (!f.is_rationals()) {
    long p = f.characteristic();
    if (p > 4096) return roots;
    for (long v = 0; v < p; ++v) {
      Elem x = f.from_long(v);
      if (f.is_zero(eval_poly_scalar(f, poly, x))) roots.push_back(x);
    }
    return roots;
  }
  mpz_class den(1);
  for (const Elem& c : poly)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> ip;
  for (const Elem& c : poly) {
    mpq_class v = c * mpq_class(den);
    ip.push_back(v.get_num());
  }
  size_t low = 0;
  while (low < ip.size() && ip[low] == 0) ++low;
  if (low > 0) roots.push_back(f.zero());
  if (low + 1 >= ip.size()) return roots;
  mpz_class a0 = abs(ip[low]), an = abs(ip.back());
  if (a0 > 1000000 || an > 1000000) return roots;
  for (long p : divisors(a0.get_si())) {
    for (long qv : divisors(an.get_si())) {
      for (int sign : {1, -1}) {
        Elem cand = f.div(f.from_long(sign * p), f.from_long(qv));
        if (f.is_zero(eval_poly_scalar(f, poly, cand))) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

/* Exact search for a nontrivial idempotent: candidates built from the basis,
 * each split through a rational root of its minimal polynomial.  Finding one
 * certifies "not local"; exhausting candidates proves nothing. */
std::optional<Vec> quotient_idempotent(const QuotientData& qd) {
  const TableAlgebra& q = qd.q;
  const Field& f = q.fld;
  if (q.dim <= 1) return std::nullopt;

  std::vector<Vec> cands;
  for (int i = 0; i < q.dim; ++i) cands.push_back(unit_at(f, q.dim, i));
  for (int i = 0; i < q.dim; ++i)
    for (int j = i + 1; j < q.dim; ++j) {
      cands.push_back(vec_add(f, cands[size_t(i)], cands[size_t(j)]));
      cands.push_back(vec_sub(f, cands[size_t(i)], cands[size_t(j)]));
      cands.push_back(q.mult(cands[size_t(i)], cands[size_t(j)]));
    }

  for (const Vec& x : cands) {
    if (Matrix::from_cols(f, {q.unit, x}, q.dim).rank() < 2) continue;
    std::vector<Elem> mp = min_poly(q, x);
    if (mp.size() <= 2) continue;
    for (const Elem& lam : rational_roots(f, mp)) {
      /* divide out (t - lam): top-down synthetic division */
      size_t deg = mp.size() - 1;
      std::vector<Elem> quo(deg, f.zero());
      Elem carry = mp[deg];
      for (size_t i = deg; i-- > 0;) {
        quo[i] = carry;
        carry = f.add(mp[i], f.mul(lam, carry));
      }
      Elem qlam = eval_poly_scalar(f, quo, lam);
      if (f.is_zero(qlam)) continue;
      Vec e = vec_scale(f, f.inv(qlam), eval_poly(q, quo, x));
      if (vec_is_zero(e) || vec_equal(f, e, q.unit)) continue;
      if (!vec_equal(f, q.mult(e, e), e))
        throw Error("idempotent candidate failed its own defining identity");
      return e;
    }
  }
  return std::nullopt;
}

Vec lift_idempotent(const EndAlgebra& a, const QuotientData& qd, const Vec& qe) {
  const Field& f = a.radical.field();
  Vec x = qd.embed(qe);
  for (int it = 0; it < 64; ++it) {
    Vec x2 = alg_mult(a.table, f, x, x);
    if (vec_equal(f, x2, x)) return x;
    Vec x3 = alg_mult(a.table, f, x2, x);
    x = vec_sub(f, vec_scale(f, f.from_long(3), x2), vec_scale(f, f.from_long(2), x3));
  }
  throw Error("idempotent lifting failed to converge");
}

/* Trace form of the regular representation; the kernel is certified to be a
 * nilpotent two-sided ideal before it is accepted as the radical. */
Subspace radical_subspace(const EndAlgebra& a) {
  const Field& f = a.radical.field();
  int n = a.dimension;
  std::vector<Elem> tr(size_t(n), f.zero());
  for (int k = 0; k < n; ++k)
    for (int d = 0; d < n; ++d) tr[size_t(k)] = f.add(tr[size_t(k)], a.table[size_t(k)].at(d, d));
  Matrix gram(f, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec prod = a.table[size_t(i)].col(j);
      Elem s = f.zero();
      for (int k = 0; k < n; ++k) s = f.add(s, f.mul(prod[size_t(k)], tr[size_t(k)]));
      gram.set(i, j, s);
    }
  }
  Subspace rad = Subspace::span(f, n, gram.kernel_basis());

  for (const Vec& v : rad.basis()) {
    for (int i = 0; i < n; ++i) {
      Vec ei = unit_at(f, n, i);
      if (!rad.contains(alg_mult(a.table, f, ei, v)) ||
          !rad.contains(alg_mult(a.table, f, v, ei)))
        throw Error("trace-form kernel is not an ideal");
    }
  }
  std::vector<Vec> cur = rad.basis();
  int prev = rad.dim();
  for (int step = 0; prev > 0; ++step) {
    if (step > n + 1) throw Error("radical nilpotency certification ran away");
    std::vector<Vec> prods;
    for (const Vec& v : cur)
      for (const Vec& w : rad.basis()) prods.push_back(alg_mult(a.table, f, v, w));
    Subspace next = Subspace::span(f, n, prods);
    if (next.dim() == 0) break;
    if (next.dim() >= prev) {
      if (f.is_rationals()) throw Error("trace-form kernel failed the nilpotency certificate");
      throw Undecided("radical not certified over this field");
    }
    cur = next.basis();
    prev = next.dim();
  }
  return rad;
}

std::map<int, int> space_sum(const GradedSpace& a, const GradedSpace& b) {
  std::map<int, int> out = a.dims();
  for (const auto& [n, d] : b.dims()) out[n] += d;
  return out;
}

/* Restrict a module to a strictly closed subspace given by basis columns per
 * degree; membership failures surface as unsolvable systems. */
DGModule sub_module(const DGModule& big, const std::map<int, Matrix>& basis,
                    const std::string& name) {
  const Field& f = big.alg->field;
  DGModule s;
  s.alg = big.alg;
  s.side = big.side;
  s.name = name;
  auto dim_of = [&](int n) {
    auto it = basis.find(n);
    return it == basis.end() ? 0 : it->second.cols();
  };
  for (const auto& [n, b] : basis)
    if (b.cols() > 0) s.space.set_dim(n, b.cols());

  for (const auto& [n, b] : basis) {
    if (b.cols() == 0 || big.dim(n + 1) == 0) continue;
    Matrix rhs = big.diff_at(n).mul(b);
    if (dim_of(n + 1) == 0) {
      if (!rhs.is_zero()) throw Error("submodule not closed under the differential");
      continue;
    }
    auto sol = basis.at(n + 1).solve_matrix(rhs);
    if (!sol) throw Error("submodule not closed under the differential");
    if (s.dim(n + 1) > 0) s.diff[n] = *sol;
  }
  for (const auto& [p, rdim] : big.alg->space.dims()) {
    for (const auto& [n, b] : basis) {
      if (b.cols() == 0) continue;
      int tdim = dim_of(n + p);
      std::vector<Vec> cols;
      bool zero_target = tdim == 0;
      for (int r = 0; r < rdim; ++r) {
        Vec er = unit_at(f, rdim, r);
        for (int c = 0; c < b.cols(); ++c) {
          Vec w = big.apply_act(p, er, n, b.col(c));
          if (zero_target) {
            if (!vec_is_zero(w)) throw Error("submodule not closed under the action");
            continue;
          }
          auto sol = basis.at(n + p).solve(w);
          if (!sol) throw Error("submodule not closed under the action");
          cols.push_back(*sol);
        }
      }
      if (!zero_target) s.act[{p, n}] = Matrix::from_cols(f, cols, tdim);
    }
  }
  require_valid(s);
  return s;
}

void split_rec(const DGModule& m, const ResolutionBudget& budget,
               std::vector<DGModule>& out) {
  EndContext ctx = end_context(m, budget);
  if (ctx.algebra.dimension == 0) return;
  if (ctx.algebra.local) {
    out.push_back(ctx.realized);
    return;
  }
  const Field& f = m.alg->field;
  QuotientData qd = quotient_by_radical(ctx.algebra);
  auto qe = quotient_idempotent(qd);
  if (!qe) throw Undecided("no splitting idempotent found for " + m.name);
  Vec e = lift_idempotent(ctx.algebra, qd, *qe);

  Vec coords = vec_zero(ctx.hom.cx.dim(0));
  for (size_t s = 0; s < ctx.reps.size(); ++s)
    coords = vec_add(f, coords, vec_scale(f, e[s], ctx.reps[s]));
  DGMorphism phi = decode_semifree_hom(ctx.res, ctx.realized, 0, coords);

  std::map<int, Matrix> power;
  for (const auto& [n, d] : ctx.realized.space.dims()) power[n] = phi.comp_at(n);
  auto ranks = [&] {
    std::map<int, int> r;
    for (const auto& [n, mat] : power) r[n] = mat.rank();
    return r;
  };
  std::map<int, int> prev = ranks();
  int total = 0;
  for (const auto& [n, d] : ctx.realized.space.dims()) total += d;
  for (int step = 0;; ++step) {
    if (step > total + 1) throw Error("idempotent power images failed to stabilize");
    for (auto& [n, mat] : power) mat = phi.comp_at(n).mul(mat);
    std::map<int, int> curr = ranks();
    if (curr == prev) break;
    prev = curr;
  }

  std::map<int, Matrix> im, ker;
  for (const auto& [n, mat] : power) {
    std::vector<Vec> ib = mat.image_basis();
    std::vector<Vec> kb = mat.kernel_basis();
    if ((int(ib.size()) + int(kb.size())) != ctx.realized.dim(n))
      throw Error("image and kernel dimensions disagree");
    std::vector<Vec> both = ib;
    both.insert(both.end(), kb.begin(), kb.end());
    if (Matrix::from_cols(f, both, ctx.realized.dim(n)).rank() != ctx.realized.dim(n))
      throw Error("stable image and kernel fail to be complementary");
    im[n] = Matrix::from_cols(f, ib, ctx.realized.dim(n));
    ker[n] = Matrix::from_cols(f, kb, ctx.realized.dim(n));
  }
  DGModule part_im = sub_module(ctx.realized, im, m.name + "#im");
  DGModule part_ker = sub_module(ctx.realized, ker, m.name + "#ker");

  GradedSpace h_all = cohomology(ctx.realized).h;
  if (space_sum(cohomology(part_im).h, cohomology(part_ker).h) != h_all.dims())
    throw Error("split lost cohomology");

  /* one more power must reproduce the same piece up to isomorphism */
  std::map<int, Matrix> power_next;
  for (const auto& [n, mat] : power) power_next[n] = phi.comp_at(n).mul(mat);
  std::map<int, Matrix> im_next;
  for (const auto& [n, mat] : power_next)
    im_next[n] = Matrix::from_cols(f, mat.image_basis(), ctx.realized.dim(n));
  DGModule part_im_next = sub_module(ctx.realized, im_next, m.name + "#im'");
  if (is_isomorphic(part_im, part_im_next, budget) != IsoVerdict::Yes)
    throw Error("image piece changed after stabilization");

  split_rec(part_im, budget, out);
  split_rec(part_ker, budget, out);
}

}  // namespace

EndContext end_context(const DGModule& m, const ResolutionBudget& budget) {
  const Field& f = m.alg->field;
  EndContext ctx(f);
  SemifreeResolution r = minimal_semifree_resolution(m, budget);
  ctx.res = std::move(r.module);
  ctx.realized = ctx.res.realize();
  ctx.hom = hom_from_semifree(ctx.res, ctx.realized);
  ctx.coh = cohomology(ctx.hom.cx);

  EndAlgebra& a = ctx.algebra;
  a.module_name = m.name;
  a.dimension = ctx.coh.h.dim(0);
  a.radical = Subspace(f, a.dimension);
  if (a.dimension == 0) {
    a.local = false;
    return ctx;
  }

  for (int s = 0; s < a.dimension; ++s) ctx.reps.push_back(ctx.coh.reps.at(0).col(s));
  std::vector<DGMorphism> phis;
  for (const Vec& rep : ctx.reps)
    phis.push_back(decode_semifree_hom(ctx.res, ctx.realized, 0, rep));

  for (int i = 0; i < a.dimension; ++i) {
    std::vector<Vec> cols;
    for (int j = 0; j < a.dimension; ++j) {
      Vec enc = encode_semifree_hom(ctx.res, ctx.hom, compose(phis[size_t(i)], phis[size_t(j)]));
      cols.push_back(ctx.coh.project(0, enc));
    }
    a.table.push_back(Matrix::from_cols(f, cols, a.dimension));
  }
  a.unit_coords =
      ctx.coh.project(0, encode_semifree_hom(ctx.res, ctx.hom, identity_morphism(ctx.realized)));

  Matrix lunit = Matrix::zero(f, a.dimension, a.dimension);
  for (int k = 0; k < a.dimension; ++k)
    lunit = lunit.add(a.table[size_t(k)].scale(a.unit_coords[size_t(k)]));
  if (!lunit.equals(Matrix::identity(f, a.dimension)))
    throw Error("end algebra unit is not a left unit");
  for (int i = 0; i < a.dimension; ++i)
    if (!vec_equal(f, a.table[size_t(i)].apply(a.unit_coords), unit_at(f, a.dimension, i)))
      throw Error("end algebra unit is not a right unit");
  for (int i = 0; i < a.dimension; ++i) {
    for (int j = 0; j < a.dimension; ++j) {
      Vec c = a.table[size_t(i)].col(j);
      Matrix lhs = a.table[size_t(i)].mul(a.table[size_t(j)]);
      Matrix rhs = Matrix::zero(f, a.dimension, a.dimension);
      for (int k = 0; k < a.dimension; ++k) rhs = rhs.add(a.table[size_t(k)].scale(c[size_t(k)]));
      if (!lhs.equals(rhs)) throw Error("end algebra multiplication is not associative");
    }
  }

  a.radical = radical_subspace(a);
  int quot = a.dimension - a.radical.dim();
  if (quot == 1) {
    a.local = true;
  } else {
    QuotientData qd = quotient_by_radical(a);
    if (quotient_idempotent(qd).has_value())
      a.local = false;
    else
      throw Undecided("locality of End(" + m.name + ") undecided");
  }
  return ctx;
}

EndAlgebra end_algebra(const DGModule& m, const ResolutionBudget& budget) {
  return end_context(m, budget).algebra;
}

IsoResult is_isomorphic_detailed(const DGModule& m, const DGModule& n,
                                 const ResolutionBudget& budget) {
  IsoResult out;
  SemifreeResolution rm = minimal_semifree_resolution(m, budget);
  SemifreeResolution rn = minimal_semifree_resolution(n, budget);
  if (rm.module.generator_degrees() != rn.module.generator_degrees()) {
    out.verdict = IsoVerdict::No;
    return out;
  }
  if (rm.module.generator_count() == 0) {
    out.verdict = IsoVerdict::Yes;
    out.iso = zero_morphism(rm.module.realize(), rn.module.realize());
    return out;
  }
  const Field& f = m.alg->field;
  DGModule target = rn.module.realize();
  SemifreeHomComplex hom = hom_from_semifree(rm.module, target);
  Cohomology coh = cohomology(hom.cx);
  int h0 = coh.h.dim(0);
  if (h0 == 0) {
    out.verdict = IsoVerdict::No;
    return out;
  }

  std::map<int, std::vector<int>> src_by_deg, tgt_by_deg;
  for (size_t i = 0; i < rm.module.gens.size(); ++i)
    src_by_deg[rm.module.gens[i].degree].push_back(int(i));
  for (size_t j = 0; j < rn.module.gens.size(); ++j)
    tgt_by_deg[rn.module.gens[j].degree].push_back(int(j));

  PencilBasis pencil;
  for (int s = 0; s < h0; ++s) {
    Vec rep = coh.reps.at(0).col(s);
    std::vector<Matrix> blocks;
    for (const auto& [t, src_idx] : src_by_deg) {
      const std::vector<int>& tgt_idx = tgt_by_deg.at(t);
      Matrix b(f, int(tgt_idx.size()), int(src_idx.size()));
      for (size_t c = 0; c < src_idx.size(); ++c) {
        int off = hom.block_offset(0, src_idx[c]);
        for (size_t r = 0; r < tgt_idx.size(); ++r)
          b.set(int(r), int(c), rep[size_t(off + rn.module.block_offset(t, tgt_idx[r]))]);
      }
      blocks.push_back(std::move(b));
    }
    pencil.blocks.push_back(std::move(blocks));
  }
  try {
    std::optional<Vec> c = find_invertible_combination(pencil, f);
    if (!c) {
      out.verdict = IsoVerdict::No;
      return out;
    }
    Vec comb = vec_zero(hom.cx.dim(0));
    for (int s = 0; s < h0; ++s)
      comb = vec_add(f, comb, vec_scale(f, (*c)[size_t(s)], coh.reps.at(0).col(s)));
    DGMorphism phi = decode_semifree_hom(rm.module, target, 0, comb);
    if (!is_strict_iso(phi))
      throw Error("invertible linear part failed to give a strict isomorphism");
    out.verdict = IsoVerdict::Yes;
    out.iso = std::move(phi);
  } catch (const Undecided&) {
    out.verdict = IsoVerdict::Undecided;
  }
  return out;
}

IsoVerdict is_isomorphic(const DGModule& m, const DGModule& n,
                         const ResolutionBudget& budget) {
  return is_isomorphic_detailed(m, n, budget).verdict;
}

std::vector<Summand> split_summands(const DGModule& m, const ResolutionBudget& budget) {
  std::vector<DGModule> parts;
  split_rec(m, budget, parts);
  std::vector<Summand> out;
  for (DGModule& part : parts) {
    bool matched = false;
    for (Summand& s : out) {
      if (is_isomorphic(part, s.module, budget) == IsoVerdict::Yes) {
        ++s.multiplicity;
        matched = true;
        break;
      }
    }
    if (!matched) out.push_back(Summand{std::move(part), 1});
  }
  return out;
}

}  // namespace dgar
