#include "dgar/cohomology.hpp"

#include "dgar/errors.hpp"

namespace dgar {

Vec Cohomology::project(int n, const Vec& v) const {
  int hn = h.dim(n);
  if (hn == 0) return {};
  Matrix b = bound.count(n) ? bound.at(n) : Matrix::zero(field, int(v.size()), 0);
  Matrix span = b.hstack(reps.at(n));
  auto x = span.solve(v);
  if (!x) throw Error("projection of a vector that is not a cocycle");
  Vec out = vec_zero(hn);
  for (int i = 0; i < hn; ++i) out[size_t(i)] = (*x)[size_t(b.cols() + i)];
  return out;
}

Cohomology cohomology(const DGModule& m) {
  Cohomology c;
  c.field = m.alg->field;
  if (m.space.is_zero()) return c;
  const Field& f = c.field;
  for (auto& [n, dn] : m.space.dims()) {
    std::vector<Vec> z = m.diff_at(n).kernel_basis();
    std::vector<Vec> b = m.diff_at(n - 1).image_basis();
    Matrix bm = Matrix::from_cols(f, b, dn);
    Matrix zm = Matrix::from_cols(f, z, dn);
    Matrix span = bm.hstack(zm);
    RrefResult rr = span.rref();
    std::vector<Vec> reps;
    for (int j : rr.pivot_cols)
      if (j >= bm.cols()) reps.push_back(span.col(j));
    c.bound[n] = bm;
    if (!reps.empty()) {
      c.reps[n] = Matrix::from_cols(f, reps, dn);
      c.h.set_dim(n, int(reps.size()));
    }
  }
  return c;
}

InfSupAmp inf_sup_amp(const DGModule& m) {
  Cohomology c = cohomology(m);
  InfSupAmp out;
  if (c.h.is_zero()) return out;
  out.inf = c.h.bottom();
  out.sup = c.h.top();
  out.amp = *out.sup - *out.inf;
  return out;
}

std::map<int, Matrix> h_map(const DGMorphism& f, const Cohomology& hsrc, const Cohomology& hdst) {
  std::map<int, Matrix> out;
  const Field& k = f.src.alg->field;
  for (auto& [n, hn] : hsrc.h.dims()) {
    Matrix mat(k, hdst.h.dim(n + f.degree), hn);
    for (int j = 0; j < hn; ++j) {
      Vec v = f.comp_at(n).apply(hsrc.reps.at(n).col(j));
      if (mat.rows() > 0) {
        Vec w = hdst.project(n + f.degree, v);
        for (int i = 0; i < mat.rows(); ++i) mat.set(i, j, w[size_t(i)]);
      }
    }
    out[n] = mat;
  }
  return out;
}

bool is_quasi_iso(const DGMorphism& f) {
  if (f.degree != 0) return false;
  Cohomology hs = cohomology(f.src), hd = cohomology(f.dst);
  if (!(hs.h == hd.h)) return false;
  for (auto& [n, mat] : h_map(f, hs, hd))
    if (mat.rows() != mat.cols() || !mat.inverse()) return false;
  return true;
}

HAlgebra h_algebra(const DGAlgebra& a) {
  auto ap = std::make_shared<const DGAlgebra>(a);
  DGModule reg = regular_module(ap, Side::Left);
  Cohomology coh = cohomology(reg);
  DGAlgebra ha;
  ha.field = a.field;
  ha.name = a.name.empty() ? "H" : "H(" + a.name + ")";
  ha.space = coh.h;
  for (auto& [p, hp] : coh.h.dims()) {
    ha.labels[p] = default_labels("h" + std::to_string(p) + "_", hp);
    for (auto& [q, hq] : coh.h.dims()) {
      if (coh.h.dim(p + q) == 0) continue;
      Matrix t(a.field, coh.h.dim(p + q), hp * hq);
      for (int i = 0; i < hp; ++i)
        for (int j = 0; j < hq; ++j) {
          Vec prod = a.product(p, coh.reps.at(p).col(i), q, coh.reps.at(q).col(j));
          Vec w = coh.project(p + q, prod);
          for (int r = 0; r < t.rows(); ++r) t.set(r, i * hq + j, w[size_t(r)]);
        }
      if (!t.is_zero()) ha.mul[{p, q}] = t;
    }
  }
  HAlgebra out;
  out.algebra = std::make_shared<const DGAlgebra>(std::move(ha));
  out.hr = coh;
  return out;
}

DGModule h_module(const DGModule& m, const HAlgebra& ha) {
  Cohomology coh = cohomology(m);
  DGModule hm;
  hm.alg = ha.algebra;
  hm.side = m.side;
  hm.name = m.name.empty() ? "H" : "H(" + m.name + ")";
  hm.space = coh.h;
  for (auto& [p, hp] : ha.algebra->space.dims()) {
    for (auto& [n, hn] : coh.h.dims()) {
      if (coh.h.dim(p + n) == 0) continue;
      Matrix t(m.alg->field, coh.h.dim(p + n), hp * hn);
      for (int i = 0; i < hp; ++i)
        for (int j = 0; j < hn; ++j) {
          Vec v = m.apply_act(p, ha.hr.reps.at(p).col(i), n, coh.reps.at(n).col(j));
          Vec w = coh.project(p + n, v);
          for (int r = 0; r < t.rows(); ++r) t.set(r, i * hn + j, w[size_t(r)]);
        }
      if (!t.is_zero()) hm.act[{p, n}] = t;
    }
  }
  return hm;
}

}  // namespace dgar
