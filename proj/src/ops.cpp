#include "dgar/ops.hpp"

#include <algorithm>

#include "dgar/cohomology.hpp"
#include "dgar/errors.hpp"

namespace dgar {

namespace {

int sign_pow(int e) { return ((e % 2) + 2) % 2 == 0 ? 1 : -1; }

std::map<int, Matrix> identity_comps(const Field& f, const GradedSpace& sp) {
  std::map<int, Matrix> out;
  for (auto& [t, d] : sp.dims()) out[t] = Matrix::identity(f, d);
  return out;
}

}  // namespace

DGModule suspend(const DGModule& m, int s) {
  if (s == 0) return m;
  const Field& f = m.alg->field;
  DGModule r;
  r.alg = m.alg;
  r.side = m.side;
  r.name = m.name.empty() ? "" : "S[" + std::to_string(s) + "]" + m.name;
  for (auto& [t, d] : m.space.dims()) r.space.set_dim(t - s, d);
  for (auto& [t, mat] : m.diff) {
    Matrix d = sign_pow(s) == 1 ? mat : mat.neg();
    r.diff[t - s] = d;
  }
  for (auto& [pt, mat] : m.act) {
    auto [p, t] = pt;
    Matrix a = mat;
    if (m.side == Side::Left && sign_pow(s * p) == -1) a = a.neg();
    r.act[{p, t - s}] = a;
  }
  return r;
}

DGMorphism suspend_morphism(const DGMorphism& f, int s) {
  DGMorphism r{suspend(f.src, s), suspend(f.dst, s), f.degree, {}};
  for (auto& [t, mat] : f.comp) r.comp[t - s] = mat;
  return r;
}

Cone cone(const DGMorphism& f) {
  if (f.degree != 0) throw ValidationError("cone requires a degree-0 morphism");
  const DGModule& msrc = f.src;
  const DGModule& mdst = f.dst;
  const Field& k = msrc.alg->field;
  DGModule c;
  c.alg = mdst.alg;
  c.side = mdst.side;
  c.name = "cone(" + msrc.name + "->" + mdst.name + ")";
  std::map<int, int> dims;
  for (auto& [t, d] : mdst.space.dims()) dims[t] += d;
  for (auto& [t, d] : msrc.space.dims()) dims[t - 1] += d;
  for (auto& [t, d] : dims) c.space.set_dim(t, d);

  for (auto& [t, dtot] : dims) {
    (void)dtot;
    int rn = c.dim(t + 1);
    if (rn == 0) continue;
    Matrix d(k, rn, c.dim(t));
    Matrix dn = mdst.diff_at(t), dm = msrc.diff_at(t + 1), ft = f.comp_at(t + 1);
    for (int i = 0; i < dn.rows(); ++i)
      for (int j = 0; j < dn.cols(); ++j) d.set(i, j, dn.at(i, j));
    for (int i = 0; i < ft.rows(); ++i)
      for (int j = 0; j < ft.cols(); ++j) d.set(i, mdst.dim(t) + j, ft.at(i, j));
    for (int i = 0; i < dm.rows(); ++i)
      for (int j = 0; j < dm.cols(); ++j)
        d.set(mdst.dim(t + 1) + i, mdst.dim(t) + j, k.neg(dm.at(i, j)));
    if (!d.is_zero()) c.diff[t] = d;
  }

  for (auto& [p, dp] : c.alg->space.dims()) {
    (void)dp;
    for (auto& [t, dtot] : dims) {
      (void)dtot;
      if (c.dim(p + t) == 0) continue;
      Matrix a(k, c.dim(p + t), c.alg->dim(p) * c.dim(t));
      Matrix an = mdst.act_at(p, t), am = msrc.act_at(p, t + 1);
      int tw = (c.side == Side::Left && sign_pow(p) == -1) ? -1 : 1;
      for (int i = 0; i < c.alg->dim(p); ++i) {
        for (int j = 0; j < mdst.dim(t); ++j)
          for (int r = 0; r < mdst.dim(p + t); ++r)
            a.set(r, i * c.dim(t) + j, an.at(r, i * mdst.dim(t) + j));
        for (int j = 0; j < msrc.dim(t + 1); ++j)
          for (int r = 0; r < msrc.dim(p + t + 1); ++r) {
            Elem v = am.at(r, i * msrc.dim(t + 1) + j);
            if (tw == -1) v = k.neg(v);
            a.set(mdst.dim(p + t) + r, i * c.dim(t) + mdst.dim(t) + j, v);
          }
      }
      if (!a.is_zero()) c.act[{p, t}] = a;
    }
  }

  Cone out{c, {}, {}};
  out.from_target = DGMorphism{mdst, c, 0, {}};
  for (auto& [t, d] : mdst.space.dims()) {
    Matrix incl(k, c.dim(t), d);
    for (int j = 0; j < d; ++j) incl.set(j, j, k.one());
    out.from_target.comp[t] = incl;
  }
  DGModule sm = suspend(msrc, 1);
  out.to_shifted_source = DGMorphism{c, sm, 0, {}};
  for (auto& [t, d] : sm.space.dims()) {
    Matrix proj(k, d, c.dim(t));
    for (int j = 0; j < d; ++j) proj.set(j, mdst.dim(t) + j, k.one());
    out.to_shifted_source.comp[t] = proj;
  }
  return out;
}

DGModule dual(const DGModule& m) {
  const Field& f = m.alg->field;
  DGModule r;
  r.alg = m.alg;
  r.side = m.side == Side::Left ? Side::Right : Side::Left;
  r.name = m.name.empty() ? "" : "D(" + m.name + ")";
  for (auto& [t, d] : m.space.dims()) r.space.set_dim(-t, d);
  for (auto& [t, d] : r.space.dims()) {
    (void)d;
    if (r.dim(t + 1) == 0) continue;
    Matrix dm = m.diff_at(-t - 1);  // m^{-t-1} -> m^{-t}
    Matrix dd = dm.transpose();
    if (sign_pow(t) == 1) dd = dd.neg();  // overall factor -(-1)^t
    if (!dd.is_zero()) r.diff[t] = dd;
  }
  for (auto& [p, dp] : m.alg->space.dims()) {
    (void)dp;
    for (auto& [t, d] : r.space.dims()) {
      (void)d;
      if (r.dim(p + t) == 0) continue;
      Matrix am = m.act_at(p, -t - p);  // rows: m^{-t}, cols: (r_i, x_l)
      Matrix a(f, r.dim(p + t), m.alg->dim(p) * r.dim(t));
      int sg = (m.side == Side::Right) ? sign_pow(p) : 1;
      for (int l = 0; l < r.dim(p + t); ++l)
        for (int i = 0; i < m.alg->dim(p); ++i)
          for (int j = 0; j < r.dim(t); ++j) {
            Elem v = am.at(j, i * m.dim(-t - p) + l);
            if (sg == -1) v = f.neg(v);
            a.set(l, i * r.dim(t) + j, v);
          }
      if (!a.is_zero()) r.act[{p, t}] = a;
    }
  }
  return r;
}

DGModule switch_side_over_opposite(const DGModule& m, std::shared_ptr<const DGAlgebra> aop) {
  DGModule r = m;
  r.alg = std::move(aop);
  r.side = m.side == Side::Left ? Side::Right : Side::Left;
  for (auto& [pt, mat] : r.act) {
    auto [p, t] = pt;
    if (sign_pow(p * t) == -1) mat = mat.neg();
  }
  return r;
}

Truncation truncate_below(const DGModule& m) {
  Cohomology coh = cohomology(m);
  if (coh.h.is_zero()) throw ValidationError("truncation requires nonzero cohomology");
  int n0 = *coh.h.bottom();
  if (*m.space.bottom() >= n0) return {m, identity_morphism(m)};

  const Field& f = m.alg->field;
  RrefResult rr = m.diff_at(n0).rref();
  std::vector<Vec> cols;
  for (int j : rr.pivot_cols) {
    Vec e = vec_zero(m.dim(n0));
    e[size_t(j)] = f.one();
    cols.push_back(e);
  }
  Matrix reps = coh.reps.at(n0);
  for (int j = 0; j < reps.cols(); ++j) cols.push_back(reps.col(j));
  Matrix C = Matrix::from_cols(f, cols, m.dim(n0));

  DGModule u;
  u.alg = m.alg;
  u.side = m.side;
  u.name = m.name.empty() ? "" : "tb(" + m.name + ")";
  u.space.set_dim(n0, C.cols());
  for (auto& [t, d] : m.space.dims())
    if (t > n0) u.space.set_dim(t, d);
  for (auto& [t, mat] : m.diff)
    if (t > n0) u.diff[t] = mat;
  Matrix d0 = m.diff_at(n0).mul(C);
  if (!d0.is_zero()) u.diff[n0] = d0;
  for (auto& [pt, mat] : m.act) {
    auto [p, t] = pt;
    if (t > n0 && p + t > n0) u.act[pt] = mat;
  }
  for (auto& [p, dp] : m.alg->space.dims()) {
    (void)dp;
    if (u.dim(p + n0) == 0) continue;
    if (p == 0) {
      u.act[{0, n0}] = Matrix::identity(f, u.dim(n0));
      continue;
    }
    Matrix a(f, u.dim(p + n0), m.alg->dim(p) * u.dim(n0));
    Matrix am = m.act_at(p, n0);
    for (int i = 0; i < m.alg->dim(p); ++i)
      for (int j = 0; j < C.cols(); ++j) {
        Vec v = vec_zero(m.dim(n0) * m.alg->dim(p));
        for (int l = 0; l < m.dim(n0); ++l) v[size_t(i) * m.dim(n0) + l] = C.at(l, j);
        Vec w = am.apply(v);
        for (int r = 0; r < int(w.size()); ++r) a.set(r, i * u.dim(n0) + j, w[size_t(r)]);
      }
    if (!a.is_zero()) u.act[{p, n0}] = a;
  }

  DGMorphism incl{u, m, 0, {}};
  incl.comp[n0] = C;
  for (auto& [t, d] : u.space.dims())
    if (t > n0) incl.comp[t] = Matrix::identity(f, d);
  return {u, incl};
}

Truncation truncate_above(const DGModule& m) {
  Cohomology coh = cohomology(m);
  if (coh.h.is_zero()) throw ValidationError("truncation requires nonzero cohomology");
  int s0 = *coh.h.top();
  if (*m.space.top() <= s0) return {m, identity_morphism(m)};

  const Field& f = m.alg->field;
  Matrix ds = m.diff_at(s0);
  std::vector<Vec> zcols = ds.kernel_basis();
  RrefResult rr = ds.rref();
  std::vector<Vec> pcols = zcols;
  for (int j : rr.pivot_cols) {
    Vec e = vec_zero(m.dim(s0));
    e[size_t(j)] = f.one();
    pcols.push_back(e);
  }
  Matrix P = Matrix::from_cols(f, pcols, m.dim(s0));
  Matrix pinv = *P.inverse();
  Matrix pr(f, int(zcols.size()), m.dim(s0));
  for (int i = 0; i < pr.rows(); ++i)
    for (int j = 0; j < pr.cols(); ++j) pr.set(i, j, pinv.at(i, j));

  DGModule v;
  v.alg = m.alg;
  v.side = m.side;
  v.name = m.name.empty() ? "" : "ta(" + m.name + ")";
  for (auto& [t, d] : m.space.dims())
    if (t < s0) v.space.set_dim(t, d);
  v.space.set_dim(s0, int(zcols.size()));
  for (auto& [t, mat] : m.diff)
    if (t < s0 - 1) v.diff[t] = mat;
  Matrix dv = pr.mul(m.diff_at(s0 - 1));
  if (!dv.is_zero()) v.diff[s0 - 1] = dv;
  for (auto& [pt, mat] : m.act) {
    auto [p, t] = pt;
    if (t >= s0 || p + t >= s0) continue;
    v.act[pt] = mat;
  }
  for (auto& [p, dp] : m.alg->space.dims()) {
    (void)dp;
    int t = s0 - p;
    if (v.dim(t) == 0) continue;
    if (p == 0) {
      v.act[{0, s0}] = Matrix::identity(f, v.dim(s0));
      continue;
    }
    Matrix a = pr.mul(m.act_at(p, t));
    if (!a.is_zero()) v.act[{p, t}] = a;
  }

  DGMorphism proj{m, v, 0, {}};
  for (auto& [t, d] : m.space.dims()) {
    if (t < s0) proj.comp[t] = Matrix::identity(f, d);
  }
  proj.comp[s0] = pr;
  return {v, proj};
}

AlgebraTruncation truncate_algebra(const DGAlgebra& a) {
  const Field& f = a.field;
  ValidationReport rep = validate_algebra(a);
  if (!rep.valid) throw ValidationError("truncate_algebra: " + rep.failures.front());
  int d = rep.top_h;
  if (a.space.is_zero() || *a.space.top() <= d) {
    AlgebraTruncation out{a, {}};
    for (auto& [t, dt] : a.space.dims()) out.projection[t] = Matrix::identity(f, dt);
    return out;
  }

  Matrix dd = a.diff_at(d);
  std::vector<Vec> zcols = dd.kernel_basis();
  RrefResult rr = dd.rref();
  std::vector<Vec> pcols = zcols;
  for (int j : rr.pivot_cols) {
    Vec e = vec_zero(a.dim(d));
    e[size_t(j)] = f.one();
    pcols.push_back(e);
  }
  Matrix P = Matrix::from_cols(f, pcols, a.dim(d));
  Matrix pinv = *P.inverse();
  Matrix pr(f, int(zcols.size()), a.dim(d));
  for (int i = 0; i < pr.rows(); ++i)
    for (int j = 0; j < pr.cols(); ++j) pr.set(i, j, pinv.at(i, j));

  DGAlgebra s;
  s.field = f;
  s.name = a.name.empty() ? "" : "trunc(" + a.name + ")";
  for (auto& [t, dt] : a.space.dims())
    if (t < d) s.space.set_dim(t, dt);
  s.space.set_dim(d, int(zcols.size()));
  for (auto& [t, lab] : a.labels)
    if (t < d) s.labels[t] = lab;
  for (auto& [t, mat] : a.diff)
    if (t < d - 1) s.diff[t] = mat;
  Matrix dv = pr.mul(a.diff_at(d - 1));
  if (!dv.is_zero()) s.diff[d - 1] = dv;
  for (auto& [pq, mat] : a.mul) {
    auto [p, q] = pq;
    if (p + q < d && p < d && q < d) s.mul[pq] = mat;
  }
  for (auto& [p, dp] : a.space.dims()) {
    (void)dp;
    int q = d - p;
    if (s.dim(q) == 0 || p >= d || q < 0) continue;
    if (p == 0) {
      s.mul[{0, d}] = Matrix::identity(f, s.dim(d));
      s.mul[{d, 0}] = Matrix::identity(f, s.dim(d));
      continue;
    }
    Matrix t = pr.mul(a.mul_at(p, q));
    if (!t.is_zero()) s.mul[{p, q}] = t;
  }

  AlgebraTruncation out{s, {}};
  for (auto& [t, dt] : s.space.dims()) {
    if (t < d) out.projection[t] = Matrix::identity(f, dt);
  }
  out.projection[d] = pr;
  return out;
}

std::vector<std::map<int, Matrix>> linear_hom_basis(const DGModule& m, const DGModule& n,
                                                    int degree) {
  const Field& f = m.alg->field;
  // unknown blocks: f^t: m^t -> n^{t+degree}, entry (r, c) at block_offset + r*dim_m + c
  std::map<int, int> offset;
  int total = 0;
  for (auto& [t, dt] : m.space.dims()) {
    if (n.dim(t + degree) == 0) continue;
    offset[t] = total;
    total += n.dim(t + degree) * dt;
  }
  auto unknown = [&](int t, int r, int c) { return offset.at(t) + r * m.dim(t) + c; };

  std::vector<Vec> rows;
  for (auto& [p, dp] : m.alg->space.dims()) {
    (void)dp;
    if (p == 0) continue;
    for (auto& [t, dt] : m.space.dims()) {
      int tgt = n.dim(p + t + degree);
      if (tgt == 0) continue;
      Matrix am = m.act_at(p, t);
      Matrix an = n.act_at(p, t + degree);
      int eps = (m.side == Side::Left) ? sign_pow(degree * p) : 1;
      for (int i = 0; i < m.alg->dim(p); ++i)
        for (int j = 0; j < dt; ++j)
          for (int c = 0; c < tgt; ++c) {
            Vec row = vec_zero(total);
            bool nonzero = false;
            if (m.dim(p + t) > 0 && offset.count(p + t)) {
              for (int l = 0; l < m.dim(p + t); ++l) {
                const Elem& co = am.at(l, i * dt + j);
                if (!f.is_zero(co)) {
                  row[size_t(unknown(p + t, c, l))] = f.add(row[size_t(unknown(p + t, c, l))], co);
                  nonzero = true;
                }
              }
            }
            if (offset.count(t)) {
              for (int l = 0; l < n.dim(t + degree); ++l) {
                Elem co = an.at(c, i * n.dim(t + degree) + l);
                if (eps == -1) co = f.neg(co);
                if (!f.is_zero(co)) {
                  int u = unknown(t, l, j);
                  row[size_t(u)] = f.sub(row[size_t(u)], co);
                  nonzero = true;
                }
              }
            }
            if (nonzero) rows.push_back(row);
          }
    }
  }

  std::vector<std::map<int, Matrix>> out;
  if (total == 0) return out;
  Matrix sys = rows.empty() ? Matrix::zero(f, 1, total) : Matrix::from_rows(f, rows, total);
  for (const Vec& x : sys.kernel_basis()) {
    std::map<int, Matrix> comp;
    for (auto& [t, off] : offset) {
      Matrix blk(f, n.dim(t + degree), m.dim(t));
      for (int r = 0; r < blk.rows(); ++r)
        for (int c = 0; c < blk.cols(); ++c) blk.set(r, c, x[size_t(off + r * m.dim(t) + c)]);
      comp[t] = blk;
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::map<int, Matrix> map_differential(const DGModule& m, const DGModule& n,
                                       const std::map<int, Matrix>& comp, int degree) {
  auto comp_at = [&](int t) {
    auto it = comp.find(t);
    if (it != comp.end()) return it->second;
    return Matrix::zero(m.alg->field, n.dim(t + degree), m.dim(t));
  };
  std::map<int, Matrix> out;
  for (auto& [t, dt] : m.space.dims()) {
    (void)dt;
    if (n.dim(t + degree + 1) == 0) continue;
    Matrix a = n.diff_at(t + degree).mul(comp_at(t));
    Matrix b = comp_at(t + 1).mul(m.diff_at(t));
    out[t] = sign_pow(degree) == 1 ? a.sub(b) : a.add(b);
  }
  return out;
}

std::optional<std::map<int, Matrix>> null_homotopy(const DGMorphism& f) {
  const Field& k = f.src.alg->field;
  auto basis = linear_hom_basis(f.src, f.dst, f.degree - 1);
  // flatten D(h_i) and f over degrees where f could be nonzero
  std::vector<int> slots;
  for (auto& [t, dt] : f.src.space.dims()) {
    (void)dt;
    if (f.dst.dim(t + f.degree) > 0) slots.push_back(t);
  }
  int rows = 0;
  std::map<int, int> roff;
  for (int t : slots) {
    roff[t] = rows;
    rows += f.dst.dim(t + f.degree) * f.src.dim(t);
  }
  if (rows == 0) return std::map<int, Matrix>{};
  auto flatten = [&](const std::map<int, Matrix>& comp) {
    Vec v = vec_zero(rows);
    for (int t : slots) {
      auto it = comp.find(t);
      if (it == comp.end()) continue;
      const Matrix& mtx = it->second;
      for (int r = 0; r < mtx.rows(); ++r)
        for (int c = 0; c < mtx.cols(); ++c)
          v[size_t(roff[t] + r * f.src.dim(t) + c)] = mtx.at(r, c);
    }
    return v;
  };
  std::vector<Vec> cols;
  for (auto& h : basis) cols.push_back(flatten(map_differential(f.src, f.dst, h, f.degree - 1)));
  Matrix sys = Matrix::from_cols(k, cols, rows);
  std::map<int, Matrix> fcomp;
  for (auto& [t, mtx] : f.comp) fcomp[t] = mtx;
  auto sol = sys.solve(flatten(fcomp));
  if (!sol) return std::nullopt;
  // assemble h = sum c_i h_i
  std::map<int, Matrix> h;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (k.is_zero((*sol)[i])) continue;
    for (auto& [t, blk] : basis[i]) {
      Matrix scaled = blk.scale((*sol)[i]);
      auto it = h.find(t);
      if (it == h.end())
        h[t] = scaled;
      else
        it->second = it->second.add(scaled);
    }
  }
  return h;
}

bool is_null_homotopic(const DGMorphism& f) { return null_homotopy(f).has_value(); }

}  // namespace dgar
