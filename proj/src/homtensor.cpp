#include "dgar/homtensor.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "dgar/errors.hpp"

namespace dgar {

namespace {

std::shared_ptr<const DGAlgebra> scalar_ptr(const Field& f) {
  return std::make_shared<const DGAlgebra>(scalar_algebra(f));
}

void add_identity_actions(DGModule& m) {
  for (const auto& [n, d] : m.space.dims())
    m.act[{0, n}] = Matrix::identity(m.alg->field, d);
}

Vec unit_vec(int dim, int idx) {
  Vec v = vec_zero(dim);
  v[size_t(idx)] = 1;
  return v;
}

}  // namespace

DGModule as_complex(const DGModule& m) {
  DGModule c;
  c.alg = scalar_ptr(m.alg->field);
  c.side = Side::Left;
  c.space = m.space;
  c.diff = m.diff;
  c.labels = m.labels;
  c.name = "cx(" + m.name + ")";
  add_identity_actions(c);
  return c;
}

/* ---- general hom complex ---- */

GeneralHomComplex hom_complex(const DGModule& m, const DGModule& n) {
  if (!same_structure(*m.alg, *n.alg))
    throw Error("hom_complex: modules live over different algebras");
  if (m.side != n.side) throw Error("hom_complex: modules on different sides");
  const Field& f = m.alg->field;

  GeneralHomComplex out;
  DGModule cx;
  cx.alg = scalar_ptr(f);
  cx.side = Side::Left;
  cx.name = "Hom(" + m.name + "," + n.name + ")";

  auto mb = m.space.bottom(), mt = m.space.top();
  auto nb = n.space.bottom(), nt = n.space.top();
  if (mb && nb) {
    int lo = *nb - *mt, hi = *nt - *mb;
    for (int p = lo; p <= hi; ++p) {
      auto basis = linear_hom_basis(m, n, p);
      if (!basis.empty()) {
        cx.space.set_dim(p, int(basis.size()));
        out.basis[p] = std::move(basis);
      }
    }
    /* flatten a degree-(p+1) collection of components over fixed slots */
    auto flatten = [&](const std::map<int, Matrix>& comp, int p1) {
      std::vector<Elem> flat;
      for (const auto& [t, dim] : m.space.dims()) {
        (void)dim;
        int r = n.dim(t + p1), c = m.dim(t);
        if (r == 0 || c == 0) continue;
        auto it = comp.find(t);
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < c; ++j)
            flat.push_back(it == comp.end() ? Elem(0) : it->second.at(i, j));
      }
      return flat;
    };
    for (const auto& [p, basis] : out.basis) {
      auto nxt = out.basis.find(p + 1);
      int rows = nxt == out.basis.end() ? 0 : int(nxt->second.size());
      Matrix d = Matrix::zero(f, rows, int(basis.size()));
      bool nonzero = false;
      std::optional<Matrix> span;
      if (rows > 0) {
        std::vector<Vec> cols;
        size_t len = 0;
        for (const auto& h : nxt->second) {
          auto fl = flatten(h, p + 1);
          len = fl.size();
          cols.push_back(Vec(fl.begin(), fl.end()));
        }
        span = Matrix::from_cols(f, cols, int(len));
      }
      for (size_t j = 0; j < basis.size(); ++j) {
        auto dh = map_differential(m, n, basis[j], p);
        auto fl = flatten(dh, p + 1);
        Vec target(fl.begin(), fl.end());
        if (vec_is_zero(target)) continue;
        if (!span) throw Error("hom_complex: differential escaped the basis");
        auto sol = span->solve(target);
        if (!sol) throw Error("hom_complex: differential escaped the basis");
        for (size_t i = 0; i < sol->size(); ++i)
          if (!f.is_zero((*sol)[i])) {
            d.set(int(i), int(j), (*sol)[i]);
            nonzero = true;
          }
      }
      if (nonzero) cx.diff[p] = d;
    }
  }
  add_identity_actions(cx);
  out.cx = std::move(cx);
  return out;
}

/* ---- hom complex out of a semi-free source ---- */

int SemifreeHomComplex::block_offset(int p, int g) const {
  int off = 0;
  for (int l = 0; l < g; ++l) off += target_dims.dim(gen_degrees[size_t(l)] + p);
  return off;
}

SemifreeHomComplex hom_from_semifree(const SemifreeModule& fm, const DGModule& n) {
  if (!same_structure(*fm.alg, *n.alg))
    throw Error("hom_from_semifree: target lives over a different algebra");
  if (n.side != Side::Left) throw Error("hom_from_semifree: target must be a left module");
  const Field& f = fm.alg->field;

  SemifreeHomComplex out;
  for (const auto& g : fm.gens) out.gen_degrees.push_back(g.degree);
  out.target_dims = n.space;

  DGModule cx;
  cx.alg = scalar_ptr(f);
  cx.side = Side::Left;
  cx.name = "Hom(" + (fm.gens.empty() ? std::string("0") : fm.realize().name) + "," +
            n.name + ")";

  std::set<int> degs;
  for (const auto& g : fm.gens)
    for (const auto& [t, dim] : n.space.dims()) {
      (void)dim;
      degs.insert(t - g.degree);
    }
  auto dim_at = [&](int p) {
    int total = 0;
    for (int t : out.gen_degrees) total += n.dim(t + p);
    return total;
  };
  for (int p : degs)
    if (dim_at(p) > 0) cx.space.set_dim(p, dim_at(p));

  for (const auto& [p, dp] : cx.space.dims()) {
    (void)dp;
    int rows = dim_at(p + 1), cols = dim_at(p);
    if (rows == 0) continue;
    Matrix d = Matrix::zero(f, rows, cols);
    bool nonzero = false;
    for (size_t l = 0; l < fm.gens.size(); ++l) {
      int tl = fm.gens[l].degree;
      int vd = n.dim(tl + p);
      if (vd == 0) continue;
      int coff = out.block_offset(p, int(l));
      /* value differential, block l -> block l */
      Matrix dn = n.diff_at(tl + p);
      int roff_l = out.block_offset(p + 1, int(l));
      for (int i = 0; i < dn.rows(); ++i)
        for (int j = 0; j < vd; ++j)
          if (!f.is_zero(dn.at(i, j))) {
            d.set(roff_l + i, coff + j, dn.at(i, j));
            nonzero = true;
          }
      /* composition with the generator differentials, block l -> block i */
      for (size_t i = 0; i < fm.gens.size(); ++i) {
        auto it = fm.gens[i].dcoef.find(int(l));
        if (it == fm.gens[i].dcoef.end() || vec_is_zero(it->second)) continue;
        int ti = fm.gens[i].degree;
        if (n.dim(ti + p + 1) == 0) continue;
        int pil = ti + 1 - tl;
        int roff = out.block_offset(p + 1, int(i));
        Elem sg = ((p % 2 != 0) && ((ti - tl) % 2 != 0)) ? Elem(-1) : Elem(1);
        sg = f.mul(sg, Elem(-1));
        for (int j = 0; j < vd; ++j) {
          Vec img = n.apply_act(pil, it->second, tl + p, unit_vec(vd, j));
          for (size_t r = 0; r < img.size(); ++r)
            if (!f.is_zero(img[r])) {
              d.set(roff + int(r), coff + j,
                    f.add(d.at(roff + int(r), coff + j), f.mul(sg, img[r])));
              nonzero = true;
            }
        }
      }
    }
    if (nonzero) cx.diff[p] = d;
  }
  add_identity_actions(cx);
  out.cx = std::move(cx);
  return out;
}

DGMorphism decode_semifree_hom(const SemifreeModule& fm, const DGModule& n, int p,
                               const Vec& values) {
  const Field& f = fm.alg->field;
  {
    int want = 0;
    for (const auto& g : fm.gens) want += n.dim(g.degree + p);
    if (int(values.size()) != want)
      throw Error("decode_semifree_hom: value vector has the wrong length");
  }
  SemifreeHomComplex layout;
  for (const auto& g : fm.gens) layout.gen_degrees.push_back(g.degree);
  layout.target_dims = n.space;

  DGMorphism h;
  h.src = fm.realize();
  h.dst = n;
  h.degree = p;
  for (const auto& [s, ds] : h.src.space.dims()) {
    (void)ds;
    int rows = n.dim(s + p), cols = fm.dim_at(s);
    if (rows == 0 || cols == 0) continue;
    Matrix c = Matrix::zero(f, rows, cols);
    bool nonzero = false;
    for (size_t i = 0; i < fm.gens.size(); ++i) {
      int ti = fm.gens[i].degree;
      int nb = s - ti;
      int bdim = fm.alg->dim(nb);
      int vd = n.dim(ti + p);
      if (bdim == 0 || vd == 0) continue;
      int voff = layout.block_offset(p, int(i));
      Vec val = vec_zero(vd);
      for (int j = 0; j < vd; ++j) val[size_t(j)] = values[size_t(voff + j)];
      if (vec_is_zero(val)) continue;
      int coff = fm.block_offset(s, int(i));
      Elem sg = ((p % 2 != 0) && (nb % 2 != 0)) ? Elem(-1) : Elem(1);
      for (int b = 0; b < bdim; ++b) {
        Vec img = n.apply_act(nb, unit_vec(bdim, b), ti + p, val);
        for (size_t r = 0; r < img.size(); ++r)
          if (!f.is_zero(img[r])) {
            c.set(int(r), coff + b, f.mul(sg, img[r]));
            nonzero = true;
          }
      }
    }
    if (nonzero) h.comp[s] = c;
  }
  return h;
}

Vec encode_semifree_hom(const SemifreeModule& f, const SemifreeHomComplex& hom,
                        const DGMorphism& phi) {
  int p = phi.degree;
  Vec out = vec_zero(hom.cx.dim(p));
  for (size_t g = 0; g < f.gens.size(); ++g) {
    int t = f.gens[g].degree;
    int vlen = phi.dst.dim(t + p);
    if (vlen == 0 || phi.src.dim(t) == 0) continue;
    Vec val = phi.comp_at(t).col(f.block_offset(t, int(g)));
    int off = hom.block_offset(p, int(g));
    for (int r = 0; r < vlen; ++r) out[size_t(off + r)] = val[size_t(r)];
  }
  return out;
}

/* ---- bimodules ---- */

Vec DGBimodule::apply_right(int p, const Vec& r, int n, const Vec& x) const {
  const Field& f = left.alg->field;
  int rd = left.alg->dim(p), xd = left.dim(n);
  Vec pair(size_t(rd) * size_t(xd));
  for (int i = 0; i < rd; ++i)
    for (int j = 0; j < xd; ++j) pair[size_t(i) * xd + j] = f.mul(r[size_t(i)], x[size_t(j)]);
  auto it = right_act.find({p, n});
  if (it == right_act.end()) return vec_zero(left.dim(n + p));
  return it->second.apply(pair);
}

ValidationReport validate_bimodule(const DGBimodule& bm) {
  ValidationReport rep;
  rep.valid = true;
  ValidationReport lrep = validate_module(bm.left);
  for (const auto& msg : lrep.failures) rep.fail("left structure: " + msg);

  DGModule rview = bm.left;
  rview.side = Side::Right;
  rview.act = bm.right_act;
  rview.name = bm.left.name + " (right)";
  ValidationReport rrep = validate_module(rview);
  for (const auto& msg : rrep.failures) rep.fail("right structure: " + msg);
  if (!rep.valid) return rep;

  const DGAlgebra& a = *bm.left.alg;
  for (const auto& [key, table] : bm.left.act) {
    (void)table;
    auto [p, rest] = key;
    if (p == 0) continue;
    for (const auto& [qkey, qtable] : bm.right_act) {
      (void)qtable;
      auto [q, nn] = qkey;
      if (q == 0 || nn + q != rest) continue;
      int n = nn;
      for (int ri = 0; ri < a.dim(p); ++ri)
        for (int si = 0; si < a.dim(q); ++si)
          for (int xi = 0; xi < bm.left.dim(n); ++xi) {
            Vec r = unit_vec(a.dim(p), ri), s = unit_vec(a.dim(q), si),
                x = unit_vec(bm.left.dim(n), xi);
            Vec lhs = bm.left.apply_act(p, r, n + q, bm.apply_right(q, s, n, x));
            Vec rhs = bm.apply_right(q, s, n + p, bm.left.apply_act(p, r, n, x));
            if (!vec_is_zero(vec_sub(a.field, lhs, rhs))) {
              rep.fail("bimodule: actions fail to commute at degrees (" +
                       std::to_string(p) + ", " + std::to_string(q) + ", " +
                       std::to_string(n) + ")");
              goto done;
            }
          }
    }
  }
done:
  rep.h_dims = lrep.h_dims;
  return rep;
}

DGBimodule dr_bimodule(std::shared_ptr<const DGAlgebra> a) {
  DGBimodule bm;
  bm.left = dual(regular_module(a, Side::Right));
  DGModule r = dual(regular_module(a, Side::Left));
  bm.right_act = r.act;
  bm.left.name = "D(" + a->name + ")";
  return bm;
}

/* ---- quotient tensor product ---- */

namespace {

struct TensorDeg {
  std::vector<std::array<int, 3>> big;       // (u, i, j)
  std::map<std::pair<int, int>, int> index;  // (u, i*dimB+j) -> big index
  Matrix rel;                                // rref of the relation span
  std::vector<int> keep;                     // complement columns, ascending
};

struct TensorLayout {
  std::map<int, TensorDeg> degs;

  int qdim(int n) const {
    auto it = degs.find(n);
    return it == degs.end() ? 0 : int(it->second.keep.size());
  }
  Vec project(const Field& f, int n, Vec x) const {
    auto it = degs.find(n);
    if (it == degs.end()) return vec_zero(0);
    const TensorDeg& td = it->second;
    for (int r = 0; r < td.rel.rows(); ++r) {
      int c = -1;
      for (int j = 0; j < td.rel.cols(); ++j)
        if (!f.is_zero(td.rel.at(r, j))) {
          c = j;
          break;
        }
      if (c < 0) break;
      Elem coef = x[size_t(c)];
      if (f.is_zero(coef)) continue;
      for (int j = c; j < td.rel.cols(); ++j)
        x[size_t(j)] = f.sub(x[size_t(j)], f.mul(coef, td.rel.at(r, j)));
    }
    Vec out = vec_zero(int(td.keep.size()));
    for (size_t k = 0; k < td.keep.size(); ++k) out[k] = x[size_t(td.keep[k])];
    return out;
  }
};

TensorLayout tensor_layout(const DGModule& a, const DGModule& b) {
  const DGAlgebra& alg = *b.alg;
  const Field& f = alg.field;
  TensorLayout lay;
  auto ab = a.space.bottom(), at = a.space.top();
  auto bb = b.space.bottom(), bt = b.space.top();
  if (!ab || !bb) return lay;
  for (int n = *ab + *bb; n <= *at + *bt; ++n) {
    TensorDeg td;
    for (const auto& [u, du] : a.space.dims()) {
      int dv = b.dim(n - u);
      if (dv == 0) continue;
      for (int i = 0; i < du; ++i)
        for (int j = 0; j < dv; ++j) {
          td.index[{u, i * dv + j}] = int(td.big.size());
          td.big.push_back({u, i, j});
        }
    }
    if (td.big.empty()) continue;
    int N = int(td.big.size());
    std::vector<Vec> rel_rows;
    for (const auto& [u, du] : a.space.dims()) {
      for (const auto& [p, dp] : alg.space.dims()) {
        if (p <= 0) continue;
        int v = n - u - p;
        int dv = b.dim(v);
        if (dv == 0) continue;
        int dvu = b.dim(n - u);        // b-degree paired with block u
        int dvup = b.dim(n - u - p);   // = dv, b-degree paired with block u+p
        for (int i = 0; i < du; ++i)
          for (int r = 0; r < dp; ++r)
            for (int j = 0; j < dv; ++j) {
              Vec row = vec_zero(N);
              bool nonzero = false;
              Vec ar = a.apply_act(p, unit_vec(dp, r), u, unit_vec(du, i));
              for (size_t s = 0; s < ar.size(); ++s) {
                if (f.is_zero(ar[s])) continue;
                auto it = td.index.find({u + p, int(s) * dvup + j});
                if (it == td.index.end()) continue;
                row[size_t(it->second)] = f.add(row[size_t(it->second)], ar[s]);
                nonzero = true;
              }
              if (dvu > 0) {
                Vec rb = b.apply_act(p, unit_vec(dp, r), v, unit_vec(dv, j));
                for (size_t s = 0; s < rb.size(); ++s) {
                  if (f.is_zero(rb[s])) continue;
                  auto it = td.index.find({u, i * dvu + int(s)});
                  if (it == td.index.end()) continue;
                  row[size_t(it->second)] = f.sub(row[size_t(it->second)], rb[s]);
                  nonzero = true;
                }
              }
              if (nonzero) rel_rows.push_back(row);
            }
      }
    }
    Matrix rel = Matrix::from_rows(f, rel_rows, N);
    RrefResult rr = rel.rref();
    td.rel = rr.mat;
    std::set<int> pivots(rr.pivot_cols.begin(), rr.pivot_cols.end());
    for (int c = 0; c < N; ++c)
      if (!pivots.count(c)) td.keep.push_back(c);
    if (!td.keep.empty()) lay.degs[n] = std::move(td);
  }
  return lay;
}

/* differential of the class of big basis element (u, i, j) at total degree n */
Vec tensor_diff_big(const DGModule& a, const DGModule& b, const TensorLayout& lay,
                    int n, const std::array<int, 3>& e) {
  const Field& f = b.alg->field;
  auto it = lay.degs.find(n + 1);
  if (it == lay.degs.end()) return vec_zero(0);
  const TensorDeg& td = it->second;
  Vec big = vec_zero(int(td.big.size()));
  auto [u, i, j] = e;
  int dvu1 = b.dim(n + 1 - (u + 1));  // pairs with block u+1
  Matrix da = a.diff_at(u);
  for (int r = 0; r < da.rows(); ++r) {
    if (f.is_zero(da.at(r, i))) continue;
    auto bi = td.index.find({u + 1, r * dvu1 + j});
    if (bi == td.index.end()) continue;
    big[size_t(bi->second)] = f.add(big[size_t(bi->second)], da.at(r, i));
  }
  int v = n - u;
  int dvu = b.dim(n + 1 - u);
  Matrix db = b.diff_at(v);
  Elem sg = (((u % 2) + 2) % 2 != 0) ? Elem(-1) : Elem(1);
  for (int r = 0; r < db.rows(); ++r) {
    if (f.is_zero(db.at(r, j))) continue;
    auto bi = td.index.find({u, i * dvu + r});
    if (bi == td.index.end()) continue;
    big[size_t(bi->second)] = f.add(big[size_t(bi->second)], f.mul(sg, db.at(r, j)));
  }
  return big;
}

DGModule tensor_core(const DGModule& a, const DGModule& b, const TensorLayout& lay,
                     std::shared_ptr<const DGAlgebra> out_alg) {
  const Field& f = b.alg->field;
  DGModule cx;
  cx.alg = out_alg;
  cx.side = Side::Left;
  cx.name = a.name + "(x)" + b.name;
  for (const auto& [n, td] : lay.degs) cx.space.set_dim(n, int(td.keep.size()));
  for (const auto& [n, td] : lay.degs) {
    int rows = lay.qdim(n + 1);
    if (rows == 0) continue;
    Matrix d = Matrix::zero(f, rows, int(td.keep.size()));
    bool nonzero = false;
    for (size_t k = 0; k < td.keep.size(); ++k) {
      Vec big = tensor_diff_big(a, b, lay, n, td.big[size_t(td.keep[k])]);
      if (big.empty()) continue;
      Vec q = lay.project(f, n + 1, big);
      for (size_t r = 0; r < q.size(); ++r)
        if (!f.is_zero(q[r])) {
          d.set(int(r), int(k), q[r]);
          nonzero = true;
        }
    }
    if (nonzero) cx.diff[n] = d;
  }
  return cx;
}

}  // namespace

DGModule tensor_complex(const DGModule& a, const DGModule& b) {
  if (!same_structure(*a.alg, *b.alg))
    throw Error("tensor_complex: factors live over different algebras");
  if (a.side != Side::Right || b.side != Side::Left)
    throw Error("tensor_complex: needs a right module and a left module");
  TensorLayout lay = tensor_layout(a, b);
  DGModule cx = tensor_core(a, b, lay, scalar_ptr(b.alg->field));
  add_identity_actions(cx);
  return cx;
}

std::map<int, std::vector<TensorBasisElement>> tensor_basis(const DGModule& a,
                                                            const DGModule& b) {
  TensorLayout lay = tensor_layout(a, b);
  std::map<int, std::vector<TensorBasisElement>> out;
  for (const auto& [n, td] : lay.degs) {
    std::vector<TensorBasisElement> v;
    for (int c : td.keep) {
      auto [u, i, j] = td.big[size_t(c)];
      v.push_back({u, i, j});
    }
    out[n] = std::move(v);
  }
  return out;
}

DGModule tensor_bimodule(const DGBimodule& a, const DGModule& b) {
  if (!same_structure(*a.left.alg, *b.alg))
    throw Error("tensor_bimodule: factors live over different algebras");
  if (b.side != Side::Left) throw Error("tensor_bimodule: second factor must be left");
  const Field& f = b.alg->field;
  DGModule aright = a.left;
  aright.side = Side::Right;
  aright.act = a.right_act;
  TensorLayout lay = tensor_layout(aright, b);
  DGModule out = tensor_core(aright, b, lay, b.alg);
  out.name = a.left.name + "(x)" + b.name;
  /* descended left action through the first factor */
  for (const auto& [n, td] : lay.degs) {
    int cols_here = int(td.keep.size());
    out.act[{0, n}] = Matrix::identity(f, cols_here);
    for (const auto& [p, dp] : b.alg->space.dims()) {
      if (p == 0) continue;
      auto it1 = lay.degs.find(n + p);
      if (it1 == lay.degs.end()) continue;
      const TensorDeg& td1 = it1->second;
      Matrix t = Matrix::zero(f, int(td1.keep.size()), dp * cols_here);
      bool nonzero = false;
      for (int r = 0; r < dp; ++r)
        for (int k = 0; k < cols_here; ++k) {
          auto [u, i, j] = td.big[size_t(td.keep[size_t(k)])];
          Vec big = vec_zero(int(td1.big.size()));
          Vec ra = a.left.apply_act(p, unit_vec(dp, r), u, unit_vec(a.left.dim(u), i));
          int dv = b.dim(n - u);
          bool any = false;
          for (size_t s = 0; s < ra.size(); ++s) {
            if (f.is_zero(ra[s])) continue;
            auto bi = td1.index.find({u + p, int(s) * dv + j});
            if (bi == td1.index.end()) continue;
            big[size_t(bi->second)] = f.add(big[size_t(bi->second)], ra[s]);
            any = true;
          }
          if (!any) continue;
          Vec q = lay.project(f, n + p, big);
          for (size_t rr = 0; rr < q.size(); ++rr)
            if (!f.is_zero(q[rr])) {
              t.set(int(rr), r * cols_here + k, q[rr]);
              nonzero = true;
            }
        }
      if (nonzero) out.act[{p, n}] = t;
    }
  }
  return out;
}

DGModule tensor_semifree(const DGModule& a, const SemifreeModule& fm) {
  if (!same_structure(*a.alg, *fm.alg))
    throw Error("tensor_semifree: factors live over different algebras");
  if (a.side != Side::Right) throw Error("tensor_semifree: first factor must be right");
  const Field& f = a.alg->field;

  DGModule cx;
  cx.alg = scalar_ptr(f);
  cx.side = Side::Left;
  cx.name = a.name + "(x)F";

  auto dim_at = [&](int n) {
    int total = 0;
    for (const auto& g : fm.gens) total += a.dim(n - g.degree);
    return total;
  };
  auto block_off = [&](int n, int g) {
    int off = 0;
    for (int l = 0; l < g; ++l) off += a.dim(n - fm.gens[size_t(l)].degree);
    return off;
  };
  std::set<int> degs;
  for (const auto& g : fm.gens)
    for (const auto& [u, du] : a.space.dims()) {
      (void)du;
      degs.insert(u + g.degree);
    }
  for (int n : degs)
    if (dim_at(n) > 0) cx.space.set_dim(n, dim_at(n));

  for (const auto& [n, dn] : cx.space.dims()) {
    (void)dn;
    int rows = dim_at(n + 1);
    if (rows == 0) continue;
    Matrix d = Matrix::zero(f, rows, dim_at(n));
    bool nonzero = false;
    for (size_t i = 0; i < fm.gens.size(); ++i) {
      int ti = fm.gens[i].degree;
      int u = n - ti;
      int du = a.dim(u);
      if (du == 0) continue;
      int coff = block_off(n, int(i));
      Matrix da = a.diff_at(u);
      int roff_i = block_off(n + 1, int(i));
      for (int r = 0; r < da.rows(); ++r)
        for (int j = 0; j < du; ++j)
          if (!f.is_zero(da.at(r, j))) {
            d.set(roff_i + r, coff + j, da.at(r, j));
            nonzero = true;
          }
      Elem sg = (((u % 2) + 2) % 2 != 0) ? Elem(-1) : Elem(1);
      for (const auto& [l, coef] : fm.gens[i].dcoef) {
        if (vec_is_zero(coef)) continue;
        int tl = fm.gens[size_t(l)].degree;
        int pil = ti + 1 - tl;
        if (a.dim(u + pil) == 0) continue;
        int roff = block_off(n + 1, l);
        for (int j = 0; j < du; ++j) {
          Vec img = a.apply_act(pil, coef, u, unit_vec(du, j));
          for (size_t r = 0; r < img.size(); ++r)
            if (!f.is_zero(img[r])) {
              d.set(roff + int(r), coff + j,
                    f.add(d.at(roff + int(r), coff + j), f.mul(sg, img[r])));
              nonzero = true;
            }
        }
      }
    }
    if (nonzero) cx.diff[n] = d;
  }
  add_identity_actions(cx);
  return cx;
}

DGModule tensor_semifree_bimodule(const DGBimodule& a, const SemifreeModule& fm) {
  DGModule aright = a.left;
  aright.side = Side::Right;
  aright.act = a.right_act;
  DGModule out = tensor_semifree(aright, fm);
  out.alg = fm.alg;
  out.name = a.left.name + "(x)F";
  out.act.clear();
  const Field& f = fm.alg->field;
  auto block_off = [&](int n, int g) {
    int off = 0;
    for (int l = 0; l < g; ++l) off += a.left.dim(n - fm.gens[size_t(l)].degree);
    return off;
  };
  for (const auto& [n, dn] : out.space.dims()) {
    out.act[{0, n}] = Matrix::identity(f, dn);
    for (const auto& [p, dp] : fm.alg->space.dims()) {
      if (p == 0) continue;
      int rows = out.dim(n + p);
      if (rows == 0) continue;
      Matrix t = Matrix::zero(f, rows, dp * dn);
      bool nonzero = false;
      for (size_t i = 0; i < fm.gens.size(); ++i) {
        int ti = fm.gens[i].degree;
        int u = n - ti;
        int du = a.left.dim(u);
        if (du == 0 || a.left.dim(u + p) == 0) continue;
        int coff = block_off(n, int(i));
        int roff = block_off(n + p, int(i));
        for (int r = 0; r < dp; ++r)
          for (int j = 0; j < du; ++j) {
            Vec img = a.left.apply_act(p, unit_vec(dp, r), u, unit_vec(du, j));
            for (size_t s = 0; s < img.size(); ++s)
              if (!f.is_zero(img[s])) {
                t.set(roff + int(s), r * dn + coff + j, img[s]);
                nonzero = true;
              }
          }
      }
      if (nonzero) out.act[{p, n}] = t;
    }
  }
  return out;
}

}  // namespace dgar
