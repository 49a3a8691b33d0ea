#include "dgar/module.hpp"

#include <sstream>

#include "dgar/errors.hpp"

namespace dgar {

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

Matrix DGModule::diff_at(int n) const {
  auto it = diff.find(n);
  if (it != diff.end()) return it->second;
  return Matrix::zero(alg->field, dim(n + 1), dim(n));
}

Matrix DGModule::act_at(int p, int n) const {
  auto it = act.find({p, n});
  if (it != act.end()) return it->second;
  return Matrix::zero(alg->field, dim(p + n), alg->dim(p) * dim(n));
}

Vec DGModule::apply_act(int p, const Vec& r, int n, const Vec& m) const {
  const Field& f = alg->field;
  Vec pair(size_t(alg->dim(p)) * size_t(dim(n)));
  for (int i = 0; i < alg->dim(p); ++i)
    for (int j = 0; j < dim(n); ++j) pair[size_t(i) * dim(n) + j] = f.mul(r[i], m[j]);
  return act_at(p, n).apply(pair);
}

std::vector<std::string> DGModule::labels_at(int n) const {
  auto it = labels.find(n);
  if (it != labels.end() && int(it->second.size()) == dim(n)) return it->second;
  return default_labels("m" + std::to_string(n) + "_", dim(n));
}

Matrix DGMorphism::comp_at(int n) const {
  auto it = comp.find(n);
  if (it != comp.end()) return it->second;
  return Matrix::zero(src.alg->field, dst.dim(n + degree), src.dim(n));
}

ValidationReport validate_module(const DGModule& m) {
  ValidationReport rep;
  if (!m.alg) {
    rep.fail("module: no algebra attached");
    return rep;
  }
  const DGAlgebra& a = *m.alg;
  const Field& f = a.field;

  bool shapes_ok = true;
  for (auto& [n, mat] : m.diff) {
    if (mat.rows() != m.dim(n + 1) || mat.cols() != m.dim(n)) {
      rep.fail("shape: differential out of degree " + std::to_string(n));
      shapes_ok = false;
    }
  }
  for (auto& [pn, mat] : m.act) {
    auto [p, n] = pn;
    if (mat.rows() != m.dim(p + n) || mat.cols() != a.dim(p) * m.dim(n)) {
      rep.fail("shape: action table for degrees (" + std::to_string(p) + ", " +
               std::to_string(n) + ")");
      shapes_ok = false;
    }
  }
  if (!shapes_ok || m.space.is_zero()) return rep;

  int lo = *m.space.bottom(), hi = *m.space.top();
  for (int n = lo; n <= hi; ++n) {
    if (!m.diff_at(n + 1).mul(m.diff_at(n)).is_zero())
      rep.fail("differential: d.d nonzero out of degree " + std::to_string(n));
  }

  // unit acts as identity
  for (auto& [n, dn] : m.space.dims()) {
    for (int j = 0; j < dn; ++j) {
      Vec e = vec_zero(dn);
      e[size_t(j)] = f.one();
      if (m.apply_act(0, a.unit(), n, e) != e) {
        rep.fail("unit: 1 acts nontrivially on " + m.labels_at(n)[size_t(j)] + " in degree " +
                 std::to_string(n));
      }
    }
  }

  // associativity of the action: B(rs, x) vs the iterated action.
  // Left: r.(s.x) = (rs).x realized as B(r, B(s, x)).
  // Right: (x.s).r ... = x.(sr), realized as B(r, B(s, x)) = B(sr, x).
  for (auto& [p, dp] : a.space.dims()) {
    (void)dp;
    for (auto& [q, dq] : a.space.dims()) {
      (void)dq;
      for (auto& [n, dn] : m.space.dims()) {
        (void)dn;
        if (m.dim(p + q + n) == 0) continue;
        for (int i = 0; i < a.dim(p); ++i)
          for (int j = 0; j < a.dim(q); ++j)
            for (int l = 0; l < m.dim(n); ++l) {
              Vec ei = vec_zero(a.dim(p)), ej = vec_zero(a.dim(q)), el = vec_zero(m.dim(n));
              ei[size_t(i)] = f.one();
              ej[size_t(j)] = f.one();
              el[size_t(l)] = f.one();
              Vec iterated = m.apply_act(p, ei, q + n, m.apply_act(q, ej, n, el));
              Vec combined = m.side == Side::Left
                                 ? m.apply_act(p + q, a.product(p, ei, q, ej), n, el)
                                 : m.apply_act(p + q, a.product(q, ej, p, ei), n, el);
              if (iterated != combined) {
                std::ostringstream os;
                os << "action associativity: first failing triple (" << a.labels_at(p)[size_t(i)]
                   << ", " << a.labels_at(q)[size_t(j)] << ", " << m.labels_at(n)[size_t(l)]
                   << ") in degrees (" << p << ", " << q << ", " << n << ")";
                rep.fail(os.str());
                goto assoc_done;
              }
            }
      }
    }
  }
assoc_done:

  // Leibniz for the action.
  // Left:  d(r.x) = dr.x + (-1)^p r.dx          -> dB(r,x) = B(dr,x) + (-1)^p B(r,dx)
  // Right: d(x.r) = dx.r + (-1)^n x.dr          -> dB(r,x) = (-1)^n B(dr,x) + B(r,dx)
  for (auto& [p, dp] : a.space.dims()) {
    (void)dp;
    for (auto& [n, dn] : m.space.dims()) {
      (void)dn;
      if (m.dim(p + n + 1) == 0) continue;
      for (int i = 0; i < a.dim(p); ++i)
        for (int l = 0; l < m.dim(n); ++l) {
          Vec ei = vec_zero(a.dim(p)), el = vec_zero(m.dim(n));
          ei[size_t(i)] = f.one();
          el[size_t(l)] = f.one();
          Vec lhs = m.diff_at(p + n).apply(m.apply_act(p, ei, n, el));
          Vec t1 = m.apply_act(p + 1, a.diff_at(p).apply(ei), n, el);
          Vec t2 = m.apply_act(p, ei, n + 1, m.diff_at(n).apply(el));
          int s1 = m.side == Side::Left ? 0 : n;
          int s2 = m.side == Side::Left ? p : 0;
          if (s1 % 2 != 0) t1 = vec_scale(f, f.from_long(-1), t1);
          if (s2 % 2 != 0) t2 = vec_scale(f, f.from_long(-1), t2);
          Vec rhs = vec_add(f, t1, t2);
          if (lhs != rhs) {
            std::ostringstream os;
            os << "action leibniz: first failing pair (" << a.labels_at(p)[size_t(i)] << ", "
               << m.labels_at(n)[size_t(l)] << ") in degrees (" << p << ", " << n << ")";
            rep.fail(os.str());
            goto leibniz_done;
          }
        }
    }
  }
leibniz_done:

  for (int n = lo; n <= hi; ++n) {
    int z = m.dim(n) - m.diff_at(n).rank();
    int b = m.diff_at(n - 1).rank();
    if (z - b != 0) rep.h_dims[n] = z - b;
  }
  rep.top_h = rep.h_dims.empty() ? 0 : rep.h_dims.rbegin()->first;
  return rep;
}

void require_valid(const DGModule& m) {
  ValidationReport rep = validate_module(m);
  if (!rep.valid) throw ValidationError("module " + m.name + ": " + rep.failures.front());
}

ValidationReport validate_morphism(const DGMorphism& fm) {
  ValidationReport rep;
  const DGModule& m = fm.src;
  const DGModule& n = fm.dst;
  const Field& f = m.alg->field;
  int s = fm.degree;
  if (m.side != n.side || !(m.alg->field == n.alg->field)) {
    rep.fail("morphism: source and target live over different structures");
    return rep;
  }
  for (auto& [t, mat] : fm.comp) {
    if (mat.rows() != n.dim(t + s) || mat.cols() != m.dim(t)) {
      rep.fail("shape: component out of degree " + std::to_string(t));
      return rep;
    }
  }
  if (m.space.is_zero()) return rep;
  int lo = *m.space.bottom(), hi = *m.space.top();
  for (int t = lo; t <= hi; ++t) {
    Matrix lhs = n.diff_at(t + s).mul(fm.comp_at(t));
    Matrix rhs = fm.comp_at(t + 1).mul(m.diff_at(t));
    if (s % 2 != 0) rhs = rhs.neg();
    if (!lhs.equals(rhs)) {
      rep.fail("chain condition: fails out of degree " + std::to_string(t));
      break;
    }
  }
  for (auto& [p, dp] : m.alg->space.dims()) {
    (void)dp;
    for (auto& [t, dt] : m.space.dims()) {
      (void)dt;
      if (n.dim(p + t + s) == 0) continue;
      for (int i = 0; i < m.alg->dim(p); ++i)
        for (int l = 0; l < m.dim(t); ++l) {
          Vec ei = vec_zero(m.alg->dim(p)), el = vec_zero(m.dim(t));
          ei[size_t(i)] = f.one();
          el[size_t(l)] = f.one();
          Vec lhs = fm.comp_at(p + t).apply(m.apply_act(p, ei, t, el));
          Vec rhs = n.apply_act(p, ei, t + s, fm.comp_at(t).apply(el));
          int sg = m.side == Side::Left ? s * p : 0;
          if (((sg % 2) + 2) % 2 != 0) rhs = vec_scale(f, f.from_long(-1), rhs);
          if (lhs != rhs) {
            rep.fail("linearity: fails on algebra degree " + std::to_string(p) +
                     ", module degree " + std::to_string(t));
            return rep;
          }
        }
    }
  }
  return rep;
}

void require_valid(const DGMorphism& f) {
  ValidationReport rep = validate_morphism(f);
  if (!rep.valid) throw ValidationError("morphism: " + rep.failures.front());
}

DGModule regular_module(std::shared_ptr<const DGAlgebra> a, Side side) {
  DGModule m;
  m.alg = a;
  m.side = side;
  m.space = a->space;
  m.diff = a->diff;
  m.labels = a->labels;
  m.name = a->name;
  for (auto& [pq, mat] : a->mul) {
    auto [p, q] = pq;
    if (side == Side::Left) {
      m.act[{p, q}] = mat;  // B(r, x) = r.x
    } else {
      // B(r, x) = x.r: columns reindexed from (x, r) to (r, x)
      Matrix t(a->field, mat.rows(), mat.cols());
      for (int i = 0; i < a->dim(p); ++i)
        for (int j = 0; j < a->dim(q); ++j)
          for (int r = 0; r < mat.rows(); ++r)
            t.set(r, i * a->dim(q) + j, a->mul_at(q, p).at(r, j * a->dim(p) + i));
      m.act[{p, q}] = t;
    }
  }
  return m;
}

DGModule free_module(std::shared_ptr<const DGAlgebra> a, const std::vector<int>& gen_degrees,
                     Side side) {
  const Field& f = a->field;
  DGModule m;
  m.alg = a;
  m.side = side;
  m.name = "free";
  if (a->space.is_zero()) return m;
  int alo = *a->space.bottom(), ahi = *a->space.top();
  // basis of degree n: (g, b), g a generator, b an algebra basis index in
  // degree n - deg(g); offset bookkeeping below reproduces that order
  auto dim_at = [&](int n) {
    int d = 0;
    for (int t : gen_degrees) d += a->dim(n - t);
    return d;
  };
  auto offset_of = [&](int n, size_t g) {
    int off = 0;
    for (size_t h = 0; h < g; ++h) off += a->dim(n - gen_degrees[h]);
    return off;
  };
  int lo = 0, hi = 0;
  bool first = true;
  for (int t : gen_degrees) {
    if (first || t + alo < lo) lo = t + alo;
    if (first || t + ahi > hi) hi = t + ahi;
    first = false;
  }
  if (first) return m;
  for (int n = lo; n <= hi; ++n) m.space.set_dim(n, dim_at(n));
  for (int n = lo; n <= hi; ++n) {
    if (m.dim(n) == 0 || m.dim(n + 1) == 0) continue;
    Matrix d(f, m.dim(n + 1), m.dim(n));
    for (size_t g = 0; g < gen_degrees.size(); ++g) {
      int t = gen_degrees[g];
      Matrix da = a->diff_at(n - t);
      for (int j = 0; j < a->dim(n - t); ++j)
        for (int i = 0; i < a->dim(n + 1 - t); ++i)
          d.set(offset_of(n + 1, g) + i, offset_of(n, g) + j, da.at(i, j));
    }
    if (!d.is_zero()) m.diff[n] = d;
  }
  for (auto& [p, dp] : a->space.dims()) {
    (void)dp;
    for (int n = lo; n <= hi; ++n) {
      if (m.dim(n) == 0 || m.dim(p + n) == 0) continue;
      Matrix t(f, m.dim(p + n), a->dim(p) * m.dim(n));
      for (size_t g = 0; g < gen_degrees.size(); ++g) {
        int tg = gen_degrees[g];
        int q = n - tg;
        if (a->dim(q) == 0) continue;
        // left: r.(s g) = (rs) g;  right: (s g).r = (sr) g
        Matrix blk = side == Side::Left ? a->mul_at(p, q) : a->mul_at(q, p);
        for (int i = 0; i < a->dim(p); ++i)
          for (int j = 0; j < a->dim(q); ++j)
            for (int r = 0; r < a->dim(p + q); ++r) {
              Elem v = side == Side::Left ? blk.at(r, i * a->dim(q) + j)
                                          : blk.at(r, j * a->dim(p) + i);
              t.set(offset_of(p + n, g) + r, i * m.dim(n) + (offset_of(n, g) + j), v);
            }
      }
      if (!t.is_zero()) m.act[{p, n}] = t;
    }
  }
  return m;
}

DGModule residue_field_module(std::shared_ptr<const DGAlgebra> a, Side side) {
  DGModule m;
  m.alg = a;
  m.side = side;
  m.space.set_dim(0, 1);
  m.act[{0, 0}] = Matrix::identity(a->field, 1);
  m.name = "k";
  m.labels[0] = {"1"};
  return m;
}

DGModule zero_module(std::shared_ptr<const DGAlgebra> a, Side side) {
  DGModule m;
  m.alg = a;
  m.side = side;
  m.name = "0";
  return m;
}

DirectSum direct_sum(const DGModule& m, const DGModule& n) {
  const Field& f = m.alg->field;
  DGModule s;
  s.alg = m.alg;
  s.side = m.side;
  s.name = m.name + "+" + n.name;
  std::map<int, int> dims;
  for (auto& [t, d] : m.space.dims()) dims[t] += d;
  for (auto& [t, d] : n.space.dims()) dims[t] += d;
  for (auto& [t, d] : dims) s.space.set_dim(t, d);

  auto embed = [&](int t, const Matrix& src, int row_off, int col_off, Matrix& dst) {
    (void)t;
    for (int i = 0; i < src.rows(); ++i)
      for (int j = 0; j < src.cols(); ++j)
        if (!f.is_zero(src.at(i, j))) dst.set(row_off + i, col_off + j, src.at(i, j));
  };
  for (auto& [t, d] : dims) {
    (void)d;
    if (s.dim(t + 1) == 0) continue;
    Matrix dmat(f, s.dim(t + 1), s.dim(t));
    embed(t, m.diff_at(t), 0, 0, dmat);
    embed(t, n.diff_at(t), m.dim(t + 1), m.dim(t), dmat);
    if (!dmat.is_zero()) s.diff[t] = dmat;
  }
  for (auto& [p, dp] : m.alg->space.dims()) {
    (void)dp;
    for (auto& [t, d] : dims) {
      (void)d;
      if (s.dim(p + t) == 0) continue;
      Matrix amat(f, s.dim(p + t), m.alg->dim(p) * s.dim(t));
      Matrix am = m.act_at(p, t), an = n.act_at(p, t);
      for (int i = 0; i < m.alg->dim(p); ++i) {
        for (int j = 0; j < m.dim(t); ++j)
          for (int r = 0; r < m.dim(p + t); ++r)
            amat.set(r, i * s.dim(t) + j, am.at(r, i * m.dim(t) + j));
        for (int j = 0; j < n.dim(t); ++j)
          for (int r = 0; r < n.dim(p + t); ++r)
            amat.set(m.dim(p + t) + r, i * s.dim(t) + m.dim(t) + j, an.at(r, i * n.dim(t) + j));
      }
      if (!amat.is_zero()) s.act[{p, t}] = amat;
    }
  }

  DirectSum out{s, {}, {}, {}, {}};
  out.incl_left = DGMorphism{m, s, 0, {}};
  out.incl_right = DGMorphism{n, s, 0, {}};
  out.proj_left = DGMorphism{s, m, 0, {}};
  out.proj_right = DGMorphism{s, n, 0, {}};
  for (auto& [t, d] : dims) {
    (void)d;
    if (m.dim(t) > 0) {
      Matrix il(f, s.dim(t), m.dim(t));
      for (int j = 0; j < m.dim(t); ++j) il.set(j, j, f.one());
      out.incl_left.comp[t] = il;
      out.proj_left.comp[t] = il.transpose();
    }
    if (n.dim(t) > 0) {
      Matrix ir(f, s.dim(t), n.dim(t));
      for (int j = 0; j < n.dim(t); ++j) ir.set(m.dim(t) + j, j, f.one());
      out.incl_right.comp[t] = ir;
      out.proj_right.comp[t] = ir.transpose();
    }
  }
  return out;
}

DGMorphism zero_morphism(const DGModule& src, const DGModule& dst, int degree) {
  return DGMorphism{src, dst, degree, {}};
}

DGMorphism identity_morphism(const DGModule& m) {
  DGMorphism f{m, m, 0, {}};
  for (auto& [t, d] : m.space.dims()) f.comp[t] = Matrix::identity(m.alg->field, d);
  return f;
}

DGMorphism compose(const DGMorphism& g, const DGMorphism& f) {
  DGMorphism h{f.src, g.dst, f.degree + g.degree, {}};
  for (auto& [t, d] : f.src.space.dims()) {
    (void)d;
    if (h.dst.dim(t + h.degree) == 0) continue;
    Matrix m = g.comp_at(t + f.degree).mul(f.comp_at(t));
    if (!m.is_zero()) h.comp[t] = m;
  }
  return h;
}

DGMorphism add_morphisms(const DGMorphism& f, const DGMorphism& g) {
  DGMorphism h{f.src, f.dst, f.degree, {}};
  for (auto& [t, d] : f.src.space.dims()) {
    (void)d;
    if (f.dst.dim(t + f.degree) == 0) continue;
    Matrix m = f.comp_at(t).add(g.comp_at(t));
    if (!m.is_zero()) h.comp[t] = m;
  }
  return h;
}

DGMorphism scale_morphism(const Elem& c, const DGMorphism& f) {
  DGMorphism h{f.src, f.dst, f.degree, {}};
  for (auto& [t, mat] : f.comp) {
    Matrix m = mat.scale(c);
    if (!m.is_zero()) h.comp[t] = m;
  }
  return h;
}

bool is_strict_iso(const DGMorphism& f) {
  if (f.degree != 0) return false;
  if (!(f.src.space == f.dst.space)) {
    // degreewise dimensions must match up to the (zero) shift
    for (auto& [t, d] : f.src.space.dims())
      if (f.dst.dim(t) != d) return false;
    for (auto& [t, d] : f.dst.space.dims())
      if (f.src.dim(t) != d) return false;
  }
  for (auto& [t, d] : f.src.space.dims()) {
    (void)d;
    if (!f.comp_at(t).inverse()) return false;
  }
  return true;
}

}  // namespace dgar
