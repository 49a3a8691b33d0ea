#include "dgar/algebra.hpp"

#include <sstream>

#include "dgar/errors.hpp"

namespace dgar {

GradedSpace::GradedSpace(std::map<int, int> dims) {
  for (auto& [n, d] : dims) {
    if (d < 0) throw ValidationError("negative dimension in degree " + std::to_string(n));
    if (d > 0) dims_[n] = d;
  }
}

int GradedSpace::dim(int n) const {
  auto it = dims_.find(n);
  return it == dims_.end() ? 0 : it->second;
}

void GradedSpace::set_dim(int n, int d) {
  if (d < 0) throw ValidationError("negative dimension in degree " + std::to_string(n));
  if (d == 0)
    dims_.erase(n);
  else
    dims_[n] = d;
}

std::optional<int> GradedSpace::bottom() const {
  if (dims_.empty()) return std::nullopt;
  return dims_.begin()->first;
}

std::optional<int> GradedSpace::top() const {
  if (dims_.empty()) return std::nullopt;
  return dims_.rbegin()->first;
}

int GradedSpace::total() const {
  int t = 0;
  for (auto& [n, d] : dims_) t += d;
  return t;
}

std::vector<std::string> default_labels(const std::string& stem, int n) {
  std::vector<std::string> out;
  out.reserve(size_t(n));
  for (int i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

Matrix DGAlgebra::diff_at(int n) const {
  auto it = diff.find(n);
  if (it != diff.end()) return it->second;
  return Matrix::zero(field, dim(n + 1), dim(n));
}

Matrix DGAlgebra::mul_at(int p, int q) const {
  auto it = mul.find({p, q});
  if (it != mul.end()) return it->second;
  return Matrix::zero(field, dim(p + q), dim(p) * dim(q));
}

Vec DGAlgebra::product(int p, const Vec& a, int q, const Vec& b) const {
  Vec pair(size_t(dim(p)) * size_t(dim(q)));
  for (int i = 0; i < dim(p); ++i)
    for (int j = 0; j < dim(q); ++j) pair[size_t(i) * dim(q) + j] = field.mul(a[i], b[j]);
  return mul_at(p, q).apply(pair);
}

Vec DGAlgebra::unit() const {
  Vec u(size_t(dim(0)));
  if (dim(0) > 0) u[0] = field.one();
  return u;
}

std::vector<std::string> DGAlgebra::labels_at(int n) const {
  auto it = labels.find(n);
  if (it != labels.end() && int(it->second.size()) == dim(n)) return it->second;
  return default_labels("r" + std::to_string(n) + "_", dim(n));
}

void ValidationReport::fail(const std::string& what) {
  valid = false;
  failures.push_back(what);
}

namespace {

std::string pair_name(const DGAlgebra& a, int p, int i, int q, int j) {
  std::ostringstream os;
  os << "(" << a.labels_at(p)[size_t(i)] << ", " << a.labels_at(q)[size_t(j)] << ") in degrees ("
     << p << ", " << q << ")";
  return os.str();
}

/* Cohomology dims of the underlying complex, by ranks only. */
std::map<int, int> complex_h_dims(const Field& f, const GradedSpace& sp,
                                  const std::map<int, Matrix>& diff) {
  std::map<int, int> h;
  if (sp.is_zero()) return h;
  int lo = *sp.bottom(), hi = *sp.top();
  auto d_at = [&](int n) {
    auto it = diff.find(n);
    if (it != diff.end()) return it->second;
    return Matrix::zero(f, sp.dim(n + 1), sp.dim(n));
  };
  for (int n = lo; n <= hi; ++n) {
    int z = sp.dim(n) - d_at(n).rank();
    int b = d_at(n - 1).rank();
    if (z - b != 0) h[n] = z - b;
  }
  return h;
}

}  // namespace

ValidationReport validate_algebra(const DGAlgebra& a) {
  ValidationReport rep;
  const Field& f = a.field;

  for (auto& [n, d] : a.space.dims()) {
    if (n < 0 && d > 0) rep.fail("connectivity: nonzero component in negative degree " +
                                 std::to_string(n));
  }
  if (a.space.dim(0) != 1) rep.fail("connectivity: degree 0 must be one-dimensional");
  if (a.space.dim(1) != 0) rep.fail("connectivity: degree 1 must vanish");

  // differential shapes, then d.d = 0
  bool shapes_ok = true;
  for (auto& [n, m] : a.diff) {
    if (m.rows() != a.dim(n + 1) || m.cols() != a.dim(n)) {
      rep.fail("shape: differential out of degree " + std::to_string(n));
      shapes_ok = false;
    }
  }
  for (auto& [pq, m] : a.mul) {
    auto [p, q] = pq;
    if (m.rows() != a.dim(p + q) || m.cols() != a.dim(p) * a.dim(q)) {
      rep.fail("shape: multiplication table for degrees (" + std::to_string(p) + ", " +
               std::to_string(q) + ")");
      shapes_ok = false;
    }
    if (p < 0 || q < 0) rep.fail("shape: multiplication table in negative degree");
  }
  if (!shapes_ok) return rep;

  if (!a.space.is_zero()) {
    for (int n = *a.space.bottom(); n <= *a.space.top(); ++n) {
      if (!a.diff_at(n + 1).mul(a.diff_at(n)).is_zero())
        rep.fail("differential: d.d nonzero out of degree " + std::to_string(n));
    }
  }

  // unit law on every basis element
  for (auto& [n, dn] : a.space.dims()) {
    (void)dn;
    for (int j = 0; j < a.dim(n); ++j) {
      Vec e = vec_zero(a.dim(n));
      e[size_t(j)] = f.one();
      if (a.product(0, a.unit(), n, e) != e) {
        rep.fail("unit: 1 * " + a.labels_at(n)[size_t(j)] + " differs in degree " +
                 std::to_string(n));
      }
      if (a.product(n, e, 0, a.unit()) != e) {
        rep.fail("unit: " + a.labels_at(n)[size_t(j)] + " * 1 differs in degree " +
                 std::to_string(n));
      }
    }
  }

  // associativity on all basis triples
  for (auto& [p, dp] : a.space.dims()) {
    (void)dp;
    for (auto& [q, dq] : a.space.dims()) {
      (void)dq;
      for (auto& [r, dr] : a.space.dims()) {
        (void)dr;
        if (a.dim(p + q + r) == 0) continue;
        for (int i = 0; i < a.dim(p); ++i)
          for (int j = 0; j < a.dim(q); ++j)
            for (int l = 0; l < a.dim(r); ++l) {
              Vec ei = vec_zero(a.dim(p)), ej = vec_zero(a.dim(q)), el = vec_zero(a.dim(r));
              ei[size_t(i)] = f.one();
              ej[size_t(j)] = f.one();
              el[size_t(l)] = f.one();
              Vec lhs = a.product(p + q, a.product(p, ei, q, ej), r, el);
              Vec rhs = a.product(p, ei, q + r, a.product(q, ej, r, el));
              if (lhs != rhs) {
                rep.fail("associativity: first failing triple " + pair_name(a, p, i, q, j) +
                         " then " + a.labels_at(r)[size_t(l)]);
                goto assoc_done;
              }
            }
      }
    }
  }
assoc_done:

  // Leibniz on all basis pairs
  for (auto& [p, dp] : a.space.dims()) {
    (void)dp;
    for (auto& [q, dq] : a.space.dims()) {
      (void)dq;
      if (a.dim(p + q + 1) == 0) continue;
      for (int i = 0; i < a.dim(p); ++i)
        for (int j = 0; j < a.dim(q); ++j) {
          Vec ei = vec_zero(a.dim(p)), ej = vec_zero(a.dim(q));
          ei[size_t(i)] = f.one();
          ej[size_t(j)] = f.one();
          Vec lhs = a.diff_at(p + q).apply(a.product(p, ei, q, ej));
          Vec rhs = a.product(p + 1, a.diff_at(p).apply(ei), q, ej);
          Vec rhs2 = a.product(p, ei, q + 1, a.diff_at(q).apply(ej));
          if (p % 2 != 0) rhs2 = vec_scale(f, f.from_long(-1), rhs2);
          rhs = vec_add(f, rhs, rhs2);
          if (lhs != rhs) {
            rep.fail("leibniz: first failing pair " + pair_name(a, p, i, q, j));
            goto leibniz_done;
          }
        }
    }
  }
leibniz_done:

  rep.h_dims = complex_h_dims(f, a.space, a.diff);
  rep.top_h = rep.h_dims.empty() ? 0 : rep.h_dims.rbegin()->first;
  if (rep.h_dims.find(0) == rep.h_dims.end() || rep.h_dims[0] != 1)
    rep.fail("cohomology: degree 0 must contribute exactly k");
  if (rep.top_h == 1 || rep.top_h < 0)
    rep.fail("cohomology: top degree must be 0 or at least 2");
  return rep;
}

void require_valid(const DGAlgebra& a) {
  ValidationReport rep = validate_algebra(a);
  if (!rep.valid) throw ValidationError("algebra " + a.name + ": " + rep.failures.front());
}

DGAlgebra opposite(const DGAlgebra& a) {
  DGAlgebra o = a;
  o.name = a.name.empty() ? "" : a.name + ".op";
  o.mul.clear();
  for (auto& [pq, m] : a.mul) {
    auto [p, q] = pq;
    Matrix t(a.field, m.rows(), a.dim(q) * a.dim(p));
    bool flip = (p % 2 != 0) && (q % 2 != 0);
    for (int i = 0; i < a.dim(q); ++i)
      for (int j = 0; j < a.dim(p); ++j)
        for (int r = 0; r < m.rows(); ++r) {
          Elem v = m.at(r, j * a.dim(q) + i);
          if (flip) v = a.field.neg(v);
          t.set(r, i * a.dim(p) + j, v);
        }
    o.mul[{q, p}] = t;
  }
  return o;
}

DGAlgebra scalar_algebra(const Field& f) {
  DGAlgebra a;
  a.field = f;
  a.space.set_dim(0, 1);
  a.mul[{0, 0}] = Matrix::identity(f, 1);
  a.name = "k";
  a.labels[0] = {"1"};
  return a;
}

bool same_structure(const DGAlgebra& a, const DGAlgebra& b) {
  if (!(a.field.spec() == b.field.spec())) return false;
  if (!(a.space == b.space)) return false;
  if (!a.space.is_zero()) {
    for (int n = *a.space.bottom(); n <= *a.space.top(); ++n)
      if (!a.diff_at(n).equals(b.diff_at(n))) return false;
  }
  for (auto& [p, dp] : a.space.dims()) {
    (void)dp;
    for (auto& [q, dq] : a.space.dims()) {
      (void)dq;
      if (a.dim(p + q) == 0) continue;
      if (!a.mul_at(p, q).equals(b.mul_at(p, q))) return false;
    }
  }
  return true;
}

}  // namespace dgar
