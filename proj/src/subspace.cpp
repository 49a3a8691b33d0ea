#include "dgar/subspace.hpp"

namespace dgar {

Subspace Subspace::span(const Field& f, int ambient, const std::vector<Vec>& vectors) {
  Subspace s(f, ambient);
  if (vectors.empty()) return s;
  auto rr = Matrix::from_rows(f, vectors, ambient).rref();
  for (size_t i = 0; i < rr.pivot_cols.size(); ++i) s.basis_.push_back(rr.mat.row(int(i)));
  return s;
}

Subspace Subspace::full(const Field& f, int ambient) {
  std::vector<Vec> rows;
  for (int i = 0; i < ambient; ++i) {
    Vec v(ambient, Elem(0));
    v[i] = Elem(1);
    rows.push_back(std::move(v));
  }
  return span(f, ambient, rows);
}

bool Subspace::contains(const Vec& v) const {
  if (int(v.size()) != ambient_) throw ValidationError("subspace ambient mismatch");
  if (vec_is_zero(v)) return true;
  if (basis_.empty()) return false;
  // v in row space  <=>  v^T solvable against basis^T
  Matrix bt = Matrix::from_rows(field_, basis_, ambient_).transpose();
  return bt.solve(v).has_value();
}

bool Subspace::equals(const Subspace& o) const {
  if (ambient_ != o.ambient_ || basis_.size() != o.basis_.size()) return false;
  for (size_t i = 0; i < basis_.size(); ++i)
    for (int j = 0; j < ambient_; ++j)
      if (cmp(basis_[i][j], o.basis_[i][j]) != 0) return false;
  return true;
}

MeetJoin intersect_and_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw ValidationError("ambient mismatch");
  const Field& f = a.field();
  int n = a.ambient();
  // Zassenhaus block matrix [A A; B 0], rref; rows with zero left half carry
  // the intersection in the right half, nonzero-left rows span the sum.
  std::vector<Vec> rows;
  for (const auto& v : a.basis()) {
    Vec r(2 * n);
    for (int j = 0; j < n; ++j) r[j] = v[j], r[n + j] = v[j];
    rows.push_back(std::move(r));
  }
  for (const auto& v : b.basis()) {
    Vec r(2 * n, Elem(0));
    for (int j = 0; j < n; ++j) r[j] = v[j];
    rows.push_back(std::move(r));
  }
  if (rows.empty())
    return {Subspace::span(f, n, {}), Subspace::span(f, n, {})};
  auto rr = Matrix::from_rows(f, rows, 2 * n).rref();
  std::vector<Vec> sum_rows, int_rows;
  for (int i = 0; i < rr.mat.rows(); ++i) {
    Vec left(n), right(n);
    bool lz = true, rz = true;
    for (int j = 0; j < n; ++j) {
      left[j] = rr.mat.at(i, j);
      right[j] = rr.mat.at(i, n + j);
      if (sgn(left[j]) != 0) lz = false;
      if (sgn(right[j]) != 0) rz = false;
    }
    if (!lz)
      sum_rows.push_back(std::move(left));
    else if (!rz)
      int_rows.push_back(std::move(right));
  }
  return {Subspace::span(f, n, int_rows), Subspace::span(f, n, sum_rows)};
}

}  // namespace dgar
