#include "dgar/matrix.hpp"

namespace dgar {

Matrix::Matrix(const Field& f, int rows, int cols) : field_(f), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw ValidationError("negative matrix dimension");
  data_.assign(size_t(rows) * cols, Elem(0));
}

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Elem(1));
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows, int cols) {
  Matrix m(f, int(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (int(rows[i].size()) != cols) throw ValidationError("row length mismatch");
    for (int j = 0; j < cols; ++j) m.set(int(i), j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_cols(const Field& f, const std::vector<Vec>& cols, int rows) {
  Matrix m(f, rows, int(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (int(cols[j].size()) != rows) throw ValidationError("column length mismatch");
    for (int i = 0; i < rows; ++i) m.set(i, int(j), cols[j][i]);
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

Matrix Matrix::mul(const Matrix& o) const {
  if (cols_ != o.rows_) throw ValidationError("matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Elem& a = at(i, k);
      if (sgn(a) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (sgn(o.at(k, j)) == 0) continue;
        r.set(i, j, field_.add(r.at(i, j), field_.mul(a, o.at(k, j))));
      }
    }
  return r;
}

Matrix Matrix::add(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix sum shape mismatch");
  Matrix r(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(i, j, field_.add(at(i, j), o.at(i, j)));
  return r;
}

Matrix Matrix::sub(const Matrix& o) const { return add(o.neg()); }

Matrix Matrix::scale(const Elem& c) const {
  Matrix r(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(i, j, field_.mul(at(i, j), c));
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (int(v.size()) != cols_) throw ValidationError("matrix apply shape mismatch");
  Vec r(rows_, Elem(0));
  for (int j = 0; j < cols_; ++j) {
    if (sgn(v[j]) == 0) continue;
    for (int i = 0; i < rows_; ++i)
      if (sgn(at(i, j)) != 0) r[i] = field_.add(r[i], field_.mul(at(i, j), v[j]));
  }
  return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ != o.rows_) throw ValidationError("hstack row mismatch");
  Matrix r(field_, rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (int j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.at(i, j));
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_) throw ValidationError("vstack col mismatch");
  Matrix r(field_, rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(rows_ + i, j, o.at(i, j));
  return r;
}

Matrix Matrix::cols_slice(const std::vector<int>& idx) const {
  Matrix r(field_, rows_, int(idx.size()));
  for (size_t j = 0; j < idx.size(); ++j)
    for (int i = 0; i < rows_; ++i) r.set(i, int(j), at(i, idx[j]));
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_)
    if (sgn(e) != 0) return false;
  return true;
}

bool Matrix::equals(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < data_.size(); ++i)
    if (cmp(data_[i], o.data_[i]) != 0) return false;
  return true;
}

Vec Matrix::row(int i) const {
  Vec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Vec Matrix::col(int j) const {
  Vec c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

RrefResult Matrix::rref() const {
  Matrix m = *this;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int sel = -1;
    for (int i = r; i < rows_; ++i)
      if (sgn(m.at(i, c)) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < cols_; ++j) {
        Elem t = m.at(r, j);
        m.set(r, j, m.at(sel, j));
        m.set(sel, j, t);
      }
    Elem piv = field_.inv(m.at(r, c));
    for (int j = 0; j < cols_; ++j) m.set(r, j, field_.mul(m.at(r, j), piv));
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      Elem f = m.at(i, c);
      if (sgn(f) == 0) continue;
      for (int j = 0; j < cols_; ++j) m.set(i, j, field_.sub(m.at(i, j), field_.mul(f, m.at(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(m), std::move(pivots)};
}

int Matrix::rank() const { return int(rref().pivot_cols.size()); }

std::vector<Vec> Matrix::kernel_basis() const {
  auto rr = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols_, Elem(0));
    v[c] = Elem(1);
    for (size_t i = 0; i < rr.pivot_cols.size(); ++i)
      v[rr.pivot_cols[i]] = field_.neg(rr.mat.at(int(i), c));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
  auto m = solve_matrix(from_cols(field_, {b}, rows_));
  if (!m) return std::nullopt;
  return m->col(0);
}

std::optional<Matrix> Matrix::solve_matrix(const Matrix& b) const {
  if (b.rows() != rows_) throw ValidationError("solve shape mismatch");
  auto rr = hstack(b).rref();
  // Inconsistent iff a pivot lands in the b-block.
  for (int c : rr.pivot_cols)
    if (c >= cols_) return std::nullopt;
  Matrix x(field_, cols_, b.cols());
  for (size_t i = 0; i < rr.pivot_cols.size(); ++i)
    for (int j = 0; j < b.cols(); ++j) x.set(rr.pivot_cols[i], j, rr.mat.at(int(i), cols_ + j));
  return x;
}

std::vector<Vec> Matrix::image_basis() const {
  auto rr = rref();
  std::vector<Vec> basis;
  for (int c : rr.pivot_cols) basis.push_back(col(c));
  return basis;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  auto rr = hstack(identity(field_, rows_)).rref();
  if (int(rr.pivot_cols.size()) != rows_) return std::nullopt;
  for (int i = 0; i < rows_; ++i)
    if (rr.pivot_cols[i] != i) return std::nullopt;
  Matrix inv(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.set(i, j, rr.mat.at(i, cols_ + j));
  return inv;
}

Elem Matrix::det() const {
  if (rows_ != cols_) throw ValidationError("determinant of non-square matrix");
  Matrix m = *this;
  Elem d(1);
  for (int c = 0; c < cols_; ++c) {
    int sel = -1;
    for (int i = c; i < rows_; ++i)
      if (sgn(m.at(i, c)) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) return Elem(0);
    if (sel != c) {
      d = field_.neg(d);
      for (int j = 0; j < cols_; ++j) {
        Elem t = m.at(c, j);
        m.set(c, j, m.at(sel, j));
        m.set(sel, j, t);
      }
    }
    d = field_.mul(d, m.at(c, c));
    Elem piv = field_.inv(m.at(c, c));
    for (int i = c + 1; i < rows_; ++i) {
      Elem f = field_.mul(m.at(i, c), piv);
      if (sgn(f) == 0) continue;
      for (int j = c; j < cols_; ++j) m.set(i, j, field_.sub(m.at(i, j), field_.mul(f, m.at(c, j))));
    }
  }
  return d;
}

Elem vec_dot(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ValidationError("dot length mismatch");
  Elem s(0);
  for (size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ValidationError("vec length mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ValidationError("vec length mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const Field& f, const Elem& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& e : a)
    if (sgn(e) != 0) return false;
  return true;
}

Vec vec_zero(int n) { return Vec(size_t(n), Elem(0)); }

}  // namespace dgar
