#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "dgar/field.hpp"

namespace dgar {

struct RrefResult;

/* Dense matrix over an exact field.  Vectors are columns; a matrix acts on the
 * left, so columns index the source basis and rows the target basis.
 * Matrices are value types; mutating ops return new matrices. */
class Matrix {
 public:
  Matrix() : field_(Field::rationals()) {}
  Matrix(const Field& f, int rows, int cols);

  static Matrix identity(const Field& f, int n);
  static Matrix zero(const Field& f, int rows, int cols) { return Matrix(f, rows, cols); }
  static Matrix from_rows(const Field& f, const std::vector<Vec>& rows, int cols);
  static Matrix from_cols(const Field& f, const std::vector<Vec>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Elem& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }
  void set(int i, int j, const Elem& v) { data_[size_t(i) * cols_ + j] = field_.normalize(v); }

  Matrix transpose() const;
  Matrix mul(const Matrix& o) const;
  Matrix add(const Matrix& o) const;
  Matrix sub(const Matrix& o) const;
  Matrix scale(const Elem& c) const;
  Matrix neg() const { return scale(Elem(-1)); }
  Vec apply(const Vec& v) const;
  Matrix hstack(const Matrix& o) const;
  Matrix vstack(const Matrix& o) const;
  Matrix cols_slice(const std::vector<int>& idx) const;
  bool is_zero() const;
  bool equals(const Matrix& o) const;

  Vec row(int i) const;
  Vec col(int j) const;

  /* Reduced row echelon form.  Deterministic: pivot = first nonzero column,
   * topmost available row, scanned in order. */
  RrefResult rref() const;

  int rank() const;
  /* Basis of {x : Ax = 0}, in rref-determined deterministic order. */
  std::vector<Vec> kernel_basis() const;
  /* One solution of Ax = b, or nullopt. */
  std::optional<Vec> solve(const Vec& b) const;
  /* Solve AX = B columnwise; nullopt if any column inconsistent. */
  std::optional<Matrix> solve_matrix(const Matrix& b) const;
  /* Basis of the column space: the pivot columns of A, left to right. */
  std::vector<Vec> image_basis() const;
  std::optional<Matrix> inverse() const;
  Elem det() const;

 private:
  Field field_;
  int rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

struct RrefResult {
  Matrix mat;
  std::vector<int> pivot_cols;
};

Elem vec_dot(const Field& f, const Vec& a, const Vec& b);
Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, const Elem& c, const Vec& a);
bool vec_is_zero(const Vec& a);
Vec vec_zero(int n);

}  // namespace dgar
