#pragma once
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dgar/graded.hpp"
#include "dgar/matrix.hpp"

namespace dgar {

/* Connected cochain DG algebra over an exact field: R^{<0} = 0, R^0 = k
 * (spanned by the unit), R^1 = 0, finite total dimension.
 *
 * diff[n] is d^n: R^n -> R^{n+1}; absent entries are zero maps.
 * mul[{p,q}] is the bilinear table R^p x R^q -> R^{p+q}; column index of the
 * pair (i,j) is i*dim(q)+j.  Tables are stored whenever source and target
 * dimensions are all nonzero, identity blocks for p=0 or q=0 included. */
struct DGAlgebra {
  Field field;
  GradedSpace space;
  std::map<int, Matrix> diff;
  std::map<std::pair<int, int>, Matrix> mul;
  std::string name;
  std::map<int, std::vector<std::string>> labels;

  DGAlgebra() : field(Field::rationals()) {}

  int dim(int n) const { return space.dim(n); }
  Matrix diff_at(int n) const;
  Matrix mul_at(int p, int q) const;
  Vec product(int p, const Vec& a, int q, const Vec& b) const;
  Vec unit() const;
  std::vector<std::string> labels_at(int n) const;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> failures;
  std::map<int, int> h_dims;
  int top_h = 0;  // sup of nonzero cohomology; 0 when H sits in degree 0 only

  void fail(const std::string& what);
};

/* Checks every structural axiom; the report names the first failing basis
 * pair per axiom.  h_dims/top_h are filled only when the shape is sane. */
ValidationReport validate_algebra(const DGAlgebra& a);
void require_valid(const DGAlgebra& a);

DGAlgebra opposite(const DGAlgebra& a);
/* The ground field viewed as a DG algebra concentrated in degree 0. */
DGAlgebra scalar_algebra(const Field& f);
/* Structural equality: field, dimensions, differentials, multiplication. */
bool same_structure(const DGAlgebra& a, const DGAlgebra& b);

}  // namespace dgar
