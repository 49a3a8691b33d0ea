#pragma once
#include <map>
#include <vector>

#include "dgar/matrix.hpp"

namespace dgar {

/* Sparse multivariate polynomial, exponent vector -> coefficient.
 * Used for symbolic determinants of small matrix pencils. */
class Poly {
 public:
  Poly(const Field& f, int nvars) : field_(f), nvars_(nvars) {}
  static Poly constant(const Field& f, int nvars, const Elem& c);
  static Poly variable(const Field& f, int nvars, int i);

  bool is_zero() const { return terms_.empty(); }
  int nvars() const { return nvars_; }
  const Field& field() const { return field_; }
  const std::map<std::vector<int>, Elem>& terms() const { return terms_; }

  Poly add(const Poly& o) const;
  Poly sub(const Poly& o) const;
  Poly mul(const Poly& o) const;
  Poly neg() const;
  Poly scale(const Elem& c) const;

  int degree_in(int var) const;
  int total_degree() const;
  /* Substitute var := value; result still has nvars variables (var unused). */
  Poly substitute(int var, const Elem& value) const;
  Elem eval(const Vec& point) const;

 private:
  void add_term(const std::vector<int>& e, const Elem& c);
  Field field_;
  int nvars_;
  std::map<std::vector<int>, Elem> terms_;
};

Poly poly_det(const std::vector<std::vector<Poly>>& m);

}  // namespace dgar
