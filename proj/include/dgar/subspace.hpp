#pragma once
#include "dgar/matrix.hpp"

namespace dgar {

struct MeetJoin;

/* Subspace of k^ambient, held in canonical form: the rref rows of any spanning
 * set.  Canonical form makes equality a plain comparison. */
class Subspace {
 public:
  Subspace(const Field& f, int ambient) : field_(f), ambient_(ambient) {}
  static Subspace span(const Field& f, int ambient, const std::vector<Vec>& vectors);
  static Subspace full(const Field& f, int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return int(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  const Field& field() const { return field_; }

  bool contains(const Vec& v) const;
  bool equals(const Subspace& o) const;

 private:
  Field field_;
  int ambient_;
  std::vector<Vec> basis_;  // rref rows, no zero rows
};

struct MeetJoin {
  Subspace intersection;
  Subspace sum;
};

/* Zassenhaus: one elimination yields both the intersection and the sum. */
MeetJoin intersect_and_sum(const Subspace& a, const Subspace& b);

}  // namespace dgar
