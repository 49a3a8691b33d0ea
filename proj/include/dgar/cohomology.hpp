#pragma once
#include <map>
#include <memory>
#include <optional>

#include "dgar/module.hpp"

namespace dgar {

/* Cohomology of the underlying complex, with a chosen cocycle representative
 * per class.  reps[n] holds the representatives as columns; bound[n] a basis
 * of the coboundaries, so [bound | reps] spans the cocycles. */
struct Cohomology {
  Field field;
  GradedSpace h;
  std::map<int, Matrix> reps;
  std::map<int, Matrix> bound;

  Cohomology() : field(Field::rationals()) {}

  /* Coordinates of a cocycle in the chosen H^n basis. */
  Vec project(int n, const Vec& v) const;
};

Cohomology cohomology(const DGModule& m);

struct InfSupAmp {
  std::optional<int> inf, sup, amp;  // empty encodes +inf / -inf / -inf
};
InfSupAmp inf_sup_amp(const DGModule& m);

/* Induced map on cohomology of a degree-s morphism: comp[n]: H^n -> H^{n+s}. */
std::map<int, Matrix> h_map(const DGMorphism& f, const Cohomology& hsrc, const Cohomology& hdst);
bool is_quasi_iso(const DGMorphism& f);

/* H R as a graded algebra with zero differential, plus the representative
 * data used to build it. */
struct HAlgebra {
  std::shared_ptr<const DGAlgebra> algebra;
  Cohomology hr;
};
HAlgebra h_algebra(const DGAlgebra& a);
/* H M as a module over H R (zero differential). */
DGModule h_module(const DGModule& m, const HAlgebra& ha);

}  // namespace dgar
