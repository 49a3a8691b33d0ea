#pragma once
#include <optional>

#include "dgar/module.hpp"

namespace dgar {

/* All constructions follow one Koszul sign convention:
 *   (Sigma^s M)^n = M^{n+s}, differential (-1)^s d, left action twisted by
 *   (-1)^{s|r|}, right action untwisted;
 *   cone(f)^n = N^n + M^{n+1}, differential [[d_N, f],[0, -d_M]];
 *   map differential D(h) = d h - (-1)^{|h|} h d;
 *   (DM)^n = (M^{-n})^*, (d xi)(m) = -(-1)^{|xi|} xi(d m). */

DGModule suspend(const DGModule& m, int s);
DGMorphism suspend_morphism(const DGMorphism& f, int s);

struct Cone {
  DGModule cone;
  DGMorphism from_target;       // N -> cone
  DGMorphism to_shifted_source; // cone -> Sigma M
};
/* f must be a strict degree-0 morphism. */
Cone cone(const DGMorphism& f);

/* Degreewise dual; the side flips. */
DGModule dual(const DGModule& m);

/* A right module over A becomes a left module over opposite(A) and vice
 * versa, twisting the action table by (-1)^{pn}.  aop must be the opposite
 * algebra of m.alg (not checked beyond dimensions). */
DGModule switch_side_over_opposite(const DGModule& m, std::shared_ptr<const DGAlgebra> aop);

struct Truncation {
  DGModule module;
  DGMorphism map;  // into m for truncate_below, from m for truncate_above
};
/* Quasi-isomorphic submodule vanishing strictly below the bottom cohomology
 * degree.  Throws ValidationError on acyclic input. */
Truncation truncate_below(const DGModule& m);
/* Quasi-isomorphic quotient vanishing strictly above the top cohomology
 * degree.  Throws ValidationError on acyclic input. */
Truncation truncate_above(const DGModule& m);

struct AlgebraTruncation {
  DGAlgebra algebra;
  std::map<int, Matrix> projection;  // degreewise components of the quotient map
};
/* Quotient DG algebra vanishing above the top cohomology degree, with the
 * quotient map a quasi-isomorphism of algebras. */
AlgebraTruncation truncate_algebra(const DGAlgebra& a);

/* Basis of the space of R-linear graded maps m -> n of the given degree
 * (no compatibility with differentials imposed).  Deterministic order. */
std::vector<std::map<int, Matrix>> linear_hom_basis(const DGModule& m, const DGModule& n,
                                                    int degree);
/* D(h) = d h - (-1)^{deg} h d as components of degree deg+1. */
std::map<int, Matrix> map_differential(const DGModule& m, const DGModule& n,
                                       const std::map<int, Matrix>& comp, int degree);

/* Solve f = D(h) with h R-linear of degree deg(f)-1. */
std::optional<std::map<int, Matrix>> null_homotopy(const DGMorphism& f);
bool is_null_homotopic(const DGMorphism& f);

}  // namespace dgar
