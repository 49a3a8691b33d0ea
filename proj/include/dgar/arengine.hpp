#pragma once
#include <memory>
#include <utility>
#include <vector>

#include "dgar/endalg.hpp"
#include "dgar/gorenstein.hpp"

namespace dgar {

/* Translate of a compact left module: the dual of the algebra tensored over
 * the minimal resolution, desuspended once.  The algebra must pass the
 * Gorenstein checks or NotGorenstein is thrown; cohomology comes out shifted
 * one below the top degree. */
DGModule tau(const DGModule& m, const ResolutionBudget& budget = {});

/* Quasi-inverse of tau.  The dual of the algebra is resolved over the
 * opposite algebra; the Gorenstein checks force that resolution onto a
 * single generator, whose degree pins the inverse dualizing bimodule as a
 * suspension of the algebra itself.  Tensoring with it and suspending once
 * undoes tau up to isomorphism. */
DGModule tau_inverse(const DGModule& m, const ResolutionBudget& budget = {});

/* A distinguished triangle tau_term -> middle -> end -> Sigma tau_term built
 * as a desuspended cone over the connecting class pi: end -> Sigma tau_term.
 * pi is nonzero and kills the radical of End(end) under the duality pairing,
 * which is what makes every factorization of a non-retraction through nu
 * possible. */
struct ARTriangle {
  DGModule tau_term;
  DGModule middle;
  DGModule end;
  DGMorphism mu;  // tau_term -> middle
  DGMorphism nu;  // middle -> end
  DGMorphism pi;  // end -> Sigma tau_term, the connecting chain map
};

/* Builds the triangle with the given indecomposable compact module as end
 * term.  The connecting class is cut out of H^0 Hom(F, DR (x) F) by the
 * duality pairing against End(F): the functional vanishing on the radical
 * and taking 1 on the identity.  The pairing matrices are built explicitly
 * and must come out nondegenerate; every step is certified and a failed
 * certificate raises Error.  Decomposable input raises Error, a non
 * Gorenstein algebra NotGorenstein, locality that cannot be settled
 * Undecided. */
ARTriangle ar_triangle_ending_at(const DGModule& p, const ResolutionBudget& budget = {});

/* Labels of the quiver arrow from a middle summand to the end term:
 * alpha counts the summand in this middle, beta counts the end term in the
 * middle of the triangle ending at the translate-inverse of the summand. */
struct ArrowLabel {
  int alpha = 0;
  int beta = 0;
};

/* One entry per isomorphism class of middle summands. */
std::vector<std::pair<DGModule, ArrowLabel>> arrow_labels(const ARTriangle& t,
                                                          const ResolutionBudget& budget = {});

}  // namespace dgar
