#pragma once
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dgar/resolution.hpp"
#include "dgar/subspace.hpp"

namespace dgar {

/* H^0 of the endomorphism complex of a minimal resolution, as a finite
 * dimensional associative unital algebra over k.  table[i] is the matrix of
 * left multiplication by the i-th basis element, so table[i].col(j) gives the
 * coordinates of b_i * b_j (composition order: b_i after b_j). */
struct EndAlgebra {
  std::string module_name;
  int dimension = 0;
  std::vector<Matrix> table;
  Vec unit_coords;
  Subspace radical;
  bool local = false;

  explicit EndAlgebra(const Field& f) : radical(f, 0) {}
};

/* Everything end_algebra computes, kept for reuse: the minimal resolution,
 * its realization, the endomorphism complex, and chain representatives of the
 * degree-zero classes. */
struct EndContext {
  SemifreeModule res;
  DGModule realized;
  SemifreeHomComplex hom;
  Cohomology coh;
  std::vector<Vec> reps;  // hom coordinates of the H^0 basis
  EndAlgebra algebra;

  explicit EndContext(const Field& f) : algebra(f) {}
};

/* Radical via the trace bilinear form of the regular representation (exact
 * over characteristic zero), certified afterwards: the kernel must be a
 * nilpotent two-sided ideal or the computation refuses.  Locality is decided
 * by the quotient: one-dimensional means local; otherwise an exact idempotent
 * search settles it or throws Undecided. */
EndContext end_context(const DGModule& m, const ResolutionBudget& budget = {});
EndAlgebra end_algebra(const DGModule& m, const ResolutionBudget& budget = {});

enum class IsoVerdict { Yes, No, Undecided };

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Undecided;
  std::optional<DGMorphism> iso;  // strict isomorphism of realizations, on yes
};

/* Compares minimal resolutions.  Distinct generator degree multisets certify
 * a "no"; otherwise the chain-map classes are searched for one whose
 * generator-level linear part is invertible, which for minimal resolutions is
 * exactly the quasi-isomorphisms.  The search is a complete decision
 * procedure over the rationals; Undecided only arises over small prime
 * fields. */
IsoResult is_isomorphic_detailed(const DGModule& m, const DGModule& n,
                                 const ResolutionBudget& budget = {});
IsoVerdict is_isomorphic(const DGModule& m, const DGModule& n,
                         const ResolutionBudget& budget = {});

struct Summand {
  DGModule module;  // minimal semifree realization
  int multiplicity = 1;
};

/* Splits into indecomposables.  A nontrivial idempotent of End modulo the
 * radical is lifted through the nilpotent radical, a chain representative is
 * raised to powers until its image dimensions stabilize, and the resolution
 * splits strictly along that eventual image and its kernel.  Both parts are
 * re-minimized, the split is checked against the cohomology of the whole, and
 * the pieces recurse until every factor is local.  Summands are grouped by
 * is_isomorphic. */
std::vector<Summand> split_summands(const DGModule& m, const ResolutionBudget& budget = {});

}  // namespace dgar
