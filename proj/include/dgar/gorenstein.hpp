#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "dgar/resolution.hpp"

namespace dgar {

/* One side of the residue-field probe: dimensions of H^p of the maps from a
 * minimal resolution of k into the algebra, certified for p >= window_lo.
 * When the resolution completed the whole complex is exact and window_lo is
 * its bottom degree. */
struct Condition1Side {
  GradedSpace dims;
  int window_lo = 0;
  bool resolution_complete = false;
  bool concentrated = false;  // dims = one dimension exactly at the top degree
};

struct Condition1Report {
  int degree = 0;  // top cohomology degree of the algebra
  Condition1Side left;
  Condition1Side right;
  bool verdict = false;
};

/* Resolves k over the algebra and over its opposite, then checks that the
 * derived maps into the algebra are one-dimensional, concentrated in the top
 * cohomology degree.  Throws BudgetExceeded when a stopped resolution leaves
 * degrees <= 0 uncertified. */
Condition1Report check_condition1(std::shared_ptr<const DGAlgebra> a,
                                  const ResolutionBudget& budget = {});

/* One side of the graded-dual symmetry probe: the dual of the cohomology
 * algebra against its top-shifted self, as modules over the cohomology
 * algebra.  `iso` holds a degreewise invertible linear map when one exists. */
struct Condition2Side {
  GradedSpace source_dims;
  GradedSpace target_dims;
  bool dims_match = false;
  bool iso_found = false;
  std::map<int, Matrix> iso;
};

struct Condition2Report {
  int degree = 0;
  Condition2Side left;
  Condition2Side right;
  bool verdict = false;
};

/* Compares the dual of the cohomology algebra with its shift by the top
 * degree, on both sides.  The isomorphism search is exact: a seeded random
 * probe first, then a symbolic walk that is a complete decision procedure
 * over the rationals. */
Condition2Report check_condition2(std::shared_ptr<const DGAlgebra> a);

/* Compactness certificates for the dual of the algebra, as a left module on
 * both sides (the right-module structure is resolved over the opposite
 * algebra).  The verdict stays unset unless both certificates are definite. */
struct Condition5Report {
  CompactnessCertificate left;
  CompactnessCertificate right;
  std::optional<bool> verdict;
};

Condition5Report check_condition5(std::shared_ptr<const DGAlgebra> a,
                                  const ResolutionBudget& budget = {});

/* Combined report.  cond4_* mirror the compactness verdicts: a compact dual
 * has finite-dimensional derived maps from k, so those entries are settled
 * exactly when the matching certificate is. */
struct GorensteinReport {
  bool verdict = false;
  bool agreement = false;
  Condition1Report cond1;
  Condition2Report cond2;
  std::optional<bool> cond4_left;
  std::optional<bool> cond4_right;
  Condition5Report cond5;
};

/* Runs all three checks and requires every definite verdict to agree; a
 * disagreement means the engine itself is broken and raises Error.  The
 * overall verdict is the shared value. */
GorensteinReport gorenstein(std::shared_ptr<const DGAlgebra> a,
                            const ResolutionBudget& budget = {});

}  // namespace dgar
