#pragma once
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dgar/endalg.hpp"
#include "dgar/gorenstein.hpp"

namespace dgar {

/* Input to the cone extensions.  `x` is a compact minimal semi-free module
 * with bottom cohomology in degree 0 and top degree at least 2; the caller
 * guarantees indecomposability (the outputs are re-verified).  `e` selects a
 * middle cohomology degree of the algebra, needed for the second extension
 * and for the extra checks the first one runs when it is present. */
struct CaseInput {
  SemifreeModule x;
  std::optional<int> e;
};

/* Cone over a map from a shifted free module hitting the first top-degree
 * cohomology class.  Amplitude grows by one less than the algebra's top
 * degree, the generator count by one; the result is re-minimized, its top
 * cohomology must be a line, and its endomorphism algebra must be local.
 * With `e` present the new cohomology in degree sup+e-1 is checked against
 * the algebra's degree-e cohomology and the multiplication pairing into the
 * new top line must be nondegenerate. */
SemifreeModule case1(const CaseInput& in, const ResolutionBudget& budget = {});

/* Cone over a map hitting the first cohomology class in degree sup-top+e.
 * Amplitude grows by e-1, the generator count by one; same re-minimization
 * and locality checks. */
SemifreeModule case2(const CaseInput& in, const ResolutionBudget& budget = {});

/* Same extension with a chosen class, given by its coordinates in the
 * cohomology basis of degree sup-top+e.  Additionally requires the top
 * cohomology of `x` to be a line and the multiplication pairing from the
 * algebra's degree top-e cohomology into it to be nondegenerate.  The
 * result depends on the class only through its ray. */
SemifreeModule case2_alpha(const CaseInput& in, const Vec& alpha,
                           const ResolutionBudget& budget = {});

/* One vertex of the extension tree: the digit word that produced it (empty
 * for the root), the module, and its verified statistics. */
struct TreeNode {
  std::string word;
  SemifreeModule module;
  int inf = 0;
  int sup = 0;
  int amp = 0;
  int phi_count = 0;
};

/* All extension words of length at most `depth` with no two consecutive 2s,
 * rooted at the free module of rank one, in breadth-first order with 1
 * before 2.  Every node's statistics are checked against the growth
 * recurrences: amplitude d + s(d-1) + (r-s)(e-1) for s ones among r digits,
 * generator count r+1, bottom degree 0.  The algebra must pass the
 * Gorenstein checks and e must select nonzero middle cohomology. */
std::vector<TreeNode> build_tree(std::shared_ptr<const DGAlgebra> a, int e, int depth,
                                 const ResolutionBudget& budget = {});

struct DistinctPair {
  int a = 0;
  int b = 0;
  std::string reason;
};

/* One-sided separation certificates: pairs certified to lie in distinct
 * components of the quiver, never a claim that two modules share one. */
struct ComponentCertificate {
  int lower_bound = 0;  // size of a family certified pairwise distinct
  std::vector<DistinctPair> distinct;
  std::vector<std::pair<int, int>> undecided;
};

/* Certifies pairs of compact indecomposable modules over one Gorenstein
 * algebra as lying in distinct components.  Sound criteria only: equal
 * generator counts with different amplitudes, or equal generator counts,
 * amplitudes and bottom degrees with a certified non-isomorphism.  Every
 * other pair is listed as undecided. */
ComponentCertificate distinct_component_certificate(const std::vector<DGModule>& mods,
                                                    const ResolutionBudget& budget = {});

}  // namespace dgar
