#pragma once
#include <optional>
#include <string>
#include <vector>

#include "dgar/cohomology.hpp"
#include "dgar/homtensor.hpp"
#include "dgar/semifree.hpp"

namespace dgar {

/* Caps for the resolution loop: total generator count and the window of
 * allowed generator cochain degrees. */
struct ResolutionBudget {
  int max_generators = 64;
  int degree_lo = -64;
  int degree_hi = 64;
};

/* One pass of the resolution loop.  `degree` is reported on the index scale
 * where a generator of cochain degree t counts toward beta_{-t}. */
struct ResolutionTraceEntry {
  int pass = 0;
  int degree = 0;
  int added = 0;
  int total = 0;
};

std::string render_trace(const std::vector<ResolutionTraceEntry>& trace);

/* Raw outcome of the generator-adjoining loop: either a finished minimal
 * semi-free approximation or the partial one it had built when a cap hit. */
struct ResolutionAttempt {
  bool complete = false;
  SemifreeModule module;
  std::vector<Vec> values;  // comparison values, one per generator
  std::vector<ResolutionTraceEntry> trace;
  std::string stop_reason;  // "generator-budget" or "degree-window" when incomplete
  /* cochain degree the next generators would have occupied, when incomplete */
  std::optional<int> stop_degree;

  DGMorphism comparison(const DGModule& target) const;
};
ResolutionAttempt resolve_within(const DGModule& m, const ResolutionBudget& budget);

struct SemifreeResolution {
  SemifreeModule module;
  DGMorphism map;  // realize() -> m, a quasi-isomorphism
  std::vector<ResolutionTraceEntry> trace;
};
/* Minimal semi-free resolution of a left module; throws BudgetExceeded with
 * the generator trace when the budget runs out first. */
SemifreeResolution minimal_semifree_resolution(const DGModule& m,
                                               const ResolutionBudget& budget);

/* Total generator count of the minimal resolution. */
int phi(const DGModule& m, const ResolutionBudget& budget);

/* Graded dimensions of the derived maps into the residue field: the count of
 * resolution generators in each cochain degree. */
GradedSpace ext_to_k(const DGModule& m, const ResolutionBudget& budget);

struct DerivedHom {
  SemifreeResolution source;  // resolution of the first argument
  SemifreeHomComplex hom;
  Cohomology h;
};
DerivedHom derived_hom(const DGModule& m, const DGModule& n, const ResolutionBudget& budget);

/* a (x)^L m computed through the resolution of m; complex of k-spaces. */
DGModule derived_tensor(const DGModule& a, const DGModule& m, const ResolutionBudget& budget);
/* Bimodule variant carrying the left structure. */
DGModule derived_tensor(const DGBimodule& a, const DGModule& m, const ResolutionBudget& budget);

struct CompactnessCertificate {
  std::string verdict;  // "compact" or "not-within-budget"
  int generators = 0;   // total adjoined before finishing or stopping
  std::map<int, int> generator_degrees;  // cochain degree -> count
  std::vector<ResolutionTraceEntry> trace;
  std::string stop_reason;  // set when not within budget
};
CompactnessCertificate compactness_certificate(const DGModule& m,
                                               const ResolutionBudget& budget);

}  // namespace dgar
