#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "dgar/quiver.hpp"
#include "dgar/resolution.hpp"

namespace dgar {

struct SphereQuiverResult {
  TranslationQuiver quiver;
  int d = 2;
  int components = 0;
  std::map<std::string, int> component_of;  // vertex id -> component index
};

/* Component quiver of the compact modules over the d-sphere algebra, cut to
 * the window |j| <= j_span, 0 <= m <= max_length.  Vertices are the catalog
 * objects (j, m): towers of m+1 spheres starting in degree -j.  Arrows are
 * the projections (j,m) -> (j,m-1) and the inclusions
 * (j,m) -> (j-(d-1),m+1), all labeled (1,1); the translate shifts j by d-1.
 * Components are counted inside the window by weak connectivity over arrows
 * and translates together; the residue j mod (d-1) is constant on each.
 *
 * Built directly from this combinatorial description.  The tests replay
 * sampled vertices through the resolution engine (realize the object, take
 * its triangle, split the middle) and compare. */
SphereQuiverResult sphere_quiver(int d, int j_span, int max_length);

/* Minimal semifree realization of the catalog object (j, m) over the given
 * sphere algebra: the m-fold extension tower over the regular module,
 * suspended by j + m(d-1) so that amp = d + m(d-1), phi = m+1 and
 * inf = -j - m(d-1).  The tower is grown one step at a time by splitting
 * triangle middles, and the stats of the result are verified before it is
 * returned. */
DGModule realize_sphere_object(std::shared_ptr<const DGAlgebra> a, const SphereObject& o,
                               const ResolutionBudget& budget = {});

/* Looks the module up in the sphere catalog: reads (j, m) off its
 * cohomology stats and generator count, then certifies the match by an
 * explicit isomorphism with the realized catalog object.  Returns the object
 * on a certified match, nullopt when the stats rule every catalog object
 * out, and throws "window too small" when the stats point at an object
 * outside |j| <= j_span, m <= max_length. */
std::optional<SphereObject> identify_against_catalog(const DGModule& m, int j_span,
                                                     int max_length,
                                                     const ResolutionBudget& budget = {});

}  // namespace dgar
