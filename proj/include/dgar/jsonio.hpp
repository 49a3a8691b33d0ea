#pragma once
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "dgar/arengine.hpp"
#include "dgar/constructions.hpp"
#include "dgar/gorenstein.hpp"
#include "dgar/quiver.hpp"
#include "dgar/spherequiver.hpp"

namespace dgar {

using Json = nlohmann::json;

inline constexpr const char* kToolName = "dgar";
inline constexpr const char* kToolVersion = "1.0.0";

/* Run settings echoed verbatim into every report. */
struct RunConfig {
  ResolutionBudget budget;
  std::uint64_t seed = 0;
  std::string format = "json";
};

Json config_json(const RunConfig& c);

/* Wraps a result body in the standard report frame: schema tag, tool stamp,
 * command name, config echo.  Key order is alphabetical on output, so equal
 * inputs serialize byte-identically. */
Json report_envelope(const std::string& command, const RunConfig& c, Json result);

/* "dgar-algebra/1": field characteristic, degreewise basis names, sparse
 * differential triples, sparse products between positive-degree elements.
 * Products with the degree-0 line are implicit (it is the unit), omitted
 * pairs multiply to zero.  Parsing builds the structure without validating
 * the DG axioms; serializing inverts it up to same_structure. */
std::shared_ptr<const DGAlgebra> parse_algebra(const Json& j);
Json algebra_json(const DGAlgebra& a);

/* "dgar-module/1": ordered semi-free generator list over a named algebra;
 * each generator's differential is a combination of earlier generators with
 * algebra coefficients.  The algebra reference inside the file is resolved
 * by the caller. */
SemifreeModule parse_semifree(const Json& j, std::shared_ptr<const DGAlgebra> a);
Json semifree_json(const SemifreeModule& m);

Json validation_json(const ValidationReport& r);
Json gorenstein_json(const GorensteinReport& r);

/* Translate report: cohomology tables before and after, plus the check that
 * the translate shifted them by one less than the top degree. */
Json tau_json(const DGModule& before, const DGModule& after, int top_degree);

/* Triangle report: stats of the three terms, arrow labels, and the counting
 * laws (generator counts match across the translate, add up over the middle,
 * the connecting map is nonzero, the end term is not a middle summand). */
Json triangle_json(const ARTriangle& t, const ResolutionBudget& budget = {});

/* Tree report: all nodes with stats, the extension count (root excluded),
 * and a distinctness certificate over the deepest column. */
Json tree_json(const std::vector<TreeNode>& nodes, const ComponentCertificate& cert);
Json certificate_json(const ComponentCertificate& cert);

Json translation_quiver_json(const TranslationQuiver& q);
TranslationQuiver parse_quiver(const Json& j);

/* Sphere-window report: the quiver, component data, and the structural
 * checks replayed (stability, grid windows at interior vertices, additive
 * generator counts). */
Json quiver_json(const SphereQuiverResult& sq);

}  // namespace dgar
