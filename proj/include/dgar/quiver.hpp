#pragma once
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgar/arengine.hpp"

namespace dgar {

/* Grid coordinates of a sphere-quiver vertex: the shift-j, length-(m+1)
 * truncated module on the dual generator. */
struct SphereObject {
  int j = 0;
  int m = 0;
};

struct QuiverVertex {
  std::string id;
  int inf = 0;
  int amp = 0;
  int phi_count = 0;
  /* every arrow this vertex carries in the infinite quiver survived the
   * window cut; additive checks only make sense here */
  bool interior = true;
  std::optional<SphereObject> object;
};

struct QuiverArrow {
  std::string src, dst;
  ArrowLabel label;
};

/* Finite labeled quiver with a partial translation.  Vertices keep their
 * insertion order; exports and checks iterate in that order, so equal inputs
 * give byte-equal outputs. */
struct TranslationQuiver {
  std::vector<QuiverVertex> vertices;
  std::vector<QuiverArrow> arrows;
  std::map<std::string, std::string> tau;

  const QuiverVertex* find(const std::string& id) const;
};

struct QuiverCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

/* Translation-quiver laws: arrow endpoints exist, no loops, tau injective,
 * and at every tau-defined vertex the arrows in match the arrows out of the
 * translate with swapped labels. */
QuiverCheck check_stable(const TranslationQuiver& q);

struct ZAWindowReport {
  bool ok = false;
  bool degenerate = false;  // no arrows in the window, nothing to constrain
  std::map<std::string, std::pair<int, int>> coords;  // id -> (p, t)
  std::optional<std::string> counterexample;
};

/* Matches the induced subquiver on `window` against the infinite half-grid
 * with rows t >= 1, arrows (p,t) -> (p,t-1) and (p,t) -> (p-1,t+1), and
 * translation (p,t) -> (p+1,t).  Returns coordinates normalized so the
 * lowest row sits at t = 1, or the vertex where matching failed.  A finite
 * window fits the pattern in two mirror orientations; the one where the
 * vertex generator counts grow with the row wins.  Windows whose vertices
 * are not linked by their own arrows and translates throw (window not
 * arrow-closed). */
ZAWindowReport check_za_infinity_window(const TranslationQuiver& q,
                                        const std::vector<std::string>& window);

/* A vertex, its arrow partners, and its translates: the standard window to
 * hand check_za_infinity_window. */
std::vector<std::string> neighborhood_window(const TranslationQuiver& q, const std::string& id);

/* Sum rule at every interior tau-defined vertex t:
 * f(t) + f(tau t) = sum of a * f(s) over arrows s -> t with label (a, b).
 * Bottom-row vertices keep the same rule with their one-sided sums. */
QuiverCheck check_additive(const TranslationQuiver& q,
                           const std::function<long(const QuiverVertex&)>& f);

/* Graphviz digraph text: vertices in order, arrows with "(a,b)" labels,
 * translation as dashed edges. */
std::string quiver_to_dot(const TranslationQuiver& q);

}  // namespace dgar
