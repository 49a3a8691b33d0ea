#include "dgar/spherequiver.hpp"

#include <numeric>

#include "dgar/arengine.hpp"
#include "dgar/cohomology.hpp"
#include "dgar/endalg.hpp"
#include "dgar/errors.hpp"
#include "dgar/ops.hpp"

namespace dgar {

namespace {

std::string vertex_id(int j, int m) {
  return "(" + std::to_string(j) + "," + std::to_string(m) + ")";
}

int residue(int j, int q) {
  int r = j % q;
  return r < 0 ? r + q : r;
}

/* top cohomology degree of a sphere algebra, or a refusal */
int sphere_degree(const DGAlgebra& a) {
  ValidationReport rep = validate_algebra(a);
  if (!rep.valid) throw ValidationError(a.name + ": " + rep.failures.front());
  std::map<int, int> want{{0, 1}, {rep.top_h, 1}};
  if (rep.top_h < 2 || rep.h_dims != want)
    throw Error("catalog objects live over algebras with one-line cohomology in degrees 0 and "
                "d >= 2; " +
                a.name + " has a different cohomology");
  return rep.top_h;
}

}  // namespace

SphereQuiverResult sphere_quiver(int d, int j_span, int max_length) {
  if (d < 2) throw Error("sphere dimension must be at least 2, got " + std::to_string(d));
  if (j_span < 0 || max_length < 0) throw Error("window bounds must be nonnegative");

  SphereQuiverResult out;
  out.d = d;
  TranslationQuiver& q = out.quiver;
  const int J = j_span, M = max_length;
  auto inside = [&](int j, int m) { return j >= -J && j <= J && m >= 0 && m <= M; };

  for (int m = 0; m <= M; ++m) {
    for (int j = -J; j <= J; ++j) {
      QuiverVertex v;
      v.id = vertex_id(j, m);
      v.inf = -j - m * (d - 1);
      v.amp = d + m * (d - 1);
      v.phi_count = m + 1;
      /* all arrows into the vertex survived the window cut */
      v.interior = (m + 1 <= M) && (m == 0 || j + d - 1 <= J);
      v.object = SphereObject{j, m};
      q.vertices.push_back(v);
    }
  }
  for (const QuiverVertex& v : q.vertices) {
    int j = v.object->j, m = v.object->m;
    if (m >= 1) q.arrows.push_back({v.id, vertex_id(j, m - 1), {1, 1}});
    if (inside(j - (d - 1), m + 1))
      q.arrows.push_back({v.id, vertex_id(j - (d - 1), m + 1), {1, 1}});
    if (inside(j + d - 1, m)) q.tau[v.id] = vertex_id(j + d - 1, m);
  }

  std::map<std::string, int> index;
  for (size_t k = 0; k < q.vertices.size(); ++k) index[q.vertices[k].id] = int(k);
  std::vector<int> parent(q.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const QuiverArrow& a : q.arrows) unite(index[a.src], index[a.dst]);
  for (const auto& [s, t] : q.tau) unite(index[s], index[t]);

  std::map<int, int> comp_index;
  std::map<int, int> comp_residue;
  for (size_t k = 0; k < q.vertices.size(); ++k) {
    int root = find(int(k));
    auto [it, fresh] = comp_index.try_emplace(root, int(comp_index.size()));
    out.component_of[q.vertices[k].id] = it->second;
    int r = residue(q.vertices[k].object->j, d - 1);
    auto [rit, first] = comp_residue.try_emplace(root, r);
    if (!first && rit->second != r)
      throw Error("component invariant broken at " + q.vertices[k].id +
                  ": shift residue changed inside one component");
  }
  out.components = int(comp_index.size());
  return out;
}

DGModule realize_sphere_object(std::shared_ptr<const DGAlgebra> a, const SphereObject& o,
                               const ResolutionBudget& budget) {
  int d = sphere_degree(*a);
  if (o.m < 0) throw Error("catalog length must be nonnegative, got " + std::to_string(o.m));

  /* tower step: the summand of the triangle middle that is one longer than
   * the end term, brought back down by one translate shift */
  DGModule tower = minimal_semifree_resolution(regular_module(a, Side::Left), budget)
                       .module.realize();
  for (int step = 1; step <= o.m; ++step) {
    ARTriangle tri = ar_triangle_ending_at(tower, budget);
    std::vector<Summand> parts = split_summands(tri.middle, budget);
    const DGModule* pick = nullptr;
    for (const Summand& s : parts) {
      if (phi(s.module, budget) == step + 1) pick = &s.module;
    }
    if (!pick)
      throw Error("tower step " + std::to_string(step) + " over " + a->name +
                  " produced no summand with " + std::to_string(step + 1) + " generators");
    tower = suspend(*pick, -(d - 1));
  }

  DGModule out = suspend(tower, o.j + o.m * (d - 1));
  out.name = "catalog" + vertex_id(o.j, o.m);

  int want_inf = -o.j - o.m * (d - 1);
  int want_amp = d + o.m * (d - 1);
  InfSupAmp span = inf_sup_amp(out);
  if (!span.inf || *span.inf != want_inf || *span.amp != want_amp)
    throw Error("realized object " + vertex_id(o.j, o.m) + " has the wrong cohomology span");
  if (phi(out, budget) != o.m + 1)
    throw Error("realized object " + vertex_id(o.j, o.m) + " has the wrong generator count");
  return out;
}

std::optional<SphereObject> identify_against_catalog(const DGModule& m, int j_span,
                                                     int max_length,
                                                     const ResolutionBudget& budget) {
  int d = sphere_degree(*m.alg);

  SemifreeResolution res = minimal_semifree_resolution(m, budget);
  int count = res.module.generator_count();
  DGModule real = res.module.realize();
  InfSupAmp span = inf_sup_amp(real);
  if (!span.inf) return std::nullopt;

  /* catalog stats: amp = d + mm(d-1), phi = mm+1, two cohomology lines */
  int amp = *span.amp;
  if (amp < d || (amp - d) % (d - 1) != 0) return std::nullopt;
  int mm = (amp - d) / (d - 1);
  if (count != mm + 1) return std::nullopt;
  Cohomology hc = cohomology(real);
  if (hc.h.dim(*span.inf) != 1 || hc.h.dim(*span.sup) != 1) return std::nullopt;
  for (int n = *span.inf + 1; n < *span.sup; ++n) {
    if (hc.h.dim(n) != 0) return std::nullopt;
  }

  int j = -*span.inf - mm * (d - 1);
  if (j < -j_span || j > j_span || mm > max_length)
    throw Error("window too small for the candidate object " + vertex_id(j, mm));

  DGModule cat = realize_sphere_object(m.alg, SphereObject{j, mm}, budget);
  IsoVerdict v = is_isomorphic(real, cat, budget);
  if (v == IsoVerdict::Yes) return SphereObject{j, mm};
  if (v == IsoVerdict::No) return std::nullopt;
  throw Undecided("the match at " + vertex_id(j, mm) + " could not be certified either way");
}

}  // namespace dgar
