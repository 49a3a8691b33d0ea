#include "dgar/resolution.hpp"

#include <sstream>

#include "dgar/errors.hpp"
#include "dgar/ops.hpp"

namespace dgar {

std::string render_trace(const std::vector<ResolutionTraceEntry>& trace) {
  std::ostringstream os;
  for (const auto& e : trace) {
    if (&e != &trace.front()) os << "; ";
    os << "pass " << e.pass << ": +" << e.added << " at degree " << e.degree
       << " (total " << e.total << ")";
  }
  return os.str();
}

DGMorphism ResolutionAttempt::comparison(const DGModule& target) const {
  return semifree_map_to(module, target, values);
}

ResolutionAttempt resolve_within(const DGModule& m, const ResolutionBudget& budget) {
  if (m.side != Side::Left)
    throw Error("resolve_within: resolutions are computed for left modules");
  if (budget.max_generators < 1)
    throw Error("resolve_within: generator budget must be at least 1");
  if (budget.degree_lo > budget.degree_hi)
    throw Error("resolve_within: empty degree window");
  const Field& f = m.alg->field;

  ResolutionAttempt out;
  out.module.alg = m.alg;
  int last_bottom = 0;
  bool have_last = false;

  for (int pass = 1;; ++pass) {
    DGMorphism eps = out.comparison(m);
    Cone c = cone(eps);
    Cohomology coh = cohomology(c.cone);
    if (coh.h.is_zero()) {
      out.complete = true;
      return out;
    }
    int j = *coh.h.bottom();
    if (have_last && j <= last_bottom)
      throw Error("resolve_within: cone bottom failed to rise");
    last_bottom = j;
    have_last = true;

    if (j < budget.degree_lo || j > budget.degree_hi) {
      out.stop_reason = "degree-window";
      out.stop_degree = j;
      return out;
    }
    int fresh = coh.h.dim(j);
    if (out.module.generator_count() + fresh > budget.max_generators) {
      out.stop_reason = "generator-budget";
      out.stop_degree = j;
      return out;
    }

    int mdim = m.dim(j);
    int before = out.module.generator_count();
    for (int r = 0; r < fresh; ++r) {
      Vec rep = coh.reps.at(j).col(r);
      Vec v = vec_zero(mdim);
      for (int i = 0; i < mdim; ++i) v[size_t(i)] = rep[size_t(i)];
      SemifreeGenerator g;
      g.name = "g" + std::to_string(out.module.generator_count());
      g.degree = j;
      for (int l = 0; l < before; ++l) {
        int cdim = m.alg->dim(j + 1 - out.module.gens[size_t(l)].degree);
        if (cdim == 0) continue;
        int off = mdim + out.module.block_offset(j + 1, l);
        Vec coef = vec_zero(cdim);
        bool nz = false;
        for (int i = 0; i < cdim; ++i) {
          coef[size_t(i)] = f.neg(rep[size_t(off + i)]);
          if (!f.is_zero(coef[size_t(i)])) nz = true;
        }
        if (nz) g.dcoef[l] = coef;
      }
      out.module.gens.push_back(std::move(g));
      out.values.push_back(std::move(v));
    }
    if (!out.module.is_minimal())
      throw Error("resolve_within: a unit coefficient reached the differential");
    out.trace.push_back({pass, -j, fresh, out.module.generator_count()});
  }
}

SemifreeResolution minimal_semifree_resolution(const DGModule& m,
                                               const ResolutionBudget& budget) {
  ResolutionAttempt at = resolve_within(m, budget);
  if (!at.complete)
    throw BudgetExceeded("resolution of " + m.name + " stopped (" + at.stop_reason +
                         "): " + render_trace(at.trace));
  SemifreeResolution res;
  res.module = std::move(at.module);
  res.trace = std::move(at.trace);
  res.map = semifree_map_to(res.module, m, at.values);
  return res;
}

int phi(const DGModule& m, const ResolutionBudget& budget) {
  return minimal_semifree_resolution(m, budget).module.generator_count();
}

GradedSpace ext_to_k(const DGModule& m, const ResolutionBudget& budget) {
  SemifreeResolution res = minimal_semifree_resolution(m, budget);
  GradedSpace out;
  for (const auto& [t, count] : res.module.generator_degrees()) out.set_dim(t, count);
  return out;
}

DerivedHom derived_hom(const DGModule& m, const DGModule& n,
                       const ResolutionBudget& budget) {
  DerivedHom out;
  out.source = minimal_semifree_resolution(m, budget);
  out.hom = hom_from_semifree(out.source.module, n);
  out.h = cohomology(out.hom.cx);
  return out;
}

DGModule derived_tensor(const DGModule& a, const DGModule& m,
                        const ResolutionBudget& budget) {
  SemifreeResolution res = minimal_semifree_resolution(m, budget);
  return tensor_semifree(a, res.module);
}

DGModule derived_tensor(const DGBimodule& a, const DGModule& m,
                        const ResolutionBudget& budget) {
  SemifreeResolution res = minimal_semifree_resolution(m, budget);
  return tensor_semifree_bimodule(a, res.module);
}

CompactnessCertificate compactness_certificate(const DGModule& m,
                                               const ResolutionBudget& budget) {
  ResolutionAttempt at = resolve_within(m, budget);
  CompactnessCertificate cert;
  cert.verdict = at.complete ? "compact" : "not-within-budget";
  cert.generators = at.module.generator_count();
  cert.generator_degrees = at.module.generator_degrees();
  cert.trace = at.trace;
  cert.stop_reason = at.stop_reason;
  return cert;
}

}  // namespace dgar
