#include "dgar/gorenstein.hpp"

#include <sstream>

#include "dgar/invertible.hpp"

namespace dgar {

namespace {

/* Maps out of a stopped resolution of k agree with maps out of the full one
 * in every degree the missing generators cannot reach.  A generator of
 * cochain degree t contributes to hom degrees p <= d - t, and the maps
 * supported on missing generators form a subcomplex, so restriction is exact
 * for p >= d - stop_degree + 1. */
Condition1Side residue_probe(std::shared_ptr<const DGAlgebra> ap, int d,
                             const ResolutionBudget& budget) {
  DGModule k = residue_field_module(ap, Side::Left);
  ResolutionAttempt at = resolve_within(k, budget);
  SemifreeHomComplex hc = hom_from_semifree(at.module, regular_module(ap, Side::Left));
  Cohomology coh = cohomology(hc.cx);

  Condition1Side side;
  side.resolution_complete = at.complete;
  if (at.complete) {
    side.window_lo = hc.cx.space.bottom().value_or(0);
  } else {
    side.window_lo = d - *at.stop_degree + 1;
    if (side.window_lo > 0)
      throw BudgetExceeded("residue probe over " + ap->name +
                           " certifies nothing at or below hom degree 0 (" +
                           at.stop_reason + " at cochain degree " +
                           std::to_string(*at.stop_degree) + "); raise the budget");
  }
  for (const auto& [p, dim] : coh.h.dims())
    if (p >= side.window_lo) side.dims.set_dim(p, dim);
  side.concentrated = side.dims.dims().size() == 1 && side.dims.dim(d) == 1;
  return side;
}

Condition2Side dual_shift_probe(std::shared_ptr<const DGAlgebra> a, const HAlgebra& ha,
                                int d, Side target_side) {
  Side other = target_side == Side::Left ? Side::Right : Side::Left;
  DGModule src = dual(h_module(regular_module(a, other), ha));
  DGModule tgt = suspend(h_module(regular_module(a, target_side), ha), d);

  Condition2Side side;
  side.source_dims = src.space;
  side.target_dims = tgt.space;
  side.dims_match = src.space == tgt.space;
  if (!side.dims_match) return side;

  std::vector<std::map<int, Matrix>> basis = linear_hom_basis(src, tgt, 0);
  std::vector<int> degrees;
  for (const auto& [n, dim] : src.space.dims())
    if (dim > 0) degrees.push_back(n);
  if (degrees.empty()) {
    side.iso_found = true;
    return side;
  }
  if (basis.empty()) return side;

  PencilBasis pencil;
  for (const auto& maps : basis) {
    std::vector<Matrix> blocks;
    for (int n : degrees) {
      auto it = maps.find(n);
      blocks.push_back(it != maps.end() ? it->second
                                        : Matrix::zero(src.alg->field, src.dim(n), src.dim(n)));
    }
    pencil.blocks.push_back(std::move(blocks));
  }
  std::optional<Vec> c = find_invertible_combination(pencil, src.alg->field);
  if (!c) return side;

  side.iso_found = true;
  for (size_t s = 0; s < basis.size(); ++s) {
    if (src.alg->field.is_zero((*c)[s])) continue;
    for (int n : degrees) {
      auto it = basis[s].find(n);
      if (it == basis[s].end()) continue;
      Matrix term = it->second.scale((*c)[s]);
      auto slot = side.iso.find(n);
      if (slot == side.iso.end())
        side.iso.emplace(n, std::move(term));
      else
        slot->second = slot->second.add(term);
    }
  }
  return side;
}

}  // namespace

Condition1Report check_condition1(std::shared_ptr<const DGAlgebra> a,
                                  const ResolutionBudget& budget) {
  ValidationReport vr = validate_algebra(*a);
  if (!vr.valid) throw ValidationError("check_condition1: " + vr.failures.front());

  Condition1Report rep;
  rep.degree = vr.top_h;
  rep.left = residue_probe(a, rep.degree, budget);
  auto aop = std::make_shared<const DGAlgebra>(opposite(*a));
  rep.right = residue_probe(aop, rep.degree, budget);
  rep.verdict = rep.left.concentrated && rep.right.concentrated;
  return rep;
}

Condition2Report check_condition2(std::shared_ptr<const DGAlgebra> a) {
  ValidationReport vr = validate_algebra(*a);
  if (!vr.valid) throw ValidationError("check_condition2: " + vr.failures.front());

  Condition2Report rep;
  rep.degree = vr.top_h;
  HAlgebra ha = h_algebra(*a);
  rep.left = dual_shift_probe(a, ha, rep.degree, Side::Left);
  rep.right = dual_shift_probe(a, ha, rep.degree, Side::Right);
  rep.verdict = rep.left.iso_found && rep.right.iso_found;
  return rep;
}

Condition5Report check_condition5(std::shared_ptr<const DGAlgebra> a,
                                  const ResolutionBudget& budget) {
  require_valid(*a);

  Condition5Report rep;
  rep.left = compactness_certificate(dr_bimodule(a).left, budget);
  auto aop = std::make_shared<const DGAlgebra>(opposite(*a));
  DGModule dr_right = switch_side_over_opposite(dual(regular_module(a, Side::Left)), aop);
  rep.right = compactness_certificate(dr_right, budget);
  if (rep.left.verdict == "compact" && rep.right.verdict == "compact") rep.verdict = true;
  return rep;
}

GorensteinReport gorenstein(std::shared_ptr<const DGAlgebra> a,
                            const ResolutionBudget& budget) {
  GorensteinReport rep;
  rep.cond1 = check_condition1(a, budget);
  rep.cond2 = check_condition2(a);
  rep.cond5 = check_condition5(a, budget);
  if (rep.cond5.left.verdict == "compact") rep.cond4_left = true;
  if (rep.cond5.right.verdict == "compact") rep.cond4_right = true;

  bool v = rep.cond1.verdict;
  bool clash = rep.cond2.verdict != v ||
               (rep.cond5.verdict.has_value() && *rep.cond5.verdict != v);
  if (clash) {
    std::ostringstream os;
    os << "gorenstein checks disagree on " << a->name << ": residue probe "
       << (rep.cond1.verdict ? "yes" : "no") << ", dual symmetry "
       << (rep.cond2.verdict ? "yes" : "no") << ", dual compactness "
       << (rep.cond5.verdict ? (*rep.cond5.verdict ? "yes" : "no") : "unresolved");
    throw Error(os.str());
  }
  rep.agreement = true;
  rep.verdict = v;
  return rep;
}

}  // namespace dgar
