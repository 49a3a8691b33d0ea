#include "dgar/semifree.hpp"

#include <sstream>

#include "dgar/errors.hpp"

namespace dgar {

bool SemifreeModule::is_minimal() const {
  for (const auto& g : gens) {
    for (const auto& [l, coef] : g.dcoef) {
      int p = g.degree + 1 - gens[size_t(l)].degree;
      if (p <= 0 && !vec_is_zero(coef)) return false;
    }
  }
  return true;
}

std::map<int, int> SemifreeModule::generator_degrees() const {
  std::map<int, int> out;
  for (const auto& g : gens) out[g.degree]++;
  return out;
}

int SemifreeModule::dim_at(int n) const {
  int total = 0;
  for (const auto& g : gens) total += alg->dim(n - g.degree);
  return total;
}

int SemifreeModule::block_offset(int n, int g) const {
  int off = 0;
  for (int i = 0; i < g; ++i) off += alg->dim(n - gens[size_t(i)].degree);
  return off;
}

DGModule SemifreeModule::realize() const {
  if (gens.empty()) {
    DGModule z = zero_module(alg, Side::Left);
    z.name = "semifree()";
    return z;
  }
  std::vector<int> degs;
  degs.reserve(gens.size());
  for (const auto& g : gens) degs.push_back(g.degree);
  DGModule m = free_module(alg, degs, Side::Left);

  std::ostringstream nm;
  nm << "semifree(";
  for (size_t i = 0; i < gens.size(); ++i) nm << (i ? "," : "") << gens[i].name;
  nm << ")";
  m.name = nm.str();

  /* free_module already has the (db) g part; add b (dg) with the Koszul sign */
  for (const auto& [n, dims] : m.space.dims()) {
    (void)dims;
    int rows = dim_at(n + 1);
    if (rows == 0) continue;
    Matrix d = m.diff_at(n);
    bool touched = false;
    for (size_t i = 0; i < gens.size(); ++i) {
      int nb = n - gens[i].degree;
      int bdim = alg->dim(nb);
      if (bdim == 0) continue;
      int coff = block_offset(n, int(i));
      for (const auto& [l, coef] : gens[i].dcoef) {
        if (vec_is_zero(coef)) continue;
        int p = gens[i].degree + 1 - gens[size_t(l)].degree;
        int roff = block_offset(n + 1, l);
        for (int b = 0; b < bdim; ++b) {
          Vec eb = vec_zero(bdim);
          eb[size_t(b)] = 1;
          Vec prod = alg->product(nb, eb, p, coef);
          if (nb % 2 != 0)
            prod = vec_scale(alg->field, alg->field.from_long(-1), prod);
          for (size_t r = 0; r < prod.size(); ++r) {
            if (alg->field.is_zero(prod[r])) continue;
            d.set(roff + int(r), coff + b,
                  alg->field.add(d.at(roff + int(r), coff + b), prod[r]));
            touched = true;
          }
        }
      }
    }
    if (touched || m.diff.count(n)) m.diff[n] = d;
  }
  return m;
}

ValidationReport validate_semifree(const SemifreeModule& f) {
  ValidationReport rep;
  rep.valid = true;
  if (!f.alg) {
    rep.fail("semifree: missing algebra");
    return rep;
  }
  for (size_t i = 0; i < f.gens.size(); ++i) {
    const auto& g = f.gens[i];
    for (const auto& [l, coef] : g.dcoef) {
      if (l < 0 || size_t(l) >= i) {
        rep.fail("semifree: generator " + g.name +
                 " has a coefficient on a non-earlier generator");
        continue;
      }
      int p = g.degree + 1 - f.gens[size_t(l)].degree;
      int want = p >= 0 ? f.alg->dim(p) : 0;
      if (int(coef.size()) != want)
        rep.fail("semifree: generator " + g.name +
                 " has a coefficient of the wrong shape");
    }
  }
  if (!rep.valid) return rep;
  ValidationReport inner = validate_module(f.realize());
  for (const auto& msg : inner.failures) rep.fail("semifree realization: " + msg);
  rep.h_dims = inner.h_dims;
  return rep;
}

DGMorphism semifree_map_to(const SemifreeModule& f, const DGModule& target,
                           const std::vector<Vec>& values) {
  if (values.size() != f.gens.size())
    throw Error("semifree_map_to: one value per generator required");
  for (size_t i = 0; i < f.gens.size(); ++i)
    if (int(values[i].size()) != target.dim(f.gens[i].degree))
      throw Error("semifree_map_to: value for " + f.gens[i].name +
                  " has the wrong shape");
  DGMorphism phi;
  phi.src = f.realize();
  phi.dst = target;
  phi.degree = 0;
  for (const auto& [n, dim] : phi.src.space.dims()) {
    (void)dim;
    int rows = target.dim(n);
    int cols = f.dim_at(n);
    if (rows == 0 || cols == 0) continue;
    Matrix c = Matrix::zero(target.alg->field, rows, cols);
    for (size_t i = 0; i < f.gens.size(); ++i) {
      int t = f.gens[i].degree;
      int nb = n - t;
      int bdim = f.alg->dim(nb);
      if (bdim == 0 || values[i].empty()) continue;
      int coff = f.block_offset(n, int(i));
      for (int b = 0; b < bdim; ++b) {
        Vec eb = vec_zero(bdim);
        eb[size_t(b)] = 1;
        Vec img = target.apply_act(nb, eb, t, values[i]);
        for (size_t r = 0; r < img.size(); ++r)
          if (!target.alg->field.is_zero(img[r])) c.set(int(r), coff + b, img[r]);
      }
    }
    if (!c.is_zero()) phi.comp[n] = c;
  }
  return phi;
}

}  // namespace dgar
