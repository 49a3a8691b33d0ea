#pragma once
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dgar/module.hpp"

namespace dgar {

/* One generator of a semi-free left module.  Its differential is a left
 * R-linear combination of strictly earlier generators: dcoef[l] holds the
 * coordinates of the coefficient of generator l, an element of
 * R^{degree+1-deg(l)}. */
struct SemifreeGenerator {
  std::string name;
  int degree;
  std::map<int, Vec> dcoef;
};

/* Left module built freely on an ordered generator list, with the generator
 * differentials closing the filtration.  Elements carry algebra coefficients
 * on the left: d(b g) = (db) g + (-1)^{|b|} b (dg). */
struct SemifreeModule {
  std::shared_ptr<const DGAlgebra> alg;
  std::vector<SemifreeGenerator> gens;

  int generator_count() const { return int(gens.size()); }
  /* all differential coefficients sit in positive algebra degrees */
  bool is_minimal() const;
  /* generator counts keyed by cochain degree */
  std::map<int, int> generator_degrees() const;

  int dim_at(int n) const;
  /* offset of generator g's coefficient block inside degree n */
  int block_offset(int n, int g) const;

  DGModule realize() const;
};

/* Checks the filtration, coefficient shapes and d.d = 0 on generators. */
ValidationReport validate_semifree(const SemifreeModule& f);

/* The degree-0 strict morphism realize() -> target determined by sending
 * generator i to values[i]. */
DGMorphism semifree_map_to(const SemifreeModule& f, const DGModule& target,
                           const std::vector<Vec>& values);

}  // namespace dgar
