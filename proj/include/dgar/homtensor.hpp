#pragma once
#include <map>
#include <memory>
#include <vector>

#include "dgar/module.hpp"
#include "dgar/ops.hpp"
#include "dgar/semifree.hpp"

namespace dgar {

/* The same underlying complex with the module structure forgotten: a module
 * over the scalar algebra of the same field. */
DGModule as_complex(const DGModule& m);

/* Hom complex of two modules on the same side over the same algebra, assembled
 * from a basis of graded R-linear maps in each degree.  Degree p holds the
 * maps M^t -> N^{t+p}; the differential is D(h) = d h - (-1)^p h d. */
struct GeneralHomComplex {
  DGModule cx;
  std::map<int, std::vector<std::map<int, Matrix>>> basis;
};
GeneralHomComplex hom_complex(const DGModule& m, const DGModule& n);

/* Hom complex out of a semi-free source into any left module over the same
 * algebra.  R-linear maps are free on generator values, so degree p has basis
 * (g, w) for each generator g and basis w of target^{deg(g)+p}, ordered by
 * generator then target index. */
struct SemifreeHomComplex {
  DGModule cx;
  std::vector<int> gen_degrees;
  GradedSpace target_dims;

  int block_offset(int p, int g) const;
};
SemifreeHomComplex hom_from_semifree(const SemifreeModule& f, const DGModule& n);

/* Rebuild the degree-p graded map realize(f) -> n from its generator values. */
DGMorphism decode_semifree_hom(const SemifreeModule& f, const DGModule& n, int p,
                               const Vec& values);

/* Inverse direction for strict maps out of a realization: stack the values
 * the map takes on the generators into hom-complex coordinates. */
Vec encode_semifree_hom(const SemifreeModule& f, const SemifreeHomComplex& hom,
                        const DGMorphism& phi);

/* Module with commuting left and right actions.  `left` carries the left
 * structure; right_act[{p,n}] stores x.r in the same table layout. */
struct DGBimodule {
  DGModule left;
  std::map<std::pair<int, int>, Matrix> right_act;

  Vec apply_right(int p, const Vec& r, int n, const Vec& x) const;
};
ValidationReport validate_bimodule(const DGBimodule& bm);

/* Dual of the regular module with both residual actions. */
DGBimodule dr_bimodule(std::shared_ptr<const DGAlgebra> a);

/* Quotient tensor product of a right module and a left module over the same
 * algebra, as a complex of k-spaces: spans a (x) b modulo (a.r) (x) b =
 * a (x) (r.b).  Basis per degree is a deterministic subset of the pair basis. */
DGModule tensor_complex(const DGModule& a, const DGModule& b);

/* The pair (a-degree, a-index, b-index) behind each chosen basis element of
 * tensor_complex, per total degree. */
struct TensorBasisElement {
  int a_degree, a_index, b_index;
};
std::map<int, std::vector<TensorBasisElement>> tensor_basis(const DGModule& a,
                                                            const DGModule& b);

/* Same quotient when the first factor is a bimodule: the left action
 * descends and the result is a left module. */
DGModule tensor_bimodule(const DGBimodule& a, const DGModule& b);

/* Tensor of a right module with a semi-free left module: no quotient is
 * needed, the basis in degree n is (g, x) for x in a^{n-deg(g)}, ordered by
 * generator then index. */
DGModule tensor_semifree(const DGModule& a, const SemifreeModule& f);

/* Bimodule variant keeping the left structure. */
DGModule tensor_semifree_bimodule(const DGBimodule& a, const SemifreeModule& f);

}  // namespace dgar
