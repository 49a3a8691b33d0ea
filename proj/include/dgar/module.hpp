#pragma once
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dgar/algebra.hpp"

namespace dgar {

enum class Side { Left, Right };

const char* side_name(Side s);

/* DG module over a fixed algebra.  act[{p,n}] stores the bilinear table
 * B(r, m) for r in R^p, m in M^n: for left modules B(r,m) = r.m, for right
 * modules B(r,m) = m.r.  Column index of (r_i, m_j) is i*dim(M^n)+j.
 * Tables are stored whenever all three dimensions are nonzero, p = 0
 * identity blocks included; absent entries are zero maps. */
struct DGModule {
  std::shared_ptr<const DGAlgebra> alg;
  Side side = Side::Left;
  GradedSpace space;
  std::map<int, Matrix> diff;
  std::map<std::pair<int, int>, Matrix> act;
  std::string name;
  std::map<int, std::vector<std::string>> labels;

  int dim(int n) const { return space.dim(n); }
  Matrix diff_at(int n) const;
  Matrix act_at(int p, int n) const;
  Vec apply_act(int p, const Vec& r, int n, const Vec& m) const;
  std::vector<std::string> labels_at(int n) const;
};

/* Degree-s graded map f: M -> N, comp[n]: M^n -> N^{n+s}.  A morphism
 * (degree 0 chain map) additionally satisfies d f = f d and strict
 * R-linearity; validate_morphism checks the degree-s versions
 * d f = (-1)^s f d and f(B(r,m)) = (-1)^{s|r|} B(r, f(m)) (left side;
 * no sign on the right side). */
struct DGMorphism {
  DGModule src, dst;
  int degree = 0;
  std::map<int, Matrix> comp;

  Matrix comp_at(int n) const;
};

ValidationReport validate_module(const DGModule& m);
void require_valid(const DGModule& m);
ValidationReport validate_morphism(const DGMorphism& f);
void require_valid(const DGMorphism& f);

DGModule regular_module(std::shared_ptr<const DGAlgebra> a, Side side);
/* Free module on generators placed in the given cochain degrees; generators
 * are cycles and carry no action sign.  Basis of degree n: (g, b) for each
 * generator g and algebra basis element b of degree n - deg(g), ordered by
 * generator then algebra index. */
DGModule free_module(std::shared_ptr<const DGAlgebra> a, const std::vector<int>& gen_degrees,
                     Side side);
/* k in degree 0 with R^{>0} acting by zero. */
DGModule residue_field_module(std::shared_ptr<const DGAlgebra> a, Side side);
DGModule zero_module(std::shared_ptr<const DGAlgebra> a, Side side);

struct DirectSum {
  DGModule sum;
  DGMorphism incl_left, incl_right, proj_left, proj_right;
};
DirectSum direct_sum(const DGModule& m, const DGModule& n);

DGMorphism zero_morphism(const DGModule& src, const DGModule& dst, int degree = 0);
DGMorphism identity_morphism(const DGModule& m);
DGMorphism compose(const DGMorphism& g, const DGMorphism& f);
DGMorphism add_morphisms(const DGMorphism& f, const DGMorphism& g);
DGMorphism scale_morphism(const Elem& c, const DGMorphism& f);
bool is_strict_iso(const DGMorphism& f);

}  // namespace dgar
