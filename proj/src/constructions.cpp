#include "dgar/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "dgar/cohomology.hpp"
#include "dgar/ops.hpp"

namespace dgar {
namespace {

struct Examined {
  DGModule realized;
  Cohomology coh;
  int i = 0;  // top cohomology degree
};

Examined examine(const SemifreeModule& x, const char* what) {
  ValidationReport rep = validate_semifree(x);
  if (!rep.valid) {
    throw Error(std::string(what) + ": input failed semi-free validation: " + rep.failures.front());
  }
  if (!x.is_minimal()) throw Error(std::string(what) + " expects a minimal semi-free input");
  Examined out{x.realize(), {}, 0};
  out.coh = cohomology(out.realized);
  auto dims = out.coh.h.dims();
  if (dims.empty()) throw Error(std::string(what) + ": " + out.realized.name + " is acyclic");
  if (dims.begin()->first != 0) {
    throw Error(std::string(what) + ": bottom cohomology of " + out.realized.name +
                " sits in degree " + std::to_string(dims.begin()->first) + ", not 0");
  }
  out.i = dims.rbegin()->first;
  if (out.i < 2) {
    throw Error(std::string(what) + ": top cohomology of " + out.realized.name +
                " sits below degree 2");
  }
  return out;
}

struct AlgInfo {
  int d = 0;
  std::map<int, int> h;
};

AlgInfo algebra_info(const DGAlgebra& a) {
  ValidationReport rep = validate_algebra(a);
  if (!rep.valid) throw Error("algebra " + a.name + " failed validation: " + rep.failures.front());
  return {rep.top_h, rep.h_dims};
}

void check_e(const AlgInfo& info, int e, const std::string& aname) {
  if (e < 2 || e > info.d - 2) {
    throw Error("middle degree " + std::to_string(e) + " lies outside [2, " +
                std::to_string(info.d - 2) + "] for " + aname);
  }
  auto it = info.h.find(e);
  if (it == info.h.end() || it->second == 0) {
    throw Error("algebra " + aname + " has no cohomology in degree " + std::to_string(e));
  }
}

/* Multiplication pairing H^p(R) x H^q(M) -> H^{p+q}(M) against a chosen basis
 * line in the target; the target degree must carry exactly one class. */
Matrix pairing_into_line(const DGModule& reg, const Cohomology& hreg, const DGModule& m,
                         const Cohomology& hm, int p, int q) {
  const Field& f = reg.alg->field;
  int rows = hreg.h.dim(p);
  int cols = hm.h.dim(q);
  Matrix out = Matrix::zero(f, rows, cols);
  for (int r = 0; r < rows; ++r) {
    Vec u = hreg.reps.at(p).col(r);
    for (int c = 0; c < cols; ++c) {
      Vec v = hm.reps.at(q).col(c);
      Vec prod = m.apply_act(p, u, q, v);
      Vec cls = hm.project(p + q, prod);
      out.set(r, c, cls[0]);
    }
  }
  return out;
}

void require_nondegenerate(const Matrix& pair, int rows, int cols, const std::string& where) {
  if (rows != cols) {
    throw Error("multiplication pairing for " + where + " is not square (" +
                std::to_string(rows) + " by " + std::to_string(cols) + ")");
  }
  if (int(pair.image_basis().size()) != rows) {
    throw Error("multiplication pairing for " + where + " is degenerate");
  }
}

/* Cone over the map from a rank-one free module hitting the chosen class in
 * H^{class_degree}, re-minimized and verified: bottom degree 0, top degree
 * expect_sup with a one-dimensional top line, one more generator, local
 * endomorphism algebra. */
SemifreeModule extend_by_class(const Examined& st, int class_degree, const Vec& coords,
                               int expect_sup, const char* what,
                               const ResolutionBudget& budget) {
  if (vec_is_zero(coords)) throw Error(std::string(what) + " needs a nonzero cohomology class");
  Vec z = st.coh.reps.at(class_degree).apply(coords);

  SemifreeModule fg;
  fg.alg = st.realized.alg;
  fg.gens.push_back({"c", class_degree, {}});
  DGMorphism hit = semifree_map_to(fg, st.realized, {z});
  require_valid(hit);
  Cone co = cone(hit);

  SemifreeResolution res = minimal_semifree_resolution(co.cone, budget);
  Cohomology hc = cohomology(co.cone);
  auto dims = hc.h.dims();
  if (dims.empty() || dims.begin()->first != 0) {
    throw Error(std::string(what) + ": extension of " + st.realized.name +
                " lost its bottom class");
  }
  if (dims.rbegin()->first != expect_sup) {
    throw Error(std::string(what) + ": extension of " + st.realized.name +
                " has top degree " + std::to_string(dims.rbegin()->first) + ", expected " +
                std::to_string(expect_sup));
  }
  if (hc.h.dim(expect_sup) != 1) {
    throw Error(std::string(what) + ": top cohomology line of the extension of " +
                st.realized.name + " is not one dimensional");
  }
  return res.module;
}

void require_growth(const SemifreeModule& out, const SemifreeModule& in, const char* what,
                    const ResolutionBudget& budget) {
  if (out.generator_count() != in.generator_count() + 1) {
    throw Error(std::string(what) + ": generator count did not grow by one (" +
                std::to_string(in.generator_count()) + " to " +
                std::to_string(out.generator_count()) + ")");
  }
  EndAlgebra ea = end_algebra(out.realize(), budget);
  if (!ea.local) {
    throw Error(std::string(what) +
                ": the extension decomposed, its endomorphism algebra is not local");
  }
}

}  // namespace

SemifreeModule case1(const CaseInput& in, const ResolutionBudget& budget) {
  Examined st = examine(in.x, "case1");
  AlgInfo info = algebra_info(*in.x.alg);
  if (in.e) check_e(info, *in.e, in.x.alg->name);
  int i = st.i;
  Vec coords = vec_zero(st.coh.h.dim(i));
  coords[0] = in.x.alg->field.one();
  SemifreeModule out =
      extend_by_class(st, i, coords, i + info.d - 1, "case1", budget);
  require_growth(out, in.x, "case1", budget);

  if (in.e) {
    int e = *in.e;
    DGModule outr = out.realize();
    Cohomology hout = cohomology(outr);
    int mid = hout.h.dim(i + e - 1);
    auto it = info.h.find(e);
    int expect = it == info.h.end() ? 0 : it->second;
    if (mid != expect) {
      throw Error("case1: new cohomology of " + outr.name + " in degree " +
                  std::to_string(i + e - 1) + " has dimension " + std::to_string(mid) +
                  ", expected " + std::to_string(expect));
    }
    DGModule reg = regular_module(in.x.alg, Side::Left);
    Cohomology hreg = cohomology(reg);
    Matrix pair = pairing_into_line(reg, hreg, outr, hout, info.d - e, i + e - 1);
    require_nondegenerate(pair, hreg.h.dim(info.d - e), mid, outr.name);
  }
  return out;
}

SemifreeModule case2(const CaseInput& in, const ResolutionBudget& budget) {
  if (!in.e) throw Error("case2 needs the middle degree e");
  Examined st = examine(in.x, "case2");
  AlgInfo info = algebra_info(*in.x.alg);
  check_e(info, *in.e, in.x.alg->name);
  int j = st.i - info.d + *in.e;
  if (st.coh.h.dim(j) == 0) {
    throw Error("case2: " + st.realized.name + " has no cohomology in degree " +
                std::to_string(j) + " to extend along");
  }
  Vec coords = vec_zero(st.coh.h.dim(j));
  coords[0] = in.x.alg->field.one();
  SemifreeModule out =
      extend_by_class(st, j, coords, st.i + *in.e - 1, "case2", budget);
  require_growth(out, in.x, "case2", budget);
  return out;
}

SemifreeModule case2_alpha(const CaseInput& in, const Vec& alpha,
                           const ResolutionBudget& budget) {
  if (!in.e) throw Error("case2 needs the middle degree e");
  Examined st = examine(in.x, "case2");
  AlgInfo info = algebra_info(*in.x.alg);
  check_e(info, *in.e, in.x.alg->name);
  int e = *in.e;
  int j = st.i - info.d + e;
  int jdim = st.coh.h.dim(j);
  if (jdim == 0) {
    throw Error("case2: " + st.realized.name + " has no cohomology in degree " +
                std::to_string(j) + " to extend along");
  }
  if (int(alpha.size()) != jdim) {
    throw Error("case2: class coordinates have length " + std::to_string(alpha.size()) +
                ", expected " + std::to_string(jdim));
  }
  if (vec_is_zero(alpha)) throw Error("case2 needs a nonzero cohomology class");
  if (st.coh.h.dim(st.i) != 1) {
    throw Error("case2: top cohomology of " + st.realized.name +
                " must be one dimensional to pair against");
  }
  DGModule reg = regular_module(in.x.alg, Side::Left);
  Cohomology hreg = cohomology(reg);
  Matrix pair = pairing_into_line(reg, hreg, st.realized, st.coh, info.d - e, j);
  require_nondegenerate(pair, hreg.h.dim(info.d - e), jdim, st.realized.name);

  SemifreeModule out = extend_by_class(st, j, alpha, st.i + e - 1, "case2", budget);
  require_growth(out, in.x, "case2", budget);
  return out;
}

namespace {

TreeNode make_node(std::string word, SemifreeModule m, int d, int e) {
  TreeNode node;
  node.word = std::move(word);
  node.phi_count = m.generator_count();
  InfSupAmp s = inf_sup_amp(m.realize());
  if (!s.inf) throw Error("tree node " + node.word + " is acyclic");
  node.inf = *s.inf;
  node.sup = *s.sup;
  node.amp = *s.amp;
  int r = int(node.word.size());
  int ones = int(std::count(node.word.begin(), node.word.end(), '1'));
  int expect_amp = d + ones * (d - 1) + (r - ones) * (e - 1);
  if (node.inf != 0 || node.amp != expect_amp || node.phi_count != r + 1) {
    throw Error("tree node " + node.word + " violates the growth law: inf " +
                std::to_string(node.inf) + ", amplitude " + std::to_string(node.amp) +
                " (expected " + std::to_string(expect_amp) + "), generators " +
                std::to_string(node.phi_count));
  }
  node.module = std::move(m);
  return node;
}

}  // namespace

std::vector<TreeNode> build_tree(std::shared_ptr<const DGAlgebra> a, int e, int depth,
                                 const ResolutionBudget& budget) {
  if (depth < 0) throw Error("tree depth must be nonnegative");
  GorensteinReport g = gorenstein(a, budget);
  if (!g.verdict) {
    throw NotGorenstein("algebra " + a->name +
                        " fails the Gorenstein checks, so the extension tree is not defined");
  }
  AlgInfo info = algebra_info(*a);
  check_e(info, e, a->name);

  std::vector<TreeNode> nodes;
  SemifreeResolution root = minimal_semifree_resolution(regular_module(a, Side::Left), budget);
  nodes.push_back(make_node("", root.module, info.d, e));
  for (size_t head = 0; head < nodes.size(); ++head) {
    if (int(nodes[head].word.size()) >= depth) continue;
    std::string word = nodes[head].word;
    CaseInput in{nodes[head].module, e};
    nodes.push_back(make_node(word + "1", case1(in, budget), info.d, e));
    if (word.empty() || word.back() != '2') {
      nodes.push_back(make_node(word + "2", case2(in, budget), info.d, e));
    }
  }
  return nodes;
}

ComponentCertificate distinct_component_certificate(const std::vector<DGModule>& mods,
                                                    const ResolutionBudget& budget) {
  ComponentCertificate cert;
  if (mods.empty()) return cert;
  for (const DGModule& m : mods) {
    if (m.alg->name != mods.front().alg->name) {
      throw Error("certificate modules live over different algebras (" + m.alg->name +
                  " vs " + mods.front().alg->name + ")");
    }
  }
  GorensteinReport g = gorenstein(mods.front().alg, budget);
  if (!g.verdict) {
    throw NotGorenstein("algebra " + mods.front().alg->name +
                        " fails the Gorenstein checks, so components are not defined");
  }

  int n = int(mods.size());
  std::vector<int> phis(mods.size()), infs(mods.size()), amps(mods.size());
  for (int k = 0; k < n; ++k) {
    InfSupAmp s = inf_sup_amp(mods[size_t(k)]);
    if (!s.inf) throw Error("module " + mods[size_t(k)].name + " is acyclic");
    infs[size_t(k)] = *s.inf;
    amps[size_t(k)] = *s.amp;
    phis[size_t(k)] = phi(mods[size_t(k)], budget);
  }

  std::set<std::pair<int, int>> certified;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (phis[size_t(x)] != phis[size_t(y)]) {
        cert.undecided.push_back({x, y});
        continue;
      }
      if (amps[size_t(x)] != amps[size_t(y)]) {
        cert.distinct.push_back({x, y,
                                 "equal generator counts but amplitudes " +
                                     std::to_string(amps[size_t(x)]) + " and " +
                                     std::to_string(amps[size_t(y)])});
        certified.insert({x, y});
        continue;
      }
      if (infs[size_t(x)] != infs[size_t(y)]) {
        cert.undecided.push_back({x, y});
        continue;
      }
      IsoVerdict v = is_isomorphic(mods[size_t(x)], mods[size_t(y)], budget);
      if (v == IsoVerdict::No) {
        cert.distinct.push_back(
            {x, y, "non-isomorphic with matching generator count, amplitude and bottom degree"});
        certified.insert({x, y});
      } else {
        cert.undecided.push_back({x, y});
      }
    }
  }

  std::vector<int> family;
  for (int k = 0; k < n; ++k) {
    bool ok = true;
    for (int m : family) {
      if (!certified.count({m, k})) {
        ok = false;
        break;
      }
    }
    if (ok) family.push_back(k);
  }
  cert.lower_bound = int(family.size());
  return cert;
}

}  // namespace dgar
