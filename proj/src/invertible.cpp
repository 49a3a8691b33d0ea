#include "dgar/invertible.hpp"

#include "dgar/poly.hpp"

namespace dgar {

namespace {

bool all_blocks_invertible(const PencilBasis& pencil, const Field& f, const Vec& c) {
  size_t nblocks = pencil.blocks[0].size();
  for (size_t d = 0; d < nblocks; ++d) {
    const Matrix& b0 = pencil.blocks[0][d];
    if (b0.rows() != b0.cols()) return false;
    if (b0.rows() == 0) continue;
    Matrix acc = Matrix::zero(f, b0.rows(), b0.cols());
    for (size_t s = 0; s < pencil.blocks.size(); ++s)
      acc = acc.add(pencil.blocks[s][d].scale(c[s]));
    if (f.is_zero(acc.det())) return false;
  }
  return true;
}

std::vector<Elem> candidate_values(const Field& f, int count) {
  std::vector<Elem> vals;
  if (f.is_rationals()) {
    for (int i = 0; vals.size() < size_t(count); ++i) {
      vals.push_back(f.from_long(i));
      if (i > 0 && vals.size() < size_t(count)) vals.push_back(f.from_long(-i));
    }
  } else {
    long p = f.characteristic();
    if (p < count) throw Undecided("prime field too small for a certified invertibility search");
    for (long i = 0; i < count; ++i) vals.push_back(f.from_long(i));
  }
  return vals;
}

}  // namespace

std::optional<Vec> find_invertible_combination(const PencilBasis& pencil, const Field& f,
                                               uint64_t seed) {
  if (pencil.blocks.empty()) return std::nullopt;
  int s = int(pencil.blocks.size());
  for (const auto& bs : pencil.blocks)
    for (const auto& b : bs)
      if (b.rows() != b.cols()) return std::nullopt;

  // Fast path: seeded random points.
  Rng rng(seed);
  for (int t = 0; t < 64; ++t) {
    Vec c(s);
    for (int i = 0; i < s; ++i) c[i] = f.from_long(rng.small(8));
    if (all_blocks_invertible(pencil, f, c)) return c;
  }

  // Symbolic product of block determinants.
  size_t nblocks = pencil.blocks[0].size();
  Poly det = Poly::constant(f, s, f.one());
  for (size_t d = 0; d < nblocks; ++d) {
    int n = pencil.blocks[0][d].rows();
    if (n == 0) continue;
    std::vector<std::vector<Poly>> pm(n, std::vector<Poly>(n, Poly(f, s)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Poly entry(f, s);
        for (int v = 0; v < s; ++v) {
          const Elem& e = pencil.blocks[v][d].at(i, j);
          if (!f.is_zero(e))
            entry = entry.add(Poly::variable(f, s, v).scale(e));
        }
        pm[i][j] = entry;
      }
    det = det.mul(poly_det(pm));
    if (det.is_zero()) return std::nullopt;
  }
  if (det.is_zero()) return std::nullopt;

  // Pin a witness variable by variable.
  Vec witness(s, Elem(0));
  Poly cur = det;
  for (int v = 0; v < s; ++v) {
    int dv = cur.degree_in(v);
    auto vals = candidate_values(f, dv + 1);
    bool found = false;
    for (const auto& val : vals) {
      Poly next = cur.substitute(v, val);
      if (!next.is_zero()) {
        witness[v] = val;
        cur = next;
        found = true;
        break;
      }
    }
    if (!found) throw Undecided("specialisation walk failed to keep determinant nonzero");
  }
  if (!all_blocks_invertible(pencil, f, witness))
    throw Undecided("witness re-check failed");
  return witness;
}

}  // namespace dgar
