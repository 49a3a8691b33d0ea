#pragma once
#include <optional>

#include "dgar/matrix.hpp"
#include "dgar/rng.hpp"

namespace dgar {

/* One candidate direction in a pencil of block-diagonal maps: for each graded
 * degree a square block; a combination is invertible when every degree is. */
struct PencilBasis {
  /* blocks[s][d] = degree-d block of the s-th basis element; all s share shapes. */
  std::vector<std::vector<Matrix>> blocks;
};

/* Search c with all degree blocks of sum_s c_s * B_s invertible.
 *
 * Stage 1 tries seeded random points (fast path).  Stage 2 expands the product
 * of the block determinants symbolically: identically zero means no invertible
 * combination exists.  Otherwise a witness is pinned down one variable at a
 * time; a nonzero polynomial of degree < #candidate values keeps a nonzero
 * specialisation, so the walk is exact and deterministic.  Over a prime field
 * smaller than the needed candidate set the search throws Undecided.
 */
std::optional<Vec> find_invertible_combination(const PencilBasis& pencil, const Field& f,
                                               uint64_t seed = 1);

}  // namespace dgar
