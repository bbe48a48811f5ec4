#pragma once

#include <cstdint>

#include "pbp/grid.hpp"

namespace pbp {

/// A polluted grid together with a seed set that percolates it under r = 2.
struct ExtremalWitness {
  PollutedInstance instance;
  CellSet seeds;
  std::int64_t claimed_size = 0;
};

/// Last floor(k/n) columns, then the remaining k - floor(k/n) n vertices from
/// the top of column m - floor(k/n). Needs 2 <= n <= m, 1 <= k <= (m - n) n.
CellSet pollution_small_k(int m, int n, int k);

/// Alternate colours along column 1 (top down) followed by row 1 up to column
/// m - floor(k/n); the black vertices, plus (m - floor(k/n), 1) when
/// m + n - floor(k/n) is odd. Same preconditions as pollution_small_k.
CellSet seeds_small_k(int m, int n, int k);

/// Residual kept as close to a square as possible: with t = mn - k, x = isqrt(t)
/// and o = t - x^2 it is [x] x [x], plus o cells of row x + 1 (0 < o <= x), or
/// all of row x + 1 and o - x cells of column x + 1 (o > x). Seeds alternate
/// along column 1 and row 1. Needs 2 <= n <= m, (m - n) n <= k <= mn.
ExtremalWitness extremal_large_k(int m, int n, int k);

/// Dispatches on k and checks the result with the engine before returning;
/// a failed check raises Error(internal). Needs 2 <= n <= m, 0 <= k <= mn.
ExtremalWitness construct_extremal(int m, int n, int k);

/// First k interior vertices with i + j even, ordered by row (j ascending) then
/// column. Pairwise non-adjacent and of degree 4. Needs m, n >= 3 and
/// 1 <= k <= ceil((m - 2)(n - 2) / 2); larger k raises Error(out_of_hypothesis).
CellSet pollution_max_independent(int m, int n, int k);

}  // namespace pbp
