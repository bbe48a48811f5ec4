#pragma once

#include <cstdint>
#include <vector>

#include "pbp/grid.hpp"
#include "pbp/perimeter.hpp"

namespace pbp {

/// Default cap on closure evaluations for one oracle call.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct SearchResult {
  std::int64_t size = 0;
  CellSet witness;  // lexicographically least percolating set of that size
  std::uint64_t nodes_explored = 0;
};

/// Exact m(G - A, r) by iterative deepening on the seed-set size.
///
/// Residual vertices of degree < r can never be infected and are always
/// seeded. Sizes are tried from the perimeter bound (grid, r = 2) or 1 upward;
/// for each size the supersets of the forced seeds are enumerated in canonical
/// lexicographic order and the first percolating one is returned.
///
/// An empty residual gives size 0. Throws BudgetError once more than `budget`
/// closures have been evaluated, and Error(parameter) for r < 1.
SearchResult min_percolating_exact(const PollutedInstance& instance, int r, std::uint64_t budget = kDefaultBudget);

/// min over all |A| = k of m(P_m x P_n - A, r). The budget is shared across
/// all polluted sets. Needs m, n >= 1 and 0 <= k <= mn.
std::int64_t mkmin_exact(int m, int n, int k, int r, std::uint64_t budget = kDefaultBudget);

/// max over all |A| = k of m(P_m x P_n - A, r).
std::int64_t mkmax_exact(int m, int n, int k, int r, std::uint64_t budget = kDefaultBudget);

/// Every edge-connected shape of t squares up to translation, each normalised
/// to min x = min y = 0. Needs 1 <= t <= 10.
std::vector<Shape> enumerate_fixed_polyominoes(int t);

/// Minimum shape_perimeter over enumerate_fixed_polyominoes(t).
std::int64_t min_polyomino_perimeter_exact(int t);

}  // namespace pbp
