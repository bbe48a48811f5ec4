#pragma once

#include <vector>

#include "pbp/grid.hpp"

namespace pbp {

/// Full record of one r-neighbour bootstrap run.
///
/// rounds[0] is the seed set; rounds[t] for t >= 1 holds the vertices first
/// infected in round t and is never empty. round_count == rounds.size() - 1.
struct PercolationTrace {
  std::vector<CellSet> rounds;
  CellSet final_set;
  bool percolated = false;
  int round_count = 0;
};

/// Simultaneous-round closure with per-vertex infected-neighbour counters,
/// O(|V| + |E|) overall. Polluted vertices never become infected.
///
/// Throws Error(invariant) if a seed is polluted or belongs to another grid,
/// Error(parameter) if r < 1.
PercolationTrace percolate(const PollutedInstance& instance, const CellSet& seeds, int r);

/// Final infected set only; runs on the row-bitboard kernels when the grid is
/// at most 64 columns wide.
CellSet closure(const PollutedInstance& instance, const CellSet& seeds, int r);

/// Equivalent to percolate(...).percolated without building the trace.
bool is_percolating(const PollutedInstance& instance, const CellSet& seeds, int r);

}  // namespace pbp
