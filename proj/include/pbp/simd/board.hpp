#pragma once

#include <cstdint>
#include <vector>

#include "pbp/grid.hpp"
#include "pbp/simd/closure.hpp"

namespace pbp::simd {

/// True when the grid's rows fit the 64-bit row kernels.
inline bool fits_board(const GridSpec& spec) noexcept { return spec.m() <= kMaxBoardWidth; }

inline BoardGeometry geometry_of(const GridSpec& spec) noexcept {
  return BoardGeometry{spec.m(), spec.n(), spec.is_torus()};
}

/// Row w holds vertices (i, w + 1) at bit i - 1.
inline std::vector<std::uint64_t> to_rows(const CellSet& cells) {
  const GridSpec& spec = cells.spec();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(spec.n()), 0);
  for (std::size_t idx = 0; idx < spec.vertex_count(); ++idx) {
    if (!cells.test(idx)) continue;
    const Vertex v = spec.vertex_at(idx);
    rows[v.j - 1] |= std::uint64_t{1} << (v.i - 1);
  }
  return rows;
}

inline CellSet from_rows(const GridSpec& spec, const std::vector<std::uint64_t>& rows) {
  CellSet out(spec);
  for (int j = 1; j <= spec.n(); ++j) {
    for (int i = 1; i <= spec.m(); ++i) {
      if ((rows[j - 1] >> (i - 1)) & 1U) out.insert({i, j});
    }
  }
  return out;
}

}  // namespace pbp::simd
