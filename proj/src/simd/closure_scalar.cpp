#include <vector>

#include "pbp/simd/closure.hpp"

namespace pbp::simd {

int closure_scalar(BoardGeometry geometry, std::span<const std::uint64_t> allowed, std::span<std::uint64_t> infected,
                   int threshold) {
  const int h = geometry.height;
  const int w = geometry.width;
  const std::uint64_t full = row_mask(w);

  // cur[r + 1] is row r; cur[0] and cur[h + 1] are halo rows.
  thread_local std::vector<std::uint64_t> cur;
  thread_local std::vector<std::uint64_t> fresh;
  cur.assign(static_cast<std::size_t>(h) + 2, 0);
  fresh.assign(static_cast<std::size_t>(h), 0);
  for (int r = 0; r < h; ++r) cur[r + 1] = infected[r];

  int rounds = 0;
  for (;;) {
    if (geometry.torus) {
      cur[0] = cur[h];
      cur[h + 1] = cur[1];
    }
    std::uint64_t any = 0;
    for (int r = 0; r < h; ++r) {
      const std::uint64_t self = cur[r + 1];
      std::uint64_t left = (self << 1) & full;
      std::uint64_t right = self >> 1;
      if (geometry.torus) {
        left |= self >> (w - 1);
        right |= (self << (w - 1)) & full;
      }
      const std::uint64_t ready = at_least(cur[r + 2], cur[r], left, right, threshold);
      fresh[r] = ready & allowed[r] & ~self;
      any |= fresh[r];
    }
    if (any == 0) break;
    for (int r = 0; r < h; ++r) cur[r + 1] |= fresh[r];
    ++rounds;
  }
  for (int r = 0; r < h; ++r) infected[r] = cur[r + 1];
  return rounds;
}

}  // namespace pbp::simd
