#include <immintrin.h>

#include <vector>

#include "pbp/simd/closure.hpp"

namespace pbp::simd {

namespace {

// Four rows per vector; mirrors at_least() lane-wise.
inline __m256i at_least_avx2(__m256i a, __m256i b, __m256i c, __m256i d, int threshold) {
  const __m256i ab = _mm256_xor_si256(a, b);
  const __m256i cd = _mm256_xor_si256(c, d);
  const __m256i ones = _mm256_xor_si256(ab, cd);
  const __m256i carry_ab = _mm256_and_si256(a, b);
  const __m256i carry_cd = _mm256_and_si256(c, d);
  const __m256i carry_mid = _mm256_and_si256(ab, cd);
  const __m256i twos = _mm256_xor_si256(_mm256_xor_si256(carry_ab, carry_cd), carry_mid);
  const __m256i fours = _mm256_and_si256(carry_ab, carry_cd);
  switch (threshold) {
    case 1: return _mm256_or_si256(_mm256_or_si256(a, b), _mm256_or_si256(c, d));
    case 2: return _mm256_or_si256(twos, fours);
    case 3: return _mm256_or_si256(_mm256_and_si256(twos, ones), fours);
    case 4: return fours;
    default: return _mm256_setzero_si256();
  }
}

}  // namespace

int closure_avx2(BoardGeometry geometry, std::span<const std::uint64_t> allowed, std::span<std::uint64_t> infected,
                 int threshold) {
  const int h = geometry.height;
  const int w = geometry.width;
  const int blocks = (h + 3) / 4;
  const int padded = blocks * 4;

  // cur[r + 1] is row r; rows h..padded-1 are dead padding (allowed == 0).
  thread_local std::vector<std::uint64_t> cur;
  thread_local std::vector<std::uint64_t> fresh;
  thread_local std::vector<std::uint64_t> live;
  cur.assign(static_cast<std::size_t>(padded) + 2, 0);
  fresh.assign(static_cast<std::size_t>(padded), 0);
  live.assign(static_cast<std::size_t>(padded), 0);
  for (int r = 0; r < h; ++r) {
    cur[r + 1] = infected[r];
    live[r] = allowed[r];
  }

  const __m256i full = _mm256_set1_epi64x(static_cast<long long>(row_mask(w)));
  const __m128i one = _mm_cvtsi32_si128(1);
  const __m128i wrap = _mm_cvtsi32_si128(w - 1);

  int rounds = 0;
  for (;;) {
    if (geometry.torus) {
      cur[0] = cur[h];
      cur[h + 1] = cur[1];
    }
    __m256i any = _mm256_setzero_si256();
    for (int b = 0; b < blocks; ++b) {
      const int base = 4 * b;
      const auto* row = reinterpret_cast<const __m256i*>(cur.data() + base + 1);
      const auto* up_row = reinterpret_cast<const __m256i*>(cur.data() + base + 2);
      const auto* down_row = reinterpret_cast<const __m256i*>(cur.data() + base);
      const __m256i self = _mm256_loadu_si256(row);
      const __m256i up = _mm256_loadu_si256(up_row);
      const __m256i down = _mm256_loadu_si256(down_row);
      __m256i left = _mm256_and_si256(_mm256_sll_epi64(self, one), full);
      __m256i right = _mm256_srl_epi64(self, one);
      if (geometry.torus) {
        left = _mm256_or_si256(left, _mm256_srl_epi64(self, wrap));
        right = _mm256_or_si256(right, _mm256_and_si256(_mm256_sll_epi64(self, wrap), full));
      }
      const __m256i ready = at_least_avx2(up, down, left, right, threshold);
      const __m256i mask = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(live.data() + base));
      const __m256i hit = _mm256_andnot_si256(self, _mm256_and_si256(ready, mask));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(fresh.data() + base), hit);
      any = _mm256_or_si256(any, hit);
    }
    if (_mm256_testz_si256(any, any)) break;
    for (int b = 0; b < blocks; ++b) {
      auto* dst = reinterpret_cast<__m256i*>(cur.data() + 4 * b + 1);
      const __m256i add = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(fresh.data() + 4 * b));
      _mm256_storeu_si256(dst, _mm256_or_si256(_mm256_loadu_si256(dst), add));
    }
    ++rounds;
  }
  for (int r = 0; r < h; ++r) infected[r] = cur[r + 1];
  return rounds;
}

}  // namespace pbp::simd
