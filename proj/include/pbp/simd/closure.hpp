#pragma once

// Row-bitboard bootstrap closure kernels.
//
// A board stores one 64-bit word per grid row; bit b of row w is the vertex
// (b + 1, w + 1). Each round computes, for every row at once, how many of the
// four neighbour masks (up, down, left, right) cover each bit with a
// bit-sliced adder, and infects the allowed cells that reach the threshold.
// Rounds are simultaneous, so every kernel produces the same final set and
// the same round count as the queue-based engine.

#include <cstdint>
#include <span>
#include <string_view>

namespace pbp::simd {

inline constexpr int kMaxBoardWidth = 64;

struct BoardGeometry {
  int width = 0;   // columns, 1..64
  int height = 0;  // rows, >= 1
  bool torus = false;
};

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa) noexcept;

/// Runs the closure in place. `infected` holds the seeds on entry (a subset of
/// `allowed`) and the final infected set on return. Returns the number of
/// nonempty infection rounds.
int closure_scalar(BoardGeometry geometry, std::span<const std::uint64_t> allowed,
                   std::span<std::uint64_t> infected, int threshold);

#if defined(PBP_HAVE_AVX2_KERNEL)
int closure_avx2(BoardGeometry geometry, std::span<const std::uint64_t> allowed, std::span<std::uint64_t> infected,
                 int threshold);
#endif

/// Best ISA the running CPU supports among the kernels compiled in.
Isa detected_isa() noexcept;
bool isa_available(Isa isa) noexcept;

/// Kernel used by closure(). Defaults to detected_isa(); set_active_isa throws
/// Error(parameter) for an ISA that is not available.
Isa active_isa() noexcept;
void set_active_isa(Isa isa);

/// Dispatches to the active kernel.
int closure(BoardGeometry geometry, std::span<const std::uint64_t> allowed, std::span<std::uint64_t> infected,
            int threshold);

/// Mask of the low `width` bits.
constexpr std::uint64_t row_mask(int width) noexcept {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

/// Cells covered by at least `threshold` of the four masks.
constexpr std::uint64_t at_least(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d,
                                 int threshold) noexcept {
  const std::uint64_t ab = a ^ b;
  const std::uint64_t cd = c ^ d;
  const std::uint64_t ones = ab ^ cd;
  const std::uint64_t carry_ab = a & b;
  const std::uint64_t carry_cd = c & d;
  const std::uint64_t carry_mid = ab & cd;
  const std::uint64_t twos = carry_ab ^ carry_cd ^ carry_mid;
  const std::uint64_t fours = carry_ab & carry_cd;
  switch (threshold) {
    case 1: return a | b | c | d;
    case 2: return twos | fours;
    case 3: return (twos & ones) | fours;
    case 4: return fours;
    default: return 0;
  }
}

}  // namespace pbp::simd
