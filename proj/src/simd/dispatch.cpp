#include <atomic>

#include "pbp/error.hpp"
#include "pbp/simd/closure.hpp"

namespace pbp::simd {

std::string_view to_string(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(PBP_HAVE_AVX2_KERNEL)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() noexcept {
  static const Isa best = isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  return best;
}

namespace {

std::atomic<Isa>& active_slot() noexcept {
  static std::atomic<Isa> slot{detected_isa()};
  return slot;
}

}  // namespace

Isa active_isa() noexcept { return active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw Error(ErrorKind::parameter, std::string("closure kernel '") + std::string(to_string(isa)) +
                                          "' is not available on this CPU/build");
  }
  active_slot().store(isa, std::memory_order_relaxed);
}

int closure(BoardGeometry geometry, std::span<const std::uint64_t> allowed, std::span<std::uint64_t> infected,
            int threshold) {
#if defined(PBP_HAVE_AVX2_KERNEL)
  if (active_isa() == Isa::avx2) return closure_avx2(geometry, allowed, infected, threshold);
#endif
  return closure_scalar(geometry, allowed, infected, threshold);
}

}  // namespace pbp::simd
