#include "pbp/formulas.hpp"

#include <string>

#include "pbp/error.hpp"
#include "pbp/perimeter.hpp"

namespace pbp {

namespace {

constexpr std::int64_t ceil_half(std::int64_t v) { return (v + 1) / 2; }

std::string dims(std::int64_t m, std::int64_t n, std::int64_t k) {
  return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
}

void require_grid_order(std::int64_t m, std::int64_t n, std::int64_t k) {
  if (n < 2 || n > m) throw Error(ErrorKind::parameter, "need 2 <= n <= m, got " + dims(m, n, k));
  if (m > 1'000'000) throw Error(ErrorKind::parameter, "grid side too large: " + dims(m, n, k));
  if (k < 0 || k > m * n) throw Error(ErrorKind::parameter, "need 0 <= k <= mn, got " + dims(m, n, k));
}

}  // namespace

const char* to_string(KBranch branch) noexcept {
  switch (branch) {
    case KBranch::small_k: return "small_k";
    case KBranch::large_k: return "large_k";
    case KBranch::boundary: return "boundary";
  }
  return "unknown";
}

ExtremalParams extremal_params(std::int64_t m, std::int64_t n, std::int64_t k) {
  require_grid_order(m, n, k);
  ExtremalParams p;
  p.m = m;
  p.n = n;
  p.k = k;
  p.columns_removed = k / n;
  p.residual = m * n - k;
  p.side = isqrt(p.residual);
  p.remainder = p.residual - p.side * p.side;
  const std::int64_t split = (m - n) * n;
  p.branch = k < split ? KBranch::small_k : k > split ? KBranch::large_k : KBranch::boundary;
  return p;
}

std::int64_t ceil_two_sqrt(std::int64_t t) {
  if (t < 0) throw Error(ErrorKind::parameter, "ceil_two_sqrt needs t >= 0");
  const std::int64_t s = isqrt(4 * t);
  return s * s == 4 * t ? s : s + 1;
}

std::int64_t percolation_number_grid(std::int64_t m, std::int64_t n) {
  if (m < 2 || n < 2) {
    throw Error(ErrorKind::parameter, "grid percolation number needs m, n >= 2, got m=" + std::to_string(m) +
                                          " n=" + std::to_string(n));
  }
  return ceil_half(m + n);
}

std::int64_t percolation_number_torus(std::int64_t m, std::int64_t n) {
  if (m < 3 || n < 3) {
    throw Error(ErrorKind::parameter, "torus percolation number needs m, n >= 3, got m=" + std::to_string(m) +
                                          " n=" + std::to_string(n));
  }
  return ceil_half(m + n) - 1;
}

std::int64_t mkmin(std::int64_t m, std::int64_t n, std::int64_t k) {
  const ExtremalParams p = extremal_params(m, n, k);
  const auto small = [&] { return ceil_half(n + m - p.columns_removed); };
  const auto large = [&] { return ceil_half(ceil_two_sqrt(p.residual)); };
  switch (p.branch) {
    case KBranch::small_k: return small();
    case KBranch::large_k: return large();
    case KBranch::boundary: {
      const std::int64_t a = small();
      const std::int64_t b = large();
      if (a != b) {
        throw Error(ErrorKind::internal, "m_k^min branches disagree at the boundary for " + dims(m, n, k) + ": " +
                                             std::to_string(a) + " vs " + std::to_string(b));
      }
      return a;
    }
  }
  throw Error(ErrorKind::internal, "unreachable branch");
}

std::int64_t mkmin_remark_form(std::int64_t m, std::int64_t n, std::int64_t k) {
  require_grid_order(m, n, k);
  if (k < 1 || k > (m - n) * n) {
    throw Error(ErrorKind::parameter, "parity form needs 1 <= k <= (m-n)n, got " + dims(m, n, k));
  }
  const std::int64_t base = percolation_number_grid(m, n);
  const std::int64_t l = k / n;
  return (m + n) % 2 == 0 ? base - l / 2 : base - (l + 1) / 2;
}

std::int64_t mkmin_lower_bound(std::int64_t m, std::int64_t n, std::int64_t k) {
  require_grid_order(m, n, k);
  if (k < 1 || k >= m * n) throw Error(ErrorKind::parameter, "lower bound needs 1 <= k < mn, got " + dims(m, n, k));
  const std::int64_t t = m * n - k;
  // The residual lives in n rows, so for t > n^2 its height is bounded by n.
  const std::int64_t perimeter = t > n * n ? min_perimeter_height_bounded(t, n) : min_perimeter(t);
  return (perimeter + 3) / 4;
}

std::int64_t max_independent_interior(std::int64_t m, std::int64_t n) {
  if (m < 2 || n < 2) throw Error(ErrorKind::parameter, "need m, n >= 2");
  return ceil_half((n - 2) * (m - 2));
}

std::int64_t mkmax_lower_bound(std::int64_t m, std::int64_t n, std::int64_t k) {
  const std::int64_t cap = max_independent_interior(m, n);
  if (k < 0) throw Error(ErrorKind::parameter, "k must be >= 0");
  if (k > cap) {
    throw Error(ErrorKind::out_of_hypothesis, "k=" + std::to_string(k) + " exceeds the independent degree-4 capacity " +
                                                  std::to_string(cap) + " of a " + std::to_string(m) + "x" +
                                                  std::to_string(n) + " grid");
  }
  return percolation_number_grid(m, n) + k;
}

}  // namespace pbp
