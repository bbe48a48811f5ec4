#pragma once

#include <cstdint>

namespace pbp {

// Closed forms for 2-neighbour percolation numbers on polluted grids and tori.
// All arithmetic is on integers; every ceiling of a square root goes through
// ceil_two_sqrt.

enum class KBranch { small_k, large_k, boundary };

const char* to_string(KBranch branch) noexcept;

/// Quantities that select and feed the m_k^min formula for an m x n grid with
/// k polluted vertices.
struct ExtremalParams {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t columns_removed = 0;  // floor(k / n)
  std::int64_t residual = 0;         // t = mn - k
  std::int64_t side = 0;             // largest x with x^2 <= t
  std::int64_t remainder = 0;        // t - x^2, in [0, 2x]
  KBranch branch = KBranch::small_k;
};

/// Throws Error(parameter) unless 2 <= n <= m and 0 <= k <= mn.
ExtremalParams extremal_params(std::int64_t m, std::int64_t n, std::int64_t k);

/// Least s >= 0 with s^2 >= 4t, i.e. ceil(2 sqrt(t)).
std::int64_t ceil_two_sqrt(std::int64_t t);

/// m(P_m x P_n, 2) = ceil((m + n) / 2) for m, n >= 2.
std::int64_t percolation_number_grid(std::int64_t m, std::int64_t n);

/// m(C_m x C_n, 2) = ceil((m + n) / 2) - 1 for m, n >= 3. The same value holds
/// for the torus with any single vertex removed.
std::int64_t percolation_number_torus(std::int64_t m, std::int64_t n);

/// m_k^min(P_m x P_n, 2) for 2 <= n <= m, 0 <= k <= mn:
///   ceil((n + m - floor(k/n)) / 2)      if k <= (m - n) n
///   ceil(ceil(2 sqrt(mn - k)) / 2)      if k >= (m - n) n
/// At k == (m - n) n both expressions are evaluated and must agree; a mismatch
/// raises Error(internal).
std::int64_t mkmin(std::int64_t m, std::int64_t n, std::int64_t k);

/// Parity form of the small-k branch: m(G,2) - floor(l/2) when m + n is even,
/// m(G,2) - floor((l+1)/2) when odd, with l = floor(k/n).
/// Throws Error(parameter) unless 1 <= k <= (m - n) n.
std::int64_t mkmin_remark_form(std::int64_t m, std::int64_t n, std::int64_t k);

/// Lower bound on m(G', 2) for any G' obtained by deleting k vertices, from the
/// perimeter calculus: the height-bounded minimum perimeter when t > n^2 and
/// the unrestricted one when t <= n^2, divided by 4 and rounded up.
/// Needs 2 <= n <= m and 1 <= k < mn.
std::int64_t mkmin_lower_bound(std::int64_t m, std::int64_t n, std::int64_t k);

/// Largest k accepted by mkmax_lower_bound: ceil((n - 2)(m - 2) / 2).
std::int64_t max_independent_interior(std::int64_t m, std::int64_t n);

/// m(G,2) + k, a lower bound on m_k^max(P_m x P_n, 2) obtained by deleting an
/// independent set of degree-4 vertices. Throws Error(out_of_hypothesis) when
/// k > max_independent_interior(m, n).
std::int64_t mkmax_lower_bound(std::int64_t m, std::int64_t n, std::int64_t k);

}  // namespace pbp
