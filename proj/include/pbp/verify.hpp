#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pbp/search.hpp"

namespace pbp {

/// One check. Rows that are not about a grid (perimeter identities) put the
/// size under test in `k` and leave m = n = 0.
struct ReportRow {
  std::string suite;
  int m = 0;
  int n = 0;
  std::int64_t k = 0;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
  bool pass = false;
  double elapsed_ms = 0.0;
  std::string note;
};

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<ReportRow> rows;  // sorted by (suite, m, n, k), stable
  std::vector<std::string> notes;

  std::size_t passed() const noexcept;
  std::size_t failed() const noexcept;
  bool ok() const noexcept { return failed() == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
  /// Off makes reports byte-identical across runs (elapsed_ms = 0).
  bool record_timing = true;
};

/// (a) mkmin_exact == mkmin on every grid with 2 <= n <= m, mn <= max_mn_exhaustive
/// and every k; (b) on every grid with mn <= max_mn_construction (and m <= max_side
/// when max_side > 0) the construction percolates with |S| == mkmin, the
/// perimeter bound does not exceed it, and mkmin_lower_bound and the parity form
/// agree with it; (c) the four 8x5 reference instances.
SuiteReport verify_theorem1(int max_mn_exhaustive, int max_mn_construction, int max_side = 0,
                            const VerifyOptions& options = {});

/// Single-vertex and independent-set (|A| <= 3) deletions never lower the exact
/// percolation number of a grid with mn <= max_mn (at most 16).
SuiteReport verify_monotonicity(int max_mn, const VerifyOptions& options = {});

/// Polyomino oracle vs min_perimeter for t <= max_t (at most 8), the
/// min_perimeter / ceil_two_sqrt identity on [1, 10^6], and perimeter
/// non-increase over `trace_samples` seeded random runs on 8x5 grids.
SuiteReport verify_perimeter(int max_t, int trace_samples, const VerifyOptions& options = {});

/// Torus oracle vs formula (and invariance under deleting one vertex) for
/// tori with mn <= max_mn (at most 16); the m_k^max bound for independent
/// degree-4 pollution, k in {1, 2}, on grids with n >= 3 and mn <= max_mn_pollution.
SuiteReport verify_torus_and_max(int max_mn, int max_mn_pollution = 20, const VerifyOptions& options = {});

/// suite,m,n,k,expected,actual,pass,elapsed_ms after a `# report=... seed=...` line.
std::string report_csv(const SuiteReport& report);
std::string report_json(const SuiteReport& report);

}  // namespace pbp
