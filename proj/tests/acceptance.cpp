// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pbp/constructions.hpp"
#include "pbp/engine.hpp"
#include "pbp/error.hpp"
#include "pbp/formulas.hpp"
#include "pbp/perimeter.hpp"
#include "pbp/search.hpp"
#include "pbp/verify.hpp"

using pbp::CellSet;
using pbp::GridSpec;
using pbp::PollutedInstance;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ < 5) failed_ += (failed_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(std::string summary) const {
    if (failures_ == 0) return {true, std::to_string(checks_) + " checks, " + summary};
    return {false, std::to_string(failures_) + "/" + std::to_string(checks_) + " failed: " + failed_};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string failed_;
};

std::string params(int m, int n, long k) {
  std::ostringstream s;
  s << m << "x" << n << " k=" << k;
  return s.str();
}

Outcome reference_instances() {
  Tally tally;
  const long ks[] = {8, 11, 22, 24};
  const long expected[] = {6, 6, 5, 4};
  for (int c = 0; c < 4; ++c) {
    const auto w = pbp::construct_extremal(8, 5, static_cast<int>(ks[c]));
    const auto board = oracle::board_of(w.instance);
    tally.expect(pbp::mkmin(8, 5, ks[c]) == expected[c], "mkmin " + params(8, 5, ks[c]));
    tally.expect(static_cast<long>(w.seeds.size()) == expected[c], "seed count " + params(8, 5, ks[c]));
    tally.expect(w.instance.k() == static_cast<std::size_t>(ks[c]), "pollution size");
    tally.expect(pbp::is_percolating(w.instance, w.seeds, 2), "engine " + params(8, 5, ks[c]));
    tally.expect(oracle::percolates(board, oracle::seeds_mask(board, w.seeds), 2), "oracle " + params(8, 5, ks[c]));
  }
  return tally.outcome("mkmin(8,5,{8,11,22,24}) = {6,6,5,4}");
}

// Plain enumeration: every polluted set, every seed subset, no bounds.
std::vector<int> unpruned_mkmin(int m, int n) {
  const GridSpec g(m, n);
  const int v = m * n;
  std::vector<int> best(static_cast<std::size_t>(v + 1), v);
  for (std::uint32_t mask = 0; mask < (1U << v); ++mask) {
    CellSet polluted(g);
    for (int b = 0; b < v; ++b)
      if (mask >> b & 1U) polluted.set(static_cast<std::size_t>(b));
    auto& slot = best[static_cast<std::size_t>(std::popcount(mask))];
    slot = std::min(slot, oracle::brute_force_minimum(PollutedInstance(g, polluted), 2).size);
  }
  return best;
}

Outcome oracle_certification() {
  Tally tally;
  long cases = 0;
  for (int m = 2; m <= 6; ++m) {
    for (int n = 2; n <= m && m * n <= 12; ++n) {
      const auto plain = unpruned_mkmin(m, n);
      for (int k = 0; k <= m * n; ++k) {
        ++cases;
        tally.expect(pbp::mkmin_exact(m, n, k, 2) == pbp::mkmin(m, n, k), "search " + params(m, n, k));
        tally.expect(plain[static_cast<std::size_t>(k)] == pbp::mkmin(m, n, k), "enumeration " + params(m, n, k));
      }
    }
  }
  return tally.outcome(std::to_string(cases) + " (m,n,k) cases with mn <= 12, search and plain enumeration");
}

Outcome construction_certification() {
  Tally tally;
  long cases = 0;
  for (int m = 2; m <= 20; ++m) {
    for (int n = 2; n <= m; ++n) {
      for (int k = 0; k <= m * n; ++k) {
        ++cases;
        const auto w = pbp::construct_extremal(m, n, k);
        const auto value = pbp::mkmin(m, n, k);
        tally.expect(pbp::is_percolating(w.instance, w.seeds, 2), "percolation " + params(m, n, k));
        tally.expect(static_cast<std::int64_t>(w.seeds.size()) == value, "size " + params(m, n, k));
        tally.expect(pbp::perimeter_lower_bound(w.instance) <= value, "perimeter bound " + params(m, n, k));
        if (k >= 1 && k < m * n) tally.expect(pbp::mkmin_lower_bound(m, n, k) == value, "lower bound " + params(m, n, k));
      }
    }
  }
  return tally.outcome(std::to_string(cases) + " witnesses with 2 <= n <= m <= 20");
}

Outcome perimeter_identities() {
  Tally tally;
  for (int t = 1; t <= 8; ++t) {
    tally.expect(pbp::min_polyomino_perimeter_exact(t) == pbp::min_perimeter(t), "polyomino t=" + std::to_string(t));
  }
  for (std::int64_t t = 1; t <= 1'000'000; ++t) {
    tally.expect(pbp::min_perimeter(t) == 2 * pbp::ceil_two_sqrt(t), "identity t=" + std::to_string(t));
  }
  return tally.outcome("polyominoes t <= 8, identity on [1, 10^6]");
}

Outcome perimeter_monotonicity() {
  Tally tally;
  std::mt19937_64 rng(0);
  const GridSpec g(8, 5);
  long rounds = 0;
  for (int sample = 0; sample < 100; ++sample) {
    std::vector<std::size_t> order(g.vertex_count());
    for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    const auto k = static_cast<std::size_t>(rng() % 9);
    const auto s = static_cast<std::size_t>(1 + rng() % 12);
    CellSet polluted(g);
    CellSet seeds(g);
    for (std::size_t p = 0; p < k; ++p) polluted.set(order[p]);
    for (std::size_t p = k; p < k + s; ++p) seeds.set(order[p]);
    const PollutedInstance inst(g, polluted);
    const auto trace = pbp::percolate(inst, seeds, 2);
    CellSet cumulative(g);
    std::int64_t previous = -1;
    for (const auto& round : trace.rounds) {
      cumulative |= round;
      const auto p = pbp::shape_perimeter(pbp::Shape::from_cells(cumulative));
      if (previous >= 0) tally.expect(p <= previous, "sample " + std::to_string(sample));
      previous = p;
      ++rounds;
    }
  }
  return tally.outcome("100 samples, " + std::to_string(rounds) + " frames");
}

Outcome deletion_monotonicity() {
  pbp::VerifyOptions options;
  options.record_timing = false;
  const auto report = pbp::verify_monotonicity(12, options);
  Tally tally;
  for (const auto& row : report.rows) tally.expect(row.pass, row.suite + " " + params(row.m, row.n, row.k));
  return tally.outcome("grids with mn <= 12, single and independent removals |A| <= 3");
}

Outcome torus() {
  Tally tally;
  const int dims[][2] = {{3, 3}, {3, 4}, {4, 3}, {4, 4}};
  for (const auto& d : dims) {
    const GridSpec t(d[0], d[1], pbp::Topology::torus);
    const auto formula = pbp::percolation_number_torus(d[0], d[1]);
    tally.expect(pbp::min_percolating_exact(PollutedInstance(t), 2).size == formula, params(d[0], d[1], 0));
    for (std::size_t v = 0; v < t.vertex_count(); ++v) {
      CellSet removed(t);
      removed.set(v);
      tally.expect(pbp::min_percolating_exact(PollutedInstance(t, removed), 2).size == formula,
                   params(d[0], d[1], 1) + " at " + pbp::to_string(t.vertex_at(v)));
    }
  }
  return tally.outcome("C3xC3, C3xC4, C4xC4 and every single removal");
}

Outcome max_bound() {
  Tally tally;
  std::string attained;
  const int dims[][2] = {{4, 4}, {5, 4}};
  for (const auto& d : dims) {
    for (int k = 1; k <= 2; ++k) {
      const GridSpec g(d[0], d[1]);
      const PollutedInstance inst(g, pbp::pollution_max_independent(d[0], d[1], k));
      const auto value = pbp::min_percolating_exact(inst, 2).size;
      const auto bound = (d[0] + d[1] + 1) / 2 + k;
      tally.expect(value >= bound, params(d[0], d[1], k));
      tally.expect(oracle::brute_force_minimum(inst, 2).size == value, "enumeration " + params(d[0], d[1], k));
      attained += (attained.empty() ? "" : ", ") + params(d[0], d[1], k) + " " + std::to_string(value) +
                  (value == bound ? " (attained)" : "");
    }
  }
  return tally.outcome(attained);
}

struct Criterion {
  const char* name;
  double limit_s;  // 0: no hard limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1 8x5 reference instances", 1.0, reference_instances},
      {"AC2 oracle certification", 0.0, oracle_certification},
      {"AC3 construction certification", 60.0, construction_certification},
      {"AC4 perimeter identities", 30.0, perimeter_identities},
      {"AC5 perimeter monotonicity", 5.0, perimeter_monotonicity},
      {"AC6 deletion monotonicity", 0.0, deletion_monotonicity},
      {"AC7 torus", 0.0, torus},
      {"AC8 max-side bound", 0.0, max_bound},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && seconds >= c.limit_s) {
      outcome.pass = false;
      outcome.detail += " (over the " + std::to_string(c.limit_s) + " s limit)";
    }
    failed += !outcome.pass;
    std::printf("%s %-32s %8.3f s  %s\n", outcome.pass ? "PASS" : "FAIL", c.name, seconds, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
