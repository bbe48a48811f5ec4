#include "pbp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "pbp/constructions.hpp"
#include "pbp/engine.hpp"
#include "pbp/error.hpp"
#include "pbp/formulas.hpp"
#include "pbp/perimeter.hpp"

namespace pbp {

std::size_t SuiteReport::passed() const noexcept {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; }));
}

std::size_t SuiteReport::failed() const noexcept { return rows.size() - passed(); }

namespace {

struct Outcome {
  std::int64_t actual = 0;
  bool pass = false;
  std::string note;
};

class ReportBuilder {
 public:
  ReportBuilder(std::string name, const VerifyOptions& options) : options_(options) {
    report_.name = std::move(name);
    report_.seed = options.seed;
  }

  // Runs one check; a thrown error becomes a failed row, never an abort.
  void row(const std::string& suite, int m, int n, std::int64_t k, std::int64_t expected,
           const std::function<Outcome()>& check) {
    ReportRow out{suite, m, n, k, expected, 0, false, 0.0, {}};
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = check();
      out.actual = o.actual;
      out.pass = o.pass;
      out.note = std::move(o.note);
    } catch (const std::exception& e) {
      out.pass = false;
      out.note = std::string("error: ") + e.what();
    }
    if (options_.record_timing) {
      out.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    report_.rows.push_back(std::move(out));
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  SuiteReport finish() {
    std::stable_sort(report_.rows.begin(), report_.rows.end(), [](const ReportRow& a, const ReportRow& b) {
      return std::tie(a.suite, a.m, a.n, a.k) < std::tie(b.suite, b.m, b.n, b.k);
    });
    return std::move(report_);
  }

 private:
  VerifyOptions options_;
  SuiteReport report_;
};

std::int64_t oracle(const PollutedInstance& instance, std::uint64_t budget) {
  return min_percolating_exact(instance, 2, budget).size;
}

// All independent vertex sets of the given size, in lexicographic canonical order.
std::vector<std::vector<std::size_t>> independent_sets(const GridSpec& spec, std::size_t size) {
  const Adjacency adj(spec);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  const std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (current.size() == size) {
      out.push_back(current);
      return;
    }
    for (std::size_t v = from; v < spec.vertex_count(); ++v) {
      const auto nb = adj.of(v);
      const bool clash = std::any_of(current.begin(), current.end(), [&](std::size_t u) {
        return std::find(nb.begin(), nb.end(), static_cast<std::uint32_t>(u)) != nb.end();
      });
      if (clash) continue;
      current.push_back(v);
      extend(v + 1);
      current.pop_back();
    }
  };
  extend(0);
  return out;
}

PollutedInstance remove(const GridSpec& spec, const std::vector<std::size_t>& removed) {
  CellSet polluted(spec);
  for (const auto idx : removed) polluted.set(idx);
  return PollutedInstance(spec, std::move(polluted));
}

}  // namespace

SuiteReport verify_theorem1(int max_mn_exhaustive, int max_mn_construction, int max_side,
                            const VerifyOptions& options) {
  if (max_mn_exhaustive < 4 || max_mn_construction < 4) {
    throw Error(ErrorKind::parameter, "theorem1 limits must be >= 4");
  }
  ReportBuilder report("theorem1", options);

  for (int n = 2; n * n <= max_mn_exhaustive; ++n) {
    for (int m = n; m * n <= max_mn_exhaustive; ++m) {
      for (int k = 0; k <= m * n; ++k) {
        report.row("theorem1/oracle", m, n, k, mkmin(m, n, k), [&]() -> Outcome {
          const std::int64_t exact = mkmin_exact(m, n, k, 2, options.budget);
          return {exact, exact == mkmin(m, n, k), "oracle-certified"};
        });
      }
    }
  }

  for (int n = 2; n * n <= max_mn_construction && (max_side <= 0 || n <= max_side); ++n) {
    for (int m = n; m * n <= max_mn_construction && (max_side <= 0 || m <= max_side); ++m) {
      const std::int64_t split = static_cast<std::int64_t>(m - n) * n;
      for (int k = 0; k <= m * n; ++k) {
        const std::int64_t expected = mkmin(m, n, k);
        report.row("theorem1/construction", m, n, k, expected, [&]() -> Outcome {
          const ExtremalWitness w = construct_extremal(m, n, k);
          const PercolationTrace trace = percolate(w.instance, w.seeds, 2);
          const auto size = static_cast<std::int64_t>(w.seeds.size());
          std::string note = "construction-only";
          bool pass = size == expected && w.claimed_size == expected && trace.percolated;
          if (!trace.percolated) note = "witness does not percolate";
          if (perimeter_lower_bound(w.instance) > expected) {
            pass = false;
            note = "perimeter bound exceeds the formula";
          }
          if (k >= 1 && k < m * n && mkmin_lower_bound(m, n, k) != expected) {
            pass = false;
            note = "rectangle lower bound disagrees";
          }
          if (k >= 1 && k <= split && mkmin_remark_form(m, n, k) != expected) {
            pass = false;
            note = "parity form disagrees";
          }
          return {size, pass, note};
        });
      }
    }
  }

  // Seed counts of the four 8x5 reference witnesses.
  constexpr struct {
    int k;
    std::int64_t seeds;
  } kReference[] = {{8, 6}, {11, 6}, {22, 5}, {24, 4}};
  for (const auto& ref : kReference) {
    report.row("theorem1/reference", 8, 5, ref.k, ref.seeds, [&]() -> Outcome {
      const ExtremalWitness w = construct_extremal(8, 5, ref.k);
      const std::int64_t value = mkmin(8, 5, ref.k);
      return {value, value == ref.seeds && w.claimed_size == ref.seeds, "reference"};
    });
  }
  return report.finish();
}

SuiteReport verify_monotonicity(int max_mn, const VerifyOptions& options) {
  if (max_mn < 4 || max_mn > 16) throw Error(ErrorKind::parameter, "monotonicity needs 4 <= max_mn <= 16");
  ReportBuilder report("monotonicity", options);
  report.note(
      "skipped: the K_{1,3} leaf-deletion example showing min degree >= r is necessary is not a grid graph");

  for (int n = 2; n * n <= max_mn; ++n) {
    for (int m = n; m * n <= max_mn; ++m) {
      const GridSpec spec(m, n);
      std::optional<std::int64_t> measured;
      report.row("monotonicity/base", m, n, 0, percolation_number_grid(m, n), [&]() -> Outcome {
        measured = oracle(PollutedInstance(spec), options.budget);
        return {*measured, *measured == percolation_number_grid(m, n), "oracle-certified"};
      });
      if (!measured) continue;
      const std::int64_t base = *measured;
      for (std::size_t size = 1; size <= 3; ++size) {
        const auto sets = independent_sets(spec, size);
        if (sets.empty()) continue;
        const std::string suite = size == 1 ? "monotonicity/single" : "monotonicity/independent";
        report.row(suite, m, n, static_cast<std::int64_t>(size), base, [&]() -> Outcome {
          std::int64_t worst = std::numeric_limits<std::int64_t>::max();
          for (const auto& removed : sets) worst = std::min(worst, oracle(remove(spec, removed), options.budget));
          return {worst, worst >= base, std::to_string(sets.size()) + " sets, min over sets"};
        });
      }
    }
  }
  return report.finish();
}

SuiteReport verify_perimeter(int max_t, int trace_samples, const VerifyOptions& options) {
  if (max_t < 1 || max_t > 8) throw Error(ErrorKind::parameter, "perimeter oracle needs 1 <= max_t <= 8");
  if (trace_samples < 0) throw Error(ErrorKind::parameter, "trace_samples must be >= 0");
  ReportBuilder report("perimeter", options);

  for (int t = 1; t <= max_t; ++t) {
    report.row("perimeter/polyomino", 0, 0, t, min_perimeter(t), [&]() -> Outcome {
      const std::int64_t exact = min_polyomino_perimeter_exact(t);
      return {exact, exact == min_perimeter(t), "fixed polyominoes enumerated"};
    });
  }

  constexpr std::int64_t kIdentityLimit = 1'000'000;
  report.row("perimeter/identity", 0, 0, kIdentityLimit, 0, [&]() -> Outcome {
    std::int64_t mismatches = 0;
    for (std::int64_t t = 1; t <= kIdentityLimit; ++t) {
      const std::int64_t p = min_perimeter(t);
      const std::int64_t s = ceil_two_sqrt(t);
      mismatches += p != 2 * s || (s + 1) / 2 != (p + 3) / 4;
    }
    return {mismatches, mismatches == 0, "p(t) == 2 ceil(2 sqrt t) mismatches"};
  });

  // Raw engine output only, so the sample stream is identical on every platform.
  std::mt19937_64 rng(options.seed);
  const GridSpec spec(8, 5);
  for (int sample = 0; sample < trace_samples; ++sample) {
    std::vector<std::size_t> order(spec.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size() - 1; i > 0; --i) std::swap(order[i], order[rng() % (i + 1)]);
    const auto k = static_cast<std::size_t>(rng() % 9);
    const auto seed_count = 1 + static_cast<std::size_t>(rng() % 12);

    CellSet polluted(spec);
    CellSet seeds(spec);
    for (std::size_t i = 0; i < k; ++i) polluted.set(order[i]);
    for (std::size_t i = k; i < k + seed_count; ++i) seeds.set(order[i]);
    const PollutedInstance instance(spec, polluted);

    report.row("perimeter/trace", 8, 5, static_cast<std::int64_t>(k), 0, [&]() -> Outcome {
      const PercolationTrace trace = percolate(instance, seeds, 2);
      CellSet cumulative(spec);
      std::int64_t previous = std::numeric_limits<std::int64_t>::max();
      std::int64_t violations = 0;
      for (const CellSet& round : trace.rounds) {
        cumulative |= round;
        const std::int64_t p = shape_perimeter(Shape::from_cells(cumulative));
        violations += p > previous;
        previous = p;
      }
      return {violations, violations == 0,
              "sample " + std::to_string(sample) + ", seeds=" + std::to_string(seed_count) +
                  ", rounds=" + std::to_string(trace.round_count) +
                  (trace.percolated ? ", percolated" : ", not percolated")};
    });
  }
  return report.finish();
}

SuiteReport verify_torus_and_max(int max_mn, int max_mn_pollution, const VerifyOptions& options) {
  if (max_mn < 9 || max_mn > 16) throw Error(ErrorKind::parameter, "torus checks need 9 <= max_mn <= 16");
  ReportBuilder report("torus-max", options);

  for (int n = 3; n * n <= max_mn; ++n) {
    for (int m = n; m * n <= max_mn; ++m) {
      const GridSpec spec(m, n, Topology::torus);
      const std::int64_t formula = percolation_number_torus(m, n);
      report.row("torus/base", m, n, 0, formula, [&]() -> Outcome {
        const std::int64_t exact = oracle(PollutedInstance(spec), options.budget);
        return {exact, exact == formula, "oracle-certified"};
      });
      report.row("torus/removal", m, n, 1, formula, [&]() -> Outcome {
        std::int64_t lo = std::numeric_limits<std::int64_t>::max();
        std::int64_t hi = std::numeric_limits<std::int64_t>::min();
        for (std::size_t v = 0; v < spec.vertex_count(); ++v) {
          const std::int64_t value = oracle(remove(spec, {v}), options.budget);
          lo = std::min(lo, value);
          hi = std::max(hi, value);
        }
        const bool uniform = lo == hi;
        return {uniform ? lo : -1, uniform && lo == formula,
                "over all " + std::to_string(spec.vertex_count()) + " vertices: min=" + std::to_string(lo) +
                    " max=" + std::to_string(hi)};
      });
    }
  }

  for (int n = 3; n * n <= max_mn_pollution; ++n) {
    for (int m = n; m * n <= max_mn_pollution; ++m) {
      const GridSpec spec(m, n);
      const auto top = std::min<std::int64_t>(2, max_independent_interior(m, n));
      for (int k = 1; k <= top; ++k) {
        const std::int64_t bound = mkmax_lower_bound(m, n, k);
        report.row("mkmax/independent", m, n, k, bound, [&]() -> Outcome {
          const PollutedInstance instance(spec, pollution_max_independent(m, n, k));
          const std::int64_t exact = oracle(instance, options.budget);
          return {exact, exact >= bound, exact == bound ? "bound attained" : "bound strict"};
        });
      }
      if (m * n <= 16) {
        const std::int64_t bound = mkmax_lower_bound(m, n, 1);
        report.row("mkmax/exact", m, n, 1, bound, [&]() -> Outcome {
          const std::int64_t exact = mkmax_exact(m, n, 1, 2, options.budget);
          return {exact, exact >= bound, exact == bound ? "bound attained" : "bound strict"};
        });
      }
    }
  }
  report.note("m_k^max tightness is not asserted; 'bound attained' notes are informational");
  return report.finish();
}

std::string report_csv(const SuiteReport& report) {
  std::ostringstream out;
  out << "# report=" << report.name << " seed=" << report.seed << "\n";
  out << "suite,m,n,k,expected,actual,pass,elapsed_ms\n";
  char elapsed[32];
  for (const ReportRow& row : report.rows) {
    std::snprintf(elapsed, sizeof elapsed, "%.3f", row.elapsed_ms);
    out << row.suite << ',' << row.m << ',' << row.n << ',' << row.k << ',' << row.expected << ',' << row.actual
        << ',' << (row.pass ? "true" : "false") << ',' << elapsed << "\n";
  }
  return out.str();
}

std::string report_json(const SuiteReport& report) {
  nlohmann::ordered_json doc;
  doc["report"] = report.name;
  doc["seed"] = report.seed;
  doc["passed"] = report.passed();
  doc["failed"] = report.failed();
  doc["ok"] = report.ok();
  doc["notes"] = report.notes;
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const ReportRow& row : report.rows) {
    rows.push_back({{"suite", row.suite},
                    {"m", row.m},
                    {"n", row.n},
                    {"k", row.k},
                    {"expected", row.expected},
                    {"actual", row.actual},
                    {"pass", row.pass},
                    {"elapsed_ms", row.elapsed_ms},
                    {"note", row.note}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace pbp
