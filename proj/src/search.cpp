#include "pbp/search.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>

#include "pbp/engine.hpp"
#include "pbp/error.hpp"
#include "pbp/formulas.hpp"
#include "pbp/simd/board.hpp"

namespace pbp {

namespace {

// Enumerates seed sets for one instance. Forced seeds (residual degree < r)
// are fixed; the free residual vertices are combined in canonical order.
class SeedSearch {
 public:
  SeedSearch(const PollutedInstance& instance, int r)
      : instance_(instance), r_(r), board_(simd::fits_board(instance.spec())) {
    const auto degree = residual_degrees(instance);
    const CellSet& polluted = instance.polluted();
    for (std::size_t idx = 0; idx < degree.size(); ++idx) {
      if (polluted.test(idx)) continue;
      (degree[idx] < r ? forced_ : free_).push_back(idx);
    }
    if (board_) {
      const GridSpec& spec = instance.spec();
      allowed_ = simd::to_rows(instance.residual());
      forced_rows_.assign(allowed_.size(), 0);
      for (const auto idx : forced_) {
        const Vertex v = spec.vertex_at(idx);
        forced_rows_[v.j - 1] |= std::uint64_t{1} << (v.i - 1);
      }
      for (const auto idx : free_) {
        const Vertex v = spec.vertex_at(idx);
        free_bits_.push_back({v.j - 1, std::uint64_t{1} << (v.i - 1)});
      }
    }
  }

  std::int64_t residual_count() const { return static_cast<std::int64_t>(forced_.size() + free_.size()); }

  std::int64_t start_size() const {
    std::int64_t lo = 1;
    if (r_ == 2 && !instance_.spec().is_torus()) lo = perimeter_lower_bound(instance_);
    return std::max<std::int64_t>(lo, static_cast<std::int64_t>(forced_.size()));
  }

  /// First size in [lo, hi] that admits a percolating set, with its
  /// lexicographically least witness (canonical indices, ascending).
  std::optional<std::vector<std::size_t>> find(std::int64_t lo, std::int64_t hi, std::uint64_t& nodes,
                                               std::uint64_t budget) {
    lo = std::max<std::int64_t>(lo, static_cast<std::int64_t>(forced_.size()));
    hi = std::min(hi, residual_count());
    for (std::int64_t s = lo; s <= hi; ++s) {
      const auto picks = static_cast<std::size_t>(s) - forced_.size();
      std::vector<std::size_t> combo(picks);
      for (std::size_t p = 0; p < picks; ++p) combo[p] = p;
      for (;;) {
        if (++nodes > budget) throw BudgetError(static_cast<int>(s), static_cast<int>(residual_count()), nodes - 1);
        if (percolates(combo)) return assemble(combo);
        // Next combination in lexicographic order.
        std::size_t p = picks;
        while (p > 0 && combo[p - 1] == free_.size() - picks + (p - 1)) --p;
        if (p == 0) break;
        ++combo[p - 1];
        for (std::size_t q = p; q < picks; ++q) combo[q] = combo[q - 1] + 1;
      }
    }
    return std::nullopt;
  }

 private:
  bool percolates(const std::vector<std::size_t>& combo) {
    if (board_) {
      rows_ = forced_rows_;
      for (const auto p : combo) rows_[free_bits_[p].row] |= free_bits_[p].bit;
      simd::closure(simd::geometry_of(instance_.spec()), allowed_, rows_, r_);
      return rows_ == allowed_;
    }
    CellSet seeds(instance_.spec());
    for (const auto idx : forced_) seeds.set(idx);
    for (const auto p : combo) seeds.set(free_[p]);
    return is_percolating(instance_, seeds, r_);
  }

  std::vector<std::size_t> assemble(const std::vector<std::size_t>& combo) const {
    std::vector<std::size_t> out = forced_;
    for (const auto p : combo) out.push_back(free_[p]);
    std::sort(out.begin(), out.end());
    return out;
  }

  struct Bit {
    int row;
    std::uint64_t bit;
  };

  const PollutedInstance& instance_;
  int r_;
  bool board_;
  std::vector<std::size_t> forced_;
  std::vector<std::size_t> free_;
  std::vector<std::uint64_t> allowed_;
  std::vector<std::uint64_t> forced_rows_;
  std::vector<Bit> free_bits_;
  std::vector<std::uint64_t> rows_;
};

void require_threshold(int r) {
  if (r < 1) throw Error(ErrorKind::parameter, "threshold r must be >= 1, got " + std::to_string(r));
}

// Visits every k-subset of [0, count) in lexicographic order; stops when fn returns false.
template <typename Fn>
void for_each_subset(std::size_t count, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> combo(k);
  for (std::size_t p = 0; p < k; ++p) combo[p] = p;
  for (;;) {
    if (!fn(combo)) return;
    std::size_t p = k;
    while (p > 0 && combo[p - 1] == count - k + (p - 1)) --p;
    if (p == 0) return;
    ++combo[p - 1];
    for (std::size_t q = p; q < k; ++q) combo[q] = combo[q - 1] + 1;
  }
}

PollutedInstance polluted_grid(const GridSpec& spec, const std::vector<std::size_t>& removed) {
  CellSet polluted(spec);
  for (const auto idx : removed) polluted.set(idx);
  return PollutedInstance(spec, std::move(polluted));
}

void require_k(const GridSpec& spec, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > spec.vertex_count()) {
    throw Error(ErrorKind::parameter, "need 0 <= k <= mn, got k=" + std::to_string(k));
  }
}

}  // namespace

SearchResult min_percolating_exact(const PollutedInstance& instance, int r, std::uint64_t budget) {
  require_threshold(r);
  SearchResult result{0, CellSet(instance.spec()), 0};
  if (instance.residual_count() == 0) return result;

  SeedSearch search(instance, r);
  const auto found = search.find(search.start_size(), search.residual_count(), result.nodes_explored, budget);
  if (!found) throw Error(ErrorKind::internal, "the full residual set failed to percolate");
  result.size = static_cast<std::int64_t>(found->size());
  for (const auto idx : *found) result.witness.set(idx);
  return result;
}

std::int64_t mkmin_exact(int m, int n, int k, int r, std::uint64_t budget) {
  require_threshold(r);
  const GridSpec spec(m, n);
  require_k(spec, k);
  const std::int64_t t = static_cast<std::int64_t>(spec.vertex_count()) - k;
  if (t == 0) return 0;
  // No residual of t cells can beat its minimum perimeter.
  const std::int64_t floor = r == 2 ? (min_perimeter(t) + 3) / 4 : 1;

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::uint64_t nodes = 0;
  for_each_subset(spec.vertex_count(), static_cast<std::size_t>(k), [&](const std::vector<std::size_t>& removed) {
    const PollutedInstance instance = polluted_grid(spec, removed);
    SeedSearch search(instance, r);
    const auto found = search.find(search.start_size(), best - 1, nodes, budget);
    if (found) best = static_cast<std::int64_t>(found->size());
    return best > floor;
  });
  return best;
}

std::int64_t mkmax_exact(int m, int n, int k, int r, std::uint64_t budget) {
  require_threshold(r);
  const GridSpec spec(m, n);
  require_k(spec, k);
  if (static_cast<std::size_t>(k) == spec.vertex_count()) return 0;

  std::int64_t best = 0;
  std::uint64_t nodes = 0;
  for_each_subset(spec.vertex_count(), static_cast<std::size_t>(k), [&](const std::vector<std::size_t>& removed) {
    const PollutedInstance instance = polluted_grid(spec, removed);
    SeedSearch search(instance, r);
    const auto found = search.find(search.start_size(), search.residual_count(), nodes, budget);
    if (!found) throw Error(ErrorKind::internal, "the full residual set failed to percolate");
    best = std::max(best, static_cast<std::int64_t>(found->size()));
    return true;
  });
  return best;
}

std::vector<Shape> enumerate_fixed_polyominoes(int t) {
  if (t < 1 || t > 10) throw Error(ErrorKind::parameter, "polyomino enumeration supports 1 <= t <= 10");

  const auto normalise = [](std::vector<Cell> cells) {
    int x0 = std::numeric_limits<int>::max();
    int y0 = std::numeric_limits<int>::max();
    for (const Cell c : cells) {
      x0 = std::min(x0, c.x);
      y0 = std::min(y0, c.y);
    }
    for (Cell& c : cells) c = {c.x - x0, c.y - y0};
    std::sort(cells.begin(), cells.end());
    return cells;
  };

  std::set<std::vector<Cell>> level{{Cell{0, 0}}};
  for (int size = 1; size < t; ++size) {
    std::set<std::vector<Cell>> grown;
    for (const auto& poly : level) {
      for (const Cell c : poly) {
        for (const Cell step : {Cell{1, 0}, Cell{-1, 0}, Cell{0, 1}, Cell{0, -1}}) {
          const Cell next{c.x + step.x, c.y + step.y};
          if (std::binary_search(poly.begin(), poly.end(), next)) continue;
          auto cells = poly;
          cells.push_back(next);
          grown.insert(normalise(std::move(cells)));
        }
      }
    }
    level = std::move(grown);
  }

  std::vector<Shape> out;
  out.reserve(level.size());
  for (const auto& cells : level) out.emplace_back(cells);
  return out;
}

std::int64_t min_polyomino_perimeter_exact(int t) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const Shape& shape : enumerate_fixed_polyominoes(t)) best = std::min(best, shape_perimeter(shape));
  return best;
}

}  // namespace pbp
