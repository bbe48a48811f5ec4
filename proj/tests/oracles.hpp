#pragma once

// Test-only brute-force oracles. They share no code with the library beyond
// the value types: adjacency is recomputed from coordinates, closure runs one
// vertex at a time, and minimum sets come from plain bitmask enumeration.

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "pbp/grid.hpp"

namespace oracle {

struct Board {
  int m = 0;
  int n = 0;
  bool torus = false;
  std::vector<bool> polluted;  // indexed (j - 1) * m + (i - 1)

  int id(int i, int j) const { return (j - 1) * m + (i - 1); }
};

inline Board board_of(const pbp::PollutedInstance& instance) {
  const auto& spec = instance.spec();
  Board b{spec.m(), spec.n(), spec.is_torus(), std::vector<bool>(spec.vertex_count(), false)};
  for (const auto v : instance.polluted().vertices()) b.polluted[b.id(v.i, v.j)] = true;
  return b;
}

inline std::vector<int> adjacent(const Board& b, int i, int j) {
  std::vector<int> out;
  const int di[] = {0, 0, -1, 1};
  const int dj[] = {1, -1, 0, 0};
  for (int d = 0; d < 4; ++d) {
    int a = i + di[d];
    int c = j + dj[d];
    if (b.torus) {
      a = (a - 1 + b.m) % b.m + 1;
      c = (c - 1 + b.n) % b.n + 1;
    } else if (a < 1 || a > b.m || c < 1 || c > b.n) {
      continue;
    }
    out.push_back(b.id(a, c));
  }
  return out;
}

/// Sequential closure: repeatedly infect the first eligible vertex found.
inline std::vector<bool> sequential_closure(const Board& b, std::vector<bool> infected, int r) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 1; j <= b.n; ++j) {
      for (int i = 1; i <= b.m; ++i) {
        const int v = b.id(i, j);
        if (infected[v] || b.polluted[v]) continue;
        int count = 0;
        for (const int u : adjacent(b, i, j)) count += infected[u];
        if (count >= r) {
          infected[v] = true;
          changed = true;
        }
      }
    }
  }
  return infected;
}

inline std::vector<bool> seeds_mask(const Board& b, const pbp::CellSet& seeds) {
  std::vector<bool> out(static_cast<std::size_t>(b.m * b.n), false);
  for (const auto v : seeds.vertices()) out[b.id(v.i, v.j)] = true;
  return out;
}

inline bool percolates(const Board& b, const std::vector<bool>& seeds, int r) {
  const auto fin = sequential_closure(b, seeds, r);
  for (std::size_t v = 0; v < fin.size(); ++v) {
    if (!b.polluted[v] && !fin[v]) return false;
  }
  return true;
}

struct Minimum {
  int size = 0;
  std::vector<pbp::Vertex> witness;  // canonical order: top row first, left to right
};

/// Exhaustive minimum percolating set over all subsets of the residual (<= 20
/// residual vertices). Ties go to the lexicographically least set in canonical
/// order (rows from the top, columns from the left).
inline Minimum brute_force_minimum(const pbp::PollutedInstance& instance, int r) {
  const Board b = board_of(instance);
  std::vector<pbp::Vertex> residual;  // canonical order
  for (int j = b.n; j >= 1; --j) {
    for (int i = 1; i <= b.m; ++i) {
      if (!b.polluted[b.id(i, j)]) residual.push_back({i, j});
    }
  }
  const int count = static_cast<int>(residual.size());
  std::optional<Minimum> best;
  std::vector<int> best_ranks;
  for (std::uint32_t mask = 0; mask < (1U << count); ++mask) {
    const int size = std::popcount(mask);
    if (best && size > best->size) continue;
    std::vector<bool> seeds(static_cast<std::size_t>(b.m * b.n), false);
    std::vector<int> ranks;
    for (int p = 0; p < count; ++p) {
      if (mask >> p & 1U) {
        seeds[b.id(residual[p].i, residual[p].j)] = true;
        ranks.push_back(p);
      }
    }
    if (!percolates(b, seeds, r)) continue;
    if (!best || size < best->size || ranks < best_ranks) {
      Minimum found{size, {}};
      for (const int p : ranks) found.witness.push_back(residual[p]);
      best = found;
      best_ranks = ranks;
    }
  }
  return best.value_or(Minimum{});
}

/// Perimeter by counting square sides that do not touch another square.
inline long exposed_sides(const std::vector<std::pair<int, int>>& cells) {
  long sides = 0;
  for (const auto& [x, y] : cells) {
    const std::pair<int, int> around[] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
    for (const auto& nb : around) {
      bool shared = false;
      for (const auto& c : cells) shared = shared || c == nb;
      sides += !shared;
    }
  }
  return sides;
}

/// Random polluted instance plus disjoint random seeds (hand-rolled generator).
struct Sample {
  pbp::PollutedInstance instance;
  pbp::CellSet seeds;
};

inline Sample random_sample(std::mt19937_64& rng, int max_m, int max_n, bool allow_torus) {
  const bool torus = allow_torus && (rng() % 3 == 0);
  const int lo = torus ? 3 : 1;
  const int m = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(max_m - lo + 1));
  const int n = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - lo + 1));
  const pbp::GridSpec spec(m, n, torus ? pbp::Topology::torus : pbp::Topology::grid);
  pbp::CellSet polluted(spec);
  pbp::CellSet seeds(spec);
  const auto pollute_pct = rng() % 40;
  const auto seed_pct = 5 + rng() % 40;
  for (std::size_t idx = 0; idx < spec.vertex_count(); ++idx) {
    const auto roll = rng() % 100;
    if (roll < pollute_pct) {
      polluted.set(idx);
    } else if (roll < pollute_pct + seed_pct) {
      seeds.set(idx);
    }
  }
  return {pbp::PollutedInstance(spec, polluted), seeds};
}

}  // namespace oracle
