#include "pbp/constructions.hpp"

#include <string>
#include <vector>

#include "pbp/engine.hpp"
#include "pbp/error.hpp"
#include "pbp/formulas.hpp"
#include "pbp/perimeter.hpp"

namespace pbp {

namespace {

std::string dims(int m, int n, int k) {
  return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
}

void require_order(int m, int n, int k) {
  if (n < 2 || n > m) throw Error(ErrorKind::parameter, "need 2 <= n <= m, got " + dims(m, n, k));
  if (k < 0 || static_cast<std::int64_t>(k) > static_cast<std::int64_t>(m) * n) {
    throw Error(ErrorKind::parameter, "need 0 <= k <= mn, got " + dims(m, n, k));
  }
}

void require_small_k(int m, int n, int k) {
  require_order(m, n, k);
  if (k < 1 || k > (m - n) * n) throw Error(ErrorKind::parameter, "need 1 <= k <= (m-n)n, got " + dims(m, n, k));
}

// Column 1 from (1, top) down to (1, 1), then row 1 out to (last, 1).
std::vector<Vertex> corner_path(int top, int last) {
  std::vector<Vertex> path;
  for (int j = top; j >= 1; --j) path.push_back({1, j});
  for (int i = 2; i <= last; ++i) path.push_back({i, 1});
  return path;
}

void add_blacks(CellSet& seeds, const std::vector<Vertex>& path) {
  for (std::size_t p = 0; p < path.size(); p += 2) seeds.insert(path[p]);
}

// Small-k pieces with k = 0 admitted (no pollution, l = 0).
CellSet small_pollution(int m, int n, int k) {
  const GridSpec spec(m, n);
  CellSet polluted(spec);
  const int l = k / n;
  for (int i = m - l + 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) polluted.insert({i, j});
  }
  for (int d = 0; d < k - l * n; ++d) polluted.insert({m - l, n - d});
  return polluted;
}

CellSet small_seeds(int m, int n, int k) {
  const GridSpec spec(m, n);
  const int l = k / n;
  CellSet seeds(spec);
  add_blacks(seeds, corner_path(n, m - l));
  if ((m + n - l) % 2 != 0) seeds.insert({m - l, 1});
  return seeds;
}

}  // namespace

CellSet pollution_small_k(int m, int n, int k) {
  require_small_k(m, n, k);
  return small_pollution(m, n, k);
}

CellSet seeds_small_k(int m, int n, int k) {
  require_small_k(m, n, k);
  return small_seeds(m, n, k);
}

ExtremalWitness extremal_large_k(int m, int n, int k) {
  require_order(m, n, k);
  if (k < (m - n) * n) throw Error(ErrorKind::parameter, "need k >= (m-n)n, got " + dims(m, n, k));

  const GridSpec spec(m, n);
  const std::int64_t t = static_cast<std::int64_t>(m) * n - k;
  const auto x = static_cast<int>(isqrt(t));
  const auto o = static_cast<int>(t - static_cast<std::int64_t>(x) * x);

  CellSet keep(spec);
  CellSet seeds(spec);
  if (t > 0) {
    for (int i = 1; i <= x; ++i) {
      for (int j = 1; j <= x; ++j) keep.insert({i, j});
    }
    if (o == 0) {
      add_blacks(seeds, corner_path(x, x));
    } else if (o <= x) {
      for (int i = 1; i <= o; ++i) keep.insert({i, x + 1});
      add_blacks(seeds, corner_path(x + 1, x));
      seeds.insert({x, 1});
    } else {
      for (int i = 1; i <= x; ++i) keep.insert({i, x + 1});
      for (int j = 1; j <= o - x; ++j) keep.insert({x + 1, j});
      add_blacks(seeds, corner_path(x + 1, x + 1));
    }
  }
  const auto claimed = static_cast<std::int64_t>(seeds.size());
  return ExtremalWitness{PollutedInstance(spec, keep.complement()), std::move(seeds), claimed};
}

ExtremalWitness construct_extremal(int m, int n, int k) {
  require_order(m, n, k);
  ExtremalWitness witness = k <= (m - n) * n
                                ? ExtremalWitness{PollutedInstance(GridSpec(m, n), small_pollution(m, n, k)),
                                                  small_seeds(m, n, k), 0}
                                : extremal_large_k(m, n, k);
  witness.claimed_size = static_cast<std::int64_t>(witness.seeds.size());

  const std::int64_t expected = mkmin(m, n, k);
  if (witness.instance.k() != static_cast<std::size_t>(k) || witness.claimed_size != expected ||
      witness.seeds.intersects(witness.instance.polluted()) || !is_percolating(witness.instance, witness.seeds, 2)) {
    throw Error(ErrorKind::internal, "extremal construction failed its own check for " + dims(m, n, k));
  }
  return witness;
}

CellSet pollution_max_independent(int m, int n, int k) {
  if (m < 3 || n < 3) throw Error(ErrorKind::parameter, "need m, n >= 3, got " + dims(m, n, k));
  const std::int64_t cap = max_independent_interior(m, n);
  if (k < 1) throw Error(ErrorKind::parameter, "need k >= 1, got " + dims(m, n, k));
  if (k > cap) {
    throw Error(ErrorKind::out_of_hypothesis,
                "only " + std::to_string(cap) + " independent degree-4 vertices exist for " + dims(m, n, k));
  }
  const GridSpec spec(m, n);
  CellSet out(spec);
  int taken = 0;
  for (int j = 2; j <= n - 1 && taken < k; ++j) {
    for (int i = 2; i <= m - 1 && taken < k; ++i) {
      if ((i + j) % 2 == 0) {
        out.insert({i, j});
        ++taken;
      }
    }
  }
  return out;
}

}  // namespace pbp
