#include "pbp/engine.hpp"

#include "pbp/error.hpp"
#include "pbp/simd/board.hpp"

namespace pbp {

namespace {

void check_inputs(const PollutedInstance& instance, const CellSet& seeds, int r) {
  if (r < 1) throw Error(ErrorKind::parameter, "threshold r must be >= 1, got " + std::to_string(r));
  if (!(seeds.spec() == instance.spec())) throw Error(ErrorKind::invariant, "seed set belongs to a different grid");
  if (seeds.intersects(instance.polluted())) throw Error(ErrorKind::invariant, "seed placed on a polluted vertex");
}

// Counter-based closure; `on_round` receives each nonempty round after the seeds.
template <typename OnRound>
CellSet run_counters(const PollutedInstance& instance, const CellSet& seeds, int r, OnRound&& on_round) {
  const GridSpec& spec = instance.spec();
  const CellSet& polluted = instance.polluted();
  const Adjacency adj(spec);
  std::vector<std::uint8_t> hits(spec.vertex_count(), 0);
  CellSet infected = seeds;

  std::vector<std::size_t> frontier = seeds.indices();
  std::vector<std::size_t> next;
  while (!frontier.empty()) {
    next.clear();
    for (const auto v : frontier) {
      for (const auto u : adj.of(v)) {
        if (polluted.test(u) || infected.test(u)) continue;
        if (++hits[u] == r) next.push_back(u);
      }
    }
    if (next.empty()) break;
    for (const auto u : next) infected.set(u);
    on_round(next);
    frontier.swap(next);
  }
  return infected;
}

}  // namespace

PercolationTrace percolate(const PollutedInstance& instance, const CellSet& seeds, int r) {
  check_inputs(instance, seeds, r);
  PercolationTrace trace{{seeds}, CellSet(instance.spec()), false, 0};
  trace.final_set = run_counters(instance, seeds, r, [&](const std::vector<std::size_t>& fresh) {
    CellSet round(instance.spec());
    for (const auto u : fresh) round.set(u);
    trace.rounds.push_back(std::move(round));
  });
  trace.round_count = static_cast<int>(trace.rounds.size()) - 1;
  trace.percolated = trace.final_set.size() == instance.residual_count();
  return trace;
}

CellSet closure(const PollutedInstance& instance, const CellSet& seeds, int r) {
  check_inputs(instance, seeds, r);
  const GridSpec& spec = instance.spec();
  if (simd::fits_board(spec)) {
    const auto allowed = simd::to_rows(instance.residual());
    auto infected = simd::to_rows(seeds);
    simd::closure(simd::geometry_of(spec), allowed, infected, r);
    return simd::from_rows(spec, infected);
  }
  return run_counters(instance, seeds, r, [](const std::vector<std::size_t>&) {});
}

bool is_percolating(const PollutedInstance& instance, const CellSet& seeds, int r) {
  check_inputs(instance, seeds, r);
  const GridSpec& spec = instance.spec();
  if (simd::fits_board(spec)) {
    const auto allowed = simd::to_rows(instance.residual());
    auto infected = simd::to_rows(seeds);
    simd::closure(simd::geometry_of(spec), allowed, infected, r);
    return infected == allowed;
  }
  return run_counters(instance, seeds, r, [](const std::vector<std::size_t>&) {}).size() ==
         instance.residual_count();
}

}  // namespace pbp
