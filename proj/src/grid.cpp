#include "pbp/grid.hpp"

#include <algorithm>
#include <limits>

#include "pbp/error.hpp"

namespace pbp {

const char* to_string(Topology topology) noexcept { return topology == Topology::torus ? "torus" : "grid"; }

std::string to_string(Vertex v) { return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")"; }

GridSpec::GridSpec(int m, int n, Topology topology) : m_(m), n_(n), topology_(topology) {
  if (m < 1 || n < 1) {
    throw Error(ErrorKind::parameter, "grid dimensions must be positive, got m=" + std::to_string(m) +
                                          " n=" + std::to_string(n));
  }
  if (topology == Topology::torus && (m < 3 || n < 3)) {
    throw Error(ErrorKind::parameter, "torus needs m, n >= 3, got m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
  if (static_cast<long long>(m) * n > std::numeric_limits<std::uint32_t>::max() / 4) {
    throw Error(ErrorKind::parameter, "grid too large");
  }
}

std::size_t GridSpec::index_of(Vertex v) const {
  if (!contains(v)) {
    throw Error(ErrorKind::invalid_vertex, "vertex " + to_string(v) + " outside " + std::to_string(m_) + "x" +
                                               std::to_string(n_) + " " + pbp::to_string(topology_));
  }
  return static_cast<std::size_t>(n_ - v.j) * m_ + static_cast<std::size_t>(v.i - 1);
}

namespace {

template <typename Fn>
void visit_neighbors(const GridSpec& spec, Vertex v, Fn&& fn) {
  const int m = spec.m();
  const int n = spec.n();
  if (spec.is_torus()) {
    fn(Vertex{v.i, v.j == n ? 1 : v.j + 1});
    fn(Vertex{v.i, v.j == 1 ? n : v.j - 1});
    fn(Vertex{v.i == 1 ? m : v.i - 1, v.j});
    fn(Vertex{v.i == m ? 1 : v.i + 1, v.j});
    return;
  }
  if (v.j < n) fn(Vertex{v.i, v.j + 1});
  if (v.j > 1) fn(Vertex{v.i, v.j - 1});
  if (v.i > 1) fn(Vertex{v.i - 1, v.j});
  if (v.i < m) fn(Vertex{v.i + 1, v.j});
}

}  // namespace

std::vector<Vertex> neighbors(const GridSpec& spec, Vertex v) {
  (void)spec.index_of(v);
  std::vector<Vertex> out;
  out.reserve(4);
  visit_neighbors(spec, v, [&](Vertex u) { out.push_back(u); });
  return out;
}

Adjacency::Adjacency(const GridSpec& spec) : slots_(4 * spec.vertex_count()), degree_(spec.vertex_count()) {
  for (std::size_t idx = 0; idx < spec.vertex_count(); ++idx) {
    std::uint8_t d = 0;
    visit_neighbors(spec, spec.vertex_at(idx),
                    [&](Vertex u) { slots_[4 * idx + d++] = static_cast<std::uint32_t>(spec.index_of(u)); });
    degree_[idx] = d;
  }
}

CellSet::CellSet(const GridSpec& spec) : spec_(spec), mask_(spec.vertex_count(), 0) {}

CellSet::CellSet(const GridSpec& spec, std::initializer_list<Vertex> vertices)
    : CellSet(spec, std::span<const Vertex>(vertices.begin(), vertices.size())) {}

CellSet::CellSet(const GridSpec& spec, std::span<const Vertex> vertices) : CellSet(spec) {
  for (const Vertex& v : vertices) insert(v);
}

CellSet CellSet::full(const GridSpec& spec) {
  CellSet s(spec);
  std::fill(s.mask_.begin(), s.mask_.end(), std::uint8_t{1});
  s.count_ = s.mask_.size();
  return s;
}

std::vector<Vertex> CellSet::vertices() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (std::size_t idx = 0; idx < mask_.size(); ++idx) {
    if (mask_[idx]) out.push_back(spec_.vertex_at(idx));
  }
  return out;
}

std::vector<std::size_t> CellSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count_);
  for (std::size_t idx = 0; idx < mask_.size(); ++idx) {
    if (mask_[idx]) out.push_back(idx);
  }
  return out;
}

void CellSet::require_same_spec(const CellSet& other) const {
  if (!(spec_ == other.spec_)) throw Error(ErrorKind::invariant, "cell sets belong to different grids");
}

bool CellSet::is_subset_of(const CellSet& other) const {
  require_same_spec(other);
  for (std::size_t idx = 0; idx < mask_.size(); ++idx) {
    if (mask_[idx] && !other.mask_[idx]) return false;
  }
  return true;
}

bool CellSet::intersects(const CellSet& other) const {
  require_same_spec(other);
  for (std::size_t idx = 0; idx < mask_.size(); ++idx) {
    if (mask_[idx] && other.mask_[idx]) return true;
  }
  return false;
}

CellSet& CellSet::operator|=(const CellSet& other) {
  require_same_spec(other);
  for (std::size_t idx = 0; idx < mask_.size(); ++idx) {
    if (other.mask_[idx]) set(idx);
  }
  return *this;
}

CellSet& CellSet::operator&=(const CellSet& other) {
  require_same_spec(other);
  for (std::size_t idx = 0; idx < mask_.size(); ++idx) {
    if (!other.mask_[idx]) reset(idx);
  }
  return *this;
}

CellSet& CellSet::operator-=(const CellSet& other) {
  require_same_spec(other);
  for (std::size_t idx = 0; idx < mask_.size(); ++idx) {
    if (other.mask_[idx]) reset(idx);
  }
  return *this;
}

CellSet CellSet::complement() const {
  CellSet out(spec_);
  for (std::size_t idx = 0; idx < mask_.size(); ++idx) {
    if (!mask_[idx]) out.set(idx);
  }
  return out;
}

PollutedInstance::PollutedInstance(const GridSpec& spec) : spec_(spec), polluted_(spec) {}

PollutedInstance::PollutedInstance(const GridSpec& spec, CellSet polluted)
    : spec_(spec), polluted_(std::move(polluted)) {
  if (!(polluted_.spec() == spec_)) throw Error(ErrorKind::invariant, "polluted set belongs to a different grid");
}

std::vector<int> residual_degrees(const PollutedInstance& instance) {
  const GridSpec& spec = instance.spec();
  const CellSet& polluted = instance.polluted();
  const Adjacency adj(spec);
  std::vector<int> degree(spec.vertex_count(), 0);
  for (std::size_t idx = 0; idx < degree.size(); ++idx) {
    if (polluted.test(idx)) continue;
    for (const auto u : adj.of(idx)) degree[idx] += !polluted.test(u);
  }
  return degree;
}

int min_degree(const PollutedInstance& instance) {
  if (instance.residual_count() == 0) throw Error(ErrorKind::empty_graph, "every vertex is polluted");
  const auto degree = residual_degrees(instance);
  int best = 4;
  for (std::size_t idx = 0; idx < degree.size(); ++idx) {
    if (!instance.polluted().test(idx)) best = std::min(best, degree[idx]);
  }
  return best;
}

}  // namespace pbp
