#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pbp {

enum class Topology { grid, torus };

const char* to_string(Topology topology) noexcept;

/// A grid vertex. `i` is the column in [1, m], `j` the row in [1, n].
struct Vertex {
  int i = 1;
  int j = 1;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

std::string to_string(Vertex v);

/// Host graph P_m x P_n (grid) or C_m x C_n (torus).
///
/// Vertices are numbered by a canonical index: rows from the top (j = n)
/// down, columns left to right within a row. That order is the iteration
/// order of every CellSet and the order used for lexicographic comparisons.
class GridSpec {
 public:
  /// Throws Error(parameter) unless m, n >= 1; tori additionally need m, n >= 3.
  GridSpec(int m, int n, Topology topology = Topology::grid);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  Topology topology() const noexcept { return topology_; }
  bool is_torus() const noexcept { return topology_ == Topology::torus; }
  std::size_t vertex_count() const noexcept { return static_cast<std::size_t>(m_) * n_; }

  bool contains(Vertex v) const noexcept { return v.i >= 1 && v.i <= m_ && v.j >= 1 && v.j <= n_; }

  /// Throws Error(invalid_vertex) when v is out of bounds.
  std::size_t index_of(Vertex v) const;
  Vertex vertex_at(std::size_t index) const noexcept {
    const auto row = static_cast<int>(index / static_cast<std::size_t>(m_));
    return Vertex{static_cast<int>(index % static_cast<std::size_t>(m_)) + 1, n_ - row};
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  int m_;
  int n_;
  Topology topology_;
};

/// Neighbours of v in the order up, down, left, right (wrap applied on tori).
/// Throws Error(invalid_vertex) when v is out of bounds.
std::vector<Vertex> neighbors(const GridSpec& spec, Vertex v);

/// Index-based adjacency for hot loops: up to four neighbour indices per
/// vertex, same order as neighbors().
class Adjacency {
 public:
  explicit Adjacency(const GridSpec& spec);

  std::span<const std::uint32_t> of(std::size_t index) const noexcept {
    return {slots_.data() + 4 * index, degree_[index]};
  }

 private:
  std::vector<std::uint32_t> slots_;
  std::vector<std::uint8_t> degree_;
};

/// Subset of the vertices of one GridSpec, stored as a dense membership mask.
class CellSet {
 public:
  explicit CellSet(const GridSpec& spec);
  CellSet(const GridSpec& spec, std::initializer_list<Vertex> vertices);
  CellSet(const GridSpec& spec, std::span<const Vertex> vertices);

  static CellSet full(const GridSpec& spec);

  const GridSpec& spec() const noexcept { return spec_; }

  bool contains(Vertex v) const { return mask_[spec_.index_of(v)] != 0; }
  bool test(std::size_t index) const noexcept { return mask_[index] != 0; }

  void insert(Vertex v) { set(spec_.index_of(v)); }
  void erase(Vertex v) { reset(spec_.index_of(v)); }
  void set(std::size_t index) noexcept {
    count_ += mask_[index] == 0;
    mask_[index] = 1;
  }
  void reset(std::size_t index) noexcept {
    count_ -= mask_[index] != 0;
    mask_[index] = 0;
  }

  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  /// Members in canonical order.
  std::vector<Vertex> vertices() const;
  std::vector<std::size_t> indices() const;

  bool is_subset_of(const CellSet& other) const;
  bool intersects(const CellSet& other) const;

  CellSet& operator|=(const CellSet& other);
  CellSet& operator&=(const CellSet& other);
  CellSet& operator-=(const CellSet& other);
  friend CellSet operator|(CellSet a, const CellSet& b) { return a |= b; }
  friend CellSet operator&(CellSet a, const CellSet& b) { return a &= b; }
  friend CellSet operator-(CellSet a, const CellSet& b) { return a -= b; }
  CellSet complement() const;

  friend bool operator==(const CellSet&, const CellSet&) = default;

 private:
  void require_same_spec(const CellSet& other) const;

  GridSpec spec_;
  std::vector<std::uint8_t> mask_;
  std::size_t count_ = 0;
};

/// A host graph with a polluted set A; percolation runs on the residual G - A.
class PollutedInstance {
 public:
  explicit PollutedInstance(const GridSpec& spec);
  PollutedInstance(const GridSpec& spec, CellSet polluted);

  const GridSpec& spec() const noexcept { return spec_; }
  const CellSet& polluted() const noexcept { return polluted_; }
  CellSet residual() const { return polluted_.complement(); }
  std::size_t k() const noexcept { return polluted_.size(); }
  std::size_t residual_count() const noexcept { return spec_.vertex_count() - polluted_.size(); }

  friend bool operator==(const PollutedInstance&, const PollutedInstance&) = default;

 private:
  GridSpec spec_;
  CellSet polluted_;
};

/// Minimum degree of the residual graph. Throws Error(empty_graph) when every
/// vertex is polluted.
int min_degree(const PollutedInstance& instance);

/// Residual degree of every vertex, indexed canonically; polluted vertices get 0.
std::vector<int> residual_degrees(const PollutedInstance& instance);

/// A parsed `pgrid v1` document.
struct InstanceDocument {
  PollutedInstance instance;
  CellSet seeds;

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

/// Throws ParseError with a line and column on malformed input.
InstanceDocument parse_instance(std::string_view text);

/// Canonical `pgrid v1` serialisation. Throws Error(invariant) if a seed is
/// polluted.
std::string write_instance(const PollutedInstance& instance, const CellSet& seeds);

}  // namespace pbp
