#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pbp/grid.hpp"

namespace pbp {

/// A unit lattice square at integer coordinates (x, y).
struct Cell {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Finite set of unit squares in the plane, not tied to any grid.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<Cell> cells);  // duplicates are merged

  /// Residual (or any) cells of a grid, vertex (i, j) -> square (i, j).
  static Shape from_cells(const CellSet& cells);

  std::span<const Cell> cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }
  bool contains(Cell c) const noexcept;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<Cell> cells_;  // sorted, unique
};

struct BoundingBox {
  int a = 0;  // width
  int b = 0;  // height
};

BoundingBox bounding_box(const Shape& shape);

/// Unordered pairs of cells sharing an edge.
std::int64_t shared_edge_count(const Shape& shape);

/// 4 * |cells| - 2 * shared edges; 0 for the empty shape.
std::int64_t shape_perimeter(const Shape& shape);

/// Largest x with x * x <= t (t >= 0).
std::int64_t isqrt(std::int64_t t);

/// Least perimeter of any t-square shape: with x = isqrt(t), r = t - x^2 it
/// is 4x, 4x + 2 or 4x + 4 for r = 0, 0 < r <= x, x < r <= 2x.
/// Throws Error(parameter) for t <= 0.
std::int64_t min_perimeter(std::int64_t t);

/// Least perimeter of a t-square shape of height at most x, for t >= x^2:
/// with y = t / x and r = t % x it is 2x + 2y, plus 2 when r > 0.
/// Throws Error(parameter) for x < 1 and Error(out_of_hypothesis) for t < x^2.
std::int64_t min_perimeter_height_bounded(std::int64_t t, std::int64_t x);

/// A shape attaining min_perimeter(t): an x-by-x square, then a partial row on
/// top, then a partial column on the right.
Shape min_perimeter_witness(std::int64_t t);

/// ceil(perimeter(residual) / 4): every seed square adds at most 4 to the
/// infected perimeter and 2-neighbour infection never increases it, so this
/// lower-bounds m(G - A, 2). Throws Error(unsupported_topology) on a torus.
std::int64_t perimeter_lower_bound(const PollutedInstance& instance);

}  // namespace pbp
