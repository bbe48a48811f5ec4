#include "pbp/perimeter.hpp"

#include <algorithm>
#include <limits>

#include "pbp/error.hpp"

namespace pbp {

Shape::Shape(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

Shape Shape::from_cells(const CellSet& cells) {
  std::vector<Cell> out;
  out.reserve(cells.size());
  for (const Vertex v : cells.vertices()) out.push_back({v.i, v.j});
  return Shape(std::move(out));
}

bool Shape::contains(Cell c) const noexcept { return std::binary_search(cells_.begin(), cells_.end(), c); }

BoundingBox bounding_box(const Shape& shape) {
  if (shape.empty()) return {};
  int x0 = std::numeric_limits<int>::max(), x1 = std::numeric_limits<int>::min();
  int y0 = x0, y1 = x1;
  for (const Cell c : shape.cells()) {
    x0 = std::min(x0, c.x);
    x1 = std::max(x1, c.x);
    y0 = std::min(y0, c.y);
    y1 = std::max(y1, c.y);
  }
  return {x1 - x0 + 1, y1 - y0 + 1};
}

std::int64_t shared_edge_count(const Shape& shape) {
  std::int64_t e = 0;
  for (const Cell c : shape.cells()) {
    e += shape.contains({c.x + 1, c.y});
    e += shape.contains({c.x, c.y + 1});
  }
  return e;
}

std::int64_t shape_perimeter(const Shape& shape) {
  return 4 * static_cast<std::int64_t>(shape.size()) - 2 * shared_edge_count(shape);
}

std::int64_t isqrt(std::int64_t t) {
  if (t < 0) throw Error(ErrorKind::parameter, "isqrt of a negative number");
  // Binary search on x with x * x <= t; the bound keeps x * x in range.
  std::int64_t lo = 0;
  std::int64_t hi = std::min<std::int64_t>(t, 3037000499) + 1;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (mid * mid <= t) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::int64_t min_perimeter(std::int64_t t) {
  if (t <= 0) throw Error(ErrorKind::parameter, "min_perimeter needs t >= 1, got " + std::to_string(t));
  const std::int64_t x = isqrt(t);
  const std::int64_t r = t - x * x;
  if (r == 0) return 4 * x;
  if (r <= x) return 4 * x + 2;
  return 4 * x + 4;
}

std::int64_t min_perimeter_height_bounded(std::int64_t t, std::int64_t x) {
  if (x < 1) throw Error(ErrorKind::parameter, "height bound x must be >= 1");
  if (t < x * x) {
    throw Error(ErrorKind::out_of_hypothesis,
                "height-bounded perimeter needs t >= x^2, got t=" + std::to_string(t) + " x=" + std::to_string(x));
  }
  const std::int64_t y = t / x;
  const std::int64_t r = t - x * y;
  return r == 0 ? 2 * x + 2 * y : 2 * x + 2 * y + 2;
}

Shape min_perimeter_witness(std::int64_t t) {
  if (t <= 0) throw Error(ErrorKind::parameter, "witness needs t >= 1");
  const auto x = static_cast<int>(isqrt(t));
  const auto r = static_cast<int>(t - static_cast<std::int64_t>(x) * x);
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(t));
  for (int i = 1; i <= x; ++i) {
    for (int j = 1; j <= x; ++j) cells.push_back({i, j});
  }
  for (int i = 1; i <= std::min(r, x); ++i) cells.push_back({i, x + 1});
  for (int j = 1; j <= r - x; ++j) cells.push_back({x + 1, j});
  return Shape(std::move(cells));
}

std::int64_t perimeter_lower_bound(const PollutedInstance& instance) {
  if (instance.spec().is_torus()) {
    throw Error(ErrorKind::unsupported_topology, "the perimeter bound needs a planar grid, not a torus");
  }
  const std::int64_t p = shape_perimeter(Shape::from_cells(instance.residual()));
  return (p + 3) / 4;
}

}  // namespace pbp
