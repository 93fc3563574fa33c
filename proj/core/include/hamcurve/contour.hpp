#pragma once

#include <array>
#include <functional>
#include <vector>

namespace hamcurve {

using Point2 = std::array<double, 2>;

/// Ordered (horizontal, vertical) points. An isolated point is a single
/// point with `isolated` set.
struct Polyline {
  std::vector<Point2> points;
  int branch_id = 0;
  bool isolated = false;
};

struct Window {
  double h_min = 0, h_max = 1, v_min = 0, v_max = 1;

  bool degenerate() const { return !(h_max > h_min) || !(v_max > v_min); }
};

/// n x n cells over a window; vertex (i, j) sits at (h(i), v(j)), 0 <= i, j <= n.
struct Grid {
  int n = 16;
  Window window;

  double h(int i) const { return i == n ? window.h_max : window.h_min + (window.h_max - window.h_min) * i / n; }
  double v(int j) const { return j == n ? window.v_max : window.v_min + (window.v_max - window.v_min) * j / n; }
  std::size_t vertex(int i, int j) const { return static_cast<std::size_t>(j) * (n + 1) + i; }

  // Edge ids: horizontal (i,j)-(i+1,j) is j*n + i; vertical (i,j)-(i,j+1)
  // is H + j*(n+1) + i with H = n*(n+1).
  int horizontal_edges() const { return n * (n + 1); }
  int edge_count() const { return 2 * n * (n + 1); }
  int horizontal_edge(int i, int j) const { return j * n + i; }
  int vertical_edge(int i, int j) const { return horizontal_edges() + j * (n + 1) + i; }
};

/// Position of the zero crossing on an edge (edge id, endpoints' grid
/// indices: for a horizontal edge (i, j)-(i+1, j), for a vertical one
/// (i, j)-(i, j+1)).
using EdgeLocator = std::function<Point2(int edge, int i, int j, bool horizontal)>;

/// Zero contour of sampled values (size (n+1)^2, index grid.vertex(i, j)).
/// Values >= 0 count as positive. Saddle cells are resolved by the sign of
/// the mean of the four corners. Without a locator, crossings are placed by
/// linear interpolation. Open polylines come first (from the lowest free
/// endpoint edge id), then closed loops (first point repeated at the end).
/// The locator runs once per crossed edge, on up to `workers` threads.
std::vector<Polyline> marching_squares(const Grid& grid, const std::vector<double>& values,
                                       const EdgeLocator& locate = {}, unsigned workers = 1);

}  // namespace hamcurve
