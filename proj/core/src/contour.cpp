#include "hamcurve/contour.hpp"

#include <stdexcept>

#include "hamcurve/parallel.hpp"

namespace hamcurve {

namespace {

struct Link {
  int a = -1, b = -1;

  void add(int e) {
    if (a < 0)
      a = e;
    else
      b = e;
  }
  int degree() const { return (a >= 0) + (b >= 0); }
  int other(int from) const { return a == from ? b : a; }
};

}  // namespace

std::vector<Polyline> marching_squares(const Grid& grid, const std::vector<double>& values, const EdgeLocator& locate,
                                       unsigned workers) {
  const int n = grid.n;
  if (n < 1) throw std::invalid_argument("marching_squares: empty grid");
  if (values.size() != static_cast<std::size_t>(n + 1) * (n + 1))
    throw std::invalid_argument("marching_squares: value count does not match grid");

  auto pos = [&](int i, int j) { return values[grid.vertex(i, j)] >= 0.0; };
  std::vector<Link> links(static_cast<std::size_t>(grid.edge_count()));
  auto connect = [&](int e1, int e2) {
    links[e1].add(e2);
    links[e2].add(e1);
  };

  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const bool s0 = pos(i, j), s1 = pos(i + 1, j), s2 = pos(i + 1, j + 1), s3 = pos(i, j + 1);
      const int bottom = grid.horizontal_edge(i, j), top = grid.horizontal_edge(i, j + 1);
      const int left = grid.vertical_edge(i, j), right = grid.vertical_edge(i + 1, j);
      int cut[4];
      int k = 0;
      if (s0 != s1) cut[k++] = bottom;
      if (s1 != s2) cut[k++] = right;
      if (s2 != s3) cut[k++] = top;
      if (s3 != s0) cut[k++] = left;
      if (k == 2) {
        connect(cut[0], cut[1]);
      } else if (k == 4) {
        const double mean = (values[grid.vertex(i, j)] + values[grid.vertex(i + 1, j)] +
                             values[grid.vertex(i + 1, j + 1)] + values[grid.vertex(i, j + 1)]) /
                            4.0;
        if ((mean >= 0.0) == s0) {
          // Corners 0 and 2 join through the centre; 1 and 3 are cut off.
          connect(bottom, right);
          connect(top, left);
        } else {
          connect(left, bottom);
          connect(right, top);
        }
      }
    }
  }

  std::vector<int> crossed;
  for (int e = 0; e < grid.edge_count(); ++e)
    if (links[e].degree() > 0) crossed.push_back(e);

  auto edge_ends = [&](int e, int& i, int& j) {
    const bool horizontal = e < grid.horizontal_edges();
    if (horizontal) {
      j = e / n;
      i = e % n;
    } else {
      const int r = e - grid.horizontal_edges();
      j = r / (n + 1);
      i = r % (n + 1);
    }
    return horizontal;
  };

  std::vector<Point2> point(static_cast<std::size_t>(grid.edge_count()));
  parallel_for(crossed.size(), workers, [&](std::size_t k) {
    const int e = crossed[k];
    int i = 0, j = 0;
    const bool horizontal = edge_ends(e, i, j);
    if (locate) {
      point[e] = locate(e, i, j, horizontal);
      return;
    }
    const int i2 = horizontal ? i + 1 : i, j2 = horizontal ? j : j + 1;
    const double fa = values[grid.vertex(i, j)], fb = values[grid.vertex(i2, j2)];
    const double s = fa == fb ? 0.5 : fa / (fa - fb);
    point[e] = {grid.h(i) + s * (grid.h(i2) - grid.h(i)), grid.v(j) + s * (grid.v(j2) - grid.v(j))};
  });

  std::vector<Polyline> out;
  std::vector<char> used(static_cast<std::size_t>(grid.edge_count()), 0);
  auto walk = [&](int start) {
    Polyline line;
    int prev = -1, cur = start;
    while (cur >= 0 && !used[cur]) {
      used[cur] = 1;
      line.points.push_back(point[cur]);
      const int next = prev < 0 ? links[cur].a : links[cur].other(prev);
      prev = cur;
      cur = next;
    }
    if (cur == start) line.points.push_back(point[start]);
    line.branch_id = static_cast<int>(out.size());
    out.push_back(std::move(line));
  };
  for (int e : crossed)
    if (!used[e] && links[e].degree() == 1) walk(e);
  for (int e : crossed)
    if (!used[e]) walk(e);
  return out;
}

}  // namespace hamcurve
