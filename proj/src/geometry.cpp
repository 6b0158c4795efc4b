#include "galeforge/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "galeforge/linalg.hpp"

namespace galeforge {

Orientation orient(const Point2& p, const Point2& q, const Point2& r) {
  const Rational d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  const int s = d.sign();
  if (s > 0) {
    return Orientation::CounterClockwise;
  }
  if (s < 0) {
    return Orientation::Clockwise;
  }
  return Orientation::Collinear;
}

bool point_in_triangle_strict(const Point2& p, const Point2& a, const Point2& b, const Point2& c) {
  const Orientation tri = orient(a, b, c);
  if (tri == Orientation::Collinear) {
    throw std::invalid_argument("point_in_triangle_strict: degenerate triangle");
  }
  return orient(a, b, p) == tri && orient(b, c, p) == tri && orient(c, a, p) == tri;
}

bool general_position(std::span<const Point2> points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) {
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orient(points[i], points[j], points[k]) == Orientation::Collinear) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> convex_position_cyclic(std::span<const Point2> points) {
  const std::size_t n = points.size();
  if (n < 3) {
    throw std::invalid_argument("convex_position_cyclic: need at least 3 points");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a] < points[b];
  });
  // Andrew's monotone chain with strict turns (counterclockwise hull).
  const auto build = [&](auto begin, auto end) {
    std::vector<std::size_t> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             orient(points[chain[chain.size() - 2]], points[chain.back()], points[*it]) !=
                 Orientation::CounterClockwise) {
        chain.pop_back();
      }
      chain.push_back(*it);
    }
    return chain;
  };
  auto lower = build(order.begin(), order.end());
  auto upper = build(order.rbegin(), order.rend());
  lower.pop_back();
  upper.pop_back();
  std::vector<std::size_t> hull = std::move(lower);
  hull.insert(hull.end(), upper.begin(), upper.end());
  if (hull.size() != n) {
    return std::nullopt;
  }
  std::reverse(hull.begin(), hull.end());  // clockwise
  const auto smallest = std::min_element(hull.begin(), hull.end());
  std::rotate(hull.begin(), smallest, hull.end());
  return hull;
}

bool relint_intersect(const std::vector<Point2>& s1, const std::vector<Point2>& s2) {
  if (s1.empty() || s2.empty()) {
    return false;
  }
  const std::size_t n1 = s1.size();
  const std::size_t n2 = s2.size();
  const std::size_t n = n1 + n2;
  // sum a_i s_i - sum b_j t_j = 0, sum a_i = 1, sum b_j = 1, all >= 0;
  // the relative interiors intersect iff a strictly positive solution exists.
  RMat a(4, RVec(n, Rational(0)));
  for (std::size_t i = 0; i < n1; ++i) {
    a[0][i] = s1[i].x;
    a[1][i] = s1[i].y;
    a[2][i] = Rational(1);
  }
  for (std::size_t j = 0; j < n2; ++j) {
    a[0][n1 + j] = -s2[j].x;
    a[1][n1 + j] = -s2[j].y;
    a[3][n1 + j] = Rational(1);
  }
  const RVec b = {Rational(0), Rational(0), Rational(1), Rational(1)};
  const auto point = relint_point(a, b, /*stop_when_positive=*/true);
  if (!point) {
    return false;
  }
  return std::all_of(point->begin(), point->end(), [](const Rational& v) { return v.sign() > 0; });
}

bool point_in_convex_polygon_strict(const Point2& p, const std::vector<Point2>& clockwise) {
  const std::size_t n = clockwise.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orient(clockwise[i], clockwise[(i + 1) % n], p) != Orientation::Clockwise) {
      return false;
    }
  }
  return true;
}

}  // namespace galeforge
