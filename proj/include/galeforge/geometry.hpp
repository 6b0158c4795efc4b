#pragma once

#include <optional>
#include <span>
#include <vector>

#include "galeforge/rational.hpp"

namespace galeforge {

enum class Orientation { CounterClockwise, Clockwise, Collinear };

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend auto operator<=>(const Point2&, const Point2&) = default;
};

// Sign of det(q - p, r - p): positive -> CounterClockwise, negative ->
// Clockwise, zero -> Collinear. Flips under any transposition of arguments.
Orientation orient(const Point2& p, const Point2& q, const Point2& r);

// Strict interior membership; throws when a, b, c are collinear.
bool point_in_triangle_strict(const Point2& p, const Point2& a, const Point2& b, const Point2& c);

// Pairwise distinct and no three collinear.
bool general_position(std::span<const Point2> points);

// If every point is a vertex of the convex hull, their indices in clockwise
// hull order (consecutive triples orient Clockwise), rotated to start at the
// smallest index; nullopt otherwise. Throws for fewer than 3 points.
std::optional<std::vector<std::size_t>> convex_position_cyclic(std::span<const Point2> points);

// relint(Conv s1) intersects relint(Conv s2)? Decided exactly by strict
// feasibility of the convex-combination system. relint of the empty set is
// empty; relint of a single point is that point.
bool relint_intersect(const std::vector<Point2>& s1, const std::vector<Point2>& s2);

// Strict interior membership in the convex polygon given by vertices in
// clockwise order (no validity check on the polygon itself).
bool point_in_convex_polygon_strict(const Point2& p, const std::vector<Point2>& clockwise);

}  // namespace galeforge
