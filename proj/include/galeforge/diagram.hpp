#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "galeforge/geometry.hpp"

namespace galeforge {

enum class Color { Black, White };

struct DiagramPoint {
  std::string label;
  Color color;
  Point2 position;
};

using VertexSubset = std::set<std::string>;

// A labeled colored point set in the plane: the affine Gale diagram of a
// configuration of 2d+4 points in R^{2d}. Immutable after construction.
class Diagram {
 public:
  // Validates: exactly 2d+4 points; unique nonempty labels; points affinely
  // span the plane. black_cycle may be empty; when given it must list every
  // black label once, the blacks must be in convex position, and the order
  // must be their clockwise hull order.
  Diagram(int d, std::vector<DiagramPoint> points, std::vector<std::string> black_cycle);

  int d() const { return d_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<DiagramPoint>& points() const { return points_; }
  const std::vector<std::string>& black_cycle() const { return black_cycle_; }

  bool has_label(const std::string& label) const;
  const DiagramPoint& point(const std::string& label) const;  // throws on unknown label

  std::vector<std::string> labels() const;
  std::vector<std::string> black_labels() const;
  std::vector<std::string> white_labels() const;
  VertexSubset label_set() const;

  // Positions of the cycle's blacks, in cycle order.
  std::vector<Point2> black_cycle_positions() const;

 private:
  int d_;
  std::vector<DiagramPoint> points_;
  std::vector<std::string> black_cycle_;
};

// relint(Conv(blacks of M)) meets relint(Conv(whites of M)).
bool bw_property(const Diagram& x, const VertexSubset& m);

// Face criterion: M* is the vertex set of a face of X* iff X\M has the
// black-white property. Requires 1 <= |M| <= 2d.
bool is_face(const Diagram& x, const VertexSubset& m);

// For every point A of X, bw_property(X, X \ {A}).
bool is_polytope_diagram(const Diagram& x);

// Every d-element subset is a face. Requires d >= 1.
bool is_neighborly_diagram(const Diagram& x);

// General position; exactly d+3 blacks in convex position; no white outside
// the black hull; every black triangle contains exactly one white strictly
// inside. Valid for any d >= 0.
bool is_t_diagram(const Diagram& x);

// is_t_diagram and d >= 2 and is_polytope_diagram and is_neighborly_diagram.
bool is_T_diagram(const Diagram& x);

// Removes a black point and its corresponding white; decrements d and drops
// the black from the cycle. Requires a t-diagram with more than 4 points and
// that the white lies strictly inside the black's boundary triangle.
Diagram remove_pair(const Diagram& x, const std::string& black, const std::string& white);

// Clockwise hull order of the black points, from the stored cycle or computed
// on demand; throws when the blacks are not in convex position.
std::vector<std::string> black_cycle_or_compute(const Diagram& x);

// The unique white strictly inside the boundary triangle A_{i-1} A_i A_{i+1};
// requires a diagram with a black cycle.
std::string corresponding_white(const Diagram& x, const std::string& black);

// All blacks whose boundary triangle strictly contains the white (at most two
// for t-diagrams with d > 0), in cycle order.
std::vector<std::string> corresponding_blacks(const Diagram& x, const std::string& white);

// The white lies in the boundary triangles of both endpoints of the side
// A_i A_{i+1}.
bool white_adjacent_to_side(const Diagram& x, const std::string& a_i, const std::string& a_next,
                            const std::string& white);

// JSON document:
// {"d": n, "points": [{"label","color","x","y"}...], "black_cycle": [...]}
std::string diagram_to_json(const Diagram& x);
Diagram diagram_from_json(std::string_view text);

}  // namespace galeforge
