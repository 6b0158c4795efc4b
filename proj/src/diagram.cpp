#include "galeforge/diagram.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "galeforge/subsets.hpp"

namespace galeforge {

Diagram::Diagram(int d, std::vector<DiagramPoint> points, std::vector<std::string> black_cycle)
    : d_(d), points_(std::move(points)), black_cycle_(std::move(black_cycle)) {
  if (d_ < 0) {
    throw std::invalid_argument("Diagram: d must be nonnegative");
  }
  if (points_.size() != static_cast<std::size_t>(2 * d_ + 4)) {
    throw std::invalid_argument("Diagram: expected " + std::to_string(2 * d_ + 4) +
                                " points, got " + std::to_string(points_.size()));
  }
  std::set<std::string> seen;
  for (const auto& p : points_) {
    if (p.label.empty()) {
      throw std::invalid_argument("Diagram: empty label");
    }
    if (!seen.insert(p.label).second) {
      throw std::invalid_argument("Diagram: duplicate label '" + p.label + "'");
    }
  }
  // Affine span of the plane: some triple not collinear.
  bool spans = false;
  for (std::size_t i = 0; i < points_.size() && !spans; ++i) {
    for (std::size_t j = i + 1; j < points_.size() && !spans; ++j) {
      for (std::size_t k = j + 1; k < points_.size() && !spans; ++k) {
        spans = orient(points_[i].position, points_[j].position, points_[k].position) !=
                Orientation::Collinear;
      }
    }
  }
  if (!spans) {
    throw std::invalid_argument("Diagram: points do not affinely span the plane");
  }
  if (!black_cycle_.empty()) {
    std::vector<std::string> blacks = black_labels();
    std::set<std::string> cycle_set(black_cycle_.begin(), black_cycle_.end());
    if (cycle_set.size() != black_cycle_.size() ||
        cycle_set != std::set<std::string>(blacks.begin(), blacks.end())) {
      throw std::invalid_argument("Diagram: black_cycle must list every black label once");
    }
    std::vector<Point2> positions;
    positions.reserve(black_cycle_.size());
    for (const auto& label : black_cycle_) {
      positions.push_back(point(label).position);
    }
    const auto hull = convex_position_cyclic(positions);
    if (!hull) {
      throw std::invalid_argument("Diagram: black_cycle given but blacks not in convex position");
    }
    // hull indices are positions within black_cycle_; clockwise consistency
    // means they read 0, 1, 2, ... up to rotation.
    const std::size_t n = hull->size();
    const std::size_t start = (*hull)[0];
    for (std::size_t i = 0; i < n; ++i) {
      if ((*hull)[i] != (start + i) % n) {
        throw std::invalid_argument("Diagram: black_cycle is not the clockwise hull order");
      }
    }
  }
}

bool Diagram::has_label(const std::string& label) const {
  return std::any_of(points_.begin(), points_.end(),
                     [&](const DiagramPoint& p) { return p.label == label; });
}

const DiagramPoint& Diagram::point(const std::string& label) const {
  for (const auto& p : points_) {
    if (p.label == label) {
      return p;
    }
  }
  throw std::invalid_argument("Diagram: unknown label '" + label + "'");
}

std::vector<std::string> Diagram::labels() const {
  std::vector<std::string> out;
  out.reserve(points_.size());
  for (const auto& p : points_) {
    out.push_back(p.label);
  }
  return out;
}

std::vector<std::string> Diagram::black_labels() const {
  std::vector<std::string> out;
  for (const auto& p : points_) {
    if (p.color == Color::Black) {
      out.push_back(p.label);
    }
  }
  return out;
}

std::vector<std::string> Diagram::white_labels() const {
  std::vector<std::string> out;
  for (const auto& p : points_) {
    if (p.color == Color::White) {
      out.push_back(p.label);
    }
  }
  return out;
}

VertexSubset Diagram::label_set() const {
  VertexSubset out;
  for (const auto& p : points_) {
    out.insert(p.label);
  }
  return out;
}

std::vector<Point2> Diagram::black_cycle_positions() const {
  std::vector<Point2> out;
  out.reserve(black_cycle_.size());
  for (const auto& label : black_cycle_) {
    out.push_back(point(label).position);
  }
  return out;
}

bool bw_property(const Diagram& x, const VertexSubset& m) {
  std::vector<Point2> blacks;
  std::vector<Point2> whites;
  for (const auto& label : m) {
    const auto& p = x.point(label);
    (p.color == Color::Black ? blacks : whites).push_back(p.position);
  }
  return relint_intersect(blacks, whites);
}

bool is_face(const Diagram& x, const VertexSubset& m) {
  if (m.empty() || m.size() > static_cast<std::size_t>(2 * x.d())) {
    throw std::invalid_argument("is_face: |M| must be between 1 and 2d");
  }
  VertexSubset complement;
  for (const auto& p : x.points()) {
    if (m.count(p.label) == 0) {
      complement.insert(p.label);
    }
  }
  if (complement.size() + m.size() != x.size()) {
    throw std::invalid_argument("is_face: M contains labels outside the diagram");
  }
  return bw_property(x, complement);
}

bool is_polytope_diagram(const Diagram& x) {
  for (const auto& p : x.points()) {
    VertexSubset rest;
    for (const auto& q : x.points()) {
      if (q.label != p.label) {
        rest.insert(q.label);
      }
    }
    if (!bw_property(x, rest)) {
      return false;
    }
  }
  return true;
}

bool is_neighborly_diagram(const Diagram& x) {
  if (x.d() < 1) {
    throw std::invalid_argument("is_neighborly_diagram: requires d >= 1");
  }
  const auto labels = x.labels();
  bool neighborly = true;
  for_each_combination(labels.size(), static_cast<std::size_t>(x.d()),
                       [&](const std::vector<std::size_t>& idx) -> bool {
                         VertexSubset m;
                         for (const auto i : idx) {
                           m.insert(labels[i]);
                         }
                         neighborly = is_face(x, m);
                         return neighborly;
                       });
  return neighborly;
}

bool is_t_diagram(const Diagram& x) {
  std::vector<Point2> all;
  all.reserve(x.size());
  for (const auto& p : x.points()) {
    all.push_back(p.position);
  }
  if (!general_position(all)) {
    return false;
  }
  std::vector<Point2> blacks;
  std::vector<Point2> whites;
  for (const auto& p : x.points()) {
    (p.color == Color::Black ? blacks : whites).push_back(p.position);
  }
  if (blacks.size() != static_cast<std::size_t>(x.d() + 3)) {
    return false;
  }
  const auto hull = convex_position_cyclic(blacks);
  if (!hull) {
    return false;
  }
  std::vector<Point2> polygon;
  polygon.reserve(blacks.size());
  for (const auto i : *hull) {
    polygon.push_back(blacks[i]);
  }
  for (const auto& w : whites) {
    if (!point_in_convex_polygon_strict(w, polygon)) {
      return false;
    }
  }
  // Every black triangle holds exactly one white.
  for (std::size_t i = 0; i < blacks.size(); ++i) {
    for (std::size_t j = i + 1; j < blacks.size(); ++j) {
      for (std::size_t k = j + 1; k < blacks.size(); ++k) {
        int inside = 0;
        for (const auto& w : whites) {
          if (point_in_triangle_strict(w, blacks[i], blacks[j], blacks[k])) {
            ++inside;
          }
        }
        if (inside != 1) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_T_diagram(const Diagram& x) {
  return is_t_diagram(x) && x.d() >= 2 && is_polytope_diagram(x) && is_neighborly_diagram(x);
}

std::vector<std::string> black_cycle_or_compute(const Diagram& x) {
  if (!x.black_cycle().empty()) {
    return x.black_cycle();
  }
  const auto blacks = x.black_labels();
  std::vector<Point2> positions;
  positions.reserve(blacks.size());
  for (const auto& label : blacks) {
    positions.push_back(x.point(label).position);
  }
  const auto hull = convex_position_cyclic(positions);
  if (!hull) {
    throw std::invalid_argument("black cycle: blacks are not in convex position");
  }
  std::vector<std::string> cycle;
  cycle.reserve(hull->size());
  for (const auto i : *hull) {
    cycle.push_back(blacks[i]);
  }
  return cycle;
}

namespace {

std::size_t cycle_index(const std::vector<std::string>& cycle, const std::string& label) {
  const auto it = std::find(cycle.begin(), cycle.end(), label);
  if (it == cycle.end()) {
    throw std::invalid_argument("'" + label + "' is not a black point of the cycle");
  }
  return static_cast<std::size_t>(it - cycle.begin());
}

bool in_boundary_triangle(const Diagram& x, const std::vector<std::string>& cycle,
                          std::size_t i, const Point2& w) {
  const std::size_t n = cycle.size();
  const Point2& prev = x.point(cycle[(i + n - 1) % n]).position;
  const Point2& self = x.point(cycle[i]).position;
  const Point2& next = x.point(cycle[(i + 1) % n]).position;
  return point_in_triangle_strict(w, prev, self, next);
}

}  // namespace

std::string corresponding_white(const Diagram& x, const std::string& black) {
  const auto cycle = black_cycle_or_compute(x);
  const std::size_t i = cycle_index(cycle, black);
  std::vector<std::string> found;
  for (const auto& p : x.points()) {
    if (p.color == Color::White && in_boundary_triangle(x, cycle, i, p.position)) {
      found.push_back(p.label);
    }
  }
  if (found.size() != 1) {
    throw std::invalid_argument("corresponding_white: boundary triangle of '" + black + "' holds " +
                                std::to_string(found.size()) + " whites");
  }
  return found[0];
}

std::vector<std::string> corresponding_blacks(const Diagram& x, const std::string& white) {
  const auto& p = x.point(white);
  if (p.color != Color::White) {
    throw std::invalid_argument("corresponding_blacks: '" + white + "' is not white");
  }
  const auto cycle = black_cycle_or_compute(x);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (in_boundary_triangle(x, cycle, i, p.position)) {
      out.push_back(cycle[i]);
    }
  }
  return out;
}

bool white_adjacent_to_side(const Diagram& x, const std::string& a_i, const std::string& a_next,
                            const std::string& white) {
  const auto cycle = black_cycle_or_compute(x);
  const std::size_t i = cycle_index(cycle, a_i);
  if (cycle[(i + 1) % cycle.size()] != a_next) {
    throw std::invalid_argument("white_adjacent_to_side: '" + a_i + "' and '" + a_next +
                                "' are not consecutive");
  }
  const auto& w = x.point(white);
  if (w.color != Color::White) {
    throw std::invalid_argument("white_adjacent_to_side: '" + white + "' is not white");
  }
  return in_boundary_triangle(x, cycle, i, w.position) &&
         in_boundary_triangle(x, cycle, (i + 1) % cycle.size(), w.position);
}

Diagram remove_pair(const Diagram& x, const std::string& black, const std::string& white) {
  if (x.size() <= 4) {
    throw std::invalid_argument("remove_pair: diagram too small");
  }
  if (!is_t_diagram(x)) {
    throw std::invalid_argument("remove_pair: not a t-diagram");
  }
  if (x.point(black).color != Color::Black || x.point(white).color != Color::White) {
    throw std::invalid_argument("remove_pair: color mismatch");
  }
  const auto cycle = black_cycle_or_compute(x);
  const std::size_t i = cycle_index(cycle, black);
  if (!in_boundary_triangle(x, cycle, i, x.point(white).position)) {
    throw std::invalid_argument("remove_pair: '" + white + "' does not correspond to '" + black +
                                "'");
  }
  std::vector<DiagramPoint> remaining;
  for (const auto& p : x.points()) {
    if (p.label != black && p.label != white) {
      remaining.push_back(p);
    }
  }
  std::vector<std::string> new_cycle;
  for (const auto& label : cycle) {
    if (label != black) {
      new_cycle.push_back(label);
    }
  }
  return Diagram(x.d() - 1, std::move(remaining), std::move(new_cycle));
}

std::string diagram_to_json(const Diagram& x) {
  nlohmann::ordered_json doc;
  doc["d"] = x.d();
  doc["points"] = nlohmann::ordered_json::array();
  std::vector<std::string> order;
  if (!x.black_cycle().empty()) {
    order = x.black_cycle();
  } else {
    order = x.black_labels();
    std::sort(order.begin(), order.end());
  }
  auto whites = x.white_labels();
  std::sort(whites.begin(), whites.end());
  order.insert(order.end(), whites.begin(), whites.end());
  for (const auto& label : order) {
    const auto& p = x.point(label);
    nlohmann::ordered_json jp;
    jp["label"] = p.label;
    jp["color"] = p.color == Color::Black ? "black" : "white";
    jp["x"] = p.position.x.str();
    jp["y"] = p.position.y.str();
    doc["points"].push_back(jp);
  }
  doc["black_cycle"] = x.black_cycle();
  return doc.dump(2) + "\n";
}

Diagram diagram_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("diagram JSON: ") + e.what());
  }
  try {
    const int d = doc.at("d").get<int>();
    std::vector<DiagramPoint> points;
    for (const auto& jp : doc.at("points")) {
      DiagramPoint p;
      p.label = jp.at("label").get<std::string>();
      const std::string color = jp.at("color").get<std::string>();
      if (color == "black") {
        p.color = Color::Black;
      } else if (color == "white") {
        p.color = Color::White;
      } else {
        throw std::invalid_argument("diagram JSON: bad color '" + color + "'");
      }
      p.position.x = Rational::parse(jp.at("x").get<std::string>());
      p.position.y = Rational::parse(jp.at("y").get<std::string>());
      points.push_back(std::move(p));
    }
    std::vector<std::string> cycle;
    if (doc.contains("black_cycle")) {
      cycle = doc.at("black_cycle").get<std::vector<std::string>>();
    }
    return Diagram(d, std::move(points), std::move(cycle));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("diagram JSON: ") + e.what());
  }
}

}  // namespace galeforge
