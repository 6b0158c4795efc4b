#include <doctest.h>

#include "galeforge/diagram.hpp"
#include "galeforge/svg.hpp"

using namespace galeforge;

namespace {

Point2 pt(long x, long y) {
  return Point2{Rational(x), Rational(y)};
}

// Blacks (0,0), (4,0), (0,4); white (1,1). Clockwise cycle A1, A3, A2.
Diagram d0_diagram() {
  std::vector<DiagramPoint> points = {
      {"A1", Color::Black, pt(0, 0)},
      {"A2", Color::Black, pt(4, 0)},
      {"A3", Color::Black, pt(0, 4)},
      {"B1", Color::White, pt(1, 1)},
  };
  return Diagram(0, std::move(points), {"A1", "A3", "A2"});
}

Diagram d0_white_outside() {
  std::vector<DiagramPoint> points = {
      {"A1", Color::Black, pt(0, 0)},
      {"A2", Color::Black, pt(4, 0)},
      {"A3", Color::Black, pt(0, 4)},
      {"B1", Color::White, pt(5, 5)},
  };
  return Diagram(0, std::move(points), {"A1", "A3", "A2"});
}

}  // namespace

TEST_CASE("diagram construction validates") {
  CHECK_THROWS_AS(Diagram(0, {}, {}), std::invalid_argument);  // wrong count
  std::vector<DiagramPoint> collinear = {
      {"A1", Color::Black, pt(0, 0)},
      {"A2", Color::Black, pt(1, 0)},
      {"A3", Color::Black, pt(2, 0)},
      {"B1", Color::White, pt(3, 0)},
  };
  CHECK_THROWS_AS(Diagram(0, std::move(collinear), {}), std::invalid_argument);
  std::vector<DiagramPoint> dup = {
      {"A1", Color::Black, pt(0, 0)},
      {"A1", Color::Black, pt(4, 0)},
      {"A3", Color::Black, pt(0, 4)},
      {"B1", Color::White, pt(1, 1)},
  };
  CHECK_THROWS_AS(Diagram(0, std::move(dup), {}), std::invalid_argument);
  std::vector<DiagramPoint> bad_cycle = {
      {"A1", Color::Black, pt(0, 0)},
      {"A2", Color::Black, pt(4, 0)},
      {"A3", Color::Black, pt(0, 4)},
      {"B1", Color::White, pt(1, 1)},
  };
  CHECK_THROWS_AS(Diagram(0, std::move(bad_cycle), {"A1", "A2", "A3"}),  // counterclockwise
                  std::invalid_argument);
}

TEST_CASE("bw_property on the d=0 diagram") {
  const Diagram x = d0_diagram();
  CHECK(bw_property(x, {"A1", "A2", "A3", "B1"}));
  CHECK_FALSE(bw_property(x, {"A1", "A2", "A3"}));  // no whites in M
  CHECK_THROWS_AS(bw_property(x, {"A1", "Z9"}), std::invalid_argument);
}

TEST_CASE("is_face domain") {
  const Diagram x = d0_diagram();
  CHECK_THROWS_AS(is_face(x, {}), std::invalid_argument);
  CHECK_THROWS_AS(is_face(x, {"A1"}), std::invalid_argument);  // 2d = 0: empty domain
}

TEST_CASE("is_polytope_diagram") {
  // At d=0 removing the only white leaves an empty white hull, so even the
  // valid t-diagram is not a polytope diagram; built diagrams with d >= 1
  // are (covered in the construct tests).
  CHECK_FALSE(is_polytope_diagram(d0_diagram()));
  CHECK_FALSE(is_polytope_diagram(d0_white_outside()));
}

TEST_CASE("is_t_diagram") {
  CHECK(is_t_diagram(d0_diagram()));
  CHECK_FALSE(is_t_diagram(d0_white_outside()));
  CHECK_FALSE(is_T_diagram(d0_diagram()));  // d < 2
}

TEST_CASE("correspondence helpers on the d=0 diagram") {
  const Diagram x = d0_diagram();
  CHECK(corresponding_white(x, "A1") == "B1");
  const auto blacks = corresponding_blacks(x, "B1");
  CHECK(blacks.size() == 3);  // at d=0 the single white sits in every boundary triangle
}

TEST_CASE("remove_pair rejects the d=0 diagram") {
  CHECK_THROWS_AS(remove_pair(d0_diagram(), "A1", "B1"), std::invalid_argument);
}

TEST_CASE("diagram JSON round trip") {
  const Diagram x = d0_diagram();
  const std::string text = diagram_to_json(x);
  const Diagram back = diagram_from_json(text);
  CHECK(back.d() == 0);
  CHECK(back.size() == 4);
  CHECK(back.black_cycle() == x.black_cycle());
  for (const auto& p : x.points()) {
    CHECK(back.point(p.label).position == p.position);
    CHECK(back.point(p.label).color == p.color);
  }
}

TEST_CASE("svg rendering of the d=0 diagram") {
  const std::string svg = diagram_to_svg(d0_diagram());
  CHECK(svg.rfind("<svg", 0) == 0);
  std::size_t filled = 0, hollow = 0, labels = 0;
  for (std::size_t pos = 0; (pos = svg.find("fill=\"black\" stroke=\"black\"", pos)) !=
                            std::string::npos;
       ++pos) {
    ++filled;
  }
  for (std::size_t pos = 0;
       (pos = svg.find("fill=\"white\" stroke=\"black\"", pos)) != std::string::npos; ++pos) {
    ++hollow;
  }
  for (std::size_t pos = 0; (pos = svg.find("<text", pos)) != std::string::npos; ++pos) {
    ++labels;
  }
  CHECK(filled == 3);
  CHECK(hollow == 1);
  CHECK(labels == 4);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg == diagram_to_svg(d0_diagram()));
}

TEST_CASE("diagram JSON rejects malformed input") {
  CHECK_THROWS_AS(diagram_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(diagram_from_json("{}"), std::invalid_argument);
  const std::string wrong_count = R"({"d": 1, "points": [
    {"label": "A1", "color": "black", "x": "0/1", "y": "0/1"},
    {"label": "A2", "color": "black", "x": "4/1", "y": "0/1"},
    {"label": "A3", "color": "black", "x": "0/1", "y": "4/1"},
    {"label": "B1", "color": "white", "x": "1/1", "y": "1/1"}],
    "black_cycle": ["A1", "A3", "A2"]})";
  CHECK_THROWS_AS(diagram_from_json(wrong_count), std::invalid_argument);
  const std::string not_normalized = R"({"d": 0, "points": [
    {"label": "A1", "color": "black", "x": "0/2", "y": "0/1"},
    {"label": "A2", "color": "black", "x": "4/1", "y": "0/1"},
    {"label": "A3", "color": "black", "x": "0/1", "y": "4/1"},
    {"label": "B1", "color": "white", "x": "1/1", "y": "1/1"}],
    "black_cycle": ["A1", "A3", "A2"]})";
  CHECK_THROWS_AS(diagram_from_json(not_normalized), std::invalid_argument);
  const std::string bad_color = R"({"d": 0, "points": [
    {"label": "A1", "color": "red", "x": "0/1", "y": "0/1"},
    {"label": "A2", "color": "black", "x": "4/1", "y": "0/1"},
    {"label": "A3", "color": "black", "x": "0/1", "y": "4/1"},
    {"label": "B1", "color": "white", "x": "1/1", "y": "1/1"}],
    "black_cycle": []})";
  CHECK_THROWS_AS(diagram_from_json(bad_color), std::invalid_argument);
}
