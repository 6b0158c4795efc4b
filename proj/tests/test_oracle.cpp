#include <doctest.h>

#include "galeforge/construct.hpp"
#include "galeforge/faces.hpp"
#include "galeforge/oracle.hpp"

using namespace galeforge;

namespace {

Point2 pt(long x, long y) {
  return Point2{Rational(x), Rational(y)};
}

Diagram d0_diagram() {
  std::vector<DiagramPoint> points = {
      {"A1", Color::Black, pt(0, 0)},
      {"A2", Color::Black, pt(4, 0)},
      {"A3", Color::Black, pt(0, 4)},
      {"B1", Color::White, pt(1, 1)},
  };
  return Diagram(0, std::move(points), {"A1", "A3", "A2"});
}

}  // namespace

TEST_CASE("lift maps colors to signs") {
  const VectorConfig3 v = lift(d0_diagram());
  REQUIRE(v.columns.size() == 4);
  CHECK(v.columns[0] == std::array<Rational, 3>{Rational(0), Rational(0), Rational(1)});
  // The white at (1,1) becomes (-1,-1,-1).
  const auto it = std::find(v.labels.begin(), v.labels.end(), "B1");
  const auto wcol = v.columns[static_cast<std::size_t>(it - v.labels.begin())];
  CHECK(wcol == std::array<Rational, 3>{Rational(-1), Rational(-1), Rational(-1)});
}

TEST_CASE("positive_dependence on the d=0 diagram") {
  const auto lambda = positive_dependence(lift(d0_diagram()));
  REQUIRE(lambda.size() == 4);
  Rational sum;
  for (const auto& l : lambda) {
    CHECK(l.sign() > 0);
    sum += l;
  }
  CHECK(sum == Rational(1));
}

TEST_CASE("positive_dependence rejects a corrupted diagram") {
  std::vector<DiagramPoint> points = {
      {"A1", Color::Black, pt(0, 0)},
      {"A2", Color::Black, pt(4, 0)},
      {"A3", Color::Black, pt(0, 4)},
      {"B1", Color::White, pt(5, 5)},  // outside: not a polytope diagram
  };
  const Diagram bad(0, std::move(points), {"A1", "A3", "A2"});
  CHECK_THROWS_AS(positive_dependence(lift(bad)), std::invalid_argument);
}

TEST_CASE("gale_inverse of a built d=2 diagram") {
  const auto [x, corr] = build_diagram(enumerate_trees(5)[0]);
  const PointConfig p = gale_inverse(x);
  CHECK(p.dim == 4);
  CHECK(p.points.size() == 8);
  const auto facets = facets_bruteforce(p);
  CHECK(facets.size() == 20);
  // Every point is a vertex: each label appears in some facet.
  for (const auto& label : p.labels) {
    const bool hit = std::any_of(facets.begin(), facets.end(), [&](const VertexSubset& f) {
      return f.count(label) != 0;
    });
    CHECK(hit);
  }
}

TEST_CASE("gale_inverse of the cyclic diagram reproduces the cyclic lattice") {
  const Diagram cyc = cyclic_diagram(2);
  const PointConfig p = gale_inverse(cyc);
  CHECK(p.dim == 4);
  CHECK(facets_bruteforce(p).size() == 20);  // n(n-3)/2 at n=8
}

TEST_CASE("verify_against_oracle: zero mismatches at d=2") {
  const auto [x, corr] = build_diagram(enumerate_trees(5)[0]);
  const OracleReport report = verify_against_oracle(x);
  CHECK(report.ok);
  CHECK(report.facet_count == 20);
  CHECK(report.mismatches.empty());
  const std::string json = report.to_json();
  CHECK(json.find("\"ok\": true") != std::string::npos);
  CHECK(json.find("\"facet_count\": 20") != std::string::npos);
}

TEST_CASE("verify_against_oracle with sampling options") {
  const auto [x, corr] = build_diagram(enumerate_trees(5)[0]);
  OracleOptions opts;
  opts.exhaustive_max_size = 0;
  opts.samples = 50;
  opts.seed = 7;
  const OracleReport report = verify_against_oracle(x, opts);
  CHECK(report.ok);
}
