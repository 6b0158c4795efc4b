#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "galeforge/diagram.hpp"
#include "galeforge/linalg.hpp"

namespace galeforge {

// The vector Gale diagram: one column of 3 rationals per diagram label.
struct VectorConfig3 {
  std::vector<std::string> labels;
  std::vector<std::array<Rational, 3>> columns;
};

// The recovered point configuration X* in R^{2d}.
struct PointConfig {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<RVec> points;
};

// black (x, y) -> (x, y, 1); white (x, y) -> (-x, -y, -1); the projection
// hyperplane is fixed at third coordinate 1.
VectorConfig3 lift(const Diagram& x);

// Strictly positive lambda with sum lambda_i v_i = 0 and sum lambda_i = 1, by
// averaging all basic feasible solutions over supports of size <= 4. Throws
// std::invalid_argument when no strictly positive dependence exists (the
// diagram is not a polytope diagram).
RVec positive_dependence(const VectorConfig3& v);

// Scale the lift by a positive dependence, take an exact kernel basis with
// the all-ones row first; the remaining 2d rows are the point coordinates.
// Verifies general position and that every point appears in some facet.
PointConfig gale_inverse(const Diagram& x);

// All D-subsets S such that the homogeneous (D+1)x(D+1) determinants
// [points of S; point j] share one strict sign over all j outside S.
std::set<VertexSubset> facets_bruteforce(const PointConfig& p);

struct OracleMismatch {
  VertexSubset subset;
  bool face_by_diagram = false;
  bool face_by_oracle = false;
};

struct OracleReport {
  long facet_count = 0;
  std::vector<OracleMismatch> mismatches;
  bool ok = false;
  std::string diagram_json;

  std::string to_json() const;
};

struct OracleOptions {
  // Exhaustive sweep of all subset sizes up to this cardinality (inclusive);
  // sizes above it are sampled. Facet-size subsets are always exhaustive.
  std::size_t exhaustive_max_size = 64;
  std::size_t samples = 0;
  std::uint64_t seed = 20240915;
};

// For every subset S with 1 <= |S| <= D (exhaustive or sampled per options):
// is_face(X, S) iff S is contained in some brute-force facet of the inverse
// Gale configuration. Mismatches are report content, not errors.
OracleReport verify_against_oracle(const Diagram& x, const OracleOptions& options = {});

}  // namespace galeforge
