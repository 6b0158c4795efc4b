#pragma once

#include <optional>
#include <vector>

#include "galeforge/rational.hpp"

namespace galeforge {

using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;  // row-major, rectangular

Rational det(RMat a);

// Rank via Gaussian elimination.
std::size_t rank(RMat a);

// Unique solution of A x = b, if one exists (requires full column rank and a
// consistent system); nullopt otherwise.
std::optional<RVec> solve_unique(RMat a, RVec b);

// Rows spanning { x : A x = 0 }, in reduced row echelon convention: each
// basis vector carries a 1 at "its" free column and 0 at the other free
// columns.
RMat kernel_basis(RMat a);

// A point of L = { x >= 0 : A x = b } whose zero coordinates are exactly the
// coordinates vanishing on all of L: the average of all distinct basic
// feasible solutions (vertices have support of size <= #rows with linearly
// independent columns). Returns nullopt when L is empty. With
// stop_when_positive set, may return any strictly positive point of L as soon
// as one is certified.
std::optional<RVec> relint_point(const RMat& a, const RVec& b, bool stop_when_positive);

}  // namespace galeforge
