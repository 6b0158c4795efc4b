#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "galeforge/rational.hpp"

namespace galeforge {

// Cubic tree with a rotation system: every vertex has degree 1 or 3, and the
// neighbor list of a degree-3 vertex is meaningful as a cyclic order.
struct ThreeTree {
  std::map<std::string, std::vector<std::string>> adj;

  void validate() const;  // throws std::invalid_argument on violation

  bool is_leaf(const std::string& v) const;
  std::vector<std::string> leaves() const;
  std::vector<std::string> internals() const;
  std::size_t num_leaves() const;
  std::size_t num_vertices() const { return adj.size(); }
};

// Sequence considered up to rotation (and optionally reversal).
struct CyclicOrder {
  std::vector<std::string> items;

  bool same_cycle(const CyclicOrder& other) const;
  bool same_unoriented(const CyclicOrder& other) const;
  CyclicOrder reversed() const;
};

// Leaves in face-walk order: exit every vertex by the rotation-successor of
// the entry edge, starting from the lexicographically smallest leaf.
CyclicOrder leaf_cyclic_order(const ThreeTree& t);

// Same vertices and edges with every rotation reversed. Involution.
ThreeTree mirror(const ThreeTree& t);

// Equal for two trees iff they are isomorphic as 3-trees (rotation
// preserving), optionally also minimizing over the mirror. Lexicographic
// minimum over rooted nested-parenthesis encodings.
std::string canonical_code(const ThreeTree& t, bool up_to_mirror);

bool is_isomorphic(const ThreeTree& t1, const ThreeTree& t2, bool up_to_mirror);

// All 3-trees with the given number of leaves, one representative per
// isomorphism class up to mirror, in canonical-code order.
std::vector<ThreeTree> enumerate_trees(int num_leaves);

// C(2x, x) / (x + 1); throws for negative x.
Integer catalan(long x);

// Number of combinatorially distinct T-diagrams for d > 0:
//   T_{d+1}/(2(d+3)) + 3 T_{(d+3)/2-1}/4 + T_{(d+3)/3-1}/3 + T_{d/2}/2,
// T_x = 0 at non-integer index, T_x = catalan(x) otherwise. Throws on d <= 0
// and on a non-integral total.
Integer count_t_diagrams(int d);

// Rooted nested-parenthesis text format: "((x,y),z,w)" — the root lists 3
// children in rotation order, internal non-root nodes list 2 (rotation
// continues clockwise after the parent edge), leaves are bare labels.
ThreeTree parse_tree(std::string_view text);
std::string format_tree(const ThreeTree& t);

// Undirected DOT with boxed leaves; rotations recorded as comment lines.
std::string tree_to_dot(const ThreeTree& t);

}  // namespace galeforge
