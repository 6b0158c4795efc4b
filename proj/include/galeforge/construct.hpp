#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "galeforge/diagram.hpp"
#include "galeforge/trees.hpp"

namespace galeforge {

// Bijection between tree vertices and diagram labels: leaves to blacks,
// internal vertices to whites.
struct Correspondence {
  std::map<std::string, std::string> tree_to_diagram;

  std::map<std::string, std::string> diagram_to_tree() const;
  const std::string& at(const std::string& tree_vertex) const;
};

std::string correspondence_to_json(const Correspondence& c);

// The three components of t minus the internal vertex each hold exactly one
// of the three leaves.
bool disjoint_paths(const ThreeTree& t, const std::string& internal_vertex,
                    const std::set<std::string>& three_leaves);

struct BuildOptions {
  Rational initial_epsilon = Rational(1);
  long base_scale = 8;  // base triangle (0,0), (0,s), (s,0), white (1,1)
  int extra_shrink = 0;  // skip this many acceptable epsilons (variant realizations)
};

// Exact-coordinate t-diagram whose characteristic tree is t, built by
// repeated vertex splitting from the base triangle; deterministic. The
// returned correspondence maps tree vertex ids to final diagram labels.
// Verifies is_t_diagram and is_characteristic before returning.
std::pair<Diagram, Correspondence> build_diagram(const ThreeTree& t, const BuildOptions& opts = {});

enum class AdjacentWhitePick { First, Last };

// The characteristic tree of a t-diagram, unique up to mirror. Tree vertex
// ids equal diagram labels, so the correspondence is the identity. The pick
// parameter selects which side-adjacent white is eliminated first (the result
// is mirror-invariant under that choice).
std::pair<ThreeTree, Correspondence> extract_tree(const Diagram& x,
                                                  AdjacentWhitePick pick = AdjacentWhitePick::First);

// Characteristic-tree test: colors match, unoriented leaf cycle equals the unoriented black
// cycle, and strict triangle membership coincides with the three-disjoint-path
// relation for every white and black triple.
bool is_characteristic(const ThreeTree& t, const Diagram& x, const Correspondence& c);

// Label bijection preserving color, the unoriented black cycle, and
// white-in-black-triple membership, if one exists.
std::optional<std::map<std::string, std::string>> diagonal_equivalent(const Diagram& x,
                                                                      const Diagram& y);

// Some bijection preserving colors and all triple orientations, or reversing
// all of them. Both diagrams must be in general position with blacks in
// convex position.
bool comb_equivalent(const Diagram& x, const Diagram& y);

}  // namespace galeforge
