#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galeforge/construct.hpp"
#include "galeforge/diagram.hpp"
#include "galeforge/trees.hpp"

namespace galeforge {

// Convex hull of consecutive black vertices of the (d+3)-gon. start/end are
// indices into the black cycle; the lune's vertices run clockwise from start
// to end inclusive. whole_polygon covers all d+3 vertices.
struct Lune {
  std::size_t start = 0;
  std::size_t end = 0;
  bool whole_polygon = false;

  std::size_t vertex_count(std::size_t cycle_size) const;
};

// Every lune of the diagram: (d+1)(d+3) proper ones plus the whole polygon.
std::vector<Lune> all_lunes(const Diagram& x);

// Black labels of the lune, clockwise from start to end.
std::vector<std::string> lune_vertices(const Diagram& x, const Lune& l);

// Whites strictly inside Conv(lune).
std::vector<std::string> whites_inside_lune(const Diagram& x, const Lune& l);

// The unique (d+1)-subset M with X \ M = (blacks of L) + (whites outside L):
// M = blacks outside L + whites strictly inside Conv L.
VertexSubset minimal_nonface_of_lune(const Diagram& x, const Lune& l);

// All (d+1)-subsets failing is_face.
std::set<VertexSubset> enumerate_minimal_nonfaces(const Diagram& x);

// Combinatorial lune criterion for a (d+1)-subset, with no black-white test:
// the complement's blacks form a consecutive run whose lune holds none of the
// complement's whites and all of M's.
bool is_minimal_nonface(const Diagram& x, const VertexSubset& m);

enum class NonfaceClass { NotANonface, Minimal, NonSpecial, Special };

// Classification of subsets of size d+1..2d by their complement's colors;
// internally cross-checks the lune condition against the direct black-white
// test and throws std::logic_error on disagreement.
NonfaceClass classify_nonface(const Diagram& x, const VertexSubset& m);

// Number of minimal non-faces containing all labels of R (R nonempty).
long count_nonfaces_containing(const Diagram& x, const VertexSubset& r);
long count_nonfaces_containing(const std::set<VertexSubset>& census, const VertexSubset& r);

struct PathStats {
  long l = 0;  // blacks strictly between, counterclockwise from A_i to A_j
  long r = 0;  // clockwise
};

PathStats path_stats(const Diagram& x, const std::string& a_i, const std::string& a_j);

// Closed form N(A_i, A_j) = C(l,2) + C(r,2).
long closed_form_black_black(const Diagram& x, const std::string& a_i, const std::string& a_j);

// The unique consecutive pair (A_k, A_{k+1}) with B strictly inside the
// triangle apex-A_k-A_{k+1}; requires B to correspond to the apex.
std::pair<std::string, std::string> home_pair(const Diagram& x, const std::string& apex,
                                              const std::string& white);

struct HomeTriangle {
  std::string apex;
  std::string k;
  std::string k_next;
};

// Wrapper choosing the first corresponding black in cycle order as apex.
HomeTriangle home_triangle(const Diagram& x, const std::string& white);

// The offset a(A_i, A_j, B): distance along the path from A_i to the first
// home-pair vertex; apex A_j must correspond to B.
long a_statistic(const Diagram& x, const std::string& a_i, const std::string& a_j,
                 const std::string& white);

// Closed form N(A_i, B) = l r + a, for B corresponding to some A_j != A_i.
long closed_form_black_white(const Diagram& x, const std::string& a_i, const std::string& white);

// Pairs that are faces with no minimal non-face containing both ends; equal
// to the (black, corresponding white) pairs.
std::set<std::pair<std::string, std::string>> remarkable_edges(const Diagram& x);

// Faces of sizes 1..2d of a simplicial polytope: facets by the face
// criterion, smaller faces by downward closure.
class FaceLattice {
 public:
  FaceLattice(int d, std::set<VertexSubset> facets);

  int d() const { return d_; }
  int dim() const { return 2 * d_; }
  const std::set<VertexSubset>& facets() const { return facets_; }
  const std::set<VertexSubset>& faces_of_size(std::size_t t) const;
  bool is_face(const VertexSubset& m) const;
  std::vector<long> f_vector() const;  // counts for sizes 1..2d
  std::vector<std::string> vertex_labels() const;

 private:
  int d_;
  std::set<VertexSubset> facets_;
  std::vector<std::set<VertexSubset>> by_size_;  // index t-1 holds size-t faces
};

FaceLattice face_lattice(const Diagram& x);

// For each size t in 1..2d, the number of faces with t vertices containing v.
std::map<std::size_t, long> local_face_counts(const Diagram& x, const std::string& v);
std::map<std::size_t, long> local_face_counts(const FaceLattice& l, const std::string& v);

// Gale diagram of the cyclic polytope: 2d+4 points in convex position with
// alternating colors, realized on the parabola (i, i^2).
Diagram cyclic_diagram(int d);

// Black/white recovery from the lattice combinatorics alone.
std::map<std::string, Color> recover_colors(const FaceLattice& l);

// The unique catalog tree whose built diagram has this face
// lattice, up to mirror.
ThreeTree identify_tree(const FaceLattice& l);

std::string lattice_to_json(const FaceLattice& l);
FaceLattice lattice_from_json(std::string_view text);

}  // namespace galeforge
