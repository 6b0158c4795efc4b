#include "galeforge/faces.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "galeforge/subsets.hpp"

namespace galeforge {

std::size_t Lune::vertex_count(std::size_t cycle_size) const {
  if (whole_polygon) {
    return cycle_size;
  }
  return (end + cycle_size - start) % cycle_size + 1;
}

std::vector<Lune> all_lunes(const Diagram& x) {
  const std::size_t m = black_cycle_or_compute(x).size();
  std::vector<Lune> lunes;
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t k = 2; k <= m - 1; ++k) {
      lunes.push_back(Lune{s, (s + k - 1) % m, false});
    }
  }
  lunes.push_back(Lune{0, m - 1, true});
  return lunes;
}

std::vector<std::string> lune_vertices(const Diagram& x, const Lune& l) {
  const auto cycle = black_cycle_or_compute(x);
  const std::size_t m = cycle.size();
  const std::size_t k = l.vertex_count(m);
  if (k < 2 || l.start >= m) {
    throw std::invalid_argument("lune_vertices: malformed lune");
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(cycle[(l.start + i) % m]);
  }
  return out;
}

std::vector<std::string> whites_inside_lune(const Diagram& x, const Lune& l) {
  const auto verts = lune_vertices(x, l);
  std::vector<std::string> out;
  if (verts.size() < 3) {
    return out;  // a segment holds no white strictly inside (general position)
  }
  std::vector<Point2> polygon;
  polygon.reserve(verts.size());
  for (const auto& label : verts) {
    polygon.push_back(x.point(label).position);
  }
  for (const auto& wl : x.white_labels()) {
    if (point_in_convex_polygon_strict(x.point(wl).position, polygon)) {
      out.push_back(wl);
    }
  }
  return out;
}

VertexSubset minimal_nonface_of_lune(const Diagram& x, const Lune& l) {
  const auto verts = lune_vertices(x, l);
  const std::set<std::string> in_lune(verts.begin(), verts.end());
  VertexSubset m;
  for (const auto& bl : black_cycle_or_compute(x)) {
    if (in_lune.count(bl) == 0) {
      m.insert(bl);
    }
  }
  for (const auto& wl : whites_inside_lune(x, l)) {
    m.insert(wl);
  }
  if (m.size() != static_cast<std::size_t>(x.d() + 1)) {
    throw std::logic_error("minimal_nonface_of_lune: expected d+1 labels, got " +
                           std::to_string(m.size()));
  }
  return m;
}

std::set<VertexSubset> enumerate_minimal_nonfaces(const Diagram& x) {
  const auto labels = x.labels();
  std::set<VertexSubset> out;
  for_each_combination(labels.size(), static_cast<std::size_t>(x.d() + 1),
                       [&](const std::vector<std::size_t>& idx) {
                         VertexSubset m;
                         for (const auto i : idx) {
                           m.insert(labels[i]);
                         }
                         if (!is_face(x, m)) {
                           out.insert(std::move(m));
                         }
                       });
  return out;
}

bool is_minimal_nonface(const Diagram& x, const VertexSubset& m) {
  if (m.size() != static_cast<std::size_t>(x.d() + 1)) {
    throw std::invalid_argument("is_minimal_nonface: |M| must be d+1");
  }
  const auto cycle = black_cycle_or_compute(x);
  const std::size_t n = cycle.size();
  std::vector<bool> in_complement(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    in_complement[i] = m.count(cycle[i]) == 0;
  }
  const std::size_t complement_blacks =
      static_cast<std::size_t>(std::count(in_complement.begin(), in_complement.end(), true));

  std::vector<std::string> m_whites;
  for (const auto& label : m) {
    if (x.point(label).color == Color::White) {
      m_whites.push_back(label);
    }
  }

  if (complement_blacks == n) {
    // Lune = the whole polygon: M must be exactly the whites.
    return m_whites.size() == m.size();
  }
  // The complement blacks must form one consecutive run of length >= 2.
  std::size_t runs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_complement[i] && !in_complement[(i + n - 1) % n]) {
      ++runs;
    }
  }
  if (runs != 1 || complement_blacks < 2) {
    return false;
  }
  std::size_t start = 0;
  while (!(in_complement[start] && !in_complement[(start + n - 1) % n])) {
    ++start;
  }
  const Lune lune{start, (start + complement_blacks - 1) % n, false};
  const auto inside = whites_inside_lune(x, lune);
  return std::set<std::string>(inside.begin(), inside.end()) ==
         std::set<std::string>(m_whites.begin(), m_whites.end());
}

namespace {

// Index of the unique pocket (gap between cyclically consecutive complement
// blacks) whose chord the white violates; nullopt when the white lies inside
// the complement hull.
std::optional<std::size_t> pocket_of_white(const Diagram& x,
                                           const std::vector<std::string>& complement_blacks,
                                           const Point2& w) {
  const std::size_t k = complement_blacks.size();
  std::optional<std::size_t> found;
  for (std::size_t t = 0; t < k; ++t) {
    const Point2& p = x.point(complement_blacks[t]).position;
    const Point2& q = x.point(complement_blacks[(t + 1) % k]).position;
    if (orient(p, q, w) == Orientation::CounterClockwise) {
      if (found) {
        throw std::logic_error("pocket_of_white: white outside two chords");
      }
      found = t;
    }
  }
  return found;
}

}  // namespace

NonfaceClass classify_nonface(const Diagram& x, const VertexSubset& m) {
  const std::size_t d1 = static_cast<std::size_t>(x.d() + 1);
  if (m.size() < d1) {
    throw std::invalid_argument("classify_nonface: subsets below d+1 are faces by neighborliness");
  }
  if (m.size() > static_cast<std::size_t>(2 * x.d())) {
    throw std::invalid_argument("classify_nonface: |M| must be at most 2d");
  }
  const bool face = is_face(x, m);

  std::vector<std::string> comp_blacks;
  std::vector<std::string> comp_whites;
  for (const auto& p : x.points()) {
    if (m.count(p.label) != 0) {
      continue;
    }
    (p.color == Color::Black ? comp_blacks : comp_whites).push_back(p.label);
  }
  // Keep the complement blacks in cycle order for the pocket scan.
  {
    const auto cycle = black_cycle_or_compute(x);
    std::vector<std::string> ordered;
    for (const auto& bl : cycle) {
      if (std::find(comp_blacks.begin(), comp_blacks.end(), bl) != comp_blacks.end()) {
        ordered.push_back(bl);
      }
    }
    comp_blacks = std::move(ordered);
  }

  if (comp_blacks.size() >= 2 && !comp_whites.empty()) {
    // Non-special non-face condition: all complement whites in one pocket.
    bool one_pocket = true;
    std::optional<std::size_t> pocket;
    for (const auto& wl : comp_whites) {
      const auto p = pocket_of_white(x, comp_blacks, x.point(wl).position);
      if (!p || (pocket && *pocket != *p)) {
        one_pocket = false;
        break;
      }
      pocket = p;
    }
    if (one_pocket == face) {
      throw std::logic_error("classify_nonface: pocket condition disagrees with the black-white test");
    }
  }

  if (face) {
    return NonfaceClass::NotANonface;
  }
  if (m.size() == d1) {
    return NonfaceClass::Minimal;
  }
  const bool special = comp_blacks.size() <= 1 || comp_whites.empty();
  return special ? NonfaceClass::Special : NonfaceClass::NonSpecial;
}

long count_nonfaces_containing(const std::set<VertexSubset>& census, const VertexSubset& r) {
  if (r.empty()) {
    throw std::invalid_argument("count_nonfaces_containing: R must be nonempty");
  }
  long count = 0;
  for (const auto& m : census) {
    if (std::includes(m.begin(), m.end(), r.begin(), r.end())) {
      ++count;
    }
  }
  return count;
}

long count_nonfaces_containing(const Diagram& x, const VertexSubset& r) {
  return count_nonfaces_containing(enumerate_minimal_nonfaces(x), r);
}

PathStats path_stats(const Diagram& x, const std::string& a_i, const std::string& a_j) {
  if (a_i == a_j) {
    throw std::invalid_argument("path_stats: endpoints must differ");
  }
  const auto cycle = black_cycle_or_compute(x);
  const auto idx = [&](const std::string& label) {
    const auto it = std::find(cycle.begin(), cycle.end(), label);
    if (it == cycle.end()) {
      throw std::invalid_argument("path_stats: '" + label + "' is not black");
    }
    return static_cast<std::size_t>(it - cycle.begin());
  };
  const std::size_t n = cycle.size();
  const std::size_t a = idx(a_i);
  const std::size_t b = idx(a_j);
  PathStats s;
  s.r = static_cast<long>((b + n - a - 1) % n);
  s.l = static_cast<long>((a + n - b - 1) % n);
  return s;
}

long closed_form_black_black(const Diagram& x, const std::string& a_i, const std::string& a_j) {
  const PathStats s = path_stats(x, a_i, a_j);
  return Integer(binomial(s.l, 2) + binomial(s.r, 2)).get_si();
}

std::pair<std::string, std::string> home_pair(const Diagram& x, const std::string& apex,
                                              const std::string& white) {
  const auto corr = corresponding_blacks(x, white);
  if (std::find(corr.begin(), corr.end(), apex) == corr.end()) {
    throw std::invalid_argument("home_pair: '" + white + "' does not correspond to '" + apex +
                                "'");
  }
  const auto cycle = black_cycle_or_compute(x);
  const std::size_t n = cycle.size();
  const Point2& apex_pos = x.point(apex).position;
  const Point2& w = x.point(white).position;
  std::optional<std::pair<std::string, std::string>> found;
  for (std::size_t t = 0; t < n; ++t) {
    const std::string& k = cycle[t];
    const std::string& k1 = cycle[(t + 1) % n];
    if (k == apex || k1 == apex) {
      continue;
    }
    if (point_in_triangle_strict(w, apex_pos, x.point(k).position, x.point(k1).position)) {
      if (found) {
        throw std::logic_error("home_pair: fan membership not unique");
      }
      found = {k, k1};
    }
  }
  if (!found) {
    throw std::logic_error("home_pair: white not in any fan triangle");
  }
  return *found;
}

HomeTriangle home_triangle(const Diagram& x, const std::string& white) {
  const auto corr = corresponding_blacks(x, white);
  if (corr.empty()) {
    throw std::invalid_argument("home_triangle: '" + white + "' corresponds to no black");
  }
  const auto [k, k1] = home_pair(x, corr.front(), white);
  return HomeTriangle{corr.front(), k, k1};
}

long a_statistic(const Diagram& x, const std::string& a_i, const std::string& a_j,
                 const std::string& white) {
  if (a_i == a_j) {
    throw std::invalid_argument("a_statistic: A_i must differ from A_j");
  }
  const auto [k, k1] = home_pair(x, a_j, white);
  if (k == a_i || k1 == a_i) {
    return 0;
  }
  const auto cycle = black_cycle_or_compute(x);
  const std::size_t n = cycle.size();
  const auto idx = [&](const std::string& label) {
    return static_cast<std::size_t>(
        std::find(cycle.begin(), cycle.end(), label) - cycle.begin());
  };
  const std::size_t ia = idx(a_i);
  const std::size_t ij = idx(a_j);
  // Walk one path from A_i to A_j and count to the first of A_k, A_{k+1};
  // both lie on the same path since the pair is consecutive and avoids both
  // endpoints.
  for (const long dir : {+1L, -1L}) {
    long count = 0;
    std::size_t pos = ia;
    while (true) {
      pos = static_cast<std::size_t>((static_cast<long>(pos) + dir + static_cast<long>(n)) %
                                     static_cast<long>(n));
      if (pos == ij) {
        break;
      }
      ++count;
      if (cycle[pos] == k || cycle[pos] == k1) {
        return count;
      }
    }
  }
  throw std::logic_error("a_statistic: home pair not found on either path");
}

long closed_form_black_white(const Diagram& x, const std::string& a_i, const std::string& white) {
  const auto corr = corresponding_blacks(x, white);
  std::optional<std::string> a_j;
  for (const auto& c : corr) {
    if (c != a_i) {
      a_j = c;
      break;
    }
  }
  if (!a_j) {
    throw std::invalid_argument("closed_form_black_white: '" + white +
                                "' has no corresponding black distinct from '" + a_i + "'");
  }
  const PathStats s = path_stats(x, a_i, *a_j);
  return s.l * s.r + a_statistic(x, a_i, *a_j, white);
}

std::set<std::pair<std::string, std::string>> remarkable_edges(const Diagram& x) {
  const auto census = enumerate_minimal_nonfaces(x);
  const auto labels = x.labels();
  std::set<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      const VertexSubset pair{labels[i], labels[j]};
      if (is_face(x, pair) && count_nonfaces_containing(census, pair) == 0) {
        out.insert({std::min(labels[i], labels[j]), std::max(labels[i], labels[j])});
      }
    }
  }
  return out;
}

FaceLattice::FaceLattice(int d, std::set<VertexSubset> facets)
    : d_(d), facets_(std::move(facets)) {
  if (d_ < 1) {
    throw std::invalid_argument("FaceLattice: requires d >= 1");
  }
  const std::size_t dim = static_cast<std::size_t>(2 * d_);
  by_size_.resize(dim);
  for (const auto& facet : facets_) {
    if (facet.size() != dim) {
      throw std::invalid_argument("FaceLattice: facet size must be " + std::to_string(dim));
    }
    const std::vector<std::string> v(facet.begin(), facet.end());
    for (std::size_t t = 1; t <= dim; ++t) {
      for_each_combination(v.size(), t, [&](const std::vector<std::size_t>& idx) {
        VertexSubset sub;
        for (const auto i : idx) {
          sub.insert(v[i]);
        }
        by_size_[t - 1].insert(std::move(sub));
      });
    }
  }
}

const std::set<VertexSubset>& FaceLattice::faces_of_size(std::size_t t) const {
  if (t < 1 || t > by_size_.size()) {
    throw std::invalid_argument("FaceLattice: size out of range");
  }
  return by_size_[t - 1];
}

bool FaceLattice::is_face(const VertexSubset& m) const {
  if (m.empty() || m.size() > by_size_.size()) {
    return false;
  }
  return by_size_[m.size() - 1].count(m) != 0;
}

std::vector<long> FaceLattice::f_vector() const {
  std::vector<long> f;
  f.reserve(by_size_.size());
  for (const auto& faces : by_size_) {
    f.push_back(static_cast<long>(faces.size()));
  }
  return f;
}

std::vector<std::string> FaceLattice::vertex_labels() const {
  std::set<std::string> labels;
  for (const auto& facet : facets_) {
    labels.insert(facet.begin(), facet.end());
  }
  return {labels.begin(), labels.end()};
}

FaceLattice face_lattice(const Diagram& x) {
  if (x.d() < 1) {
    throw std::invalid_argument("face_lattice: requires d >= 1");
  }
  if (!is_polytope_diagram(x)) {
    throw std::invalid_argument("face_lattice: not a polytope diagram");
  }
  const auto labels = x.labels();
  std::set<VertexSubset> facets;
  for_each_combination(labels.size(), static_cast<std::size_t>(2 * x.d()),
                       [&](const std::vector<std::size_t>& idx) {
                         VertexSubset m;
                         for (const auto i : idx) {
                           m.insert(labels[i]);
                         }
                         if (is_face(x, m)) {
                           facets.insert(std::move(m));
                         }
                       });
  return FaceLattice(x.d(), std::move(facets));
}

std::map<std::size_t, long> local_face_counts(const FaceLattice& l, const std::string& v) {
  std::map<std::size_t, long> counts;
  for (std::size_t t = 1; t <= static_cast<std::size_t>(l.dim()); ++t) {
    long c = 0;
    for (const auto& face : l.faces_of_size(t)) {
      if (face.count(v) != 0) {
        ++c;
      }
    }
    counts[t] = c;
  }
  return counts;
}

std::map<std::size_t, long> local_face_counts(const Diagram& x, const std::string& v) {
  if (!x.has_label(v)) {
    throw std::invalid_argument("local_face_counts: unknown label '" + v + "'");
  }
  return local_face_counts(face_lattice(x), v);
}

Diagram cyclic_diagram(int d) {
  if (d < 1) {
    throw std::invalid_argument("cyclic_diagram: requires d >= 1");
  }
  const int n = 2 * d + 4;
  std::vector<DiagramPoint> points;
  std::vector<std::string> cycle;
  // Parabola points in decreasing parameter order are clockwise; alternate
  // colors along the curve.
  int next_black = 0;
  int next_white = 0;
  for (int i = n - 1; i >= 0; --i) {
    DiagramPoint p;
    p.position = {Rational(i), Rational(static_cast<long>(i) * i)};
    if (i % 2 == 0) {
      p.color = Color::Black;
      p.label = "A" + std::to_string(++next_black);
      cycle.push_back(p.label);
    } else {
      p.color = Color::White;
      p.label = "B" + std::to_string(++next_white);
    }
    points.push_back(std::move(p));
  }
  return Diagram(d, std::move(points), std::move(cycle));
}

namespace {

std::set<VertexSubset> lattice_minimal_nonfaces(const FaceLattice& l) {
  const auto labels = l.vertex_labels();
  const std::size_t d1 = static_cast<std::size_t>(l.d() + 1);
  std::set<VertexSubset> census;
  for_each_combination(labels.size(), d1, [&](const std::vector<std::size_t>& idx) {
    VertexSubset m;
    for (const auto i : idx) {
      m.insert(labels[i]);
    }
    if (!l.is_face(m)) {
      census.insert(std::move(m));
    }
  });
  return census;
}

std::set<std::pair<std::string, std::string>> lattice_remarkable_pairs(
    const FaceLattice& l, const std::set<VertexSubset>& census) {
  const auto labels = l.vertex_labels();
  std::set<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      const VertexSubset pair{labels[i], labels[j]};
      if (l.is_face(pair) && count_nonfaces_containing(census, pair) == 0) {
        out.insert({labels[i], labels[j]});
      }
    }
  }
  return out;
}

}  // namespace

std::map<std::string, Color> recover_colors(const FaceLattice& l) {
  if (l.d() < 2) {
    throw std::invalid_argument("recover_colors: requires d >= 2");
  }
  const auto labels = l.vertex_labels();
  if (labels.size() != static_cast<std::size_t>(2 * l.d() + 4)) {
    throw std::invalid_argument("recover_colors: lattice must have 2d+4 vertices");
  }
  const auto census = lattice_minimal_nonfaces(l);
  const auto pairs = lattice_remarkable_pairs(l, census);

  std::map<std::string, std::vector<std::string>> partners;
  for (const auto& [u, v] : pairs) {
    partners[u].push_back(v);
    partners[v].push_back(u);
  }
  for (const auto& [v, ps] : partners) {
    if (ps.size() > 2) {
      throw std::invalid_argument("recover_colors: vertex on more than two remarkable edges");
    }
  }
  std::string w;
  for (const auto& [v, ps] : partners) {
    if (ps.size() == 2) {
      w = v;
      break;
    }
  }
  if (w.empty()) {
    throw std::invalid_argument("recover_colors: no vertex with two remarkable edges");
  }
  const std::string& x = std::min(partners[w][0], partners[w][1]);
  const std::string& y = std::max(partners[w][0], partners[w][1]);

  const auto count_with = [&](const std::string& u, const std::string& v) {
    return count_nonfaces_containing(census, VertexSubset{u, v});
  };

  std::map<std::string, Color> assigned;
  const auto assign = [&](const std::string& label, Color c) {
    const auto [it, inserted] = assigned.emplace(label, c);
    if (!inserted && it->second != c) {
      throw std::invalid_argument("recover_colors: conflicting color for '" + label + "'");
    }
  };
  assign(w, Color::White);
  assign(x, Color::Black);
  assign(y, Color::Black);

  const long parity_d1 = (l.d() + 1) % 2;
  for (const auto& [u, v] : pairs) {
    if (u == w || v == w) {
      continue;  // the two seed pairs
    }
    const long du = (count_with(x, u) - count_with(y, u)) % 2;
    const long dv = (count_with(x, v) - count_with(y, v)) % 2;
    const bool u_black = std::abs(du) != parity_d1;
    const bool v_black = std::abs(dv) != parity_d1;
    if (u_black == v_black) {
      throw std::invalid_argument("recover_colors: parity test failed on a remarkable pair");
    }
    assign(u_black ? u : v, Color::Black);
    assign(u_black ? v : u, Color::White);
  }

  std::map<std::string, Color> colors;
  long blacks = 0;
  for (const auto& label : labels) {
    const auto it = assigned.find(label);
    // Vertices on no remarkable edge are white: every black has one.
    colors[label] = it == assigned.end() ? Color::White : it->second;
    blacks += colors[label] == Color::Black ? 1 : 0;
  }
  if (blacks != l.d() + 3) {
    throw std::invalid_argument("recover_colors: recovered " + std::to_string(blacks) +
                                " blacks, expected " + std::to_string(l.d() + 3));
  }
  return colors;
}

namespace {

struct LatticeComb {
  std::vector<std::string> cycle;  // black labels in (one of the two) cyclic orders
  std::map<std::string, Color> colors;
  std::set<VertexSubset> census;
  // white label -> set of lunes (as black-label sets) containing it
  std::map<std::string, std::set<std::set<std::string>>> white_sigs;
};

LatticeComb lattice_comb(const FaceLattice& l) {
  LatticeComb comb;
  comb.colors = recover_colors(l);
  comb.census = lattice_minimal_nonfaces(l);

  std::vector<std::string> blacks;
  std::vector<std::string> whites;
  for (const auto& [label, c] : comb.colors) {
    (c == Color::Black ? blacks : whites).push_back(label);
  }

  // Black adjacency: the non-face count through a black pair is maximal,
  // C(d+1, 2), exactly for cycle neighbors.
  const long max_n = binomial(l.d() + 1, 2).get_si();
  std::map<std::string, std::vector<std::string>> nbr;
  for (std::size_t i = 0; i < blacks.size(); ++i) {
    for (std::size_t j = i + 1; j < blacks.size(); ++j) {
      if (count_nonfaces_containing(comb.census, VertexSubset{blacks[i], blacks[j]}) == max_n) {
        nbr[blacks[i]].push_back(blacks[j]);
        nbr[blacks[j]].push_back(blacks[i]);
      }
    }
  }
  for (const auto& b : blacks) {
    if (nbr[b].size() != 2) {
      throw std::invalid_argument("lattice_comb: black adjacency is not a cycle");
    }
  }
  comb.cycle.push_back(blacks[0]);
  comb.cycle.push_back(std::min(nbr[blacks[0]][0], nbr[blacks[0]][1]));
  while (comb.cycle.size() < blacks.size()) {
    const auto& prev = comb.cycle[comb.cycle.size() - 2];
    const auto& cur = comb.cycle.back();
    const auto& next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
    if (std::find(comb.cycle.begin(), comb.cycle.end(), next) != comb.cycle.end()) {
      throw std::invalid_argument("lattice_comb: black adjacency is not a single cycle");
    }
    comb.cycle.push_back(next);
  }

  // Lune signatures via the lune bijection: the minimal non-face of a lune
  // contains exactly the whites inside it.
  const std::size_t m = comb.cycle.size();
  for (const auto& wl : whites) {
    comb.white_sigs[wl] = {};
  }
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t k = 2; k <= m - 1; ++k) {
      std::set<std::string> lune;
      for (std::size_t i = 0; i < k; ++i) {
        lune.insert(comb.cycle[(s + i) % m]);
      }
      VertexSubset expected_blacks;
      for (const auto& b : blacks) {
        if (lune.count(b) == 0) {
          expected_blacks.insert(b);
        }
      }
      std::optional<VertexSubset> member;
      for (const auto& mm : comb.census) {
        VertexSubset mm_blacks;
        for (const auto& label : mm) {
          if (comb.colors.at(label) == Color::Black) {
            mm_blacks.insert(label);
          }
        }
        if (mm_blacks == expected_blacks) {
          member = mm;
          break;
        }
      }
      if (!member) {
        throw std::invalid_argument("lattice_comb: lune without matching minimal non-face");
      }
      for (const auto& label : *member) {
        if (comb.colors.at(label) == Color::White) {
          comb.white_sigs[label].insert(lune);
        }
      }
    }
  }
  return comb;
}

}  // namespace

ThreeTree identify_tree(const FaceLattice& l) {
  const LatticeComb target = lattice_comb(l);
  const std::size_t m = target.cycle.size();

  for (const auto& tree : enumerate_trees(l.d() + 3)) {
    const auto [diagram, corr] = build_diagram(tree);
    const FaceLattice candidate = face_lattice(diagram);
    const LatticeComb comb = lattice_comb(candidate);

    for (std::size_t s = 0; s < m; ++s) {
      for (const bool reflect : {false, true}) {
        std::map<std::string, std::string> map;
        for (std::size_t kk = 0; kk < m; ++kk) {
          const std::size_t t = reflect ? (s + m - kk) % m : (s + kk) % m;
          map[target.cycle[kk]] = comb.cycle[t];
        }
        // Whites matched by mapped lune signatures.
        std::map<std::set<std::set<std::string>>, std::string> cand_by_sig;
        bool dup = false;
        for (const auto& [wl, sig] : comb.white_sigs) {
          if (!cand_by_sig.emplace(sig, wl).second) {
            dup = true;
          }
        }
        if (dup) {
          continue;
        }
        bool ok = true;
        for (const auto& [wl, sig] : target.white_sigs) {
          std::set<std::set<std::string>> mapped_sig;
          for (const auto& lune : sig) {
            std::set<std::string> mapped;
            for (const auto& label : lune) {
              mapped.insert(map.at(label));
            }
            mapped_sig.insert(std::move(mapped));
          }
          const auto it = cand_by_sig.find(mapped_sig);
          if (it == cand_by_sig.end()) {
            ok = false;
            break;
          }
          map[wl] = it->second;
        }
        if (!ok) {
          continue;
        }
        std::set<VertexSubset> mapped_facets;
        for (const auto& facet : l.facets()) {
          VertexSubset mf;
          for (const auto& label : facet) {
            mf.insert(map.at(label));
          }
          mapped_facets.insert(std::move(mf));
        }
        if (mapped_facets == candidate.facets()) {
          return tree;
        }
      }
    }
  }
  throw std::invalid_argument("identify_tree: no catalog tree matches the lattice");
}

std::string lattice_to_json(const FaceLattice& l) {
  nlohmann::ordered_json doc;
  doc["d"] = l.d();
  doc["facets"] = nlohmann::ordered_json::array();
  for (const auto& facet : l.facets()) {
    doc["facets"].push_back(std::vector<std::string>(facet.begin(), facet.end()));
  }
  return doc.dump(2) + "\n";
}

FaceLattice lattice_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("lattice JSON: ") + e.what());
  }
  try {
    const int d = doc.at("d").get<int>();
    std::set<VertexSubset> facets;
    for (const auto& jf : doc.at("facets")) {
      const auto v = jf.get<std::vector<std::string>>();
      VertexSubset facet(v.begin(), v.end());
      if (facet.size() != v.size()) {
        throw std::invalid_argument("lattice JSON: repeated label in a facet");
      }
      facets.insert(std::move(facet));
    }
    return FaceLattice(d, std::move(facets));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("lattice JSON: ") + e.what());
  }
}

}  // namespace galeforge
