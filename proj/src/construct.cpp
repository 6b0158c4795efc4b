#include "galeforge/construct.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include <json.hpp>

namespace galeforge {

std::map<std::string, std::string> Correspondence::diagram_to_tree() const {
  std::map<std::string, std::string> inv;
  for (const auto& [t, d] : tree_to_diagram) {
    inv[d] = t;
  }
  return inv;
}

const std::string& Correspondence::at(const std::string& tree_vertex) const {
  const auto it = tree_to_diagram.find(tree_vertex);
  if (it == tree_to_diagram.end()) {
    throw std::invalid_argument("Correspondence: unknown tree vertex '" + tree_vertex + "'");
  }
  return it->second;
}

std::string correspondence_to_json(const Correspondence& c) {
  nlohmann::json doc(c.tree_to_diagram);
  return doc.dump(2) + "\n";
}

bool disjoint_paths(const ThreeTree& t, const std::string& internal_vertex,
                    const std::set<std::string>& three_leaves) {
  if (t.adj.at(internal_vertex).size() != 3) {
    throw std::invalid_argument("disjoint_paths: '" + internal_vertex + "' is not internal");
  }
  if (three_leaves.size() != 3) {
    throw std::invalid_argument("disjoint_paths: need exactly 3 leaves");
  }
  for (const auto& leaf : three_leaves) {
    if (t.adj.at(leaf).size() != 1) {
      throw std::invalid_argument("disjoint_paths: '" + leaf + "' is not a leaf");
    }
  }
  for (const auto& root : t.adj.at(internal_vertex)) {
    // component of t - internal_vertex containing root
    int found = 0;
    std::set<std::string> visited{internal_vertex};
    std::vector<std::string> stack{root};
    while (!stack.empty()) {
      const std::string v = stack.back();
      stack.pop_back();
      if (!visited.insert(v).second) {
        continue;
      }
      if (three_leaves.count(v) != 0) {
        ++found;
      }
      for (const auto& u : t.adj.at(v)) {
        stack.push_back(u);
      }
    }
    if (found != 1) {
      return false;
    }
  }
  return true;
}

namespace {

Point2 rot90_ccw(const Point2& v) {
  return Point2{-v.y, v.x};
}

Point2 sub(const Point2& a, const Point2& b) {
  return Point2{a.x - b.x, a.y - b.y};
}

Point2 add_scaled(const Point2& a, const Point2& v, const Rational& s) {
  return Point2{a.x + v.x * s, a.y + v.y * s};
}

// Positive rational roughly equal to 1/|v|; any positive value keeps the
// supporting normal inside the open normal cone.
Rational approx_inv_norm(const Point2& v) {
  const Rational q = v.x * v.x + v.y * v.y;
  Integer s;
  const Integer prod = q.num() * q.den();
  mpz_sqrt(s.get_mpz_t(), prod.get_mpz_t());
  // sqrt(q) ~ (2s+1) / (2 den), so 1/sqrt(q) ~ 2 den / (2s+1)
  return Rational(2 * q.den(), 2 * s + 1);
}

// Nearest rational with denominator 2^m. Snapping every constructed point to
// a dyadic grid keeps coordinate sizes linear in the recursion depth; the
// exact values only occur transiently.
Rational dyadic_round(const Rational& v, unsigned m) {
  Integer scaled_num = v.num();
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), m);
  scaled_num = 2 * scaled_num + v.den();  // round to nearest: floor(x*2^m + 1/2)
  Integer den2 = 2 * v.den();
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), den2.get_mpz_t());
  Integer pow(1);
  mpz_mul_2exp(pow.get_mpz_t(), pow.get_mpz_t(), m);
  return Rational(q, pow);
}

Point2 dyadic_round(const Point2& p, unsigned m) {
  return Point2{dyadic_round(p.x, m), dyadic_round(p.y, m)};
}

// Consecutive triples all orient Clockwise and every point is a hull vertex.
bool is_clockwise_convex_cycle(const std::vector<Point2>& pts) {
  const auto hull = convex_position_cyclic(pts);
  if (!hull) {
    return false;
  }
  const std::size_t n = hull->size();
  const std::size_t start = (*hull)[0];
  for (std::size_t i = 0; i < n; ++i) {
    if ((*hull)[i] != (start + i) % n) {
      return false;
    }
  }
  return true;
}

std::vector<Point2> clip_by_halfplane(const std::vector<Point2>& poly, const Point2& a,
                                      const Point2& b, Orientation keep) {
  std::vector<Point2> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& cur = poly[i];
    const Point2& nxt = poly[(i + 1) % n];
    const Orientation oc = orient(a, b, cur);
    const Orientation on = orient(a, b, nxt);
    const bool in_cur = oc == keep || oc == Orientation::Collinear;
    const bool in_nxt = on == keep || on == Orientation::Collinear;
    if (in_cur) {
      out.push_back(cur);
    }
    if (in_cur != in_nxt && oc != Orientation::Collinear && on != Orientation::Collinear) {
      const Point2 d = sub(b, a);
      const Rational num = d.x * (cur.y - a.y) - d.y * (cur.x - a.x);
      const Rational den = d.x * (cur.y - nxt.y) - d.y * (cur.x - nxt.x);
      out.push_back(add_scaled(cur, sub(nxt, cur), num / den));
    }
  }
  std::vector<Point2> dedup;
  for (const auto& p : out) {
    if (std::find(dedup.begin(), dedup.end(), p) == dedup.end()) {
      dedup.push_back(p);
    }
  }
  return dedup;
}

std::vector<Point2> triangle_intersection(const std::array<Point2, 3>& t1,
                                          const std::array<Point2, 3>& t2) {
  std::vector<Point2> poly(t1.begin(), t1.end());
  for (std::size_t i = 0; i < 3 && !poly.empty(); ++i) {
    const Point2& a = t2[i];
    const Point2& b = t2[(i + 1) % 3];
    poly = clip_by_halfplane(poly, a, b, orient(a, b, t2[(i + 2) % 3]));
  }
  return poly;
}

struct Working {
  std::vector<DiagramPoint> points;      // labels are tree vertex ids
  std::vector<std::string> cycle;        // black labels, clockwise
};

std::size_t find_point(const Working& w, const std::string& label) {
  for (std::size_t i = 0; i < w.points.size(); ++i) {
    if (w.points[i].label == label) {
      return i;
    }
  }
  throw std::logic_error("build: lost track of '" + label + "'");
}

void clear_denominators(Working& w) {
  Integer l(1);
  for (const auto& p : w.points) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.position.x.den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.position.y.den().get_mpz_t());
  }
  if (l == 1) {
    return;
  }
  const Rational f{l};
  for (auto& p : w.points) {
    p.position.x *= f;
    p.position.y *= f;
  }
}

void encode_subtree_ctx(const ThreeTree& t, const std::string& v, const std::string& parent,
                        std::string& out) {
  const auto& nbrs = t.adj.at(v);
  if (nbrs.size() == 1) {
    out += 'L';
    return;
  }
  const auto it = std::find(nbrs.begin(), nbrs.end(), parent);
  const std::size_t p = static_cast<std::size_t>(it - nbrs.begin());
  out += '(';
  encode_subtree_ctx(t, nbrs[(p + 1) % 3], v, out);
  encode_subtree_ctx(t, nbrs[(p + 2) % 3], v, out);
  out += ')';
}

// Smallest rooted encoding over the three rotation starts; used to pick the
// pre-leaf vertex deterministically.
std::string pre_leaf_context(const ThreeTree& t, const std::string& v) {
  std::string best;
  const auto& nbrs = t.adj.at(v);
  for (std::size_t s = 0; s < 3; ++s) {
    std::string code = "(";
    for (std::size_t i = 0; i < 3; ++i) {
      encode_subtree_ctx(t, nbrs[(s + i) % 3], v, code);
    }
    code += ')';
    if (best.empty() || code < best) {
      best = std::move(code);
    }
  }
  return best;
}

bool general_position_with(const Working& w, const std::vector<Point2>& extra) {
  std::vector<Point2> all;
  all.reserve(w.points.size() + extra.size());
  for (const auto& p : w.points) {
    all.push_back(p.position);
  }
  all.insert(all.end(), extra.begin(), extra.end());
  return general_position(all);
}

Working build_recursive(const ThreeTree& t, const BuildOptions& opts) {
  const auto leaves = t.leaves();
  if (leaves.size() == 3) {
    const std::string w = t.internals()[0];
    const auto& rot = t.adj.at(w);
    const Rational s(opts.base_scale);
    Working base;
    base.points.push_back({rot[0], Color::Black, {Rational(0), Rational(0)}});
    base.points.push_back({rot[1], Color::Black, {Rational(0), s}});
    base.points.push_back({rot[2], Color::Black, {s, Rational(0)}});
    base.points.push_back({w, Color::White, {Rational(1), Rational(1)}});
    base.cycle = {rot[0], rot[1], rot[2]};
    return base;
  }

  // Deterministic pre-leaf vertex choice.
  std::string v;
  std::string v_ctx;
  for (const auto& cand : t.internals()) {
    int leaf_nbrs = 0;
    for (const auto& u : t.adj.at(cand)) {
      leaf_nbrs += t.adj.at(u).size() == 1 ? 1 : 0;
    }
    if (leaf_nbrs != 2) {
      continue;
    }
    std::string ctx = pre_leaf_context(t, cand);
    if (v.empty() || std::tie(ctx, cand) < std::tie(v_ctx, v)) {
      v = cand;
      v_ctx = std::move(ctx);
    }
  }
  if (v.empty()) {
    throw std::logic_error("build: no pre-leaf vertex");
  }

  const auto& rot = t.adj.at(v);
  std::string parent;
  for (const auto& u : rot) {
    if (t.adj.at(u).size() == 3) {
      parent = u;
    }
  }
  const auto pit = std::find(rot.begin(), rot.end(), parent);
  const std::size_t p = static_cast<std::size_t>(pit - rot.begin());
  const std::string c1 = rot[(p + 1) % 3];
  const std::string c2 = rot[(p + 2) % 3];

  ThreeTree contracted = t;
  contracted.adj.erase(c1);
  contracted.adj.erase(c2);
  contracted.adj[v] = {parent};

  Working w = build_recursive(contracted, opts);

  // Split the black point of v: a new black goes clockwise-after it on a
  // supporting line, a new white into the intersection of the two boundary
  // triangles of the fresh side.
  const std::size_t m = w.cycle.size();
  const std::size_t iv = static_cast<std::size_t>(
      std::find(w.cycle.begin(), w.cycle.end(), v) - w.cycle.begin());
  const Point2 a_i = w.points[find_point(w, v)].position;
  const Point2 a_prev = w.points[find_point(w, w.cycle[(iv + m - 1) % m])].position;
  const Point2 a_next = w.points[find_point(w, w.cycle[(iv + 1) % m])].position;

  // Supporting line at a_i whose normal approximately bisects the normal
  // cone spanned by the outward normals of the two incident hull edges. The
  // direction is snapped to a dyadic grid; any direction whose line keeps all
  // other points strictly on one side works.
  const Point2 n1 = rot90_ccw(sub(a_i, a_prev));
  const Point2 n2 = rot90_ccw(sub(a_next, a_i));
  const Rational w1 = approx_inv_norm(n1);
  const Rational w2 = approx_inv_norm(n2);
  const Point2 normal{n1.x * w1 + n2.x * w2, n1.y * w1 + n2.y * w2};
  const Point2 u_exact = rot90_ccw(normal);
  const Rational u_scale = std::max(u_exact.x.sign() < 0 ? -u_exact.x : u_exact.x,
                                    u_exact.y.sign() < 0 ? -u_exact.y : u_exact.y);
  const Point2 u_unit{u_exact.x / u_scale, u_exact.y / u_scale};
  Point2 u;
  bool have_u = false;
  for (unsigned grid = 0; grid <= 64 && !have_u; ++grid) {
    const Point2 cand = dyadic_round(u_unit, grid);
    if (cand.x.is_zero() && cand.y.is_zero()) {
      continue;
    }
    int support_sign = 0;
    bool supporting = true;
    for (const auto& pt : w.points) {
      if (pt.label == v) {
        continue;
      }
      const int s =
          (cand.x * (pt.position.y - a_i.y) - cand.y * (pt.position.x - a_i.x)).sign();
      if (s == 0 || (support_sign != 0 && s != support_sign)) {
        supporting = false;
        break;
      }
      support_sign = s;
    }
    if (supporting) {
      u = cand;
      have_u = true;
    }
  }
  if (!have_u) {
    throw std::logic_error("build: no dyadic supporting direction");
  }
  if (orient(a_prev, a_i, Point2{a_i.x + u.x, a_i.y + u.y}) != Orientation::Clockwise) {
    u = Point2{-u.x, -u.y};
  }

  // Intended new clockwise cycle: ..., v (at a_i), c2 (at a_i + eps u), ...
  std::vector<std::string> new_cycle = w.cycle;
  new_cycle.insert(new_cycle.begin() + static_cast<std::ptrdiff_t>(iv) + 1, c2);

  std::vector<std::string> old_blacks_except_v;
  for (const auto& label : w.cycle) {
    if (label != v) {
      old_blacks_except_v.push_back(label);
    }
  }
  std::vector<Point2> whites;
  for (const auto& pt : w.points) {
    if (pt.color == Color::White) {
      whites.push_back(pt.position);
    }
  }

  Rational eps = opts.initial_epsilon;
  int remaining_accepts = opts.extra_shrink;
  Point2 a_new;
  bool placed = false;
  for (int iter = 0; iter < 256 && !placed; ++iter, eps /= Rational(2)) {
    const Point2 cand = add_scaled(a_i, u, eps);
    std::vector<Point2> cycle_positions;
    for (const auto& label : new_cycle) {
      cycle_positions.push_back(label == c2 ? cand : w.points[find_point(w, label)].position);
    }
    if (!is_clockwise_convex_cycle(cycle_positions)) {
      continue;
    }
    bool sides_ok = true;
    for (const auto& pl : old_blacks_except_v) {
      const Point2 pp = w.points[find_point(w, pl)].position;
      for (const auto& wp : whites) {
        if (orient(pp, cand, wp) != orient(pp, a_i, wp)) {
          sides_ok = false;
          break;
        }
      }
      if (!sides_ok) {
        break;
      }
    }
    if (!sides_ok || !general_position_with(w, {cand})) {
      continue;
    }
    if (remaining_accepts-- > 0) {
      continue;
    }
    a_new = cand;
    placed = true;
  }
  if (!placed) {
    throw std::logic_error("build: epsilon halving did not stabilize");
  }

  const auto q = triangle_intersection({a_prev, a_i, a_new}, {a_i, a_new, a_next});
  if (q.size() < 3 || !std::any_of(q.begin(), q.end(), [&](const Point2& pt) {
        return orient(q[0], q[1], pt) != Orientation::Collinear;
      })) {
    throw std::logic_error("build: degenerate triangle intersection");
  }
  Point2 centroid{Rational(0), Rational(0)};
  for (const auto& pt : q) {
    centroid.x += pt.x;
    centroid.y += pt.y;
  }
  const Rational inv_count = Rational(1) / Rational(static_cast<long>(q.size()));
  centroid.x *= inv_count;
  centroid.y *= inv_count;

  // Snap the white toward the centroid on a refining dyadic grid; membership
  // in both triangles and general position are open conditions.
  Point2 b;
  bool have_b = false;
  for (unsigned grid = 0; grid <= 96 && !have_b; ++grid) {
    const Point2 cand = dyadic_round(centroid, grid);
    if (point_in_triangle_strict(cand, a_prev, a_i, a_new) &&
        point_in_triangle_strict(cand, a_i, a_new, a_next) &&
        general_position_with(w, {a_new, cand})) {
      b = cand;
      have_b = true;
    }
  }
  if (!have_b) {
    // Exact fallback: walk from the shared edge toward the centroid.
    std::vector<Point2> all;
    for (const auto& pt : w.points) {
      all.push_back(pt.position);
    }
    all.push_back(a_new);
    for (long j = 1; j <= 256 && !have_b; ++j) {
      const Point2 target = add_scaled(a_i, sub(a_new, a_i), Rational(j, j + 1));
      int on_line = 0;
      for (const auto& pt : all) {
        if (orient(centroid, target, pt) == Orientation::Collinear) {
          ++on_line;
        }
      }
      if (on_line >= 2) {
        continue;
      }
      Rational step(1, 2);
      for (int k = 0; k < 512 && !have_b; ++k, step /= Rational(2)) {
        const Point2 cand = add_scaled(target, sub(centroid, target), step);
        if (general_position_with(w, {a_new, cand})) {
          b = cand;
          have_b = true;
        }
      }
    }
    if (!have_b) {
      throw std::logic_error("build: could not place the new white in general position");
    }
  }

  // v's point becomes c1 (same coordinates); c2 is the new black; v becomes
  // the new white between them.
  w.points[find_point(w, v)].label = c1;
  w.points.push_back({c2, Color::Black, a_new});
  w.points.push_back({v, Color::White, b});
  w.cycle[iv] = c1;
  w.cycle.insert(w.cycle.begin() + static_cast<std::ptrdiff_t>(iv) + 1, c2);
  clear_denominators(w);
  return w;
}

}  // namespace

std::pair<Diagram, Correspondence> build_diagram(const ThreeTree& t, const BuildOptions& opts) {
  t.validate();
  if (t.num_leaves() < 3) {
    throw std::invalid_argument("build_diagram: need at least 3 leaves");
  }
  if (opts.base_scale < 3) {
    throw std::invalid_argument("build_diagram: base_scale must be at least 3");
  }
  if (opts.initial_epsilon.sign() <= 0) {
    throw std::invalid_argument("build_diagram: initial_epsilon must be positive");
  }
  Working w = build_recursive(t, opts);

  Correspondence corr;
  std::vector<DiagramPoint> final_points;
  int next_white = 0;
  for (std::size_t i = 0; i < w.cycle.size(); ++i) {
    corr.tree_to_diagram[w.cycle[i]] = "A" + std::to_string(i + 1);
  }
  for (const auto& p : w.points) {
    if (p.color == Color::White) {
      corr.tree_to_diagram[p.label] = "B" + std::to_string(++next_white);
    }
  }
  for (const auto& p : w.points) {
    final_points.push_back({corr.tree_to_diagram.at(p.label), p.color, p.position});
  }
  std::vector<std::string> final_cycle;
  for (const auto& label : w.cycle) {
    final_cycle.push_back(corr.tree_to_diagram.at(label));
  }
  Diagram diagram(static_cast<int>(t.num_leaves()) - 3, std::move(final_points),
                  std::move(final_cycle));
  if (!is_t_diagram(diagram)) {
    throw std::logic_error("build_diagram: result failed the t-diagram check");
  }
  if (!is_characteristic(t, diagram, corr)) {
    throw std::logic_error("build_diagram: input tree is not characteristic for the result");
  }
  return {std::move(diagram), std::move(corr)};
}

namespace {

std::pair<ThreeTree, Correspondence> extract_recursive(const Diagram& x, AdjacentWhitePick pick) {
  const auto cycle = black_cycle_or_compute(x);
  if (x.d() == 0) {
    ThreeTree t;
    const std::string w = x.white_labels()[0];
    t.adj[w] = {cycle[0], cycle[1], cycle[2]};
    for (const auto& label : cycle) {
      t.adj[label] = {w};
    }
    Correspondence corr;
    for (const auto& label : x.labels()) {
      corr.tree_to_diagram[label] = label;
    }
    return {std::move(t), std::move(corr)};
  }

  // Whites adjacent to a side, in side order around the cycle; a t-diagram
  // with d > 0 always has at least two.
  std::vector<std::pair<std::size_t, std::string>> adjacent;
  const std::size_t m = cycle.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& wl : x.white_labels()) {
      if (white_adjacent_to_side(x, cycle[i], cycle[(i + 1) % m], wl)) {
        adjacent.emplace_back(i, wl);
      }
    }
  }
  if (adjacent.empty()) {
    throw std::logic_error("extract_tree: no side-adjacent white");
  }
  const auto& [side, b] = pick == AdjacentWhitePick::First ? adjacent.front() : adjacent.back();
  const std::string a_i = cycle[side];
  const std::string a_next = cycle[(side + 1) % m];

  const Diagram reduced = remove_pair(x, a_i, b);
  auto [sub_tree, sub_corr] = extract_recursive(reduced, pick);

  // Undo one reduction step: the leaf that stood for A_{i+1} becomes the
  // internal vertex of B; fresh leaves take A_i and A_{i+1}, clockwise.
  ThreeTree t = std::move(sub_tree);
  const std::string parent = t.adj.at(a_next)[0];
  auto& parent_nbrs = t.adj.at(parent);
  std::replace(parent_nbrs.begin(), parent_nbrs.end(), a_next, b);
  t.adj.erase(a_next);
  t.adj[b] = {parent, a_i, a_next};
  t.adj[a_i] = {b};
  t.adj[a_next] = {b};

  Correspondence corr;
  for (const auto& label : x.labels()) {
    corr.tree_to_diagram[label] = label;
  }
  return {std::move(t), std::move(corr)};
}

}  // namespace

std::pair<ThreeTree, Correspondence> extract_tree(const Diagram& x, AdjacentWhitePick pick) {
  if (!is_t_diagram(x)) {
    throw std::invalid_argument("extract_tree: not a t-diagram");
  }
  auto result = extract_recursive(x, pick);
  result.first.validate();
  return result;
}

bool is_characteristic(const ThreeTree& t, const Diagram& x, const Correspondence& c) {
  // Condition 1: bijection with leaves on blacks, internals on whites.
  if (c.tree_to_diagram.size() != x.size() || t.num_vertices() != x.size()) {
    return false;
  }
  std::set<std::string> hit;
  for (const auto& [tv, dl] : c.tree_to_diagram) {
    if (t.adj.count(tv) == 0 || !x.has_label(dl) || !hit.insert(dl).second) {
      return false;
    }
    const bool leaf = t.adj.at(tv).size() == 1;
    const bool black = x.point(dl).color == Color::Black;
    if (leaf != black) {
      return false;
    }
  }

  std::vector<std::string> cycle;
  try {
    cycle = black_cycle_or_compute(x);
  } catch (const std::invalid_argument&) {
    return false;
  }

  // Condition 2: unoriented leaf cycle equals the unoriented black cycle.
  CyclicOrder tree_order = leaf_cyclic_order(t);
  for (auto& item : tree_order.items) {
    item = c.at(item);
  }
  if (!tree_order.same_unoriented(CyclicOrder{cycle})) {
    return false;
  }

  // Condition 3: triangle membership matches the disjoint-path relation.
  const auto inv = c.diagram_to_tree();
  for (const auto& wl : x.white_labels()) {
    const Point2& wp = x.point(wl).position;
    const std::string& wv = inv.at(wl);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      for (std::size_t j = i + 1; j < cycle.size(); ++j) {
        for (std::size_t k = j + 1; k < cycle.size(); ++k) {
          const bool inside = point_in_triangle_strict(wp, x.point(cycle[i]).position,
                                                       x.point(cycle[j]).position,
                                                       x.point(cycle[k]).position);
          const bool paths = disjoint_paths(
              t, wv, {inv.at(cycle[i]), inv.at(cycle[j]), inv.at(cycle[k])});
          if (inside != paths) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

namespace {

using Triple = std::array<std::string, 3>;

// For each white label, the set of black triples strictly containing it.
std::map<std::string, std::set<Triple>> white_signatures(const Diagram& x,
                                                         const std::vector<std::string>& cycle) {
  std::map<std::string, std::set<Triple>> sig;
  for (const auto& wl : x.white_labels()) {
    sig[wl] = {};
    const Point2& wp = x.point(wl).position;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      for (std::size_t j = i + 1; j < cycle.size(); ++j) {
        for (std::size_t k = j + 1; k < cycle.size(); ++k) {
          if (point_in_triangle_strict(wp, x.point(cycle[i]).position,
                                       x.point(cycle[j]).position, x.point(cycle[k]).position)) {
            Triple tr{cycle[i], cycle[j], cycle[k]};
            std::sort(tr.begin(), tr.end());
            sig[wl].insert(tr);
          }
        }
      }
    }
  }
  return sig;
}

std::set<Triple> map_signature(const std::set<Triple>& sig,
                               const std::map<std::string, std::string>& black_map) {
  std::set<Triple> out;
  for (const auto& tr : sig) {
    Triple mapped{black_map.at(tr[0]), black_map.at(tr[1]), black_map.at(tr[2])};
    std::sort(mapped.begin(), mapped.end());
    out.insert(mapped);
  }
  return out;
}

}  // namespace

std::optional<std::map<std::string, std::string>> diagonal_equivalent(const Diagram& x,
                                                                      const Diagram& y) {
  if (!is_t_diagram(x) || !is_t_diagram(y)) {
    throw std::invalid_argument("diagonal_equivalent: inputs must be t-diagrams");
  }
  if (x.d() != y.d()) {
    return std::nullopt;
  }
  const auto cx = black_cycle_or_compute(x);
  const auto cy = black_cycle_or_compute(y);
  const std::size_t m = cx.size();
  const auto sig_x = white_signatures(x, cx);
  const auto sig_y = white_signatures(y, cy);
  std::map<std::set<Triple>, std::string> y_by_sig;
  for (const auto& [wl, sig] : sig_y) {
    if (!y_by_sig.emplace(sig, wl).second) {
      throw std::logic_error("diagonal_equivalent: duplicate white signature");
    }
  }

  for (std::size_t s = 0; s < m; ++s) {
    for (const bool reflect : {false, true}) {
      std::map<std::string, std::string> map;
      for (std::size_t k = 0; k < m; ++k) {
        const std::size_t target = reflect ? (s + m - k % m) % m : (s + k) % m;
        map[cx[k]] = cy[target];
      }
      bool ok = true;
      for (const auto& [wl, sig] : sig_x) {
        const auto it = y_by_sig.find(map_signature(sig, map));
        if (it == y_by_sig.end()) {
          ok = false;
          break;
        }
        map[wl] = it->second;
      }
      if (ok) {
        return map;
      }
    }
  }
  return std::nullopt;
}

bool comb_equivalent(const Diagram& x, const Diagram& y) {
  std::vector<Point2> px, py;
  for (const auto& p : x.points()) {
    px.push_back(p.position);
  }
  for (const auto& p : y.points()) {
    py.push_back(p.position);
  }
  if (!general_position(px) || !general_position(py)) {
    throw std::invalid_argument("comb_equivalent: inputs must be in general position");
  }
  if (x.d() != y.d() || x.black_labels().size() != y.black_labels().size()) {
    return false;
  }
  const auto cx = black_cycle_or_compute(x);
  const auto cy = black_cycle_or_compute(y);
  const std::size_t m = cx.size();
  const auto sig_x = white_signatures(x, cx);
  const auto sig_y = white_signatures(y, cy);

  const auto labels_x = x.labels();
  const auto verify = [&](const std::map<std::string, std::string>& map) {
    int mode = 0;  // 0 unknown, +1 preserving, -1 reversing
    for (std::size_t i = 0; i < labels_x.size(); ++i) {
      for (std::size_t j = i + 1; j < labels_x.size(); ++j) {
        for (std::size_t k = j + 1; k < labels_x.size(); ++k) {
          const Orientation ox = orient(x.point(labels_x[i]).position,
                                        x.point(labels_x[j]).position,
                                        x.point(labels_x[k]).position);
          const Orientation oy = orient(y.point(map.at(labels_x[i])).position,
                                        y.point(map.at(labels_x[j])).position,
                                        y.point(map.at(labels_x[k])).position);
          if (ox == Orientation::Collinear || oy == Orientation::Collinear) {
            return false;
          }
          const int rel = ox == oy ? 1 : -1;
          if (mode == 0) {
            mode = rel;
          } else if (mode != rel) {
            return false;
          }
        }
      }
    }
    return true;
  };

  for (std::size_t s = 0; s < m; ++s) {
    for (const bool reflect : {false, true}) {
      std::map<std::string, std::string> map;
      for (std::size_t k = 0; k < m; ++k) {
        const std::size_t target = reflect ? (s + m - k % m) % m : (s + k) % m;
        map[cx[k]] = cy[target];
      }
      // Classes of whites sharing a mapped signature; try every assignment
      // within each class (classes are singletons for t-diagrams).
      std::map<std::set<Triple>, std::vector<std::string>> x_classes, y_classes;
      for (const auto& [wl, sig] : sig_x) {
        x_classes[map_signature(sig, map)].push_back(wl);
      }
      for (const auto& [wl, sig] : sig_y) {
        y_classes[sig].push_back(wl);
      }
      if (x_classes.size() != y_classes.size()) {
        continue;
      }
      bool shape_ok = true;
      for (const auto& [sig, xs] : x_classes) {
        const auto it = y_classes.find(sig);
        if (it == y_classes.end() || it->second.size() != xs.size()) {
          shape_ok = false;
          break;
        }
      }
      if (!shape_ok) {
        continue;
      }
      // Backtracking over per-class permutations.
      std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> classes;
      for (const auto& [sig, xs] : x_classes) {
        classes.emplace_back(xs, y_classes.at(sig));
      }
      std::function<bool(std::size_t)> assign = [&](std::size_t ci) -> bool {
        if (ci == classes.size()) {
          return verify(map);
        }
        auto& [xs, ys] = classes[ci];
        std::sort(ys.begin(), ys.end());
        do {
          for (std::size_t i = 0; i < xs.size(); ++i) {
            map[xs[i]] = ys[i];
          }
          if (assign(ci + 1)) {
            return true;
          }
        } while (std::next_permutation(ys.begin(), ys.end()));
        for (const auto& xl : xs) {
          map.erase(xl);
        }
        return false;
      };
      if (assign(0)) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace galeforge
