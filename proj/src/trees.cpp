#include "galeforge/trees.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace galeforge {

void ThreeTree::validate() const {
  if (adj.empty()) {
    throw std::invalid_argument("ThreeTree: empty");
  }
  std::size_t degree_sum = 0;
  for (const auto& [v, nbrs] : adj) {
    if (nbrs.size() != 1 && nbrs.size() != 3) {
      throw std::invalid_argument("ThreeTree: vertex '" + v + "' has degree " +
                                  std::to_string(nbrs.size()));
    }
    degree_sum += nbrs.size();
    std::set<std::string> seen;
    for (const auto& u : nbrs) {
      if (u == v) {
        throw std::invalid_argument("ThreeTree: self-loop at '" + v + "'");
      }
      if (!seen.insert(u).second) {
        throw std::invalid_argument("ThreeTree: repeated neighbor at '" + v + "'");
      }
      const auto it = adj.find(u);
      if (it == adj.end() ||
          std::find(it->second.begin(), it->second.end(), v) == it->second.end()) {
        throw std::invalid_argument("ThreeTree: asymmetric edge " + v + "-" + u);
      }
    }
  }
  if (degree_sum != 2 * (adj.size() - 1)) {
    throw std::invalid_argument("ThreeTree: not a tree (edge count)");
  }
  // connectivity
  std::set<std::string> reached;
  std::vector<std::string> stack{adj.begin()->first};
  while (!stack.empty()) {
    const std::string v = stack.back();
    stack.pop_back();
    if (!reached.insert(v).second) {
      continue;
    }
    for (const auto& u : adj.at(v)) {
      stack.push_back(u);
    }
  }
  if (reached.size() != adj.size()) {
    throw std::invalid_argument("ThreeTree: not connected");
  }
}

bool ThreeTree::is_leaf(const std::string& v) const {
  return adj.at(v).size() == 1;
}

std::vector<std::string> ThreeTree::leaves() const {
  std::vector<std::string> out;
  for (const auto& [v, nbrs] : adj) {
    if (nbrs.size() == 1) {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<std::string> ThreeTree::internals() const {
  std::vector<std::string> out;
  for (const auto& [v, nbrs] : adj) {
    if (nbrs.size() == 3) {
      out.push_back(v);
    }
  }
  return out;
}

std::size_t ThreeTree::num_leaves() const {
  return leaves().size();
}

bool CyclicOrder::same_cycle(const CyclicOrder& other) const {
  const std::size_t n = items.size();
  if (other.items.size() != n) {
    return false;
  }
  if (n == 0) {
    return true;
  }
  for (std::size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = items[i] == other.items[(i + s) % n];
    }
    if (ok) {
      return true;
    }
  }
  return false;
}

bool CyclicOrder::same_unoriented(const CyclicOrder& other) const {
  return same_cycle(other) || same_cycle(other.reversed());
}

CyclicOrder CyclicOrder::reversed() const {
  CyclicOrder r = *this;
  std::reverse(r.items.begin(), r.items.end());
  return r;
}

CyclicOrder leaf_cyclic_order(const ThreeTree& t) {
  t.validate();
  if (t.num_vertices() < 4) {
    throw std::invalid_argument("leaf_cyclic_order: need at least 4 vertices");
  }
  const auto lvs = t.leaves();
  const std::string start = *std::min_element(lvs.begin(), lvs.end());
  CyclicOrder order;
  order.items.push_back(start);
  std::string from = start;
  std::string to = t.adj.at(start)[0];
  const std::size_t guard = 4 * t.num_vertices() + 8;
  for (std::size_t step = 0; step < guard; ++step) {
    const auto& nbrs = t.adj.at(to);
    if (nbrs.size() == 1) {
      if (to == start) {
        return order;
      }
      order.items.push_back(to);
      std::swap(from, to);
      to = t.adj.at(from)[0];
    } else {
      const auto it = std::find(nbrs.begin(), nbrs.end(), from);
      const std::size_t pos = static_cast<std::size_t>(it - nbrs.begin());
      from = to;
      to = nbrs[(pos + 1) % 3];
    }
  }
  throw std::logic_error("leaf_cyclic_order: face walk did not close");
}

ThreeTree mirror(const ThreeTree& t) {
  ThreeTree m = t;
  for (auto& [v, nbrs] : m.adj) {
    if (nbrs.size() == 3) {
      std::reverse(nbrs.begin(), nbrs.end());
    }
  }
  return m;
}

namespace {

void encode_subtree(const ThreeTree& t, const std::string& v, const std::string& parent,
                    std::string& out) {
  const auto& nbrs = t.adj.at(v);
  if (nbrs.size() == 1) {
    out += 'L';
    return;
  }
  const auto it = std::find(nbrs.begin(), nbrs.end(), parent);
  const std::size_t p = static_cast<std::size_t>(it - nbrs.begin());
  out += '(';
  encode_subtree(t, nbrs[(p + 1) % 3], v, out);
  encode_subtree(t, nbrs[(p + 2) % 3], v, out);
  out += ')';
}

std::string encode_rooted(const ThreeTree& t, const std::string& root, std::size_t start) {
  const auto& nbrs = t.adj.at(root);
  std::string out = "(";
  for (std::size_t i = 0; i < 3; ++i) {
    encode_subtree(t, nbrs[(start + i) % 3], root, out);
  }
  out += ')';
  return out;
}

std::string min_code_one_side(const ThreeTree& t) {
  std::string best;
  for (const auto& root : t.internals()) {
    for (std::size_t s = 0; s < 3; ++s) {
      std::string code = encode_rooted(t, root, s);
      if (best.empty() || code < best) {
        best = std::move(code);
      }
    }
  }
  return best;
}

}  // namespace

std::string canonical_code(const ThreeTree& t, bool up_to_mirror) {
  t.validate();
  if (t.internals().empty()) {
    return "LL";  // the 2-vertex tree
  }
  std::string code = min_code_one_side(t);
  if (up_to_mirror) {
    std::string m = min_code_one_side(mirror(t));
    if (m < code) {
      code = std::move(m);
    }
  }
  return code;
}

bool is_isomorphic(const ThreeTree& t1, const ThreeTree& t2, bool up_to_mirror) {
  return canonical_code(t1, up_to_mirror) == canonical_code(t2, up_to_mirror);
}

namespace {

// Relabel deterministically: preorder of the rooted encoding achieving the
// canonical code; internals become v1, v2, ..., leaves x1, x2, ...
ThreeTree relabel_canonical(const ThreeTree& t) {
  std::string best;
  std::string best_root;
  std::size_t best_start = 0;
  for (const auto& root : t.internals()) {
    for (std::size_t s = 0; s < 3; ++s) {
      std::string code = encode_rooted(t, root, s);
      if (best.empty() || code < best) {
        best = std::move(code);
        best_root = root;
        best_start = s;
      }
    }
  }
  std::map<std::string, std::string> rename;
  int next_leaf = 0;
  int next_internal = 0;
  const std::function<void(const std::string&, const std::string&)> visit =
      [&](const std::string& v, const std::string& parent) {
        const auto& nbrs = t.adj.at(v);
        if (nbrs.size() == 1) {
          rename[v] = "x" + std::to_string(++next_leaf);
          return;
        }
        rename[v] = "v" + std::to_string(++next_internal);
        const auto it = std::find(nbrs.begin(), nbrs.end(), parent);
        const std::size_t p = static_cast<std::size_t>(it - nbrs.begin());
        visit(nbrs[(p + 1) % 3], v);
        visit(nbrs[(p + 2) % 3], v);
      };
  rename[best_root] = "v" + std::to_string(++next_internal);
  const auto& rn = t.adj.at(best_root);
  for (std::size_t i = 0; i < 3; ++i) {
    visit(rn[(best_start + i) % 3], best_root);
  }
  ThreeTree out;
  for (const auto& [v, nbrs] : t.adj) {
    std::vector<std::string> mapped;
    mapped.reserve(nbrs.size());
    for (const auto& u : nbrs) {
      mapped.push_back(rename.at(u));
    }
    out.adj[rename.at(v)] = std::move(mapped);
  }
  return out;
}

}  // namespace

std::vector<ThreeTree> enumerate_trees(int num_leaves) {
  if (num_leaves < 3) {
    throw std::invalid_argument("enumerate_trees: need at least 3 leaves");
  }
  ThreeTree star;
  star.adj["v1"] = {"x1", "x2", "x3"};
  star.adj["x1"] = {"v1"};
  star.adj["x2"] = {"v1"};
  star.adj["x3"] = {"v1"};
  std::map<std::string, ThreeTree> level;
  level[canonical_code(star, true)] = star;

  for (int n = 4; n <= num_leaves; ++n) {
    std::map<std::string, ThreeTree> next;
    for (const auto& [code, t] : level) {
      for (const auto& leaf : t.leaves()) {
        // Replace the leaf by an internal vertex carrying two new leaves, in
        // each of the two rotation choices.
        const std::string a = "x" + std::to_string(t.num_vertices() + 1);
        const std::string b = "x" + std::to_string(t.num_vertices() + 2);
        for (int flip = 0; flip < 2; ++flip) {
          ThreeTree grown = t;
          const std::string parent = grown.adj.at(leaf)[0];
          grown.adj[leaf] = flip == 0 ? std::vector<std::string>{parent, a, b}
                                      : std::vector<std::string>{parent, b, a};
          grown.adj[a] = {leaf};
          grown.adj[b] = {leaf};
          next.emplace(canonical_code(grown, true), std::move(grown));
        }
      }
    }
    level = std::move(next);
  }

  std::vector<ThreeTree> out;
  out.reserve(level.size());
  for (const auto& [code, t] : level) {
    out.push_back(relabel_canonical(t));
  }
  return out;
}

Integer catalan(long x) {
  if (x < 0) {
    throw std::invalid_argument("catalan: negative index");
  }
  Integer c = binomial(2 * x, x);
  Integer r;
  mpz_divexact_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(x + 1));
  return r;
}

Integer count_t_diagrams(int d) {
  if (d <= 0) {
    throw std::invalid_argument("count_t_diagrams: requires d > 0");
  }
  Rational total = Rational(catalan(d + 1)) / Rational(2 * (d + 3));
  if ((d + 3) % 2 == 0) {
    total += Rational(3) * Rational(catalan((d + 3) / 2 - 1)) / Rational(4);
  }
  if ((d + 3) % 3 == 0) {
    total += Rational(catalan((d + 3) / 3 - 1)) / Rational(3);
  }
  if (d % 2 == 0) {
    total += Rational(catalan(d / 2)) / Rational(2);
  }
  if (total.den() != 1) {
    throw std::logic_error("count_t_diagrams: non-integral total " + total.str());
  }
  return total.num();
}

namespace {

struct TreeParser {
  std::string_view text;
  std::size_t pos = 0;
  ThreeTree tree;
  int next_internal = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  char peek() {
    skip_space();
    if (pos >= text.size()) {
      throw std::invalid_argument("tree parse: unexpected end of input");
    }
    return text[pos];
  }

  void expect(char c) {
    if (peek() != c) {
      throw std::invalid_argument(std::string("tree parse: expected '") + c + "' at offset " +
                                  std::to_string(pos));
    }
    ++pos;
  }

  std::string fresh_internal() {
    std::string name;
    do {
      name = "n" + std::to_string(++next_internal);
    } while (tree.adj.count(name) != 0);
    return name;
  }

  std::string parse_label() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    if (pos == start) {
      throw std::invalid_argument("tree parse: expected a label at offset " + std::to_string(pos));
    }
    std::string label(text.substr(start, pos - start));
    if (tree.adj.count(label) != 0) {
      throw std::invalid_argument("tree parse: duplicate leaf label '" + label + "'");
    }
    return label;
  }

  // Returns the node's vertex id; the caller wires the parent edge.
  std::string parse_node() {
    if (peek() != '(') {
      const std::string label = parse_label();
      tree.adj[label] = {};
      return label;
    }
    expect('(');
    const std::string me = fresh_internal();
    tree.adj[me] = {};
    const std::string c1 = parse_node();
    expect(',');
    const std::string c2 = parse_node();
    expect(')');
    // rotation continues clockwise after the parent edge; parent prepended later
    tree.adj[me] = {c1, c2};
    tree.adj[c1].insert(tree.adj[c1].begin(), me);
    tree.adj[c2].insert(tree.adj[c2].begin(), me);
    return me;
  }

  ThreeTree parse_root() {
    expect('(');
    const std::string root = fresh_internal();
    tree.adj[root] = {};
    const std::string c1 = parse_node();
    expect(',');
    const std::string c2 = parse_node();
    expect(',');
    const std::string c3 = parse_node();
    expect(')');
    skip_space();
    if (pos != text.size()) {
      throw std::invalid_argument("tree parse: trailing input at offset " + std::to_string(pos));
    }
    tree.adj[root] = {c1, c2, c3};
    tree.adj[c1].insert(tree.adj[c1].begin(), root);
    tree.adj[c2].insert(tree.adj[c2].begin(), root);
    tree.adj[c3].insert(tree.adj[c3].begin(), root);
    return tree;
  }
};

void format_subtree(const ThreeTree& t, const std::string& v, const std::string& parent,
                    std::string& out) {
  const auto& nbrs = t.adj.at(v);
  if (nbrs.size() == 1) {
    out += v;
    return;
  }
  const auto it = std::find(nbrs.begin(), nbrs.end(), parent);
  const std::size_t p = static_cast<std::size_t>(it - nbrs.begin());
  out += '(';
  format_subtree(t, nbrs[(p + 1) % 3], v, out);
  out += ',';
  format_subtree(t, nbrs[(p + 2) % 3], v, out);
  out += ')';
}

}  // namespace

ThreeTree parse_tree(std::string_view text) {
  TreeParser parser{text, 0, {}, 0};
  ThreeTree t = parser.parse_root();
  t.validate();
  return t;
}

std::string format_tree(const ThreeTree& t) {
  t.validate();
  if (t.internals().empty()) {
    throw std::invalid_argument("format_tree: need an internal vertex");
  }
  // Root at the encoding that realizes the canonical code, for determinism.
  std::string best;
  std::string best_root;
  std::size_t best_start = 0;
  for (const auto& root : t.internals()) {
    for (std::size_t s = 0; s < 3; ++s) {
      std::string code = encode_rooted(t, root, s);
      if (best.empty() || code < best) {
        best = std::move(code);
        best_root = root;
        best_start = s;
      }
    }
  }
  std::string out = "(";
  const auto& nbrs = t.adj.at(best_root);
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != 0) {
      out += ',';
    }
    format_subtree(t, nbrs[(best_start + i) % 3], best_root, out);
  }
  out += ')';
  return out;
}

std::string tree_to_dot(const ThreeTree& t) {
  t.validate();
  std::ostringstream out;
  out << "graph three_tree {\n";
  for (const auto& [v, nbrs] : t.adj) {
    if (nbrs.size() == 3) {
      out << "  // rotation " << v << ": " << nbrs[0] << "," << nbrs[1] << "," << nbrs[2] << "\n";
    }
  }
  for (const auto& [v, nbrs] : t.adj) {
    if (nbrs.size() == 1) {
      out << "  \"" << v << "\" [shape=box];\n";
    }
  }
  for (const auto& [v, nbrs] : t.adj) {
    for (const auto& u : nbrs) {
      if (v < u) {
        out << "  \"" << v << "\" -- \"" << u << "\";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace galeforge
