#include <doctest.h>

#include <random>

#include "galeforge/trees.hpp"

using namespace galeforge;

namespace {

ThreeTree star() {
  ThreeTree t;
  t.adj["c"] = {"x", "y", "z"};
  t.adj["x"] = {"c"};
  t.adj["y"] = {"c"};
  t.adj["z"] = {"c"};
  return t;
}

// Internal path v1-v2-v3; leaves a,b at v1, c at v2, d,e at v3.
ThreeTree caterpillar5() {
  ThreeTree t;
  t.adj["v1"] = {"a", "b", "v2"};
  t.adj["v2"] = {"v1", "c", "v3"};
  t.adj["v3"] = {"v2", "d", "e"};
  t.adj["a"] = {"v1"};
  t.adj["b"] = {"v1"};
  t.adj["c"] = {"v2"};
  t.adj["d"] = {"v3"};
  t.adj["e"] = {"v3"};
  return t;
}

ThreeTree random_tree(std::mt19937_64& rng, int leaves) {
  ThreeTree t = star();
  int id = 0;
  for (int n = 3; n < leaves; ++n) {
    auto lvs = t.leaves();
    std::uniform_int_distribution<std::size_t> pick(0, lvs.size() - 1);
    const std::string leaf = lvs[pick(rng)];
    const std::string parent = t.adj.at(leaf)[0];
    const std::string a = "r" + std::to_string(++id);
    const std::string b = "r" + std::to_string(++id);
    t.adj[leaf] = rng() % 2 == 0 ? std::vector<std::string>{parent, a, b}
                                 : std::vector<std::string>{parent, b, a};
    t.adj[a] = {leaf};
    t.adj[b] = {leaf};
  }
  return t;
}

}  // namespace

TEST_CASE("validate rejects malformed trees") {
  ThreeTree bad = star();
  bad.adj["w"] = {"c"};  // degree of c becomes 4 implicitly inconsistent
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  ThreeTree path;
  path.adj["a"] = {"b"};
  path.adj["b"] = {"a", "c"};
  path.adj["c"] = {"b"};
  CHECK_THROWS_AS(path.validate(), std::invalid_argument);  // degree 2
}

TEST_CASE("leaf_cyclic_order of the star follows the rotation") {
  const CyclicOrder order = leaf_cyclic_order(star());
  CHECK(order.same_cycle(CyclicOrder{{"x", "y", "z"}}));
  CHECK_FALSE(order.same_cycle(CyclicOrder{{"x", "z", "y"}}));
}

TEST_CASE("leaf_cyclic_order of the caterpillar, and mirror reversal") {
  const ThreeTree t = caterpillar5();
  const CyclicOrder order = leaf_cyclic_order(t);
  CHECK(order.items.size() == 5);
  CHECK(order.same_cycle(CyclicOrder{{"a", "b", "c", "d", "e"}}));
  const CyclicOrder mirrored = leaf_cyclic_order(mirror(t));
  CHECK(mirrored.same_cycle(order.reversed()));
  CHECK(order.same_unoriented(mirrored));
}

TEST_CASE("mirror is an involution") {
  const ThreeTree t = caterpillar5();
  const ThreeTree mm = mirror(mirror(t));
  CHECK(mm.adj == t.adj);
  CHECK(is_isomorphic(mirror(star()), star(), false));  // 4-vertex tree is mirror symmetric
}

TEST_CASE("canonical code is label independent") {
  ThreeTree relabeled;
  relabeled.adj["center"] = {"p", "q", "r"};
  relabeled.adj["p"] = {"center"};
  relabeled.adj["q"] = {"center"};
  relabeled.adj["r"] = {"center"};
  CHECK(canonical_code(star(), false) == canonical_code(relabeled, false));
  CHECK(is_isomorphic(star(), relabeled, false));
}

TEST_CASE("mirror embeddings of the caterpillar share the code up to mirror") {
  const ThreeTree t = caterpillar5();
  CHECK(canonical_code(t, true) == canonical_code(mirror(t), true));
  CHECK(is_isomorphic(t, mirror(t), true));
}

TEST_CASE("distinct shapes get distinct codes") {
  // 6-leaf caterpillar vs. the spider with three cherries.
  ThreeTree spider;
  spider.adj["c"] = {"u1", "u2", "u3"};
  for (int i = 1; i <= 3; ++i) {
    const std::string u = "u" + std::to_string(i);
    const std::string l1 = "l" + std::to_string(2 * i - 1);
    const std::string l2 = "l" + std::to_string(2 * i);
    spider.adj[u] = {"c", l1, l2};
    spider.adj[l1] = {u};
    spider.adj[l2] = {u};
  }
  ThreeTree cat6;
  cat6.adj["v1"] = {"a", "b", "v2"};
  cat6.adj["v2"] = {"v1", "c", "v3"};
  cat6.adj["v3"] = {"v2", "d", "v4"};
  cat6.adj["v4"] = {"v3", "e", "f"};
  for (const auto leaf : {"a", "b", "c", "d", "e", "f"}) {
    cat6.adj[leaf] = {};
  }
  cat6.adj["a"] = {"v1"};
  cat6.adj["b"] = {"v1"};
  cat6.adj["c"] = {"v2"};
  cat6.adj["d"] = {"v3"};
  cat6.adj["e"] = {"v4"};
  cat6.adj["f"] = {"v4"};
  CHECK_FALSE(is_isomorphic(spider, cat6, true));
}

TEST_CASE("enumerate_trees matches the count formula") {
  const long expected[] = {1, 1, 3, 4, 12, 27};
  for (int d = 1; d <= 6; ++d) {
    const auto trees = enumerate_trees(d + 3);
    CHECK(static_cast<long>(trees.size()) == expected[d - 1]);
    CHECK(count_t_diagrams(d).get_si() == expected[d - 1]);
  }
}

TEST_CASE("enumerated trees are valid, deduplicated and have pre-leaf vertices") {
  for (int leaves = 4; leaves <= 8; ++leaves) {
    const auto trees = enumerate_trees(leaves);
    std::set<std::string> codes;
    for (const auto& t : trees) {
      t.validate();
      CHECK(t.num_leaves() == static_cast<std::size_t>(leaves));
      CHECK(t.num_vertices() == 2 * static_cast<std::size_t>(leaves) - 2);
      CHECK(codes.insert(canonical_code(t, true)).second);
      bool has_pre_leaf = false;
      for (const auto& v : t.internals()) {
        int leaf_nbrs = 0;
        for (const auto& u : t.adj.at(v)) {
          leaf_nbrs += t.adj.at(u).size() == 1 ? 1 : 0;
        }
        has_pre_leaf = has_pre_leaf || leaf_nbrs == 2;
      }
      CHECK(has_pre_leaf);
    }
  }
}

TEST_CASE("random trees always match exactly one enumerated representative") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int leaves = 4 + static_cast<int>(rng() % 5);
    const ThreeTree t = random_tree(rng, leaves);
    const std::string code = canonical_code(t, true);
    int matches = 0;
    for (const auto& rep : enumerate_trees(leaves)) {
      matches += canonical_code(rep, true) == code ? 1 : 0;
    }
    CHECK(matches == 1);
  }
}

TEST_CASE("catalan") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(1) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(5) == 42);
  CHECK(catalan(9) == 4862);
  CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("count_t_diagrams") {
  CHECK(count_t_diagrams(1) == 1);
  CHECK(count_t_diagrams(3) == 3);
  CHECK(count_t_diagrams(5) == 12);
  CHECK_THROWS_AS(count_t_diagrams(0), std::invalid_argument);
  CHECK_THROWS_AS(count_t_diagrams(-2), std::invalid_argument);
}

TEST_CASE("tree text format round trip") {
  const ThreeTree parsed = parse_tree("((x,y),z,w)");
  parsed.validate();
  CHECK(parsed.num_leaves() == 4);
  const std::string text = format_tree(parsed);
  const ThreeTree reparsed = parse_tree(text);
  CHECK(is_isomorphic(parsed, reparsed, false));

  CHECK_THROWS_AS(parse_tree("(x,y)"), std::invalid_argument);        // root needs 3 children
  CHECK_THROWS_AS(parse_tree("((x,y,z),u,w)"), std::invalid_argument);  // inner node needs 2
  CHECK_THROWS_AS(parse_tree("(x,x,y)"), std::invalid_argument);      // duplicate leaf
  CHECK_THROWS_AS(parse_tree("(x,y,z) junk"), std::invalid_argument);
}

TEST_CASE("format_tree is deterministic and respects rotations") {
  const ThreeTree t = caterpillar5();
  CHECK(format_tree(t) == format_tree(t));
  const ThreeTree reparsed = parse_tree(format_tree(t));
  CHECK(is_isomorphic(t, reparsed, false));
  CHECK(leaf_cyclic_order(reparsed).items.size() == 5);
}

TEST_CASE("dot export mentions every vertex and boxes the leaves") {
  const ThreeTree t = star();
  const std::string dot = tree_to_dot(t);
  CHECK(dot.find("graph three_tree {") == 0);
  CHECK(dot.find("\"x\" [shape=box];") != std::string::npos);
  CHECK(dot.find("// rotation c: x,y,z") != std::string::npos);
  CHECK(dot.find("\"c\" -- \"x\";") != std::string::npos);
}
