#include <doctest.h>

#include "galeforge/faces.hpp"
#include "galeforge/verify.hpp"

using namespace galeforge;

namespace {

const Diagram& pentagon_diagram() {
  static const Diagram x = build_diagram(enumerate_trees(5)[0]).first;
  return x;
}

}  // namespace

TEST_CASE("all_lunes counts (d+1)(d+3)+1") {
  const auto& x = pentagon_diagram();
  CHECK(all_lunes(x).size() == 16);  // d=2
}

TEST_CASE("minimal_nonface_of_lune shapes") {
  const auto& x = pentagon_diagram();
  const auto cycle = black_cycle_or_compute(x);
  for (const auto& lune : all_lunes(x)) {
    const auto m = minimal_nonface_of_lune(x, lune);
    CHECK(m.size() == 3);  // always d+1
    if (lune.whole_polygon) {
      for (const auto& label : m) {
        CHECK(x.point(label).color == Color::White);  // all whites
      }
    }
    if (lune.vertex_count(cycle.size()) == 2) {
      for (const auto& label : m) {
        CHECK(x.point(label).color == Color::Black);  // the other d+1 blacks
      }
    }
  }
}

TEST_CASE("census equals the lune image and the combinatorial criterion") {
  const auto& x = pentagon_diagram();
  const auto census = enumerate_minimal_nonfaces(x);
  CHECK(census.size() == 16);
  std::set<VertexSubset> image;
  for (const auto& lune : all_lunes(x)) {
    image.insert(minimal_nonface_of_lune(x, lune));
  }
  CHECK(image == census);
  for (const auto& m : census) {
    CHECK(is_minimal_nonface(x, m));
    CHECK_FALSE(is_face(x, m));
  }
}

TEST_CASE("faces and non-faces of the d=2 polytope") {
  const auto& x = pentagon_diagram();
  const auto labels = x.labels();
  // Every pair is a face (2-neighborliness).
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      CHECK(is_face(x, {labels[i], labels[j]}));
    }
  }
  // The three whites are not a face.
  const auto whites = x.white_labels();
  CHECK_FALSE(is_face(x, VertexSubset(whites.begin(), whites.end())));
  // Blacks complementary to one side's endpoints are not a face.
  const auto cycle = black_cycle_or_compute(x);
  VertexSubset others;
  for (std::size_t i = 2; i < cycle.size(); ++i) {
    others.insert(cycle[i]);
  }
  CHECK_FALSE(is_face(x, others));
}

TEST_CASE("path_stats on the pentagon") {
  const auto& x = pentagon_diagram();
  const auto c = black_cycle_or_compute(x);
  const auto s12 = path_stats(x, c[0], c[1]);
  CHECK(s12.l == 3);
  CHECK(s12.r == 0);
  const auto s13 = path_stats(x, c[0], c[2]);
  CHECK(s13.l == 2);
  CHECK(s13.r == 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (i != j) {
        const auto s = path_stats(x, c[i], c[j]);
        CHECK(s.l + s.r == x.d() + 1);
      }
    }
  }
  CHECK_THROWS_AS(path_stats(x, c[0], c[0]), std::invalid_argument);
}

TEST_CASE("closed_form_black_black against brute force") {
  const auto& x = pentagon_diagram();
  const auto census = enumerate_minimal_nonfaces(x);
  const auto c = black_cycle_or_compute(x);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      CHECK(closed_form_black_black(x, c[i], c[j]) ==
            count_nonfaces_containing(census, {c[i], c[j]}));
    }
  }
  // Adjacent pair: l = d+1, r = 0 gives C(d+1, 2).
  CHECK(closed_form_black_black(x, c[0], c[1]) == 3);  // C(3,2)
}

TEST_CASE("home triangle and a-statistic") {
  const auto& x = pentagon_diagram();
  const auto cycle = black_cycle_or_compute(x);
  for (const auto& wl : x.white_labels()) {
    const auto ht = home_triangle(x, wl);
    // Uniqueness: exactly one consecutive pair passes the membership test.
    const auto [k, k1] = home_pair(x, ht.apex, wl);
    CHECK(k == ht.k);
    CHECK(k1 == ht.k_next);
    for (const auto& a_i : cycle) {
      if (a_i == ht.apex) {
        continue;
      }
      const long a = a_statistic(x, a_i, ht.apex, wl);
      const auto s = path_stats(x, a_i, ht.apex);
      CHECK(a >= 0);
      CHECK(a <= std::max(s.l, s.r));
      if (k == a_i || k1 == a_i) {
        CHECK(a == 0);
      }
    }
  }
  // Some white that does not correspond to cycle[0] must reject that apex.
  for (const auto& wl : x.white_labels()) {
    const auto corr = corresponding_blacks(x, wl);
    if (std::find(corr.begin(), corr.end(), cycle[0]) == corr.end()) {
      CHECK_THROWS_AS(home_pair(x, cycle[0], wl), std::invalid_argument);
      break;
    }
  }
}

TEST_CASE("closed_form_black_white against brute force, all pairs") {
  const auto& x = pentagon_diagram();
  const auto census = enumerate_minimal_nonfaces(x);
  const auto cycle = black_cycle_or_compute(x);
  int applicable = 0;
  for (const auto& a_i : cycle) {
    for (const auto& wl : x.white_labels()) {
      const auto corr = corresponding_blacks(x, wl);
      if (std::none_of(corr.begin(), corr.end(),
                       [&](const std::string& c) { return c != a_i; })) {
        continue;
      }
      ++applicable;
      CHECK(closed_form_black_white(x, a_i, wl) ==
            count_nonfaces_containing(census, {a_i, wl}));
    }
  }
  CHECK(applicable > 0);
}

TEST_CASE("closed_form_black_white agrees for both corresponding blacks") {
  const auto& x = pentagon_diagram();
  const auto census = enumerate_minimal_nonfaces(x);
  for (const auto& wl : x.white_labels()) {
    const auto corr = corresponding_blacks(x, wl);
    if (corr.size() != 2) {
      continue;
    }
    for (const auto& a_i : black_cycle_or_compute(x)) {
      if (a_i == corr[0] || a_i == corr[1]) {
        continue;
      }
      // The closed form through either apex must match the census.
      CHECK(closed_form_black_white(x, a_i, wl) ==
            count_nonfaces_containing(census, {a_i, wl}));
    }
  }
}

TEST_CASE("count_nonfaces_containing basics") {
  const auto& x = pentagon_diagram();
  CHECK_THROWS_AS(count_nonfaces_containing(x, {}), std::invalid_argument);
  // For one white: the number of lunes strictly containing it.
  for (const auto& wl : x.white_labels()) {
    long inside = 0;
    for (const auto& lune : all_lunes(x)) {
      const auto whites = whites_inside_lune(x, lune);
      inside += std::count(whites.begin(), whites.end(), wl);
    }
    CHECK(count_nonfaces_containing(x, {wl}) == inside);
  }
}

TEST_CASE("classify_nonface") {
  const auto& x = pentagon_diagram();
  CHECK_THROWS_AS(classify_nonface(x, {"A1", "A2"}), std::invalid_argument);
  const auto whites = x.white_labels();
  const auto cycle = black_cycle_or_compute(x);
  // All whites plus one black: the complement is all black, a special non-face.
  VertexSubset m(whites.begin(), whites.end());
  m.insert(cycle[0]);
  CHECK(classify_nonface(x, m) == NonfaceClass::Special);
  // A minimal non-face extended by one black from its complement's lune
  // interior side: complement keeps >= 2 blacks and >= 1 white.
  const auto census = enumerate_minimal_nonfaces(x);
  bool found_nonspecial = false;
  bool found_notanonface = false;
  for (const auto& base : census) {
    for (const auto& label : x.labels()) {
      if (base.count(label) != 0) {
        continue;
      }
      VertexSubset bigger = base;
      bigger.insert(label);
      const auto cls = classify_nonface(x, bigger);
      found_nonspecial = found_nonspecial || cls == NonfaceClass::NonSpecial;
      found_notanonface = found_notanonface || cls == NonfaceClass::NotANonface;
    }
  }
  CHECK(found_nonspecial);
  for (const auto& base : census) {
    CHECK(classify_nonface(x, base) == NonfaceClass::Minimal);
  }
}

TEST_CASE("classification agrees with the black-white test: full sweep d<=3, sampled d=4") {
  BuiltCatalog cat;
  const CheckResult result =
      check_nonface_classification(cat, 2, 4, 20240915, default_thread_count());
  CHECK_MESSAGE(result.passed, result.detail);
}

TEST_CASE("remarkable_edges characterizations") {
  const auto& x = pentagon_diagram();
  const auto edges = remarkable_edges(x);
  CHECK(edges.size() == 5);  // d+3
  std::set<std::pair<std::string, std::string>> expected;
  for (const auto& bl : black_cycle_or_compute(x)) {
    const auto wl = corresponding_white(x, bl);
    expected.insert({std::min(bl, wl), std::max(bl, wl)});
  }
  CHECK(edges == expected);
  for (const auto& [u, v] : edges) {
    CHECK((x.point(u).color == Color::Black) != (x.point(v).color == Color::Black));
  }
}

TEST_CASE("face lattice and f-vector at d=2") {
  const auto& x = pentagon_diagram();
  const FaceLattice lattice = face_lattice(x);
  CHECK(lattice.f_vector() == std::vector<long>{8, 28, 40, 20});
  CHECK(lattice.facets().size() == 20);
  // Downward closure sanity and full agreement with is_face.
  for (std::size_t t = 1; t <= 4; ++t) {
    for (const auto& face : lattice.faces_of_size(t)) {
      CHECK(is_face(x, face));
    }
  }
  // Neighborliness: every d-subset present.
  CHECK(lattice.faces_of_size(2).size() == 28);
}

TEST_CASE("local_face_counts: vertex transitive and double counting") {
  const auto& x = pentagon_diagram();
  const FaceLattice lattice = face_lattice(x);
  const auto first = local_face_counts(lattice, x.labels()[0]);
  long sum_top = 0;
  for (const auto& label : x.labels()) {
    const auto counts = local_face_counts(lattice, label);
    CHECK(counts == first);
    sum_top += counts.at(4);
  }
  CHECK(sum_top == 4 * 20);  // sum over vertices of facet incidences = D * f_D
}

TEST_CASE("cyclic_diagram") {
  const Diagram cyc = cyclic_diagram(2);
  CHECK(cyc.size() == 8);
  CHECK(is_polytope_diagram(cyc));
  CHECK(is_neighborly_diagram(cyc));
  CHECK_FALSE(is_t_diagram(cyc));  // d+2 blacks, not d+3
  CHECK_THROWS_AS(cyclic_diagram(0), std::invalid_argument);
}

TEST_CASE("recover_colors round trip and cyclic rejection") {
  const auto& x = pentagon_diagram();
  const FaceLattice lattice = face_lattice(x);
  const auto colors = recover_colors(lattice);
  for (const auto& p : x.points()) {
    CHECK(colors.at(p.label) == p.color);
  }
  const FaceLattice cyclic_lattice = face_lattice(cyclic_diagram(2));
  CHECK_THROWS_AS(recover_colors(cyclic_lattice), std::invalid_argument);
}

TEST_CASE("identify_tree round trip and label invariance") {
  const auto trees = enumerate_trees(5);
  const auto [x, corr] = build_diagram(trees[0]);
  const FaceLattice lattice = face_lattice(x);
  const ThreeTree identified = identify_tree(lattice);
  CHECK(is_isomorphic(identified, trees[0], /*up_to_mirror=*/true));

  // Permute the labels of the lattice: the identified tree is unchanged.
  std::map<std::string, std::string> rename;
  const auto labels = lattice.vertex_labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    rename[labels[i]] = "p" + std::to_string((i * 5 + 3) % labels.size());
  }
  std::set<VertexSubset> renamed_facets;
  for (const auto& facet : lattice.facets()) {
    VertexSubset f;
    for (const auto& label : facet) {
      f.insert(rename.at(label));
    }
    renamed_facets.insert(std::move(f));
  }
  const FaceLattice renamed(lattice.d(), std::move(renamed_facets));
  CHECK(canonical_code(identify_tree(renamed), true) == canonical_code(identified, true));
}

TEST_CASE("lattice JSON round trip") {
  const auto& x = pentagon_diagram();
  const FaceLattice lattice = face_lattice(x);
  const FaceLattice back = lattice_from_json(lattice_to_json(lattice));
  CHECK(back.d() == lattice.d());
  CHECK(back.facets() == lattice.facets());
  CHECK_THROWS_AS(lattice_from_json("{\"d\": 2}"), std::invalid_argument);
}
