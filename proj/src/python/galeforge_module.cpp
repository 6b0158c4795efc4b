#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "galeforge/construct.hpp"
#include "galeforge/diagram.hpp"
#include "galeforge/faces.hpp"
#include "galeforge/oracle.hpp"
#include "galeforge/svg.hpp"
#include "galeforge/trees.hpp"

namespace py = pybind11;
using namespace galeforge;

namespace {

// The module speaks strings: tree text format and diagram/lattice JSON, as
// produced and consumed by the CLI.

std::vector<std::string> py_enumerate_trees(int leaves) {
  std::vector<std::string> out;
  for (const auto& t : enumerate_trees(leaves)) {
    out.push_back(format_tree(t));
  }
  return out;
}

py::int_ big_to_py(const Integer& v) {
  return py::int_(py::module_::import("builtins").attr("int")(v.get_str()));
}

}  // namespace

PYBIND11_MODULE(_galeforge, m) {
  m.doc() = "Neighborly 2d-polytopes with 2d+4 vertices via plane Gale diagrams";

  m.def("catalan", [](long x) { return big_to_py(catalan(x)); }, py::arg("x"));
  m.def(
      "count_t_diagrams", [](int d) { return big_to_py(count_t_diagrams(d)); }, py::arg("d"));
  m.def("enumerate_trees", &py_enumerate_trees, py::arg("leaves"));

  m.def(
      "build_diagram",
      [](const std::string& tree_text) {
        const auto [diagram, corr] = build_diagram(parse_tree(tree_text));
        return diagram_to_json(diagram);
      },
      py::arg("tree"), "Tree text in, diagram JSON out.");
  m.def(
      "build_correspondence",
      [](const std::string& tree_text) {
        const auto [diagram, corr] = build_diagram(parse_tree(tree_text));
        return correspondence_to_json(corr);
      },
      py::arg("tree"));
  m.def(
      "extract_tree",
      [](const std::string& diagram_json) {
        const auto [tree, corr] = extract_tree(diagram_from_json(diagram_json));
        return format_tree(tree);
      },
      py::arg("diagram"), "Diagram JSON in, tree text out.");

  m.def(
      "is_t_diagram",
      [](const std::string& diagram_json) { return is_t_diagram(diagram_from_json(diagram_json)); },
      py::arg("diagram"));
  m.def(
      "is_T_diagram",
      [](const std::string& diagram_json) { return is_T_diagram(diagram_from_json(diagram_json)); },
      py::arg("diagram"));
  m.def(
      "is_polytope_diagram",
      [](const std::string& diagram_json) {
        return is_polytope_diagram(diagram_from_json(diagram_json));
      },
      py::arg("diagram"));

  m.def(
      "cyclic_diagram", [](int d) { return diagram_to_json(cyclic_diagram(d)); }, py::arg("d"));

  m.def(
      "fvector",
      [](const std::string& diagram_json) {
        return face_lattice(diagram_from_json(diagram_json)).f_vector();
      },
      py::arg("diagram"));
  m.def(
      "face_lattice",
      [](const std::string& diagram_json) {
        return lattice_to_json(face_lattice(diagram_from_json(diagram_json)));
      },
      py::arg("diagram"), "Diagram JSON in, face-lattice JSON out.");
  m.def(
      "minimal_nonfaces",
      [](const std::string& diagram_json) {
        const auto census = enumerate_minimal_nonfaces(diagram_from_json(diagram_json));
        std::vector<std::vector<std::string>> out;
        for (const auto& m : census) {
          out.emplace_back(m.begin(), m.end());
        }
        return out;
      },
      py::arg("diagram"));
  m.def(
      "remarkable_edges",
      [](const std::string& diagram_json) {
        const auto edges = remarkable_edges(diagram_from_json(diagram_json));
        return std::vector<std::pair<std::string, std::string>>(edges.begin(), edges.end());
      },
      py::arg("diagram"));
  m.def(
      "identify_tree",
      [](const std::string& lattice_json) {
        return format_tree(identify_tree(lattice_from_json(lattice_json)));
      },
      py::arg("lattice"), "Face-lattice JSON in, tree text out.");

  m.def(
      "verify_oracle",
      [](const std::string& diagram_json) {
        return verify_against_oracle(diagram_from_json(diagram_json)).to_json();
      },
      py::arg("diagram"), "Full oracle comparison report as JSON.");

  m.def(
      "diagram_svg",
      [](const std::string& diagram_json) {
        return diagram_to_svg(diagram_from_json(diagram_json));
      },
      py::arg("diagram"));
}
