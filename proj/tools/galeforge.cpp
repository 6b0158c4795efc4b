#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "galeforge/construct.hpp"
#include "galeforge/diagram.hpp"
#include "galeforge/faces.hpp"
#include "galeforge/oracle.hpp"
#include "galeforge/svg.hpp"
#include "galeforge/trees.hpp"
#include "galeforge/verify.hpp"

namespace {

using namespace galeforge;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open '" + out_path + "' for writing");
  }
  out << content;
  if (!out) {
    throw std::invalid_argument("failed while writing '" + out_path + "'");
  }
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

nlohmann::ordered_json faces_as_json(const std::set<VertexSubset>& faces) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& f : faces) {
    arr.push_back(std::vector<std::string>(f.begin(), f.end()));
  }
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"galeforge: neighborly 2d-polytopes with 2d+4 vertices via plane Gale diagrams"};
  app.require_subcommand(1);

  // trees
  auto* trees = app.add_subcommand("trees", "3-tree enumeration and counting");
  trees->require_subcommand(1);

  int enum_leaves = 0;
  std::string enum_format = "tree";
  std::string enum_out;
  auto* trees_enumerate = trees->add_subcommand("enumerate", "List 3-trees with a given leaf count");
  trees_enumerate->add_option("--leaves", enum_leaves, "number of leaves")
      ->required()
      ->check(CLI::Range(3, 11));
  trees_enumerate->add_option("--format", enum_format, "tree|dot")
      ->check(CLI::IsMember({"tree", "dot"}));
  trees_enumerate->add_option("--out", enum_out, "output path (default stdout)");

  int count_d = 0;
  auto* trees_count = trees->add_subcommand("count", "Number of T-diagrams for a given d");
  trees_count->add_option("--d", count_d, "half the polytope dimension")
      ->required()
      ->check(CLI::Range(1, 8));

  // diagram
  auto* diagram_cmd = app.add_subcommand("diagram", "Diagram construction and checks");
  diagram_cmd->require_subcommand(1);

  std::string build_tree_path;
  std::string build_out;
  auto* diagram_build = diagram_cmd->add_subcommand("build", "Build a t-diagram from a 3-tree");
  diagram_build->add_option("--tree", build_tree_path, "tree file or - for stdin")->required();
  diagram_build->add_option("--out", build_out, "output path (default stdout)");

  std::string check_path;
  auto* diagram_check = diagram_cmd->add_subcommand("check", "Run the diagram recognizers");
  diagram_check->add_option("path", check_path, "diagram JSON file")->required();

  std::string extract_path;
  auto* diagram_extract =
      diagram_cmd->add_subcommand("extract-tree", "Characteristic tree of a t-diagram");
  diagram_extract->add_option("path", extract_path, "diagram JSON file")->required();

  // faces
  auto* faces_cmd = app.add_subcommand("faces", "Face lattice queries");
  faces_cmd->require_subcommand(1);

  std::string list_path;
  int list_size = 0;
  auto* faces_list = faces_cmd->add_subcommand("list", "Faces by size, or the facet lattice");
  faces_list->add_option("path", list_path, "diagram JSON file")->required();
  auto* size_opt = faces_list->add_option("--size", list_size, "face size to list");

  std::string fvector_path;
  auto* faces_fvector = faces_cmd->add_subcommand("fvector", "f-vector of the polytope");
  faces_fvector->add_option("path", fvector_path, "diagram JSON file")->required();

  std::string local_path;
  std::string local_vertex;
  auto* faces_local = faces_cmd->add_subcommand("local", "Per-vertex face counts");
  faces_local->add_option("path", local_path, "diagram JSON file")->required();
  faces_local->add_option("--vertex", local_vertex, "vertex label")->required();

  std::string nonfaces_path;
  bool nonfaces_minimal = false;
  auto* faces_nonfaces = faces_cmd->add_subcommand("nonfaces", "Minimal non-faces");
  faces_nonfaces->add_option("path", nonfaces_path, "diagram JSON file")->required();
  faces_nonfaces->add_flag("--minimal", nonfaces_minimal, "list the (d+1)-vertex non-faces");

  std::string identify_path;
  auto* faces_identify =
      faces_cmd->add_subcommand("identify", "Identify the 3-tree from a face lattice");
  faces_identify->add_option("path", identify_path, "face lattice JSON file")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
  VerifyOptions vopts;
  verify_cmd->add_option("--d-min", vopts.d_min, "smallest d")->check(CLI::Range(0, 8));
  verify_cmd->add_option("--d-max", vopts.d_max, "largest d")->check(CLI::Range(0, 8));
  verify_cmd->add_flag("--oracle", vopts.oracle, "include the inverse-Gale oracle sweep");
  verify_cmd->add_option("--seed", vopts.seed, "seed for sampled sweeps");

  // export
  auto* export_cmd = app.add_subcommand("export", "Render artifacts");
  export_cmd->require_subcommand(1);
  std::string svg_path;
  std::string svg_out;
  auto* export_svg = export_cmd->add_subcommand("svg", "Render a diagram as SVG");
  export_svg->add_option("path", svg_path, "diagram JSON file")->required();
  export_svg->add_option("--out", svg_out, "output SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*trees_enumerate) {
      std::ostringstream out;
      for (const auto& t : enumerate_trees(enum_leaves)) {
        if (enum_format == "tree") {
          out << format_tree(t) << "\n";
        } else {
          out << tree_to_dot(t);
        }
      }
      write_output(enum_out, out.str());
    } else if (*trees_count) {
      std::cout << count_t_diagrams(count_d).get_str() << "\n";
    } else if (*diagram_build) {
      const ThreeTree t = parse_tree(trim(read_input(build_tree_path)));
      const auto [diagram, corr] = build_diagram(t);
      write_output(build_out, diagram_to_json(diagram));
    } else if (*diagram_check) {
      const Diagram x = diagram_from_json(read_input(check_path));
      std::vector<Point2> pts;
      for (const auto& p : x.points()) {
        pts.push_back(p.position);
      }
      nlohmann::ordered_json doc;
      doc["d"] = x.d();
      doc["points"] = x.size();
      doc["general_position"] = general_position(pts);
      doc["t_diagram"] = is_t_diagram(x);
      const bool polytope = is_polytope_diagram(x);
      doc["polytope_diagram"] = polytope;
      if (x.d() >= 1) {
        doc["neighborly"] = is_neighborly_diagram(x);
      }
      doc["T_diagram"] = is_T_diagram(x);
      std::cout << doc.dump(2) << "\n";
      return polytope ? 0 : 1;
    } else if (*diagram_extract) {
      const Diagram x = diagram_from_json(read_input(extract_path));
      const auto [tree, corr] = extract_tree(x);
      std::cout << format_tree(tree) << "\n";
    } else if (*faces_list) {
      const Diagram x = diagram_from_json(read_input(list_path));
      const FaceLattice lattice = face_lattice(x);
      if (*size_opt) {
        if (list_size < 1 || list_size > lattice.dim()) {
          throw std::invalid_argument("--size must be between 1 and 2d");
        }
        std::cout << faces_as_json(lattice.faces_of_size(static_cast<std::size_t>(list_size)))
                         .dump(2)
                  << "\n";
      } else {
        std::cout << lattice_to_json(lattice);
      }
    } else if (*faces_fvector) {
      const Diagram x = diagram_from_json(read_input(fvector_path));
      std::cout << nlohmann::json(face_lattice(x).f_vector()).dump() << "\n";
    } else if (*faces_local) {
      const Diagram x = diagram_from_json(read_input(local_path));
      nlohmann::ordered_json doc;
      for (const auto& [t, c] : local_face_counts(x, local_vertex)) {
        doc[std::to_string(t)] = c;
      }
      std::cout << doc.dump(2) << "\n";
    } else if (*faces_nonfaces) {
      if (!nonfaces_minimal) {
        throw std::invalid_argument("faces nonfaces requires --minimal");
      }
      const Diagram x = diagram_from_json(read_input(nonfaces_path));
      std::cout << faces_as_json(enumerate_minimal_nonfaces(x)).dump(2) << "\n";
    } else if (*faces_identify) {
      const FaceLattice lattice = lattice_from_json(read_input(identify_path));
      std::cout << format_tree(identify_tree(lattice)) << "\n";
    } else if (*verify_cmd) {
      if (vopts.d_min > vopts.d_max) {
        throw std::invalid_argument("--d-min must not exceed --d-max");
      }
      bool all_passed = true;
      for (const auto& result : run_verification(vopts)) {
        all_passed = all_passed && result.passed;
        std::cout << (result.passed ? "PASS" : "FAIL") << " " << result.name;
        if (!result.detail.empty()) {
          std::cout << (result.passed ? " (" : ": ") << result.detail
                    << (result.passed ? ")" : "");
        }
        std::cout << "\n";
      }
      return all_passed ? 0 : 1;
    } else if (*export_svg) {
      const Diagram x = diagram_from_json(read_input(svg_path));
      write_output(svg_out, diagram_to_svg(x));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
