#include "galeforge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "galeforge/faces.hpp"
#include "galeforge/oracle.hpp"
#include "galeforge/subsets.hpp"

namespace galeforge {

namespace {

// Deterministic fan-out: worker i handles indices i, i+threads, ...; results
// land in index order regardless of scheduling.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(n)));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      fn(i);
    }
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) {
          return;
        }
        fn(i);
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
}

std::string join_errors(const std::vector<std::string>& errors, std::size_t cap = 8) {
  std::ostringstream out;
  for (std::size_t i = 0; i < errors.size() && i < cap; ++i) {
    if (i != 0) {
      out << "; ";
    }
    out << errors[i];
  }
  if (errors.size() > cap) {
    out << "; ... (" << errors.size() << " total)";
  }
  return out.str();
}

// Runs fn over every catalog entry of every d in range, in parallel,
// collecting error strings deterministically.
template <class Fn>
CheckResult sweep_catalog(const std::string& name, BuiltCatalog& cat, int d_min, int d_max,
                          int threads, Fn&& fn) {
  std::vector<std::pair<int, std::size_t>> tasks;
  for (int d = d_min; d <= d_max; ++d) {
    for (std::size_t i = 0; i < cat.at(d).size(); ++i) {
      tasks.emplace_back(d, i);
    }
  }
  std::vector<std::string> errors(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t ti) {
    const auto& [d, i] = tasks[ti];
    try {
      std::string err = fn(d, cat.at(d)[i]);
      errors[ti] = std::move(err);
    } catch (const std::exception& e) {
      errors[ti] = "d=" + std::to_string(d) + " diagram " + std::to_string(i) + ": " + e.what();
    }
  });
  std::vector<std::string> failed;
  for (const auto& e : errors) {
    if (!e.empty()) {
      failed.push_back(e);
    }
  }
  CheckResult result;
  result.name = name;
  result.passed = failed.empty();
  result.detail = failed.empty()
                      ? std::to_string(tasks.size()) + " diagrams over d=" +
                            std::to_string(d_min) + ".." + std::to_string(d_max)
                      : join_errors(failed);
  return result;
}

}  // namespace

const std::vector<BuiltCatalog::Entry>& BuiltCatalog::at(int d) {
  auto it = cache_.find(d);
  if (it == cache_.end()) {
    std::vector<Entry> entries;
    for (const auto& tree : enumerate_trees(d + 3)) {
      auto [diagram, corr] = build_diagram(tree);
      entries.push_back({tree, std::move(diagram), std::move(corr)});
    }
    it = cache_.emplace(d, std::move(entries)).first;
  }
  return it->second;
}

const std::vector<BuiltCatalog::Entry>& BuiltCatalog::variant_at(int d) {
  auto it = variant_cache_.find(d);
  if (it == variant_cache_.end()) {
    BuildOptions opts;
    opts.initial_epsilon = Rational(1, 3);
    opts.base_scale = 16;
    opts.extra_shrink = 1;
    std::vector<Entry> entries;
    for (const auto& tree : enumerate_trees(d + 3)) {
      auto [diagram, corr] = build_diagram(tree, opts);
      entries.push_back({tree, std::move(diagram), std::move(corr)});
    }
    it = variant_cache_.emplace(d, std::move(entries)).first;
  }
  return it->second;
}

int default_thread_count() {
  if (const char* env = std::getenv("GALEFORGE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) {
      return static_cast<int>(v);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CheckResult check_tree_counts(int d_min, int d_max) {
  static const long kKnown[] = {1, 1, 3, 4, 12, 27};
  std::vector<std::string> errors;
  std::ostringstream counts;
  for (int d = std::max(1, d_min); d <= d_max; ++d) {
    const long formula = count_t_diagrams(d).get_si();
    const long enumerated = static_cast<long>(enumerate_trees(d + 3).size());
    counts << (d > std::max(1, d_min) ? ", " : "") << "d=" << d << ": " << enumerated;
    if (formula != enumerated) {
      errors.push_back("d=" + std::to_string(d) + ": formula " + std::to_string(formula) +
                       " vs enumeration " + std::to_string(enumerated));
    }
    if (d <= 6 && enumerated != kKnown[d - 1]) {
      errors.push_back("d=" + std::to_string(d) + ": expected " + std::to_string(kKnown[d - 1]) +
                       ", got " + std::to_string(enumerated));
    }
  }
  return {"tree-counts", errors.empty(), errors.empty() ? counts.str() : join_errors(errors)};
}

CheckResult check_round_trip(BuiltCatalog& cat, int d_min, int d_max) {
  std::vector<std::string> errors;
  std::size_t total = 0;
  for (int d = std::max(1, d_min); d <= d_max; ++d) {
    for (const auto& entry : cat.at(d)) {
      ++total;
      const auto [extracted, corr] = extract_tree(entry.diagram);
      if (!is_isomorphic(extracted, entry.tree, /*up_to_mirror=*/true)) {
        errors.push_back("d=" + std::to_string(d) + ": round trip broke for " +
                         format_tree(entry.tree));
      }
    }
  }
  return {"round-trip", errors.empty(),
          errors.empty() ? std::to_string(total) + " trees" : join_errors(errors)};
}

CheckResult check_t_recognition(BuiltCatalog& cat, int d_min, int d_max, int threads) {
  return sweep_catalog("t-recognition", cat, std::max(2, d_min), d_max, threads,
                       [](int d, const BuiltCatalog::Entry& entry) -> std::string {
                         if (!is_T_diagram(entry.diagram)) {
                           return "d=" + std::to_string(d) + ": built diagram failed is_T_diagram";
                         }
                         return "";
                       });
}

CheckResult check_minimal_nonface_census(BuiltCatalog& cat, int d_min, int d_max, int threads) {
  return sweep_catalog(
      "minimal-nonface-census", cat, std::max(2, d_min), d_max, threads,
      [](int d, const BuiltCatalog::Entry& entry) -> std::string {
        const auto& x = entry.diagram;
        const auto census = enumerate_minimal_nonfaces(x);
        const std::size_t expected = static_cast<std::size_t>((d + 1) * (d + 3) + 1);
        if (census.size() != expected) {
          return "d=" + std::to_string(d) + ": census size " + std::to_string(census.size()) +
                 " != " + std::to_string(expected);
        }
        std::set<VertexSubset> image;
        for (const auto& lune : all_lunes(x)) {
          image.insert(minimal_nonface_of_lune(x, lune));
        }
        if (image != census) {
          return "d=" + std::to_string(d) + ": lune bijection mismatch";
        }
        if (image.size() != all_lunes(x).size()) {
          return "d=" + std::to_string(d) + ": lune map not injective";
        }
        // Combinatorial lune criterion agrees with the face test everywhere.
        const auto labels = x.labels();
        std::string err;
        for_each_combination(labels.size(), static_cast<std::size_t>(d + 1),
                             [&](const std::vector<std::size_t>& idx) -> bool {
                               VertexSubset m;
                               for (const auto i : idx) {
                                 m.insert(labels[i]);
                               }
                               if (is_minimal_nonface(x, m) != (census.count(m) != 0)) {
                                 err = "d=" + std::to_string(d) +
                                       ": lune criterion disagrees with is_face";
                                 return false;
                               }
                               return true;
                             });
        return err;
      });
}

CheckResult check_closed_forms(BuiltCatalog& cat, int d_min, int d_max, int threads) {
  return sweep_catalog(
      "closed-forms", cat, std::max(2, d_min), d_max, threads,
      [](int d, const BuiltCatalog::Entry& entry) -> std::string {
        const auto& x = entry.diagram;
        const auto census = enumerate_minimal_nonfaces(x);
        const auto cycle = black_cycle_or_compute(x);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          for (std::size_t j = i + 1; j < cycle.size(); ++j) {
            const long closed = closed_form_black_black(x, cycle[i], cycle[j]);
            const long brute = count_nonfaces_containing(census, {cycle[i], cycle[j]});
            if (closed != brute) {
              return "d=" + std::to_string(d) + ": black-black closed form at (" + cycle[i] + "," + cycle[j] +
                     "): " + std::to_string(closed) + " vs " + std::to_string(brute);
            }
          }
        }
        const auto lunes = all_lunes(x);
        for (const auto& a_i : cycle) {
          for (const auto& wl : x.white_labels()) {
            const auto corr = corresponding_blacks(x, wl);
            const bool applicable =
                std::any_of(corr.begin(), corr.end(),
                            [&](const std::string& c) { return c != a_i; });
            if (!applicable) {
              continue;
            }
            const long closed = closed_form_black_white(x, a_i, wl);
            const long brute = count_nonfaces_containing(census, {a_i, wl});
            if (closed != brute) {
              return "d=" + std::to_string(d) + ": black-white closed form at (" + a_i + "," + wl +
                     "): " + std::to_string(closed) + " vs " + std::to_string(brute);
            }
            // Lunes containing the white while omitting A_i are counted
            // by lr + a.
            long qualifying = 0;
            for (const auto& lune : lunes) {
              const auto verts = lune_vertices(x, lune);
              if (std::find(verts.begin(), verts.end(), a_i) != verts.end()) {
                continue;
              }
              const auto inside = whites_inside_lune(x, lune);
              if (std::find(inside.begin(), inside.end(), wl) != inside.end()) {
                ++qualifying;
              }
            }
            if (qualifying != closed) {
              return "d=" + std::to_string(d) + ": qualifying-lune count at (" + a_i + "," + wl +
                     "): " + std::to_string(qualifying) + " vs " + std::to_string(closed);
            }
          }
        }
        return "";
      });
}

CheckResult check_remarkable_edges(BuiltCatalog& cat, int d_min, int d_max, int threads) {
  return sweep_catalog(
      "remarkable-edges", cat, std::max(2, d_min), d_max, threads,
      [](int d, const BuiltCatalog::Entry& entry) -> std::string {
        const auto& x = entry.diagram;
        const auto brute = remarkable_edges(x);
        std::set<std::pair<std::string, std::string>> by_correspondence;
        for (const auto& bl : black_cycle_or_compute(x)) {
          const auto wl = corresponding_white(x, bl);
          by_correspondence.insert({std::min(bl, wl), std::max(bl, wl)});
        }
        if (brute != by_correspondence) {
          return "d=" + std::to_string(d) + ": correspondence characterization mismatch";
        }
        if (brute.size() != static_cast<std::size_t>(d + 3)) {
          return "d=" + std::to_string(d) + ": expected d+3 remarkable edges, got " +
                 std::to_string(brute.size());
        }
        std::set<std::pair<std::string, std::string>> by_tree;
        for (const auto& leaf : entry.tree.leaves()) {
          const std::string a = entry.corr.at(leaf);
          const std::string b = entry.corr.at(entry.tree.adj.at(leaf)[0]);
          by_tree.insert({std::min(a, b), std::max(a, b)});
        }
        if (brute != by_tree) {
          return "d=" + std::to_string(d) + ": leaf-edge characterization mismatch";
        }
        return "";
      });
}

CheckResult check_parity_and_recovery(BuiltCatalog& cat, int d_min, int d_max, int threads) {
  return sweep_catalog(
      "parity-and-recovery", cat, std::max(2, d_min), d_max, threads,
      [](int d, const BuiltCatalog::Entry& entry) -> std::string {
        const auto& x = entry.diagram;
        const auto census = enumerate_minimal_nonfaces(x);
        const auto count = [&](const std::string& u, const std::string& v) {
          return count_nonfaces_containing(census, {u, v});
        };
        const auto cycle = black_cycle_or_compute(x);
        const long parity_d1 = (d + 1) % 2;
        for (const auto& w0 : x.white_labels()) {
          const auto corr = corresponding_blacks(x, w0);
          if (corr.size() != 2) {
            continue;
          }
          const std::string& a1 = corr[0];
          const std::string& a2 = corr[1];
          for (const auto& c : cycle) {
            if (c == a1 || c == a2) {
              continue;
            }
            const long diff_black = std::abs((count(a1, c) - count(a2, c)) % 2);
            if (diff_black == parity_d1) {
              return "d=" + std::to_string(d) + ": black parity test failed at (" + a1 + "," +
                     a2 + ";" + c + ")";
            }
            const std::string b = corresponding_white(x, c);
            const long diff_white = std::abs((count(a1, b) - count(a2, b)) % 2);
            if (diff_white != parity_d1) {
              return "d=" + std::to_string(d) + ": white parity test failed at (" + a1 + "," +
                     a2 + ";" + b + ")";
            }
          }
        }
        const FaceLattice lattice = face_lattice(x);
        const auto recovered = recover_colors(lattice);
        for (const auto& p : x.points()) {
          if (recovered.at(p.label) != p.color) {
            return "d=" + std::to_string(d) + ": recover_colors wrong at '" + p.label + "'";
          }
        }
        const ThreeTree identified = identify_tree(lattice);
        if (!is_isomorphic(identified, entry.tree, /*up_to_mirror=*/true)) {
          return "d=" + std::to_string(d) + ": identify_tree mismatched the source tree";
        }
        return "";
      });
}

CheckResult check_oracle(BuiltCatalog& cat, int d_min, int d_max, std::uint64_t seed,
                         int threads) {
  struct Task {
    int d;
    const Diagram* diagram;
    bool sampled;
    std::string what;
  };
  std::vector<Task> tasks;
  std::vector<Diagram> cyclics;
  for (int d = std::max(2, d_min); d <= std::min(3, d_max); ++d) {
    cyclics.push_back(cyclic_diagram(d));
  }
  std::size_t ci = 0;
  for (int d = std::max(2, d_min); d <= d_max; ++d) {
    const bool sampled = d >= 4;
    for (const auto& entry : cat.at(d)) {
      tasks.push_back({d, &entry.diagram, sampled, "built"});
    }
    if (d <= 3) {
      tasks.push_back({d, &cyclics[ci++], false, "cyclic"});
    }
  }
  std::vector<std::string> errors(tasks.size());
  std::vector<long> facet_counts(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t ti) {
    const Task& task = tasks[ti];
    try {
      OracleOptions opts;
      opts.seed = seed;
      if (task.sampled) {
        opts.exhaustive_max_size = 0;  // facet size stays exhaustive
        opts.samples = 1500;           // per size 1..D-1, >= 10^4 total at d=4
      }
      const OracleReport report = verify_against_oracle(*task.diagram, opts);
      facet_counts[ti] = report.facet_count;
      if (!report.ok) {
        errors[ti] = "d=" + std::to_string(task.d) + " (" + task.what + "): " +
                     std::to_string(report.mismatches.size()) + " mismatches";
      } else if (task.d == 2 && report.facet_count != 20) {
        errors[ti] = "d=2 (" + task.what + "): facet count " +
                     std::to_string(report.facet_count) + " != 20";
      }
    } catch (const std::exception& e) {
      errors[ti] = "d=" + std::to_string(task.d) + " (" + task.what + "): " + e.what();
    }
  });
  std::vector<std::string> failed;
  for (const auto& e : errors) {
    if (!e.empty()) {
      failed.push_back(e);
    }
  }
  return {"oracle-agreement", failed.empty(),
          failed.empty() ? std::to_string(tasks.size()) + " configurations verified"
                         : join_errors(failed)};
}

CheckResult check_local_counts_cyclic(BuiltCatalog& cat, int d_min, int d_max, int threads) {
  std::map<int, std::map<std::size_t, long>> cyclic_counts;
  std::map<int, std::vector<long>> cyclic_f;
  for (int d = std::max(2, d_min); d <= d_max; ++d) {
    const Diagram cyc = cyclic_diagram(d);
    const FaceLattice lattice = face_lattice(cyc);
    const auto labels = lattice.vertex_labels();
    cyclic_counts[d] = local_face_counts(lattice, labels[0]);
    for (const auto& v : labels) {
      if (local_face_counts(lattice, v) != cyclic_counts[d]) {
        return {"local-face-counts", false,
                "cyclic diagram at d=" + std::to_string(d) + " is not vertex-uniform"};
      }
    }
    cyclic_f[d] = lattice.f_vector();
  }
  auto result = sweep_catalog(
      "local-face-counts", cat, std::max(2, d_min), d_max, threads,
      [&](int d, const BuiltCatalog::Entry& entry) -> std::string {
        const FaceLattice lattice = face_lattice(entry.diagram);
        for (const auto& p : entry.diagram.points()) {
          if (local_face_counts(lattice, p.label) != cyclic_counts.at(d)) {
            return "d=" + std::to_string(d) + ": local counts differ from cyclic at '" +
                   p.label + "'";
          }
        }
        if (lattice.f_vector() != cyclic_f.at(d)) {
          return "d=" + std::to_string(d) + ": f-vector differs from cyclic";
        }
        if (d == 2 && lattice.f_vector() != std::vector<long>{8, 28, 40, 20}) {
          return "d=2: f-vector is not (8, 28, 40, 20)";
        }
        return "";
      });
  return result;
}

CheckResult check_nontransitivity(BuiltCatalog& cat, int d_min, int d_max, int threads) {
  return sweep_catalog(
      "non-transitivity", cat, std::max(2, d_min), d_max, threads,
      [](int d, const BuiltCatalog::Entry& entry) -> std::string {
        const auto edges = remarkable_edges(entry.diagram);
        std::map<std::string, int> degree;
        for (const auto& [u, v] : edges) {
          ++degree[u];
          ++degree[v];
        }
        bool has_one = false;
        bool has_two = false;
        for (const auto& [label, deg] : degree) {
          has_one = has_one || deg == 1;
          has_two = has_two || deg == 2;
        }
        if (!has_one || !has_two) {
          return "d=" + std::to_string(d) +
                 ": missing a vertex with exactly 1 or exactly 2 remarkable edges";
        }
        return "";
      });
}

CheckResult check_equivalences(BuiltCatalog& cat, int d_min, int d_max, int threads) {
  std::vector<std::string> errors;
  for (int d = std::max(1, d_min); d <= d_max; ++d) {
    const auto& entries = cat.at(d);
    const auto& variants = cat.variant_at(d);
    std::vector<std::string> local(entries.size());
    parallel_for(entries.size(), threads, [&](std::size_t i) {
      for (std::size_t j = 0; j < entries.size(); ++j) {
        const bool diag = diagonal_equivalent(entries[i].diagram, entries[j].diagram).has_value();
        const bool comb = comb_equivalent(entries[i].diagram, entries[j].diagram);
        if (diag != comb) {
          local[i] = "d=" + std::to_string(d) + ": equivalence notions disagree on pair (" +
                     std::to_string(i) + "," + std::to_string(j) + ")";
          return;
        }
        if ((i == j) != diag) {
          local[i] = "d=" + std::to_string(d) + ": equivalence vs tree identity failed on (" +
                     std::to_string(i) + "," + std::to_string(j) + ")";
          return;
        }
      }
      if (!diagonal_equivalent(entries[i].diagram, variants[i].diagram).has_value() ||
          !comb_equivalent(entries[i].diagram, variants[i].diagram)) {
        local[i] = "d=" + std::to_string(d) + ": realization variants of tree " +
                   std::to_string(i) + " are not equivalent";
      }
    });
    for (const auto& e : local) {
      if (!e.empty()) {
        errors.push_back(e);
      }
    }
  }
  return {"equivalences", errors.empty(),
          errors.empty() ? "diagonal == combinatorial on all pairs" : join_errors(errors)};
}

CheckResult check_nonface_classification(BuiltCatalog& cat, int d_min, int d_max,
                                         std::uint64_t seed, int threads) {
  return sweep_catalog(
      "nonface-classification", cat, std::max(2, d_min), d_max, threads,
      [seed](int d, const BuiltCatalog::Entry& entry) -> std::string {
        const auto& x = entry.diagram;
        const auto labels = x.labels();
        std::string err;
        const auto run = [&](const VertexSubset& m) {
          try {
            (void)classify_nonface(x, m);  // throws when the lune test disagrees
          } catch (const std::logic_error& e) {
            err = "d=" + std::to_string(d) + ": " + e.what();
          }
        };
        for (std::size_t t = static_cast<std::size_t>(d + 2);
             t <= static_cast<std::size_t>(2 * d); ++t) {
          if (d <= 3) {
            for_each_combination(labels.size(), t, [&](const std::vector<std::size_t>& idx) -> bool {
              VertexSubset m;
              for (const auto i : idx) {
                m.insert(labels[i]);
              }
              run(m);
              return err.empty();
            });
          } else {
            std::mt19937_64 rng(seed + static_cast<std::uint64_t>(t));
            for (int it = 0; it < 1500 && err.empty(); ++it) {
              std::vector<std::size_t> pool(labels.size());
              for (std::size_t i = 0; i < pool.size(); ++i) {
                pool[i] = i;
              }
              VertexSubset m;
              for (std::size_t c = 0; c < t; ++c) {
                const std::size_t pick =
                    c + static_cast<std::size_t>(rng() %
                                                 static_cast<std::uint64_t>(pool.size() - c));
                std::swap(pool[c], pool[pick]);
                m.insert(labels[pool[c]]);
              }
              run(m);
            }
          }
          if (!err.empty()) {
            break;
          }
        }
        return err;
      });
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  const int threads = options.threads > 0 ? options.threads : default_thread_count();
  BuiltCatalog cat;
  std::vector<CheckResult> results;
  results.push_back(check_tree_counts(options.d_min, options.d_max));
  results.push_back(check_round_trip(cat, options.d_min, options.d_max));
  results.push_back(check_t_recognition(cat, options.d_min, options.d_max, threads));
  results.push_back(check_minimal_nonface_census(cat, options.d_min, options.d_max, threads));
  results.push_back(check_closed_forms(cat, options.d_min, options.d_max, threads));
  results.push_back(check_remarkable_edges(cat, options.d_min, options.d_max, threads));
  results.push_back(check_parity_and_recovery(cat, options.d_min, options.d_max, threads));
  results.push_back(check_local_counts_cyclic(cat, options.d_min, options.d_max, threads));
  results.push_back(check_nontransitivity(cat, options.d_min, options.d_max, threads));
  results.push_back(check_equivalences(cat, options.d_min, options.d_max, threads));
  results.push_back(
      check_nonface_classification(cat, options.d_min, options.d_max, options.seed, threads));
  if (options.oracle) {
    results.push_back(check_oracle(cat, options.d_min, options.d_max, options.seed, threads));
  }
  return results;
}

}  // namespace galeforge
