#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "galeforge/construct.hpp"
#include "galeforge/diagram.hpp"
#include "galeforge/trees.hpp"

namespace galeforge {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Built diagrams for every catalog tree at a given d, memoized across checks.
class BuiltCatalog {
 public:
  struct Entry {
    ThreeTree tree;
    Diagram diagram;
    Correspondence corr;
  };

  const std::vector<Entry>& at(int d);
  // Alternate realizations (different base triangle and epsilon history).
  const std::vector<Entry>& variant_at(int d);

 private:
  std::map<int, std::vector<Entry>> cache_;
  std::map<int, std::vector<Entry>> variant_cache_;
};

int default_thread_count();

// Tree counts: exhaustive enumeration equals the closed formula (and the
// frozen reference values for d <= 6).
CheckResult check_tree_counts(int d_min, int d_max);
// Round trip: extract(build(t)) isomorphic to t up to mirror.
CheckResult check_round_trip(BuiltCatalog& cat, int d_min, int d_max);
// Every built diagram with d >= 2 passes the full T-diagram recognizer.
CheckResult check_t_recognition(BuiltCatalog& cat, int d_min, int d_max, int threads);
// Minimal non-face census size (d+1)(d+3)+1 and the exact lune bijection.
CheckResult check_minimal_nonface_census(BuiltCatalog& cat, int d_min, int d_max, int threads);
// Closed forms C(l,2)+C(r,2) and lr+a against brute-force counts, plus the
// qualifying-lune identity.
CheckResult check_closed_forms(BuiltCatalog& cat, int d_min, int d_max, int threads);
// Remarkable edges: brute force = black/corresponding-white = tree leaf edges.
CheckResult check_remarkable_edges(BuiltCatalog& cat, int d_min, int d_max, int threads);
// Parity lemmas, color recovery and tree identification from the lattice.
CheckResult check_parity_and_recovery(BuiltCatalog& cat, int d_min, int d_max, int threads);
// Face sets against the inverse-Gale determinant oracle (exhaustive for
// d <= 3, facets plus seeded samples for d >= 4).
CheckResult check_oracle(BuiltCatalog& cat, int d_min, int d_max, std::uint64_t seed,
                         int threads);
// Local face counts constant over vertices and equal to the cyclic
// polytope's; f-vectors match.
CheckResult check_local_counts_cyclic(BuiltCatalog& cat, int d_min, int d_max, int threads);
// Some vertex meets exactly one remarkable edge and some exactly two.
CheckResult check_nontransitivity(BuiltCatalog& cat, int d_min, int d_max, int threads);
// diagonal_equivalent agrees with comb_equivalent on all built pairs, and
// independent realizations of one tree are equivalent.
CheckResult check_equivalences(BuiltCatalog& cat, int d_min, int d_max, int threads);
// classify_nonface self-consistency sweep over sizes d+2..2d (full for
// d <= 3, seeded samples above).
CheckResult check_nonface_classification(BuiltCatalog& cat, int d_min, int d_max,
                                         std::uint64_t seed, int threads);

struct VerifyOptions {
  int d_min = 2;
  int d_max = 4;
  bool oracle = false;
  std::uint64_t seed = 20240915;
  int threads = 0;  // 0 = GALEFORGE_THREADS or hardware parallelism
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace galeforge
