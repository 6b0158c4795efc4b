// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cstdio>
#include <string>

#include "galeforge/verify.hpp"

namespace {

using galeforge::BuiltCatalog;
using galeforge::CheckResult;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int number, const std::string& title, const CheckResult& result, double seconds,
            double budget_seconds = 0.0) {
  bool passed = result.passed;
  std::string detail = result.detail;
  if (budget_seconds > 0.0 && seconds > budget_seconds) {
    passed = false;
    detail += " [exceeded " + std::to_string(budget_seconds) + "s budget]";
  }
  if (passed) {
    std::printf("PASS criterion %2d: %s (%.1fs)\n", number, title.c_str(), seconds);
  } else {
    std::printf("FAIL criterion %2d: %s (%.1fs) %s\n", number, title.c_str(), seconds,
                detail.c_str());
  }
  std::fflush(stdout);
  failures += passed ? 0 : 1;
}

template <class Fn>
void run(int number, const std::string& title, double budget_seconds, Fn&& fn) {
  const auto start = Clock::now();
  CheckResult result;
  try {
    result = fn();
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = e.what();
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  report(number, title, result, seconds, budget_seconds);
}

}  // namespace

int main() {
  const int threads = galeforge::default_thread_count();
  const std::uint64_t seed = 20240915;
  BuiltCatalog cat;

  run(1, "tree counts match the closed formula, d=1..6", 10.0,
      [&] { return galeforge::check_tree_counts(1, 6); });
  run(2, "build/extract round trip up to mirror, d<=6", 60.0,
      [&] { return galeforge::check_round_trip(cat, 1, 6); });
  run(3, "built diagrams pass is_T_diagram, d=2..5", 0.0,
      [&] { return galeforge::check_t_recognition(cat, 2, 5, threads); });
  run(4, "minimal non-face census and lune bijection, d=2..4", 0.0,
      [&] { return galeforge::check_minimal_nonface_census(cat, 2, 4, threads); });
  run(5, "closed forms C(l,2)+C(r,2) and lr+a, d=2..4", 0.0,
      [&] { return galeforge::check_closed_forms(cat, 2, 4, threads); });
  run(6, "remarkable edge characterizations coincide, d=2..5", 0.0,
      [&] { return galeforge::check_remarkable_edges(cat, 2, 5, threads); });
  run(7, "parity lemmas, color recovery, tree identification, d=2..4", 0.0,
      [&] { return galeforge::check_parity_and_recovery(cat, 2, 4, threads); });
  run(8, "oracle equality (exhaustive d=2..3, sampled d=4)", 120.0,
      [&] { return galeforge::check_oracle(cat, 2, 4, seed, threads); });
  run(9, "local face counts match the cyclic polytope, d=2..4", 0.0,
      [&] { return galeforge::check_local_counts_cyclic(cat, 2, 4, threads); });
  run(10, "remarkable-edge degrees 1 and 2 both occur, d=2..5", 0.0,
      [&] { return galeforge::check_nontransitivity(cat, 2, 5, threads); });
  run(11, "diagonal equivalence agrees with combinatorial, d<=4", 0.0,
      [&] { return galeforge::check_equivalences(cat, 1, 4, threads); });

  if (failures != 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
