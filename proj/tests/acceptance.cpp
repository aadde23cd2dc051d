// One line per acceptance criterion over the default suite configuration.
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "sylab/error.hpp"
#include "sylab/suite.hpp"

using namespace sylab;

namespace {

struct Need {
  std::string check;
  std::uint64_t at_least;  // instances the check must have seen
};

std::map<int, std::vector<Need>> requirements(const SuiteConfig& c) {
  return {
      {1, {{"sy-inequality", 1}, {"profile-enumeration", 1}}},
      {2, {{"equality-oracle", 1}, {"equality-constant", 1}, {"equality-witness", 1}}},
      {3, {{"feasible-iff-witness", 1}, {"feasible-vs-oracle", 1}, {"nonvanishing-range", 1}}},
      {4, {{"total-equivalence", 1}, {"combination-fixture", 4}, {"double-fixture", 6}}},
      {5, {{"atlas-ope", 1}, {"atlas-hyp-spot", 1}, {"atlas-cfg", 1}, {"atlas-battery", 1}, {"atlas-kernel-equal", 1}}},
      {6,
       {{"cf-realization", c.cf_lists},
        {"cf-sum", c.cf_lists},
        {"exact-tree-range", c.tree_exact_max},
        {"exact-tree-random", c.tree_random},
        {"ratio-graph", c.ratio_pairs}}},
      {7,
       {{"cdc-identities", 1},
        {"cdc-equivalence", 1},
        {"cdcr-coincidence", 1},
        {"pad-verdict", 1},
        {"ratio-product", 1},
        {"ratio-bound", 1}}},
      {8, {{"gen-mason", 1}, {"mason-substitution", 1}}},
  };
}

}  // namespace

int main() {
  SuiteConfig config;
  std::vector<Prepared> universe;
  try {
    universe = build_universe(config);
  } catch (const Error& e) {
    std::printf("universe: %s\n", e.what());
    return 2;
  }
  auto needs = requirements(config);
  bool all = true;
  for (int c = 1; c <= 8; ++c) {
    auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    std::string error;
    try {
      results = run_criterion(c, config, universe);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool ok = error.empty();
    std::string summary;
    for (const auto& r : results) {
      ok = ok && r.passed();
      summary += " " + r.name + "=" + std::to_string(r.instances) + "/" + std::to_string(r.violations);
      for (const auto& need : needs[c]) {
        if (need.check == r.name && r.instances < need.at_least) ok = false;
      }
      for (const auto& dump : r.counterexamples) std::fprintf(stderr, "  counterexample %s\n", dump.c_str());
      for (const auto& [k, v] : r.notes) std::fprintf(stderr, "  note %s: %s = %s\n", r.name.c_str(), k.c_str(), v.c_str());
    }
    if (!error.empty()) summary += " error: " + error;
    std::printf("criterion %d: %s (%.1fs)%s\n", c, ok ? "PASS" : "FAIL", secs, summary.c_str());
    std::fflush(stdout);
    all = all && ok;
  }
  return all ? 0 : 1;
}
