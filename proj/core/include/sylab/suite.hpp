#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sylab/counting.hpp"
#include "sylab/matroid.hpp"
#include "sylab/multigraph.hpp"

namespace sylab {

struct SuiteConfig {
  std::size_t max_n = 5;         // binary matroids: columns in F2^max_d
  std::size_t max_d = 3;
  std::size_t max_vertices = 4;  // graphic matroids of connected multigraphs
  std::size_t max_edges = 6;
  std::uint64_t seed = 20240611;
  std::size_t shards = 1;
  std::string output_path;       // report file; empty means none

  // Sampled families.
  std::size_t cf_lists = 1000;
  std::size_t sp_terms = 1000;
  std::uint64_t tree_exact_max = 2000;
  std::size_t tree_random = 100;
  std::size_t ratio_pairs = 500;
  // Pair checks are quadratic in the universe; only matroids this small pair up.
  // The other two caps cover the whole default universe.
  std::size_t pair_max_n = 4;
  std::size_t substitution_max_n = 6;
  std::size_t enumeration_max_n = 6;
};

// SizeLimit when a limit exceeds what exhaustive enumeration accepts,
// BadParameters for zero shards.
void validate(const SuiteConfig& config);

// A matroid of the universe together with everything the sweeps reuse.
struct Prepared {
  std::string key;
  BinaryMatroid matroid;
  std::size_t r = 0;
  std::vector<SubsetMask> bases;
  std::vector<SubsetMask> independent;
};
Prepared prepare(const BinaryMatroid& m, std::string key);

// Nondecreasing column lists over F2^d, 1 <= n <= max_n.
std::vector<BinaryMatroid> binary_universe(std::size_t d, std::size_t max_n);

// Connected loopy multigraphs with 1..max_edges edges on 1..max_vertices
// vertices, one per isomorphism class, in canonical edge order.
std::vector<Multigraph> graph_universe(std::size_t max_vertices, std::size_t max_edges);

std::string matroid_key(const BinaryMatroid& m);
std::string graph_key(const Multigraph& g);

std::vector<Prepared> build_universe(const SuiteConfig& config);

struct CheckResult {
  int criterion = 0;
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> counterexamples;  // JSON objects, sorted by instance key
  std::map<std::string, std::uint64_t> tallies;  // e.g. how many verdicts were strict
  std::map<std::string, std::string> notes;
  bool passed() const { return violations == 0; }
};

inline constexpr std::size_t kMaxDumps = 8;

struct SuiteReport {
  std::vector<CheckResult> checks;
  std::size_t binary_count = 0;
  std::size_t graphic_count = 0;
  bool passed() const;
  bool criterion_passed(int criterion) const;
  std::string json(const SuiteConfig& config) const;
};

// Runs the checks of one criterion (1..8) over a prebuilt universe.
std::vector<CheckResult> run_criterion(int criterion, const SuiteConfig& config, const std::vector<Prepared>& universe);

// All criteria; writes the report to config.output_path when set.
SuiteReport run_suite(const SuiteConfig& config);

// Reruns the family named in a counterexample dump on its single instance and
// returns a JSON object with every outcome of that family.
std::string replay(const std::string& dump);

// A dump in the replay format for the given family and instance. Mainly for
// tests and for reproducing an instance from the command line.
std::string make_dump(const std::string& family, const BinaryMatroid& m, const ConstraintSpec& spec, long a,
                      std::optional<std::size_t> x = std::nullopt, std::optional<std::size_t> y = std::nullopt);

}  // namespace sylab
