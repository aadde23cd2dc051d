#include <benchmark/benchmark.h>

#include "sylab/atlas.hpp"
#include "sylab/cfrac.hpp"
#include "sylab/counting.hpp"
#include "sylab/equality.hpp"
#include "sylab/multigraph.hpp"
#include "sylab/treesmith.hpp"
#include "sylab/vanishing.hpp"

using namespace sylab;

namespace {

Multigraph complete(std::size_t v) {
  Multigraph g(v);
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) g.add_edge(i, j);
  }
  return g;
}

// PG(d-1, 2): every nonzero vector of F2^d once.
BinaryMatroid projective(std::size_t d) {
  std::vector<std::uint64_t> cols;
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << d); ++v) cols.push_back(v);
  return BinaryMatroid(d, cols);
}

void BM_enumerate_bases_complete(benchmark::State& state) {
  BinaryMatroid m = from_graph(complete(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_bases(m).size());
}
BENCHMARK(BM_enumerate_bases_complete)->DenseRange(4, 6);

void BM_count_profile_fano(benchmark::State& state) {
  BinaryMatroid m = projective(3);
  ConstraintSpec spec;
  spec.R = SubsetMask::full(3);
  spec.S = {SubsetMask::of({3, 4})};
  spec.c = {1};
  for (auto _ : state) benchmark::DoNotOptimize(count_profile(m, spec));
}
BENCHMARK(BM_count_profile_fano);

void BM_equality_criterion_pg(benchmark::State& state) {
  BinaryMatroid m = projective(static_cast<std::size_t>(state.range(0)));
  SubsetMask R = SubsetMask::full(m.size() / 2);
  for (auto _ : state) benchmark::DoNotOptimize(equality_criterion(m, R, 1));
}
BENCHMARK(BM_equality_criterion_pg)->DenseRange(3, 4);

void BM_feasible_pg4(benchmark::State& state) {
  BinaryMatroid m = projective(4);
  PartitionSpec p;
  p.S = {SubsetMask::full(5), SubsetMask::full(15) - SubsetMask::full(5)};
  p.c = {2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(feasible(m, p));
}
BENCHMARK(BM_feasible_pg4);

void BM_atlas_hyperbolic_k4(benchmark::State& state) {
  BinaryMatroid m = from_graph(complete(4));
  for (auto _ : state) {
    AtlasContext ctx = make_atlas(m, SubsetMask::full(3), 1, Rational(1, 2));
    benchmark::DoNotOptimize(hyperbolic_report(ctx).ok());
  }
}
BENCHMARK(BM_atlas_hyperbolic_k4);

void BM_tau_complete(benchmark::State& state) {
  Multigraph g = complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tau(g));
}
BENCHMARK(BM_tau_complete)->RangeMultiplier(2)->Range(8, 64);

void BM_exact_tree_graph(benchmark::State& state) {
  BigInt N(static_cast<long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_tree_graph(N).graph.edge_count());
}
BENCHMARK(BM_exact_tree_graph)->Arg(1000)->Arg(99991)->Arg(999983);

void BM_ratio_graph(benchmark::State& state) {
  BigInt A(999983L);
  BigInt B(12345L);
  for (auto _ : state) benchmark::DoNotOptimize(ratio_graph(A, B, std::nullopt).graph.edge_count());
}
BENCHMARK(BM_ratio_graph);

void BM_cf_expand(benchmark::State& state) {
  BigInt p("832040");
  BigInt q("514229");
  for (auto _ : state) benchmark::DoNotOptimize(cf_expand(p, q).qsum);
}
BENCHMARK(BM_cf_expand);

}  // namespace

BENCHMARK_MAIN();
