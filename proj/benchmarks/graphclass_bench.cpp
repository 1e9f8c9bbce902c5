#include <benchmark/benchmark.h>

#include <string>

#include "graphclass/families.hpp"
#include "graphclass/ffcount.hpp"
#include "graphclass/symanzik.hpp"

using namespace graphclass;

namespace {

Multigraph family(const std::string& spec) { return generate_family(parse_family_spec(spec)); }

void BM_PsiTrees(benchmark::State& state) {
  const Multigraph g = family("complete:" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(psi_by_trees(g));
}
BENCHMARK(BM_PsiTrees)->DenseRange(3, 6);

void BM_PsiMatrixTree(benchmark::State& state) {
  const Multigraph g = family("complete:" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(psi_by_matrix_tree(g));
}
BENCHMARK(BM_PsiMatrixTree)->DenseRange(3, 5);

void BM_PsiDeletionContraction(benchmark::State& state) {
  const Multigraph g = family("complete:" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(psi_by_deletion_contraction(g));
}
BENCHMARK(BM_PsiDeletionContraction)->DenseRange(3, 5);

// K4 (6 edges) over F_q: per-term brute force against the fibered sweep.
void BM_CountBrute(benchmark::State& state) {
  const MultilinearPoly p = graph_polynomial(family("complete:4"));
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_brute(p, q));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(q * q * q * q * q * q));
}
BENCHMARK(BM_CountBrute)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_CountFibered(benchmark::State& state) {
  const MultilinearPoly p = graph_polynomial(family("complete:4"));
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_fibered(p, 5, q));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(q * q * q * q * q));
}
BENCHMARK(BM_CountFibered)->Arg(5)->Arg(7)->Arg(11)->Arg(17)->Unit(benchmark::kMillisecond);

void BM_CountZ(benchmark::State& state) {
  const Multigraph g = family("complete:4");
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_Z(g, 5, q));
}
BENCHMARK(BM_CountZ)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
