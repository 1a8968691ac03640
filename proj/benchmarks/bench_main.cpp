#include <benchmark/benchmark.h>

#include "fewembed/combinatorics.hpp"
#include "fewembed/enumerate.hpp"
#include "fewembed/geometry.hpp"
#include "fewembed/lp.hpp"
#include "fewembed/random.hpp"
#include "fewembed/verify.hpp"

using namespace fewembed;

namespace {

void BM_LpRandomSystems(benchmark::State& state) {
  const auto cols = static_cast<std::size_t>(state.range(0));
  SplitMix64 rng(1);
  std::vector<RationalMatrix> As;
  std::vector<RationalVector> bs;
  for (int t = 0; t < 64; ++t) {
    RationalMatrix A(4, RationalVector(cols));
    RationalVector b(4);
    for (auto& row : A) {
      for (auto& x : row) x = static_cast<long>(rng.between(-3, 3));
    }
    for (auto& x : b) x = static_cast<long>(rng.between(-4, 4));
    As.push_back(std::move(A));
    bs.push_back(std::move(b));
  }
  std::vector<std::size_t> nonneg(cols);
  for (std::size_t i = 0; i < cols; ++i) nonneg[i] = i;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lp_feasible(As[i % As.size()], bs[i % bs.size()], nonneg));
    ++i;
  }
}
BENCHMARK(BM_LpRandomSystems)->Arg(4)->Arg(8)->Arg(16);

void BM_MaximumMatching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto families = sample_families(n, 64, 3);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(maximum_matching(families[i++ % families.size()]));
}
BENCHMARK(BM_MaximumMatching)->Arg(7)->Arg(10)->Arg(14);

void BM_MaxIntersectingFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(max_intersecting_family(n, k));
}
BENCHMARK(BM_MaxIntersectingFamily)->Args({6, 3})->Args({8, 3})->Args({9, 4})->Unit(benchmark::kMillisecond);

void BM_EnumerateComplexes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_complexes(n));
}
BENCHMARK(BM_EnumerateComplexes)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ConstructAndVerify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = n - 3;
  std::vector<SimplicialComplex> ks;
  for (const auto& K : sample_complexes(n, 400, 5)) {
    if (!K.is_void() && decide_embeddability(K, d).decision == Decision::kEmbedsInSphere) ks.push_back(K);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& K = ks[i++ % ks.size()];
    const Embedding e = construct_embedding(K.n(), minimal_nonfaces(K));
    benchmark::DoNotOptimize(verify_geodesic_embedding(K, pad(e.placement, d + 1)));
  }
}
BENCHMARK(BM_ConstructAndVerify)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMicrosecond);

void BM_OctahedronSchlegel(benchmark::State& state) {
  std::vector<Face> facets;
  const auto oct = complex_of(6, FaceFamily(6, {Face{1, 4}, Face{2, 5}, Face{3, 6}}));
  for (Face f : oct.facets()) {
    if (f != Face{1, 2, 3}) facets.push_back(f);
  }
  const auto K = SimplicialComplex::from_facets(6, facets);
  for (auto _ : state) benchmark::DoNotOptimize(linearize(K, 2));
}
BENCHMARK(BM_OctahedronSchlegel)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
