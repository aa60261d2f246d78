#include <benchmark/benchmark.h>

#include <random>

#include "trigonal/correspondence.hpp"
#include "trigonal/lattice.hpp"
#include "trigonal/monodromy.hpp"
#include "trigonal/sp_order.hpp"
#include "trigonal/symplectic.hpp"

using namespace trigonal;

static void BM_EisensteinMul(benchmark::State& state) {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<std::int64_t> d(-1000, 1000);
  EisensteinInt x(d(rng), d(rng)), y(d(rng), d(rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(x * y);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_EisensteinMul);

static void BM_Herm(benchmark::State& state) {
  const auto x = LatticeVector::basis(1) + LatticeVector::basis(5);
  const auto y = triflect(4, triflect(5, LatticeVector::basis(4)));
  for (auto _ : state) benchmark::DoNotOptimize(herm(x, y));
}
BENCHMARK(BM_Herm);

static void BM_EnumerateProj(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_proj());
}
BENCHMARK(BM_EnumerateProj)->Unit(benchmark::kMillisecond);

static void BM_EnumerateClasses(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classes());
}
BENCHMARK(BM_EnumerateClasses)->Unit(benchmark::kMillisecond);

static void BM_TransvectionOrbit(benchmark::State& state) {
  const ProjectiveSpace space;
  const auto action = space.transvection_action();
  const Point seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(orbit(std::span<const Point>(&seed, 1), action));
}
BENCHMARK(BM_TransvectionOrbit)->Unit(benchmark::kMillisecond);

static void BM_BuildBijection(benchmark::State& state) {
  const ProjectiveSpace space;
  const ClassTable classes;
  const auto actions = BraidActions::build(space, classes);
  for (auto _ : state) benchmark::DoNotOptimize(build_bijection(space, classes, actions));
}
BENCHMARK(BM_BuildBijection)->Unit(benchmark::kMillisecond);

static void BM_RealifyAndCertify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(realify_and_certify());
}
BENCHMARK(BM_RealifyAndCertify)->Unit(benchmark::kMillisecond);

static void BM_DecomposeMinus6(benchmark::State& state) {
  auto eps = LatticeVector::basis(1) + LatticeVector::basis(2);
  for (int g : {3, 5, 2, 7, 4, 6, 1, 8}) eps = triflect(g, eps);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_minus6(eps));
}
BENCHMARK(BM_DecomposeMinus6)->Unit(benchmark::kMicrosecond);

static void BM_GroupOrder(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(certify_transvection_group_order(0));
}
BENCHMARK(BM_GroupOrder)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
