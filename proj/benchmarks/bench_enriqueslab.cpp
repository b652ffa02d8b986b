#include <benchmark/benchmark.h>

#include "enriqueslab/char2.hpp"
#include "enriqueslab/nslattice.hpp"
#include "enriqueslab/plane.hpp"
#include "enriqueslab/sylvester.hpp"
#include "enriqueslab/vinberg.hpp"

using namespace enriqueslab;

static void BM_PlaneConstruction(benchmark::State& state) {
  for (auto _ : state) {
    Plane plane;
    benchmark::DoNotOptimize(plane.general_sextuples().size());
  }
}
BENCHMARK(BM_PlaneConstruction);

static void BM_Signature42(benchmark::State& state) {
  const K3Lattice& ns = K3Lattice::get();
  for (auto _ : state) {
    Signature sig = ns.gram42().exact_signature();
    benchmark::DoNotOptimize(sig.n_minus);
  }
}
BENCHMARK(BM_Signature42);

static void BM_Kernel42(benchmark::State& state) {
  const K3Lattice& ns = K3Lattice::get();
  for (auto _ : state) {
    IntMatrix k = ns.gram42().snf_kernel();
    benchmark::DoNotOptimize(k.rows());
  }
}
BENCHMARK(BM_Kernel42);

static void BM_ContractionSearchPruned(benchmark::State& state) {
  const K3Lattice& ns = K3Lattice::get();
  for (auto _ : state) {
    auto configs = find_contraction_configs(ns, nullptr, true);
    benchmark::DoNotOptimize(configs.size());
  }
}
BENCHMARK(BM_ContractionSearchPruned);

static void BM_ContractionSearchFull(benchmark::State& state) {
  const K3Lattice& ns = K3Lattice::get();
  for (auto _ : state) {
    auto configs = find_contraction_configs(ns, nullptr, false);
    benchmark::DoNotOptimize(configs.size());
  }
}
BENCHMARK(BM_ContractionSearchFull);

static void BM_AutomorphismGroup(benchmark::State& state) {
  IntersectionGraph g = combinatorial_gamma();
  for (auto _ : state) {
    AutomorphismGroup aut = automorphism_group(g);
    benchmark::DoNotOptimize(aut.order);
  }
}
BENCHMARK(BM_AutomorphismGroup);

static void BM_ParabolicCensus(benchmark::State& state) {
  IntersectionGraph g = combinatorial_gamma();
  for (auto _ : state) {
    ParabolicCensus census = maximal_parabolics(g, 8);
    benchmark::DoNotOptimize(census.rank8.size());
  }
}
BENCHMARK(BM_ParabolicCensus);

static void BM_TwoClosedSymbolic(benchmark::State& state) {
  for (auto _ : state) {
    TwoClosedCheck check = check_two_closed(surface_vector_field());
    benchmark::DoNotOptimize(check.holds);
  }
}
BENCHMARK(BM_TwoClosedSymbolic);

BENCHMARK_MAIN();
