#include <benchmark/benchmark.h>

#include "wallacs/catalog.hpp"
#include "wallacs/decision.hpp"
#include "wallacs/exact.hpp"
#include "wallacs/quadrep.hpp"
#include "wallacs/report.hpp"

namespace {

using namespace wallacs;

IntMatrix e8_matrix() {
  std::vector<IntVec> rows = {
      {Int(2), Int(-1), Int(0), Int(0), Int(0), Int(0), Int(0), Int(0)},
      {Int(-1), Int(2), Int(-1), Int(0), Int(0), Int(0), Int(0), Int(0)},
      {Int(0), Int(-1), Int(2), Int(-1), Int(0), Int(0), Int(0), Int(0)},
      {Int(0), Int(0), Int(-1), Int(2), Int(-1), Int(0), Int(0), Int(0)},
      {Int(0), Int(0), Int(0), Int(-1), Int(2), Int(-1), Int(0), Int(-1)},
      {Int(0), Int(0), Int(0), Int(0), Int(-1), Int(2), Int(-1), Int(0)},
      {Int(0), Int(0), Int(0), Int(0), Int(0), Int(-1), Int(2), Int(0)},
      {Int(0), Int(0), Int(0), Int(0), Int(-1), Int(0), Int(0), Int(2)}};
  return IntMatrix::from_rows(rows);
}

void BM_Bernoulli32(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bernoulli(32));
  }
}
BENCHMARK(BM_Bernoulli32);

void BM_SignatureE8(benchmark::State& state) {
  IntMatrix e8 = e8_matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(signature(e8));
  }
}
BENCHMARK(BM_SignatureE8);

void BM_SolveHyperbolic(benchmark::State& state) {
  RepProblem p;
  p.gram = IntMatrix::from_rows({{Int(0), Int(1)}, {Int(1), Int(0)}});
  p.target = 2;
  p.search_bound = 32;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(p));
  }
}
BENCHMARK(BM_SolveHyperbolic);

void BM_DecideCatalog(benchmark::State& state) {
  std::vector<ManifoldDocument> docs;
  for (const auto& name : catalog_names()) docs.push_back(catalog_entry(name));
  for (auto _ : state) {
    for (const auto& doc : docs) {
      benchmark::DoNotOptimize(build_report(doc, 32, false));
    }
  }
}
BENCHMARK(BM_DecideCatalog);

}  // namespace

BENCHMARK_MAIN();
