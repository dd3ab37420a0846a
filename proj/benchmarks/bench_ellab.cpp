#include <benchmark/benchmark.h>

#include "ellab/catalog.hpp"
#include "ellab/correspondence.hpp"
#include "ellab/isogeny.hpp"
#include "ellab/product.hpp"
#include "ellab/torsion.hpp"

using namespace ellab;

namespace {

using Pairs = std::vector<ProductDiagram::Pair>;

void BM_ClosureCombinatorial(benchmark::State& state) {
  const auto cols = all_classes();
  for (auto _ : state) {
    for (const auto& col : cols) {
      benchmark::DoNotOptimize(closure(FiberConfig::with_default_labels(col.heading()), ClosureMode::Combinatorial));
    }
  }
}
BENCHMARK(BM_ClosureCombinatorial);

void BM_ClosureCatalogGated(benchmark::State& state) {
  const auto cols = all_classes();
  for (auto _ : state) {
    for (const auto& col : cols) {
      benchmark::DoNotOptimize(closure(FiberConfig::with_default_labels(col.heading()), ClosureMode::CatalogGated));
    }
  }
}
BENCHMARK(BM_ClosureCatalogGated);

void BM_TorsionStatusAllRows(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& col : all_classes()) {
      for (const auto& row : col.rows) {
        for (int p : kIsogenyPrimes) {
          benchmark::DoNotOptimize(torsion_status(FiberConfig::with_default_labels(row), p));
        }
      }
    }
  }
}
BENCHMARK(BM_TorsionStatusAllRows);

void BM_RigidPartnerSearch(benchmark::State& state) {
  const ProductDiagram d(Pairs{{3, 4}, {3, 4}, {3, 2}, {3, 0}, {0, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(search_rigid_partner(d));
}
BENCHMARK(BM_RigidPartnerSearch);

void BM_CertifyKummer(benchmark::State& state) {
  const ProductDiagram d(Pairs{{4, 6}, {4, 2}, {2, 0}, {1, 3}, {1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(certify(d));
}
BENCHMARK(BM_CertifyKummer);

// One left row against every four-fiber row, all 96 alignments with three
// common points.
void BM_CertifySweepRow(benchmark::State& state) {
  std::vector<std::vector<int>> reps;
  for (const auto& col : four_fiber_classes())
    for (const auto& r : col.rows) reps.push_back(r);
  const auto& l = reps[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) {
    for (const auto& r : reps) {
      for (std::size_t skip = 0; skip < 4; ++skip) {
        Pairs pairs;
        for (std::size_t i = 0; i < 4; ++i) pairs.push_back({l[i], i == skip ? 0 : r[i]});
        pairs.push_back({0, r[skip]});
        benchmark::DoNotOptimize(certify(ProductDiagram(pairs)));
      }
    }
  }
}
BENCHMARK(BM_CertifySweepRow)->DenseRange(0, 16, 4);

}  // namespace
BENCHMARK_MAIN();
