#include <benchmark/benchmark.h>

#include "posetcodes/analysis.hpp"
#include "posetcodes/codebuild.hpp"
#include "posetcodes/genfun.hpp"

using namespace posetcodes;

namespace {

Mask range_mask(int lo, int hi) {
  Mask m = 0;
  for (int e = lo; e <= hi; ++e) m |= singleton(e);
  return m;
}

CodeSpec two_ideal_spec(int m, int n, CodeKind kind) {
  Poset p = make_hierarchical(m, n);
  Mask lower = range_mask(1, m);
  IdealFamily fam(p, {lower | range_mask(m + 1, m + 2), lower | range_mask(m + 3, m + 4)});
  return CodeSpec{p, fam, kind};
}

void BM_ClosedFormEval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CodeSpec spec = two_ideal_spec(2, n, CodeKind::DefiningSet);
  FamilyHEvaluator ev(spec.poset, spec.family);
  for (auto _ : state) {
    long long acc = 0;
    for (Mask u = 0; u < (Mask{1} << n); ++u) acc += ev.eval(u);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * (1LL << n));
}
BENCHMARK(BM_ClosedFormEval)->Arg(10)->Arg(14)->Arg(18);

void BM_DirectCollectionEval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Poset p = make_hierarchical(2, n);
  IdealFamily fam(p, {p.universe()});
  std::vector<Mask> collection = family_downsets(p, fam);
  for (auto _ : state) {
    long long acc = 0;
    for (Mask u = 0; u < (Mask{1} << n); ++u) acc += eval_H_direct(collection, u);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * (1LL << n) * collection.size());
}
BENCHMARK(BM_DirectCollectionEval)->Arg(10)->Arg(12);

void BM_AnalyticDistribution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CodeSpec spec = two_ideal_spec(2, n, CodeKind::DefiningSet);
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic_code(spec));
  }
}
BENCHMARK(BM_AnalyticDistribution)->Arg(12)->Arg(16);

void BM_OracleEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CodeSpec spec = two_ideal_spec(2, n, CodeKind::DefiningSet);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_code(spec));
  }
}
BENCHMARK(BM_OracleEnumeration)->Arg(10)->Arg(12);

void BM_MinimalityScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Poset p = make_hierarchical(2, n);
  CodeSpec spec{p, IdealFamily(p, {p.universe()}), CodeKind::BooleanFunction};
  std::vector<BitVec> words = oracle_codewords(spec);
  CodeReport report = oracle_code(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify(report, words));
  }
}
BENCHMARK(BM_MinimalityScan)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
