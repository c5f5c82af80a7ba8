#include <benchmark/benchmark.h>

#include "orthocount/anzahl.hpp"
#include "orthocount/geometry.hpp"
#include "orthocount/oracle.hpp"
#include "orthocount/qseries.hpp"

namespace {

using namespace orthocount;

void BM_PolyMultiply(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  const LaurentPoly x = gauss_binomial(b, b / 2);
  const LaurentPoly y = psi_plus(1, b);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
  state.SetLabel(std::to_string(x.size()) + "x" + std::to_string(y.size()) + " terms");
}
BENCHMARK(BM_PolyMultiply)->Arg(6)->Arg(12)->Arg(20);

void BM_GammaGeneral(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int j = n / 2;
  const int k = n - j - 1;
  const FormType delta = j % 2 ? kPar : kHyp;
  const FormType eps = n % 2 ? kPar : kHyp;
  const FormType zeta = k % 2 ? kPar : kHyp;
  const FormType eta = (j + k) % 2 ? kPar : kHyp;
  const OptType lambda = (n % 2 && j % 2) ? OptType(kHyp) : std::nullopt;
  for (auto _ : state) benchmark::DoNotOptimize(gamma_general(0, j, delta, lambda, n, eps, k, zeta, eta));
}
BENCHMARK(BM_GammaGeneral)->DenseRange(6, 12, 2);

void BM_EnumerateAndClassify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const geometry::PrimeField f(3);
  const geometry::GramForm form = geometry::GramForm::standard(f, n, n % 2 ? kPar : kHyp);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::tally_subspaces(form, n / 2, 1));
  state.SetItemsProcessed(state.iterations() * geometry::count_subspaces(f, n, n / 2));
}
BENCHMARK(BM_EnumerateAndClassify)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
