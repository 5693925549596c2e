#include <benchmark/benchmark.h>

#include "qseries/composite.hpp"
#include "qseries/identities.hpp"
#include "qseries/quadrature.hpp"
#include "qseries/sampling.hpp"

using namespace qseries;

namespace {

const TruncationPolicy kPolicy;

void BM_QPochInfinite(benchmark::State& state) {
  const Complex q(static_cast<double>(state.range(0)) / 100.0);
  const Complex a(0.4, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpoch_infinite(a, q, kPolicy));
  }
}
BENCHMARK(BM_QPochInfinite)->Arg(20)->Arg(50)->Arg(80);

void BM_Phi32(benchmark::State& state) {
  const Complex q(0.6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_series<Complex>({Complex(0.3, 0.2), 0.5, -0.4}, {0.7, 0.2}, q,
                                                 Complex(0.6, 0.1), kPolicy));
  }
}
BENCHMARK(BM_Phi32);

void BM_Rho(benchmark::State& state) {
  const auto p = sample_domain(IdentityId::recip7, 1, 1).front();
  const auto path = state.range(0) == 0 ? RhoPath::reference : RhoPath::incremental;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rho(p, kPolicy, path));
  }
}
BENCHMARK(BM_Rho)->Arg(0)->Arg(1);

void BM_IdentityCheck(benchmark::State& state) {
  const auto id = static_cast<IdentityId>(state.range(0));
  const auto points = sample_domain(id, 1, 8);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_identity(id, points[i++ % points.size()], kPolicy, 1e-9));
  }
  state.SetLabel(std::string(identity_name(id)));
}
BENCHMARK(BM_IdentityCheck)->DenseRange(0, static_cast<int>(kIdentityCount) - 1);

void BM_FormalMultiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FormalSeries x = formal_qpoch_infinite(Rational(2, 3), n);
  const FormalSeries y = formal_qpoch_infinite(Rational(-1, 5), n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(x * y);
  }
}
BENCHMARK(BM_FormalMultiply)->Arg(40)->Arg(60);

void BM_FormalInverse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FormalSeries x = formal_qpoch_infinite(Rational(2, 3), n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(x.inverse());
  }
}
BENCHMARK(BM_FormalInverse)->Arg(40)->Arg(60);

void BM_ExactCheck(benchmark::State& state) {
  const auto id = state.range(0) == 0 ? IdentityId::jtp : IdentityId::recip5;
  const auto p = sample_exact(id, 1, 1, 40).front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_identity(id, p, kPolicy));
  }
  state.SetLabel(std::string(identity_name(id)));
}
BENCHMARK(BM_ExactCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_AskeyWilson(benchmark::State& state) {
  const QuadratureConfig quad;
  for (auto _ : state) {
    benchmark::DoNotOptimize(askey_wilson_integral(0.3, 0.2, 0.1, 0.4, 0.5, kPolicy, quad));
  }
}
BENCHMARK(BM_AskeyWilson)->Unit(benchmark::kMicrosecond);

void BM_BetaIntegral(benchmark::State& state) {
  const QuadratureConfig quad;
  for (auto _ : state) {
    benchmark::DoNotOptimize(beta_integral(0.3, 0.2, 0.5, 0.4, 0.6, 0.5, kPolicy, quad));
  }
}
BENCHMARK(BM_BetaIntegral)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
