// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "skein/oq_certificates.hpp"
#include "skein/quantum_torus.hpp"
#include "skein/random.hpp"
#include "skein/suites.hpp"

namespace {

using namespace skein;

oq::OqElement dense_element(const oq::OqAlgebra& alg, Rng& rng, int terms) {
  oq::OqElement x = alg.zero();
  while (static_cast<int>(x.size()) < terms) x.add_term(random_lambda_index(rng, 6), random_nonzero_scalar(alg.ring(), rng));
  return x;
}

void BM_OqMul(benchmark::State& state) {
  const oq::OqAlgebra alg(ScalarRing::root_of_unity(5));
  Rng rng(11);
  const auto x = dense_element(alg, rng, static_cast<int>(state.range(0)));
  const auto y = dense_element(alg, rng, static_cast<int>(state.range(0)));
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(parallel ? alg.mul_parallel(x, y) : alg.mul(x, y));
  state.SetLabel(parallel ? "parallel" : "serial");
}
BENCHMARK(BM_OqMul)->ArgsProduct({{16, 64}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_QtMul(benchmark::State& state) {
  const Triangulation t = Triangulation::four_punctured_sphere();
  const QuantumTorus mu(ScalarRing::root_of_unity(3), sigma_from_fans(t));
  const ZBasis zb = balanced_z_basis(t);
  Rng rng(12);
  const int terms = static_cast<int>(state.range(0));
  const auto x = random_balanced_element(mu, zb, rng, terms, 4);
  const auto y = random_balanced_element(mu, zb, rng, terms, 4);
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(parallel ? mu.mul_parallel(x, y) : mu.mul(x, y));
  state.SetLabel(parallel ? "parallel" : "serial");
}
BENCHMARK(BM_QtMul)->ArgsProduct({{64, 256}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_IndependenceTrials(benchmark::State& state) {
  const oq::OqAlgebra alg(ScalarRing::root_of_unity(3));
  const auto mode = state.range(0) != 0 ? ExecutionMode::Parallel : ExecutionMode::Serial;
  for (auto _ : state) {
    const TrialSummary s = run_trials(64, mode, [&](std::size_t i) -> std::optional<std::string> {
      Rng rng = Rng::for_trial(7, 2, i);
      if (oq::independence_certificate(alg, random_aq_coefficient_map(alg, rng)).certified) return std::nullopt;
      return std::string("not certified");
    });
    benchmark::DoNotOptimize(s.passed);
  }
  state.SetLabel(mode == ExecutionMode::Parallel ? "parallel" : "serial");
}
BENCHMARK(BM_IndependenceTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
