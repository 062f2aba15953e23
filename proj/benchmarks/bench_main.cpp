#include "liouville/automorphism.hpp"
#include "liouville/flow.hpp"
#include "liouville/forms.hpp"
#include "liouville/structure.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace liouville;

LiouvilleStructure sample_structure(std::size_t m, unsigned d, std::uint64_t seed) {
  SampleRng rng(seed);
  const SymplecticSpace s(m);
  return LiouvilleStructure(s, random_nonzero_vector(s, rng), d);
}

void BM_PolynomialPower(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto d = static_cast<unsigned>(state.range(1));
  const auto l = sample_structure(m, 1, 1);
  const Polynomial w = omega_pairing(l.space(), l.a()) + Polynomial::constant(2 * m, Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(pow(w, d));
}
BENCHMARK(BM_PolynomialPower)->Args({1, 12})->Args({2, 8})->Args({3, 6});

void BM_ExteriorDerivativeTheta(benchmark::State& state) {
  const auto l = sample_structure(static_cast<std::size_t>(state.range(0)), 6, 2);
  for (auto _ : state) benchmark::DoNotOptimize(exterior_derivative(theta_form(l)));
}
BENCHMARK(BM_ExteriorDerivativeTheta)->Arg(1)->Arg(2)->Arg(3);

void BM_MakeAutomorphism(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto l = sample_structure(m, static_cast<unsigned>(state.range(1)), 3);
  const LinearMap gamma = random_symplectic(l.space(), 4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(make_automorphism(l, gamma));
}
BENCHMARK(BM_MakeAutomorphism)->Args({1, 3})->Args({1, 6})->Args({2, 3})->Unit(benchmark::kMillisecond);

void BM_PullbackTheta(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto l = sample_structure(m, static_cast<unsigned>(state.range(1)), 5);
  const PolyMap g = make_automorphism(l, random_symplectic(l.space(), 6, 4));
  for (auto _ : state) benchmark::DoNotOptimize(is_exact_pullback_equal(g, l, l));
}
BENCHMARK(BM_PullbackTheta)->Args({1, 3})->Args({1, 6})->Args({2, 3})->Unit(benchmark::kMillisecond);

void BM_FlowRk4(benchmark::State& state) {
  const auto l = sample_structure(2, static_cast<unsigned>(state.range(0)), 7);
  const RealVector z{0.5, -1.0, 1.5, 0.25};
  for (auto _ : state) benchmark::DoNotOptimize(flow_numeric(l, 0.7, z, 2000));
}
BENCHMARK(BM_FlowRk4)->Arg(0)->Arg(3)->Arg(6)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
