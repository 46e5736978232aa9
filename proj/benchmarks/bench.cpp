#include <benchmark/benchmark.h>

#include "bcbessel/bessel.hpp"
#include "bcbessel/coherent.hpp"
#include "bcbessel/gamma.hpp"
#include "bcbessel/hankel.hpp"
#include "bcbessel/pde.hpp"

using namespace bcbessel;

static void BM_ComplexGamma(benchmark::State& state) {
    cplx z(4.0, 3.0);
    for (auto _ : state) benchmark::DoNotOptimize(complex_gamma(z));
}
BENCHMARK(BM_ComplexGamma);

static void BM_BesselJ(benchmark::State& state) {
    const double r = static_cast<double>(state.range(0));
    const Bicomplex V(cplx(1.3, 0.4), cplx(-2.7, 1.0));
    const Bicomplex Z(std::polar(r, 0.4), std::polar(r, -1.1));
    for (auto _ : state) benchmark::DoNotOptimize(bessel_j(V, Z));
}
BENCHMARK(BM_BesselJ)->Arg(1)->Arg(5)->Arg(10)->Arg(30)->Arg(55);

static void BM_HankelIndicator(benchmark::State& state) {
    const SampledFunction f = builtin_function("indicator");
    for (auto _ : state) benchmark::DoNotOptimize(hankel_forward(-0.5, f, {Bicomplex(2.5)}));
}
BENCHMARK(BM_HankelIndicator);

static void BM_HankelGaussian2D(benchmark::State& state) {
    const SampledFunction f = builtin_function("gaussian-monomial", 0.0, 2);
    for (auto _ : state) benchmark::DoNotOptimize(hankel_forward(0.0, f, {Bicomplex(0.8), Bicomplex(1.4)}));
}
BENCHMARK(BM_HankelGaussian2D)->Unit(benchmark::kMillisecond);

static void BM_HeatFigure(benchmark::State& state) {
    const auto omega = parse_range("0:1:0.1"), t = parse_range("0:2:0.5");
    for (auto _ : state) benchmark::DoNotOptimize(figure_data(PDEKind::heat, omega, t));
}
BENCHMARK(BM_HeatFigure)->Unit(benchmark::kMillisecond);

static void BM_CoherentState(benchmark::State& state) {
    const Bicomplex Z(cplx(3.0, 1.0), cplx(0.5, -2.0));
    for (auto _ : state) benchmark::DoNotOptimize(coherent_state(Z, Hyperbolic(0.5, 1.0), 200));
}
BENCHMARK(BM_CoherentState);

static void BM_Moment(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(moment_check(4, 1.0));
}
BENCHMARK(BM_Moment)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
