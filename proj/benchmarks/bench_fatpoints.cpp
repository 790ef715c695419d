#include <benchmark/benchmark.h>

#include "planept/arrangements.hpp"
#include "planept/fatpoints.hpp"

using namespace planept;

namespace {

FatPointScheme star_points(unsigned d) {
    Rng rng(1);
    return singular_scheme(general_arrangement(d, rng), 2);
}

} // namespace

static void BM_ConditionsMatrix(benchmark::State& state) {
    FatPointScheme Z = star_points(6).scaled(unsigned(state.range(0)));
    const unsigned t = unsigned(3 * state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(conditions_matrix(Z, t).rows());
}
BENCHMARK(BM_ConditionsMatrix)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_IdealDim(benchmark::State& state) {
    FatPointScheme Z = star_points(6).scaled(unsigned(state.range(0)));
    const unsigned t = unsigned(3 * state.range(0));
    for (auto _ : state) {
        FatIdeal I(Z);
        benchmark::DoNotOptimize(I.dim(t));
    }
}
BENCHMARK(BM_IdealDim)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_PowerPiece(benchmark::State& state) {
    FatPointScheme Z = star_points(4);
    const unsigned r = unsigned(state.range(0));
    for (auto _ : state) {
        FatIdeal I(Z);
        benchmark::DoNotOptimize(I.power_piece(r, 3 * r).dim());
    }
}
BENCHMARK(BM_PowerPiece)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_KleinIncidence(benchmark::State& state) {
    LineArrangement K = klein_arrangement();
    for (auto _ : state) benchmark::DoNotOptimize(incidence(K).count());
}
BENCHMARK(BM_KleinIncidence)->Unit(benchmark::kMillisecond);
