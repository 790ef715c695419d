#include <benchmark/benchmark.h>

#include "planept/linalg.hpp"
#include "planept/rng.hpp"

using namespace planept;

namespace {

Mat random_rational(size_t n, size_t m, long band = 9) {
    FieldPtr q = Field::rationals();
    Rng rng(42);
    Mat A(q, n, m);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) A.at(i, j) = q->from_int(rng.range(-band, band));
    return A;
}

Mat random_extension(size_t n, size_t m) {
    FieldPtr k = Field::make(FieldSpec::parse("Q[c]/(c^2+c+2)"));
    Rng rng(42);
    Mat A(k, n, m);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) A.at(i, j) = k->random(rng, 9);
    return A;
}

} // namespace

static void BM_RrefRationalSquare(benchmark::State& state) {
    const size_t n = size_t(state.range(0));
    Mat A = random_rational(n, n + n / 2);
    for (auto _ : state) benchmark::DoNotOptimize(rref(A).rank);
}
BENCHMARK(BM_RrefRationalSquare)->Arg(20)->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);

static void BM_KernelBasisRational(benchmark::State& state) {
    const size_t n = size_t(state.range(0));
    Mat A = random_rational(n, 2 * n);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(A).rows());
}
BENCHMARK(BM_KernelBasisRational)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

static void BM_RrefQuadraticExtension(benchmark::State& state) {
    const size_t n = size_t(state.range(0));
    Mat A = random_extension(n, n + n / 2);
    for (auto _ : state) benchmark::DoNotOptimize(rref(A).rank);
}
BENCHMARK(BM_RrefQuadraticExtension)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_EchelonInsert(benchmark::State& state) {
    const size_t cols = size_t(state.range(0));
    FieldPtr q = Field::rationals();
    Rng rng(7);
    std::vector<std::vector<FieldElem>> rows;
    for (size_t i = 0; i < cols / 2; ++i) {
        std::vector<FieldElem> r;
        for (size_t j = 0; j < cols; ++j) r.push_back(q->from_int(rng.range(-9, 9)));
        rows.push_back(std::move(r));
    }
    for (auto _ : state) {
        EchelonBasis basis(q, cols);
        for (const auto& r : rows) basis.insert(r);
        benchmark::DoNotOptimize(basis.dim());
    }
}
BENCHMARK(BM_EchelonInsert)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
