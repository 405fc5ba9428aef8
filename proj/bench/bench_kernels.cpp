// Serial reference against the OpenMP kernels.
// Each pair takes the same argument so the rows line up in the report.

#include <benchmark/benchmark.h>

#include "nak/fmap.hpp"
#include "nak/modcat_engine.hpp"
#include "nak/parallel.hpp"

using namespace nak;

namespace {

void triangulations_serial(benchmark::State& st)
{
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_triangulations_serial(static_cast<int>(st.range(0))));
}

void triangulations_parallel(benchmark::State& st)
{
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_triangulations(static_cast<int>(st.range(0))));
}

void configurations_serial(benchmark::State& st)
{
    Algebra A(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_configurations_serial(A));
}

void configurations_parallel(benchmark::State& st)
{
    Algebra A(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_configurations(A));
}

// Stable Hom over GF(2) for every pair of non-projective indecomposables.
std::vector<std::size_t> hom_sweep(const Algebra& A, bool parallel)
{
    auto inds = nonprojective_inds(A);
    const std::size_t N = inds.size();
    std::vector<std::size_t> d(N * N);
    auto body = [&](std::size_t k) { d[k] = stable_hom_dim_matrix<2>(inds[k / N], inds[k % N], A); };
    if (parallel)
        parallel_for(N * N, body);
    else
        for (std::size_t k = 0; k < N * N; ++k) body(k);
    return d;
}

void hom_sweep_serial(benchmark::State& st)
{
    Algebra A(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(hom_sweep(A, false));
}

void hom_sweep_parallel(benchmark::State& st)
{
    Algebra A(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(hom_sweep(A, true));
}

std::vector<Configuration> fmap_all(const std::vector<TwoTerm>& Ts, bool parallel)
{
    std::vector<Configuration> out(Ts.size());
    auto body = [&](std::size_t i) { out[i] = fmap(Ts[i]); };
    if (parallel)
        parallel_for(Ts.size(), body);
    else
        for (std::size_t i = 0; i < Ts.size(); ++i) body(i);
    return out;
}

void fmap_serial(benchmark::State& st)
{
    auto Ts = two_term_tilting(Algebra(static_cast<int>(st.range(0)), static_cast<int>(st.range(1))));
    for (auto _ : st) benchmark::DoNotOptimize(fmap_all(Ts, false));
}

void fmap_parallel(benchmark::State& st)
{
    auto Ts = two_term_tilting(Algebra(static_cast<int>(st.range(0)), static_cast<int>(st.range(1))));
    for (auto _ : st) benchmark::DoNotOptimize(fmap_all(Ts, true));
}

}  // namespace

BENCHMARK(triangulations_serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(triangulations_parallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(configurations_serial)->Args({4, 8})->Args({5, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(configurations_parallel)->Args({4, 8})->Args({5, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(hom_sweep_serial)->Args({3, 6})->Args({4, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(hom_sweep_parallel)->Args({3, 6})->Args({4, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(fmap_serial)->Args({3, 6})->Args({4, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(fmap_parallel)->Args({3, 6})->Args({4, 8})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
