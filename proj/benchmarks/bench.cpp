#include "pcalc/check.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace pcalc;

namespace {

Matrix random_matrix(int n, int m, uint32_t p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    Matrix a(n, m, p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) a.at(i, j) = static_cast<uint32_t>(rng() % p);
    return a;
}

void BM_rref(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Matrix m = random_matrix(n, n, 5, 7);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}

void BM_codegree_approx(benchmark::State& state) {
    int side = static_cast<int>(state.range(0));
    PosetPtr P = FinitePoset::grid({side, side});
    ModulePtr F = random_module(P, 11, 3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(codegree_approx(F, 1));
}

void BM_koszul_exactness(benchmark::State& state) {
    PosetPtr P = FinitePoset::grid({4, 4});
    ModulePtr F = random_module(P, 13, 3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(is_k_middle_exact(F, 2));
}

void BM_block_decompose(benchmark::State& state) {
    PosetPtr P = FinitePoset::grid({5, 5});
    ModulePtr F = random_block_sum(P, 17, 2);
    ModulePtr K = kernel_nt(degree_approx(F, 1).comparison).module;
    for (auto _ : state) benchmark::DoNotOptimize(block_decompose(K, Side::co));
}

} // namespace

BENCHMARK(BM_rref)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_codegree_approx)->Arg(3)->Arg(4)->Arg(5);
BENCHMARK(BM_koszul_exactness);
BENCHMARK(BM_block_decompose);

BENCHMARK_MAIN();
