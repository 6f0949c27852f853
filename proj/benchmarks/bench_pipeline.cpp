#include <benchmark/benchmark.h>

#include <random>

#include "sumset/certificate.hpp"
#include "sumset/lemma.hpp"
#include "sumset/search.hpp"

using namespace sumset;

static void BM_BasisInverse(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> entry(-3, 3);
    std::vector<RatVec> basis;
    for (;;) {
        basis.clear();
        for (int i = 0; i < n; ++i) {
            RatVec v = RatVec::zero(n);
            for (int k = 0; k < n; ++k) v[k] = Rat(entry(rng), 2);
            basis.push_back(v);
        }
        try {
            basis_inverse(basis);
            break;
        } catch (const SingularBasis&) {
        }
    }
    for (auto _ : state) benchmark::DoNotOptimize(basis_inverse(basis));
}
BENCHMARK(BM_BasisInverse)->DenseRange(2, 8, 2);

static void BM_CertifyConstruction(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Instance inst = extremal_construction(n, n / 2);
    for (auto _ : state) benchmark::DoNotOptimize(certify(inst));
}
BENCHMARK(BM_CertifyConstruction)->DenseRange(2, 8, 1);

static void BM_FoldColors(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Certificate cert = certify(extremal_construction(n, n - 1));
    for (auto _ : state)
        benchmark::DoNotOptimize(fold_to_F2(cert.colors_x, cert.colors_c, n, n - 1));
}
BENCHMARK(BM_FoldColors)->DenseRange(2, 8, 2);

static void BM_ExhaustiveLemma(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_lemma_check(n));
}
BENCHMARK(BM_ExhaustiveLemma)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

static void BM_MinBSearch(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Universe u;
    u.n = n;
    u.lo = -1;
    u.hi = 2;
    u.denom = 1;
    for (auto _ : state) benchmark::DoNotOptimize(min_B_search(n, 1, u));
}
BENCHMARK(BM_MinBSearch)->DenseRange(2, 3, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
