#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "tauberlab/arith.hpp"
#include "tauberlab/pnt.hpp"
#include "tauberlab/stepfn.hpp"
#include "tauberlab/tauber.hpp"
#include "tauberlab/zeta.hpp"

namespace {

using namespace tauberlab;

void BM_SievePrimes(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        const PrimeTable table = sieve_primes(limit);
        benchmark::DoNotOptimize(table.limit());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(limit));
}
BENCHMARK(BM_SievePrimes)->Arg(100'000)->Arg(1'000'000)->Arg(10'000'000);

void BM_SieveSegmentSize(benchmark::State& state) {
    const auto segment = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        const PrimeTable table = sieve_primes(10'000'000, segment);
        benchmark::DoNotOptimize(table.limit());
    }
}
BENCHMARK(BM_SieveSegmentSize)->Arg(1 << 14)->Arg(1 << 17)->Arg(1 << 20)->Arg(1 << 23);

void BM_PsiJumps(benchmark::State& state) {
    static const PrimeTable table = sieve_primes(10'000'000);
    const double cutoff = static_cast<double>(state.range(0));
    for (auto _ : state) {
        const PsiJumpList jumps = psi_jumps(cutoff, table);
        benchmark::DoNotOptimize(jumps.total());
    }
}
BENCHMARK(BM_PsiJumps)->Arg(100'000)->Arg(1'000'000)->Arg(10'000'000);

void BM_LaplaceTruncated(benchmark::State& state) {
    static const PrimeTable table = sieve_primes(1'000'000);
    const double X = static_cast<double>(state.range(0));
    const StepFunction rho = build_rho(X, table);
    const ComplexPoint s{2.0, 3.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(laplace_truncated(rho, s, rho.t_max()));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(rho.jump_count()));
}
BENCHMARK(BM_LaplaceTruncated)->Arg(10'000)->Arg(100'000)->Arg(1'000'000);

void BM_ZetaEM(benchmark::State& state) {
    const ComplexPoint s{1.0, static_cast<double>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(zeta_em(s).value);
    }
}
BENCHMARK(BM_ZetaEM)->Arg(1)->Arg(10)->Arg(50)->Arg(200);

void BM_LineScan(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(line_min_scan(0.5, 5.0, 0.01).min_abs);
    }
}
BENCHMARK(BM_LineScan);

void BM_ResidueExtrapolate(benchmark::State& state) {
    const auto F = [](double s) {
        return zeta_log_deriv_scaled(ComplexPoint{s, 0.0}).value;
    };
    for (auto _ : state) {
        benchmark::DoNotOptimize(residue_extrapolate(F, 1.0).value);
    }
}
BENCHMARK(BM_ResidueExtrapolate);

}  // namespace

BENCHMARK_MAIN();
