#include <benchmark/benchmark.h>

#include <umbra/families.hpp>
#include <umbra/identities.hpp>

using namespace umbra;

namespace
{

void bm_compose(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto outer = gf::frobenius_kernel(n);
    const auto inner = gf::mittag_leffler_delta(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose(outer, inner));
    }
}
BENCHMARK(bm_compose)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void bm_comp_inverse(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto f = gf::lambda_mittag_leffler_delta(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(comp_inverse(f));
    }
}
BENCHMARK(bm_comp_inverse)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void bm_ratfunc_arith(benchmark::State &state)
{
    // Coefficients of a real workload rather than random noise.
    const auto g = pow(gf::frobenius_kernel(12), 3);
    const ratfunc a = g[9], b = g[11];
    for (auto _ : state) {
        benchmark::DoNotOptimize(a + b);
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(bm_ratfunc_arith);

void bm_family_sequence(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(family_sequence({family_kind::daehee}, n));
    }
}
BENCHMARK(bm_family_sequence)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void bm_verify_thm5(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify(identity_id::thm5, n));
    }
}
BENCHMARK(bm_verify_thm5)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
