#include <benchmark/benchmark.h>

#include "pureorder/dedekind.hpp"
#include "pureorder/oracle.hpp"

using namespace pureorder;

namespace {

void BM_factorize_small(benchmark::State& state)
{
    ZZ n = 1;
    for (long a = 2; a <= 20; a++)
        n *= a;  // 20! packs many small primes
    for (auto _ : state)
        benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_factorize_small);

void BM_factorize_semiprime(benchmark::State& state)
{
    const ZZ n = ZZ(1000003) * 1000033;
    for (auto _ : state)
        benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_factorize_semiprime);

void BM_disc_power_basis(benchmark::State& state)
{
    const unsigned p = static_cast<unsigned>(state.range(0));
    const IntPoly t = IntPoly::power_minus(p, ZZ(123456));
    const OrderLattice o = power_basis_order(t);
    for (auto _ : state)
        benchmark::DoNotOptimize(discriminant(o));
}
BENCHMARK(BM_disc_power_basis)->Arg(3)->Arg(5)->Arg(7)->Arg(11)->Arg(13);

void BM_dedekind_test(benchmark::State& state)
{
    const IntPoly t = IntPoly::power_minus(5, ZZ(16));
    for (auto _ : state)
        benchmark::DoNotOptimize(dedekind_test(t, ZZ(2)));
}
BENCHMARK(BM_dedekind_test);

void BM_product_order(benchmark::State& state)
{
    const PureField f = normalize_field(5, ZZ(2) * 9 * 7 * 7 * 7 * 7 * 11 * 11);
    const IntPoly t = f.minpoly();
    const auto gammas = gamma_generators(f);
    const OrderLattice o1 = order_from_element_powers(t, gammas[1]);
    const OrderLattice o2 = order_from_element_powers(t, gammas[2]);
    for (auto _ : state)
        benchmark::DoNotOptimize(product_order(o1, o2));
}
BENCHMARK(BM_product_order);

void BM_assemble_max_order(benchmark::State& state)
{
    const PureField f = normalize_field(
        static_cast<unsigned>(state.range(0)), ZZ(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble_max_order(f));
}
BENCHMARK(BM_assemble_max_order)
    ->Args({3, 44})
    ->Args({5, 48})
    ->Args({11, 9});

void BM_round2_max_order(benchmark::State& state)
{
    const unsigned p = static_cast<unsigned>(state.range(0));
    const ZZ a = state.range(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(round2_max_order(p, a));
}
BENCHMARK(BM_round2_max_order)->Args({3, 44})->Args({5, 48})->Args({11, 9});

void BM_is_q_maximal(benchmark::State& state)
{
    const PureField f = normalize_field(5, ZZ(48));
    const OrderLattice o = assemble_max_order(f).order;
    for (auto _ : state)
        benchmark::DoNotOptimize(is_q_maximal(o, ZZ(2)));
}
BENCHMARK(BM_is_q_maximal);

} // namespace

BENCHMARK_MAIN();
