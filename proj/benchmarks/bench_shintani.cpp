#include "shintani/errors.hpp"
#include "shintani/hecke.hpp"
#include "shintani/koszul.hpp"
#include "shintani/values.hpp"

#include <benchmark/benchmark.h>

using namespace shintani;

static NumberField sqrt5() { return NumberField::create({Z(-1), Z(-1), Z(1)}); }

static void BM_units_and_class_group(benchmark::State & st)
{
    auto F = sqrt5();
    for (auto _ : st) {
        auto U = units_plus(F);
        auto G = ray_class_group(F, U, principal_ideal(F, F.from_int(st.range(0))));
        benchmark::DoNotOptimize(G.size());
    }
}
BENCHMARK(BM_units_and_class_group)->Arg(3)->Arg(7)->Arg(12);

static void BM_decompose_hull(benchmark::State & st)
{
    auto F = NumberField::create({Z(-st.range(0)), Z(0), Z(1)});
    auto U = units_plus(F);
    for (auto _ : st)
        benchmark::DoNotOptimize(decompose(F, unit_ideal(F), U).cones.size());
}
BENCHMARK(BM_decompose_hull)->Arg(3)->Arg(7)->Arg(19)->Arg(46);

static void BM_lerch_exact(benchmark::State & st)
{
    auto F = sqrt5();
    auto U = units_plus(F);
    auto D = decompose(F, unit_ideal(F), U);
    auto pts = points_of(F, unit_ideal(F), principal_ideal(F, F.from_int(4)));
    for (auto _ : st)
        for (auto const & xi : pts)
            benchmark::DoNotOptimize(lerch_nonpositive(F, U, xi, st.range(0), D));
}
BENCHMARK(BM_lerch_exact)->DenseRange(0, 6, 2);

static void BM_gauss_sum(benchmark::State & st)
{
    auto Q1 = NumberField::create({Z(0), Z(1)});
    auto U = units_plus(Q1);
    auto G = ray_class_group(Q1, U, principal_ideal(Q1, Q1.from_int(st.range(0))));
    auto chars = characters(G, Q1);
    auto xi = xi_can(Q1, G.modulus);
    for (auto _ : st)
        for (auto const & psi : chars)
            benchmark::DoNotOptimize(gauss_sum(Q1, G, psi, xi));
}
BENCHMARK(BM_gauss_sum)->Arg(11)->Arg(23)->Arg(31);

static void BM_euler_product(benchmark::State & st)
{
    auto F = sqrt5();
    auto U = units_plus(F);
    auto G = ray_class_group(F, U, unit_ideal(F));
    auto psi = characters(G, F)[0];
    for (auto _ : st)
        benchmark::DoNotOptimize(euler_product(F, G, psi, 2.0, st.range(0)).primes);
}
BENCHMARK(BM_euler_product)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_sym_tate(benchmark::State & st)
{
    auto F = NumberField::create({Z(-1), Z(-2), Z(1), Z(1)}, QMatrix::identity(3));
    std::vector<FieldElement> d = {FieldElement{{Q(0), Q(0), Q(1)}}, FieldElement{{Q(1), Q(2), Q(1)}}};
    auto U = units_plus(F, d);
    for (auto _ : st)
        benchmark::DoNotOptimize(sym_tate_dims(F, U, st.range(0)).computed);
}
BENCHMARK(BM_sym_tate)->Arg(3)->Arg(6)->Arg(12);

BENCHMARK_MAIN();
