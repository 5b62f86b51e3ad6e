#include <benchmark/benchmark.h>

#include <random>

#include "rfa/coprimeness.hpp"
#include "rfa/doublets.hpp"
#include "rfa/metrics.hpp"
#include "rfa/polynomial.hpp"
#include "rfa/region.hpp"
#include "rfa/spherical.hpp"
#include "rfa/sylvester.hpp"

using namespace rfa;

namespace {

Polynomial random_poly(std::mt19937_64& g, int deg) {
    std::vector<Complex> c(size_t(deg) + 1);
    for (auto& x : c)
        x = Complex(2.0 * (double(g() >> 11) * 0x1.0p-53) - 1.0,
                    2.0 * (double(g() >> 11) * 0x1.0p-53) - 1.0);
    return Polynomial(std::move(c));
}

} // namespace

static void BM_SylvesterBuildAndSvd(benchmark::State& state) {
    const int deg = int(state.range(0));
    std::mt19937_64 g(1);
    Polynomial p = random_poly(g, deg), q = random_poly(g, deg);
    for (auto _ : state) {
        SylvesterMatrix s(p, q, deg, deg, 1);
        benchmark::DoNotOptimize(s.sigma_min());
    }
    state.SetComplexityN(deg);
}
BENCHMARK(BM_SylvesterBuildAndSvd)->RangeMultiplier(2)->Range(4, 32)->Complexity();

static void BM_CompanionRoots(benchmark::State& state) {
    const int deg = int(state.range(0));
    std::mt19937_64 g(2);
    Polynomial p = random_poly(g, deg);
    for (auto _ : state) {
        RootSet r = roots(p);
        benchmark::DoNotOptimize(r.finite.data());
    }
    state.SetComplexityN(deg);
}
BENCHMARK(BM_CompanionRoots)->RangeMultiplier(2)->Range(4, 32)->Complexity();

static void BM_DiophantineSolve(benchmark::State& state) {
    const int deg = int(state.range(0));
    std::mt19937_64 g(3);
    Polynomial p = random_poly(g, deg), q = random_poly(g, deg);
    Polynomial target = random_poly(g, 2 * deg - 1);
    for (auto _ : state) {
        DiophantineSolution s = diophantine_solve(p, q, deg, deg, target);
        benchmark::DoNotOptimize(s.residual);
    }
}
BENCHMARK(BM_DiophantineSolve)->RangeMultiplier(2)->Range(2, 16);

static void BM_CoprimenessOverDisk(benchmark::State& state) {
    const int density = int(state.range(0));
    std::mt19937_64 g(4);
    Polynomial p = random_poly(g, 6), q = random_poly(g, 6);
    Region disk = Region::unit_disk();
    CoprimenessOptions opts;
    opts.density = density;
    for (auto _ : state) {
        CoprimenessResult r = coprimeness_over(p, q, 6, 6, 1, disk, opts);
        benchmark::DoNotOptimize(r.value);
    }
    state.SetComplexityN(density);
}
BENCHMARK(BM_CoprimenessOverDisk)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_SphericalSup(benchmark::State& state) {
    const int density = int(state.range(0));
    std::mt19937_64 g(5);
    RationalFunction r(random_poly(g, 5), random_poly(g, 5));
    Region disk = Region::unit_disk();
    SupOptions opts;
    opts.density = density;
    for (auto _ : state) {
        SphericalIndicators ind = rho_sup(r, disk, opts);
        benchmark::DoNotOptimize(ind.rho);
    }
}
BENCHMARK(BM_SphericalSup)->RangeMultiplier(2)->Range(8, 64);

static void BM_ValueDistance(benchmark::State& state) {
    std::mt19937_64 g(6);
    Polynomial p = random_poly(g, 5), q = random_poly(g, 5);
    RationalFunction r(p, q);
    RationalFunction rt(p + random_poly(g, 5).scaled(Complex(0.05)),
                        q + random_poly(g, 5).scaled(Complex(0.05)), 5, 5);
    Region disk = Region::unit_disk();
    ChiOptions opts;
    opts.density = int(state.range(0));
    for (auto _ : state) {
        ChiSup sup = chi_over(r, rt, disk, opts);
        benchmark::DoNotOptimize(sup.value);
    }
}
BENCHMARK(BM_ValueDistance)->RangeMultiplier(2)->Range(8, 64);

static void BM_Certificates(benchmark::State& state) {
    std::mt19937_64 g(7);
    std::vector<Complex> zr, pr;
    for (int k = 0; k < 5; ++k) {
        zr.push_back(0.8 * Complex(2.0 * (double(g() >> 11) * 0x1.0p-53) - 1.0,
                                   2.0 * (double(g() >> 11) * 0x1.0p-53) - 1.0));
        pr.push_back(0.8 * Complex(2.0 * (double(g() >> 11) * 0x1.0p-53) - 1.0,
                                   2.0 * (double(g() >> 11) * 0x1.0p-53) - 1.0));
    }
    RationalFunction r(Polynomial::from_roots(zr), Polynomial::from_roots(pr), 5, 5);
    Region disk = Region::unit_disk();
    CertificateOptions opts;
    opts.density = int(state.range(0));
    for (auto _ : state) {
        CertificateSet set = certificates(r, disk, opts);
        benchmark::DoNotOptimize(set.certificates.data());
    }
}
BENCHMARK(BM_Certificates)->RangeMultiplier(2)->Range(8, 32);

BENCHMARK_MAIN();
