#include <benchmark/benchmark.h>

#include <random>

#include "asai/arch.hpp"
#include "asai/asai_nonarch.hpp"
#include "asai/tate.hpp"
#include "asai/whittaker.hpp"

using namespace asai;

namespace {

MultChar ramified_character(const LocalField& K, int conductor, unsigned seed) {
    std::mt19937_64 rng(seed);
    for (;;) {
        MultChar chi = random_character(K, conductor, rng);
        if (chi.conductor() == conductor) return chi;
    }
}

void BM_GaussSum(benchmark::State& state) {
    const auto F = LocalField::ground(state.range(0));
    const MultChar chi = ramified_character(F, static_cast<int>(state.range(1)), 7);
    const AddChar psi(F);
    for (auto _ : state) benchmark::DoNotOptimize(gauss_sum(chi, psi));
}
BENCHMARK(BM_GaussSum)->Args({3, 1})->Args({3, 3})->Args({5, 2})->Args({7, 3});

void BM_TateFactors(benchmark::State& state) {
    const auto F = LocalField::ground(state.range(0));
    const MultChar chi = ramified_character(F, static_cast<int>(state.range(1)), 11);
    const AddChar psi(F);
    for (auto _ : state) benchmark::DoNotOptimize(tate_factors(chi, psi));
}
BENCHMARK(BM_TateFactors)->Args({3, 1})->Args({5, 2})->Unit(benchmark::kMicrosecond);

void BM_GammaRS(benchmark::State& state) {
    const auto E = LocalField::quadratic(5, ExtType::unramified);
    const AsaiInput in = AsaiInput::make(E, ramified_character(E, static_cast<int>(state.range(0)), 13),
                                         MultChar::trivial(E));
    for (auto _ : state) benchmark::DoNotOptimize(gamma_RS(in));
}
BENCHMARK(BM_GammaRS)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);

void BM_GammaPSR(benchmark::State& state) {
    const auto E = LocalField::quadratic(3, ExtType::ramified_p);
    const LocalField F = E.base();
    AsaiInput in = AsaiInput::make(E, ramified_character(E, 2, 17), MultChar::trivial(E));
    in.tau = TauData{ramified_character(F, 1, 19), MultChar::trivial(F), 1.0};
    const auto grid = default_grid();
    for (auto _ : state) benchmark::DoNotOptimize(gamma_PSR(in, grid, 1e-8, false));
}
BENCHMARK(BM_GammaPSR)->Unit(benchmark::kMicrosecond);

void BM_WhittakerBruteForce(benchmark::State& state) {
    const auto E = LocalField::quadratic(3, ExtType::unramified);
    const LocalField F = E.base();
    const AddChar psi = AddChar::via_trace_xi(E, F.fint(1), E.xi_canonical());
    const MultChar mu = ramified_character(E, static_cast<int>(state.range(0)), 23);
    const InducedSection f{mu, MultChar::trivial(E), SectionKind::big_cell};
    const Mat2 h = mat_diag(E, E.from_F(F.pi_pow(-1).a), E.one());
    for (auto _ : state) benchmark::DoNotOptimize(whittaker_from_section(f, psi, h));
}
BENCHMARK(BM_WhittakerBruteForce)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_SphericalZeta(benchmark::State& state) {
    const auto E = LocalField::quadratic(5, ExtType::unramified);
    std::mt19937_64 rng(29);
    const AsaiInput in = AsaiInput::make(E, random_unramified(E, rng), random_unramified(E, rng));
    for (auto _ : state) {
        SphericalZeta Z(in);
        benchmark::DoNotOptimize(Z.gamma(cplx(0.7, 0.2)));
    }
}
BENCHMARK(BM_SphericalZeta)->Unit(benchmark::kMillisecond);

void BM_ArchZetaClosed(benchmark::State& state) {
    const CChar mu{cplx(0.1, 0.05), 2}, nu{cplx(0.0, 0.2), -1};
    const WhittakerIndex idx{0, 3, 0, 0};
    for (auto _ : state)
        benchmark::DoNotOptimize(zeta_whittaker_closed(cplx(1.2, 0.3), idx, RealChar{1, 0.0}, mu, nu));
}
BENCHMARK(BM_ArchZetaClosed);

void BM_ArchZetaQuadrature(benchmark::State& state) {
    const CChar mu{cplx(0.1, 0.05), 2}, nu{cplx(0.0, 0.2), -1};
    const WhittakerIndex idx{0, 3, 0, 0};
    for (auto _ : state)
        benchmark::DoNotOptimize(zeta_whittaker_quadrature(cplx(1.2, 0.3), idx, RealChar{1, 0.0}, mu, nu));
}
BENCHMARK(BM_ArchZetaQuadrature)->Unit(benchmark::kMillisecond);

void BM_ArchCaseTable(benchmark::State& state) {
    const CChar mu{cplx(0.05, 0.1), 2}, nu{cplx(-0.05, 0.0), -1};
    const auto grid = default_grid();
    for (auto _ : state) benchmark::DoNotOptimize(verify_case(mu, nu, grid));
}
BENCHMARK(BM_ArchCaseTable)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
