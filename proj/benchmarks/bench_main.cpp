#include <benchmark/benchmark.h>

#include <sltwist/sltwist.hpp>

using namespace sltwist;

namespace {

AdmissiblePair pair_arg(const benchmark::State& st) { return {static_cast<int>(st.range(0)), static_cast<int>(st.range(1))}; }

void pair_args(benchmark::internal::Benchmark* b) {
    for (auto [p, q] : {std::pair{1, 2}, {2, 3}, {3, 3}}) b->Args({p, q});
}

}  // namespace

static void BM_PeriodsQuadrature(benchmark::State& st) {
    auto pr = pair_arg(st);
    double tau = 0.5 * tau_max(pr);
    for (auto _ : st) benchmark::DoNotOptimize(periods_quadrature(pr, tau));
}
BENCHMARK(BM_PeriodsQuadrature)->Apply(pair_args);

static void BM_PeriodsOde(benchmark::State& st) {
    auto pr = pair_arg(st);
    double tau = 0.5 * tau_max(pr);
    for (auto _ : st) benchmark::DoNotOptimize(period_ode(pr, tau));
}
BENCHMARK(BM_PeriodsOde)->Apply(pair_args)->Unit(benchmark::kMillisecond);

static void BM_SolveTenPeriods(benchmark::State& st) {
    auto pr = pair_arg(st);
    double tau = 0.1 * tau_max(pr);
    double P = periods_quadrature(pr, tau).p_tau;
    for (auto _ : st) benchmark::DoNotOptimize(solve_w(pr, tau, -10 * P, 10 * P));
}
BENCHMARK(BM_SolveTenPeriods)->Apply(pair_args)->Unit(benchmark::kMillisecond);

static void BM_DpthatDtau(benchmark::State& st) {
    auto pr = pair_arg(st);
    double tau = 0.5 * tau_max(pr);
    for (auto _ : st) benchmark::DoNotOptimize(dpthat_dtau(pr, tau));
}
BENCHMARK(BM_DpthatDtau)->Apply(pair_args)->Unit(benchmark::kMillisecond);

static void BM_Torque(benchmark::State& st) {
    auto pr = pair_arg(st);
    double tau = 0.5 * tau_max(pr);
    auto sol = solve_w(pr, tau, -1, 1);
    auto gen = SuBasisElement::generator(pr);
    for (auto _ : st) benchmark::DoNotOptimize(torque(sol, gen, 0.3));
}
BENCHMARK(BM_Torque)->Apply(pair_args)->Unit(benchmark::kMillisecond);

static void BM_FindTau(benchmark::State& st) {
    AdmissiblePair pr(1, 2);
    RationalTarget t(4, 7);
    for (auto _ : st) benchmark::DoNotOptimize(find_tau_for_angular_period(pr, t));
}
BENCHMARK(BM_FindTau)->Unit(benchmark::kMillisecond);

static void BM_CatenoidLifetime(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(catenoid_lifetime_quadrature(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_CatenoidLifetime)->Arg(3)->Arg(6);
BENCHMARK_MAIN();
