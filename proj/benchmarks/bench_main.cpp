#include <benchmark/benchmark.h>

#include <random>

#include "tvlinf/diff_ops.hpp"
#include "tvlinf/prox.hpp"
#include "tvlinf/synthetic.hpp"
#include "tvlinf/tvl_solver.hpp"

namespace {

using namespace tvlinf;

ScalarField random_field(int nx, int ny, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    GridSpec g = GridSpec::plane(nx, ny);
    std::vector<double> v(static_cast<std::size_t>(g.point_count()));
    for (double& x : v) x = dist(rng);
    return ScalarField(g, std::move(v));
}

void BM_Gradient(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ScalarField u = random_field(n, n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(gradient(u));
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_Gradient)->Arg(128)->Arg(256)->Arg(512);

void BM_Divergence(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const VectorField p = gradient(random_field(n, n, 2));
    for (auto _ : state) benchmark::DoNotOptimize(divergence(p));
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_Divergence)->Arg(128)->Arg(256)->Arg(512);

void BM_ProjectL1Ball(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937 rng(3);
    std::normal_distribution<double> dist;
    std::vector<double> v(static_cast<std::size_t>(n));
    for (double& x : v) x = dist(rng);
    for (auto _ : state) benchmark::DoNotOptimize(project_l1_ball(v, 0.1 * n));
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ProjectL1Ball)->Arg(1 << 12)->Arg(1 << 16);

void BM_ProxLinf(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const VectorField v = gradient(random_field(n, n, 4));
    for (auto _ : state) benchmark::DoNotOptimize(prox_linf(v, 0.5));
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_ProxLinf)->Arg(64)->Arg(128);

void BM_SolveTvIterations(benchmark::State& state) {
    const ScalarField f = add_gaussian_noise(circle_2d(64), 0.01, 11);
    RegParams p;
    p.max_iters = 50;
    p.tol = 1e-30;  // run exactly max_iters
    for (auto _ : state) benchmark::DoNotOptimize(solve_tv(f, 0.2, p));
    state.SetItemsProcessed(state.iterations() * p.max_iters);
}
BENCHMARK(BM_SolveTvIterations)->Unit(benchmark::kMillisecond);

void BM_SolveTvlinfIterations(benchmark::State& state) {
    const ScalarField f = add_gaussian_noise(circle_2d(64), 0.01, 11);
    RegParams p;
    p.alpha = 0.2;
    p.beta = 20.0;
    p.max_iters = 50;
    p.tol = 1e-30;
    for (auto _ : state) benchmark::DoNotOptimize(solve_tvlinf(f, p));
    state.SetItemsProcessed(state.iterations() * p.max_iters);
}
BENCHMARK(BM_SolveTvlinfIterations)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
