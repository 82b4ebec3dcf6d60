#include <benchmark/benchmark.h>

#include <random>

#include "holodyn/dynamics.hpp"
#include "holodyn/fock.hpp"
#include "holodyn/graded.hpp"
#include "holodyn/jet.hpp"
#include "holodyn/sphere_search.hpp"
#include "holodyn/weight.hpp"

using namespace holodyn;

namespace {

Jet random_jet(int d, int cap, const Vector& base, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Jet j(d, cap, base);
    for (auto& c : j.coefficients()) c = {u(rng), u(rng)};
    return j;
}

PolyMap quadratic_pair() {
    Polynomial a(2), b(2);
    a.add_term(MultiIndex{2, 0}, 1.0);
    b.add_term(MultiIndex{0, 1}, 1.0);
    return PolyMap({a, b});
}

void BM_JetCompose(benchmark::State& state) {
    const int d = 2;
    const int cap = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    const Vector p = Vector::Zero(d);
    std::vector<Jet> comps;
    for (int i = 0; i < d; ++i) comps.push_back(random_jet(d, cap, p, rng).with_constant(0.0));
    const JetMap f(std::move(comps));
    const Jet h = random_jet(d, cap, p, rng);
    for (auto _ : state) benchmark::DoNotOptimize(jet_compose(h, f));
}
BENCHMARK(BM_JetCompose)->Arg(4)->Arg(8)->Arg(12);

void BM_GradedFormula(benchmark::State& state) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix A(3, 3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) A(i, j) = {u(rng), u(rng)};
    }
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(graded_matrix_formula(1.0, A, n));
}
BENCHMARK(BM_GradedFormula)->Arg(2)->Arg(5)->Arg(8);

void BM_PeriodicPoints1d(benchmark::State& state) {
    const PolyMap f({Polynomial::univariate({Complex(-0.12, 0.75), 0.0, 1.0})});
    const int r = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(periodic_points_1d(f, r));
}
BENCHMARK(BM_PeriodicPoints1d)->Arg(2)->Arg(4)->Arg(6);

void BM_FockMatrix(benchmark::State& state) {
    const PolyMap f({Polynomial::univariate({0.0, 0.0, 1.0})});
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(operator_matrix(Weight::one(1), f, N));
}
BENCHMARK(BM_FockMatrix)->Arg(10)->Arg(20)->Arg(40);

void BM_SphereMax(benchmark::State& state) {
    const PolyMap f = quadratic_pair();
    SphereBudget budget;
    budget.starts = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sphere_max(f, 1.5, budget));
}
BENCHMARK(BM_SphereMax)->Arg(20)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
