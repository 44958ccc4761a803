#include <benchmark/benchmark.h>

#include <random>

#include "lips/lp.hpp"
#include "lips/membership.hpp"
#include "lips/unbounded.hpp"

namespace {

lips::ParametricSystem example_one() {
    auto s = lips::ParametricSystem::zero(2, 2);
    s.a0 = lips::Matrix{{1, 0}, {1, 0}};
    s.b0 = {1, 0};
    auto& p = s.add_parameter("p1", lips::Interval(0, 1));
    p.a = lips::Matrix{{0, 0}, {0, 1}};
    p.b = {0, 1};
    return s;
}

/// n x n interval system with one parameter per coefficient.
lips::ParametricSystem ordinary(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> mid(-3, 3);
    auto s = lips::ParametricSystem::zero(n, n);
    int k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            long c = mid(rng) + (i == j ? 6 : 0);
            auto& p = s.add_parameter("c" + std::to_string(k++), lips::Interval(lips::Rational(c) - lips::ratio(1, 2),
                                                                                lips::Rational(c) + lips::ratio(1, 2)));
            if (j < n) p.a(i, j) = 1;
            else p.b[i] = 1;
        }
    }
    return s;
}

lips::Polyhedron random_polyhedron(std::size_t dim, std::size_t rows, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-3, 3);
    lips::Polyhedron p(dim);
    for (std::size_t r = 0; r < rows; ++r) {
        lips::Vector a(dim);
        for (auto& x : a) x = coef(rng);
        p.add_inequality(a, coef(rng) + 3);
    }
    return p;
}

void BM_LpFeasible(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto p = random_polyhedron(dim, 2 * dim, 42);
    for (auto _ : state) benchmark::DoNotOptimize(lips::lp_feasible(p));
}
BENCHMARK(BM_LpFeasible)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_MemberUnitedExampleOne(benchmark::State& state) {
    const auto s = example_one();
    const lips::Vector x{1, -5};
    for (auto _ : state) benchmark::DoNotOptimize(lips::member_united(s, x));
}
BENCHMARK(BM_MemberUnitedExampleOne);

void BM_MemberUnitedOrdinary(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto s = ordinary(n, 7);
    const lips::Vector x(n, lips::ratio(1, 3));
    for (auto _ : state) benchmark::DoNotOptimize(lips::member_united(s, x));
}
BENCHMARK(BM_MemberUnitedOrdinary)->Arg(2)->Arg(3)->Arg(4);

void BM_DecideUnboundedExampleOne(benchmark::State& state) {
    const auto s = example_one();
    const auto q = lips::QuantifierAssignment::all_existential(1);
    const lips::Vector y{0, -1};
    for (auto _ : state) benchmark::DoNotOptimize(lips::decide_unbounded(s, q, y));
}
BENCHMARK(BM_DecideUnboundedExampleOne)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
