#include <benchmark/benchmark.h>

#include <qlogic/qlogic.hpp>

using namespace qlogic;

namespace {

void BM_HermitianEig(benchmark::State &state) {
    const int d = static_cast<int>(state.range(0));
    RandomSource rng(1);
    const ComplexMatrix a = rng.hermitian(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eig(a));
    }
}
BENCHMARK(BM_HermitianEig)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Meet(benchmark::State &state) {
    const int d = static_cast<int>(state.range(0));
    RandomSource rng(2);
    const Projection p = rng.projection(d, d / 2);
    const Projection q = rng.projection(d, d / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(meet(p, q));
    }
}
BENCHMARK(BM_Meet)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_Conditional(benchmark::State &state) {
    const int d = static_cast<int>(state.range(0));
    const auto kind = static_cast<ConditionalKind>(state.range(1));
    RandomSource rng(3);
    const Projection p = rng.projection(d, d / 2);
    const Projection q = rng.projection(d, d / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(conditional(kind, p, q));
    }
}
BENCHMARK(BM_Conditional)->ArgsProduct({{2, 4, 8}, {0, 1, 2}});

void BM_TruthEqual(benchmark::State &state) {
    const int d = static_cast<int>(state.range(0));
    const int rank = static_cast<int>(state.range(1));
    RandomSource rng(4);
    const std::vector<Projection> pool = rng.generic_pool(d, 3);
    const QSet u = rng.qset(d, rank, pool);
    const QSet v = rng.qset(d, rank, pool);
    for (auto _ : state) {
        benchmark::DoNotOptimize(truth_equal(u, v, ConditionalKind::Sasaki));
    }
}
BENCHMARK(BM_TruthEqual)->ArgsProduct({{2, 4}, {1, 2, 3}});

}  // namespace
BENCHMARK_MAIN();
