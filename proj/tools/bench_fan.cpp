#include <benchmark/benchmark.h>

#include "lsfan/fan.hpp"

using namespace lsfan;

namespace {

struct Setup {
    std::shared_ptr<WeylGroup const> group = std::make_shared<WeylGroup const>(build_root_datum('A', 3));
    std::unique_ptr<Instance> instance;
    std::unique_ptr<LSFan> fan;

    Setup()
    {
        std::vector<Weight> lambdas{Weight({0, 0, 1}), Weight({0, 1, 0}), Weight({1, 0, 0})};
        instance = std::make_unique<Instance>(group, lambdas, IndexPoset::chain(3), group->top_coset(Parabolic{0}));
        fan = std::make_unique<LSFan>(*instance, build_dcp_inductive(*instance));
    }
};

Setup& setup()
{
    static Setup s;
    return s;
}

void BM_FanSerial(benchmark::State& state)
{
    int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(setup().fan->enumerate_serial({k, k, k}));
}

void BM_FanParallel(benchmark::State& state)
{
    int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(setup().fan->enumerate({k, k, k}));
}

}  // namespace

BENCHMARK(BM_FanSerial)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FanParallel)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
