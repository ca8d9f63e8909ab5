#include "ringinv/along.hpp"
#include "ringinv/classical.hpp"
#include "ringinv/literal.hpp"
#include "ringinv/search.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace ringinv;

namespace {

std::vector<Element> sample(const RingContext& ring, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Element> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(random_element(ring, rng, 3));
    }
    return out;
}

void BM_InvertAlongModular(benchmark::State& state) {
    const auto ring = RingContext::modular(state.range(0));
    const auto all = enumerate(ring);
    for (auto _ : state) {
        for (const auto& a : all) {
            for (const auto& d : all) {
                benchmark::DoNotOptimize(invert_along(a, d));
            }
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(all.size() * all.size()));
}
BENCHMARK(BM_InvertAlongModular)->Arg(9)->Arg(12)->Arg(30);

void BM_InvertAlongMatrix(benchmark::State& state) {
    const auto ring = RingContext::matrix(static_cast<std::size_t>(state.range(0)));
    const auto as = sample(ring, 32, 1);
    const auto ds = sample(ring, 32, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(invert_along(as[i % 32], ds[i % 32] * as[(i + 7) % 32]));
        ++i;
    }
}
BENCHMARK(BM_InvertAlongMatrix)->Arg(2)->Arg(3)->Arg(4);

void BM_MoorePenrose3x3(benchmark::State& state) {
    const auto ring = RingContext::matrix(3);
    const auto xs = sample(ring, 64, 3);
    const Element shift = parse_element(ring, "[[0,1,0],[0,0,1],[0,0,0]]");
    std::size_t i = 0;
    for (auto _ : state) {
        const Element a = (i % 2 == 0) ? xs[i % 64] : xs[i % 64] * shift;
        benchmark::DoNotOptimize(moore_penrose(a));
        ++i;
    }
}
BENCHMARK(BM_MoorePenrose3x3);

void BM_Drazin3x3(benchmark::State& state) {
    const auto ring = RingContext::matrix(3);
    const auto xs = sample(ring, 64, 4);
    const Element shift = parse_element(ring, "[[0,1,0],[0,0,1],[0,0,0]]");
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(drazin_inverse(xs[i % 64] * shift));
        ++i;
    }
}
BENCHMARK(BM_Drazin3x3);

void BM_VerifyExhaustive(benchmark::State& state) {
    const auto ring = RingContext::modular(state.range(0));
    const auto universe = make_universe(ring);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_exhaustive(Law::absorption_cross, universe, {}, RunOptions{1, 0}));
    }
}
BENCHMARK(BM_VerifyExhaustive)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_VerifyThreads(benchmark::State& state) {
    const auto universe = make_universe(RingContext::modular(9));
    const RunOptions options{static_cast<std::size_t>(state.range(0)), 0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_exhaustive(Law::reverse_order, universe, {}, options));
    }
}
BENCHMARK(BM_VerifyThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
