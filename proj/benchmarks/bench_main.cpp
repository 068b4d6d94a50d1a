#include <benchmark/benchmark.h>

#include "paritylab/descent.hpp"
#include "paritylab/parity.hpp"
#include "paritylab/tate.hpp"

namespace {

using namespace paritylab;

void BM_TateAlgorithm(benchmark::State& state) {
    Model m{Rat(0), Rat(-7), Rat(0), Rat(16), Rat(0)};
    long l = state.range(0);
    for (auto _ : state) {
        LocalReduction red = tate_algorithm(m, l);
        benchmark::DoNotOptimize(red.tamagawa);
    }
}
BENCHMARK(BM_TateAlgorithm)->Arg(2)->Arg(3)->Arg(23);

void BM_Hilbert(benchmark::State& state) {
    Place v = Place::at(state.range(0));
    Rat x(3465), y(-1001);
    for (auto _ : state) {
        int h = hilbert(x, y, v);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_Hilbert)->Arg(2)->Arg(7)->Arg(1009);

void BM_LocalSolvable(benchmark::State& state) {
    TwoIsogenyPair pair = two_isogeny_pair(Rat(1), Rat(-6));
    Torsor t = make_torsor(pair, Direction::Phi, Int(-6));
    Place v = Place::at(state.range(0));
    for (auto _ : state) {
        bool s = local_solvable(t, v, 40);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_LocalSolvable)->Arg(2)->Arg(3)->Arg(1009);

void BM_GlobalCheck(benchmark::State& state) {
    IsogenyContext ctx = context_of(two_isogeny_pair(Rat(1), Rat(-6)));
    for (auto _ : state) {
        GlobalReport g = global_check(ctx, 42);
        benchmark::DoNotOptimize(g.pass);
    }
}
BENCHMARK(BM_GlobalCheck);

} // namespace

BENCHMARK_MAIN();
