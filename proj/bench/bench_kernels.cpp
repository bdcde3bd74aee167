#include <random>

#include <benchmark/benchmark.h>

#include "gesture/vision.hpp"

namespace {

using namespace gesture::vision;

GrayFrame noise_frame(int w, int h, unsigned seed) {
    std::mt19937 rng(seed);
    GrayFrame f(w, h);
    for (auto& p : f.pixels) p = static_cast<std::uint8_t>(rng() & 0xFF);
    return f;
}

template <auto Update>
void BM_UpdateBackground(benchmark::State& state) {
    const int w = static_cast<int>(state.range(0));
    const int h = w * 3 / 4;
    const GrayFrame f = noise_frame(w, h, 1);
    BackgroundModel bg = BackgroundModel::from_frame(noise_frame(w, h, 2));
    for (auto _ : state) {
        bg = Update(bg, f, 0.05);
        benchmark::DoNotOptimize(bg.accum.data());
    }
    state.SetItemsProcessed(state.iterations() * w * h);
}

template <auto Subtract>
void BM_Subtract(benchmark::State& state) {
    const int w = static_cast<int>(state.range(0));
    const int h = w * 3 / 4;
    const GrayFrame f = noise_frame(w, h, 3);
    const BackgroundModel bg = BackgroundModel::from_frame(noise_frame(w, h, 4));
    for (auto _ : state) {
        auto mask = Subtract(bg, f, 25.0);
        benchmark::DoNotOptimize(mask.bits.data());
    }
    state.SetItemsProcessed(state.iterations() * w * h);
}

BackgroundModel update_serial(const BackgroundModel& bg, const GrayFrame& f, double rho) {
    return reference::update_background(bg, f, rho);
}
BackgroundModel update_parallel(const BackgroundModel& bg, const GrayFrame& f, double rho) {
    return update_background(bg, f, rho);
}
BinaryMask subtract_serial(const BackgroundModel& bg, const GrayFrame& f, double theta) {
    return reference::subtract(bg, f, theta);
}
BinaryMask subtract_parallel(const BackgroundModel& bg, const GrayFrame& f, double theta) {
    return subtract(bg, f, theta);
}

}  // namespace

BENCHMARK(BM_UpdateBackground<update_serial>)->Name("update_background/serial")->Arg(640)->Arg(1920);
BENCHMARK(BM_UpdateBackground<update_parallel>)->Name("update_background/omp")->Arg(640)->Arg(1920);
BENCHMARK(BM_Subtract<subtract_serial>)->Name("subtract/serial")->Arg(640)->Arg(1920);
BENCHMARK(BM_Subtract<subtract_parallel>)->Name("subtract/omp")->Arg(640)->Arg(1920);

BENCHMARK_MAIN();
