#include <benchmark/benchmark.h>

#include "bdae/gaussian.hpp"
#include "bdae/noise.hpp"
#include "bdae/patch_system.hpp"
#include "bdae/patches.hpp"
#include "bdae/phantom.hpp"
#include "bdae/prox.hpp"
#include "bdae/transform_learning.hpp"

namespace {

bdae::Image noisy_phantom(int size) {
    return bdae::add_gaussian_noise(bdae::shepp_logan(size),
                                    {bdae::NoiseSpec::Kind::gaussian, 25.0, 0.0, 1});
}

void BM_ExtractPatches(benchmark::State& state) {
    const bdae::Image img = noisy_phantom(static_cast<int>(state.range(0)));
    const bdae::PatchConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bdae::extract_patches(img, cfg));
    }
}
BENCHMARK(BM_ExtractPatches)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_AggregatePatches(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const bdae::PatchConfig cfg;
    const bdae::PatchMatrix pm = bdae::extract_patches(noisy_phantom(n), cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bdae::aggregate_patches(pm, cfg, n, n));
    }
}
BENCHMARK(BM_AggregatePatches)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_PatchOperator(benchmark::State& state) {
    const bdae::Image img = noisy_phantom(static_cast<int>(state.range(0)));
    const bdae::PatchConfig cfg;
    const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(64, 64) * 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bdae::apply_patch_operator(1.0, m, img, cfg));
    }
}
BENCHMARK(BM_PatchOperator)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SoftThreshold(benchmark::State& state) {
    const Eigen::MatrixXd v = Eigen::MatrixXd::Random(128, state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bdae::soft_threshold(v, 0.1));
    }
    state.SetItemsProcessed(state.iterations() * v.size());
}
BENCHMARK(BM_SoftThreshold)->Arg(3249)->Arg(62001)->Unit(benchmark::kMicrosecond);

void BM_IstaCodes(benchmark::State& state) {
    const bdae::Image img = noisy_phantom(static_cast<int>(state.range(0)));
    const bdae::SolverConfig cfg;
    const bdae::AutoencoderState s = bdae::init_state(img, cfg);
    const bdae::PatchMatrix pm = bdae::extract_patches(img, cfg.patch);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bdae::update_codes_ista(s, pm, cfg));
    }
}
BENCHMARK(BM_IstaCodes)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_ImageSolve(benchmark::State& state) {
    const bdae::Image img = noisy_phantom(static_cast<int>(state.range(0)));
    const bdae::SolverConfig cfg;
    const bdae::AutoencoderState s = bdae::init_state(img, cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bdae::update_image_gaussian(s, img, cfg));
    }
}
BENCHMARK(BM_ImageSolve)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_TransformUpdate(benchmark::State& state) {
    const bdae::Image img = noisy_phantom(64);
    const bdae::SolverConfig cfg;
    const bdae::TransformState s = bdae::tl_init_state(img, cfg);
    const bdae::PatchMatrix pm = bdae::extract_patches(img, cfg.patch);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bdae::tl_update_transform(pm.data, s.codes, s.tl_lambda, s.eps_reg));
    }
}
BENCHMARK(BM_TransformUpdate)->Unit(benchmark::kMillisecond);

void BM_OuterIteration(benchmark::State& state) {
    const bdae::Image img = noisy_phantom(64);
    bdae::SolverConfig cfg;
    cfg.max_outer_iters = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bdae::denoise_gaussian(img, cfg));
    }
}
BENCHMARK(BM_OuterIteration)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
