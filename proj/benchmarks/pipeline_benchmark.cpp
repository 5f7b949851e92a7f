// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <vector>

#include "rssb/dsp.hpp"
#include "rssb/estimators.hpp"
#include "rssb/evaluation.hpp"
#include "rssb/rss_model.hpp"
#include "rssb/scenarios.hpp"
#include "rssb/simulator.hpp"
#include "rssb/spectrum.hpp"

namespace {

using namespace rssb;

sim::ScenarioConfig noisy_bed() {
  auto c = scenarios::bed_like(7);
  c.noise_std = 0.88;
  return c;
}

const dsp::Preprocessed& bed_preprocessed() {
  static const dsp::Preprocessed pre = [] {
    const auto c = noisy_bed();
    return dsp::preprocess(sim::synthesize(c).front(), dsp::FilterSpec{}, c.fs);
  }();
  return pre;
}

void BM_Synthesize(benchmark::State& state) {
  auto c = noisy_bed();
  c.channels_hz.assign(static_cast<std::size_t>(state.range(0)), 2.44e9);
  for (auto _ : state) benchmark::DoNotOptimize(sim::synthesize(c));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 3750);
}
BENCHMARK(BM_Synthesize)->Arg(1)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_LogHarmonics(benchmark::State& state) {
  auto c = scenarios::reference_link();
  scenarios::place_at_excess(c, 0.75 * c.medium.wavelength);
  const auto st = model::reflection_state(c.link, c.motion, c.medium);
  for (auto _ : state) benchmark::DoNotOptimize(model::log_harmonics(st, 4, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LogHarmonics)->Arg(2)->Arg(50);

void BM_DesignElliptic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dsp::design_elliptic(dsp::FilterSpec{}, 31.25));
}
BENCHMARK(BM_DesignElliptic);

void BM_Preprocess(benchmark::State& state) {
  const auto c = noisy_bed();
  const auto trace = sim::synthesize(c).front();
  for (auto _ : state) benchmark::DoNotOptimize(dsp::preprocess(trace, dsp::FilterSpec{}, c.fs));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(trace.size()));
}
BENCHMARK(BM_Preprocess)->Unit(benchmark::kMicrosecond);

void BM_Periodogram(benchmark::State& state) {
  std::vector<double> x(938, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = (i % 7) * 0.1;
  for (auto _ : state) benchmark::DoNotOptimize(spectrum::periodogram(x, 2048));
}
BENCHMARK(BM_Periodogram);

void BM_DftEstimate(benchmark::State& state) {
  const auto& pre = bed_preprocessed();
  const est::DftConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(est::dft_estimate(pre.timestamps, pre.y, cfg, pre.mean));
}
BENCHMARK(BM_DftEstimate)->Unit(benchmark::kMillisecond);

void BM_KfEstimate(benchmark::State& state) {
  const auto& pre = bed_preprocessed();
  const est::KfConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(est::kf_estimate(pre.timestamps, pre.z, cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pre.z.size()));
}
BENCHMARK(BM_KfEstimate)->Unit(benchmark::kMillisecond);

void BM_GpEstimate(benchmark::State& state) {
  const auto& pre = bed_preprocessed();
  est::GpConfig cfg;
  cfg.harmonics = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(est::gp_estimate(pre.timestamps, pre.z, cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pre.z.size()));
}
BENCHMARK(BM_GpEstimate)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
