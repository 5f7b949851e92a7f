// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rssb/error.hpp"
#include "rssb/estimators.hpp"
#include "rssb/evaluation.hpp"
#include "rssb/scenarios.hpp"

namespace rssb::est {
namespace {

using std::numbers::pi;
constexpr double kFs = 31.25;

double late_median(const EstimateSeries& s, double t_from = 30.0) {
  std::vector<double> v;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s.timestamps[k] > t_from) v.push_back(s.f_hat[k]);
  }
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2), v.end());
  return v[v.size() / 2];
}

sim::ScenarioConfig bed_at(double target_db, std::uint64_t seed) {
  auto c = scenarios::bed_like(seed);
  c.noise_std = eval::calibrate_noise_std(c, target_db, eval::SnrTarget::kPeriodogramEstimate);
  return c;
}

// --- periodogram ----------------------------------------------------------

TEST(DftEstimate, ToneLandsOnNearestBin) {
  const std::size_t n = 3750;
  const auto t = testing::sample_times(n, kFs);
  const auto y = testing::tone(n, kFs, 0.25, 1.0, 0.3);
  const auto r = dft_estimate(t, y, DftConfig{});
  ASSERT_EQ(r.series.size(), n - 938 + 1);
  EXPECT_DOUBLE_EQ(r.series.timestamps.front(), t[937]);
  for (double f : r.series.f_hat) EXPECT_DOUBLE_EQ(f, 16.0 * 31.25 / 2048.0);
  EXPECT_NEAR(r.series.f_hat.back() * 60.0, 14.65, 0.01);
}

TEST(DftEstimate, WhiteNoiseHitsAtTheBandFractionRate) {
  const DftConfig cfg;
  // Oracle: share of in-band bins within 1 bpm of 0.2 Hz.
  int in_band = 0, near = 0;
  for (std::size_t l = 1; l <= cfg.fft_len / 2; ++l) {
    const double f = l * cfg.fs / static_cast<double>(cfg.fft_len);
    if (f < cfg.band_min || f > cfg.band_max) continue;
    ++in_band;
    near += std::abs(f - 0.2) * 60.0 <= 1.0;
  }
  const double baseline = 100.0 * near / in_band;

  std::mt19937_64 rng(21);
  std::normal_distribution<double> g;
  const std::size_t n = 968;
  const auto t = testing::sample_times(n, kFs);
  double total = 0.0;
  const int seeds = 200;
  for (int s = 0; s < seeds; ++s) {
    std::vector<double> y(n);
    for (double& v : y) v = g(rng);
    total += eval::hit_ratio(dft_estimate(t, y, cfg).series, 0.2);
  }
  EXPECT_NEAR(total / seeds, baseline, 2.5) << "baseline " << baseline;
}

TEST(DftEstimate, DominantSecondHarmonicWins) {
  const std::size_t n = 3750;
  const auto t = testing::sample_times(n, kFs);
  auto y = testing::tone(n, kFs, 0.2, 0.3);
  const auto y2 = testing::tone(n, kFs, 0.4, 1.0, 0.7);
  for (std::size_t k = 0; k < n; ++k) y[k] += y2[k];
  const auto r = dft_estimate(t, y, DftConfig{});
  for (double f : r.series.f_hat) EXPECT_NEAR(f, 0.4, 0.5 * 31.25 / 2048.0);
}

TEST(DftEstimate, ShortTraceIsInsufficient) {
  const auto t = testing::sample_times(900, kFs);
  const std::vector<double> y(900, 0.0);
  EXPECT_THROW(dft_estimate(t, y, DftConfig{}), InsufficientDataError);
}

TEST(DftEstimate, SpectrogramOnRequest) {
  const auto t = testing::sample_times(1000, kFs);
  const auto y = testing::tone(1000, kFs, 0.3, 1.0);
  DftConfig cfg;
  cfg.keep_spectrogram = true;
  const auto r = dft_estimate(t, y, cfg);
  ASSERT_EQ(r.spectrogram.psd.size(), r.series.size());
  EXPECT_EQ(r.spectrogram.psd.front().size(), r.spectrogram.freqs.size());
  EXPECT_GE(r.spectrogram.freqs.front(), cfg.band_min);
  EXPECT_LE(r.spectrogram.freqs.back(), cfg.band_max);
  EXPECT_TRUE(dft_estimate(t, y, DftConfig{}).spectrogram.psd.empty());
}

TEST(DftConfig, ForRate) {
  const auto c = DftConfig::for_rate(31.25);
  EXPECT_EQ(c.window_len, 938u);
  EXPECT_EQ(c.overlap, 937u);
}

// --- Fourier-coefficient Kalman filter ------------------------------------

TEST(KfEstimate, ConstantSignal) {
  const std::size_t n = 1000;
  const auto t = testing::sample_times(n, kFs);
  const std::vector<double> z(n, -3.5);
  const auto r = kf_estimate(t, z, KfConfig{});
  EXPECT_NEAR(r.reconstruction.back(), -3.5, 1e-12);
  for (bool u : r.undetermined) EXPECT_TRUE(u);
}

TEST(KfEstimate, ToneOnABin) {
  const KfConfig cfg;
  for (std::size_t j : {3u, 10u, 20u}) {
    const double f = cfg.bin_freqs[j];
    const std::size_t n = static_cast<std::size_t>(60 * kFs);
    const auto t = testing::sample_times(n, kFs);
    auto z = testing::tone(n, kFs, f, 0.8, 0.4);
    for (double& v : z) v += 2.0;
    const auto r = kf_estimate(t, z, cfg);
    for (std::size_t k = n / 2; k < n; ++k) ASSERT_EQ(r.f_hat[k], f) << "bin " << j << " t " << t[k];
    EXPECT_FALSE(r.undetermined.back());
  }
}

TEST(KfEstimate, ReconstructionReachesTheNoiseFloor) {
  const KfConfig cfg;
  const double f = cfg.bin_freqs[3], sigma = 1.0;
  const std::size_t n = 3750;
  const auto t = testing::sample_times(n, kFs);
  const auto clean = testing::tone(n, kFs, f, 1.5, 0.2);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g(0.0, sigma);
  std::vector<double> z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = clean[k] + g(rng);
  const auto r = kf_estimate(t, z, cfg);
  const std::span<const double> zs(z), rs(r.reconstruction);
  const double ez = eval::modeling_mae(zs.subspan(n / 4), rs.subspan(n / 4));
  EXPECT_NEAR(ez / testing::gaussian_mae(sigma), 1.0, 0.1);
}

TEST(KfEstimate, DefaultBins) {
  const auto b = KfConfig::default_bins();
  ASSERT_EQ(b.size(), 75u);
  EXPECT_DOUBLE_EQ(b.front(), 0.1);
  EXPECT_NEAR(b.back(), 2.5, 1e-12);
  for (std::size_t n = 1; n < b.size(); ++n) EXPECT_NEAR(b[n] - b[n - 1], 2.4 / 74.0, 1e-12);
  EXPECT_THROW(KfConfig::default_bins(0), ValidationError);
  EXPECT_THROW(KfConfig::default_bins(10, 2.0, 1.0), ValidationError);
}

TEST(KfEstimate, ConvergesOnBedLikeTraces) {
  int converged = 0;
  const int seeds = 20;
  for (int s = 1; s <= seeds; ++s) {
    const auto c = bed_at(-5.0, s);
    const auto r = eval::run_estimator(sim::synthesize(c).front(), eval::Method::kKf, {}, c.fs);
    const auto ct = eval::convergence_time(r.series, 0.2);
    converged += ct && *ct < 30.0;
  }
  EXPECT_GE(converged, 0.75 * seeds) << converged << "/" << seeds;
}

// --- Rao-Blackwellized GP filter ------------------------------------------

TEST(GpConfig, Defaults) {
  const GpConfig c;
  EXPECT_EQ(c.state_dim(), 6u);
  EXPECT_DOUBLE_EQ(GpConfig::init_harmonic_var(1), 0.5);
  EXPECT_DOUBLE_EQ(GpConfig::init_harmonic_var(2), 1.0 / 8.0);
  EXPECT_NEAR(c.init_log_freq, std::log(15.0 / 60.0), 1e-15);
  GpConfig bad;
  bad.harmonics = 0;
  EXPECT_THROW(bad.validate(), ValidationError);
}

TEST(GpKernel, TruncationApproachesTheKernel) {
  for (double tau : {0.0, 0.7, 2.1, 4.9}) {
    const double k = periodic_kernel(tau, 0.2, 0.01, 0.9);
    EXPECT_NEAR(periodic_kernel_truncated(tau, 0.2, 0.01, 0.9, 12), k, 1e-10);
  }
  EXPECT_NEAR(periodic_kernel(0.0, 0.2, 0.01, 0.9), 0.01, 1e-15);
  EXPECT_NEAR(periodic_kernel(5.0, 0.2, 0.01, 0.9), 0.01, 1e-15);
}

TEST(GpEstimate, SelfConsistentSignal) {
  // z in the span of the NGP = 2 observation model at f = 0.2 Hz, nearly noise free.
  const std::size_t n = static_cast<std::size_t>(90 * kFs);
  const auto t = testing::sample_times(n, kFs);
  const auto a = testing::tone(n, kFs, 0.2, 0.5, 0.4);
  const auto b = testing::tone(n, kFs, 0.4, 0.15, 1.3);
  std::vector<double> z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = -1.0 + a[k] + b[k];
  GpConfig cfg;
  cfg.meas_var = 1e-4;
  const auto r = gp_estimate(t, z, cfg);
  EXPECT_NEAR(r.states.back()[0], std::log(0.2), 0.01);
  EXPECT_NEAR(r.f_hat.back() * 60.0, 12.0, 0.1);
  const std::span<const double> zs(z), rs(r.reconstruction);
  EXPECT_LT(eval::modeling_mae(zs.subspan(n / 2), rs.subspan(n / 2)), 0.01);
}

TEST(GpEstimate, SecondHarmonicTraceGivesTheBreathingRate) {
  auto c = scenarios::second_harmonic(1);
  c.quantization_step = 0.0;
  const auto r = eval::run_estimator(sim::synthesize(c).front(), eval::Method::kGp, {}, c.fs);
  EXPECT_NEAR(late_median(r.series) * 60.0, 12.0, 1.0);
}

TEST(GpEstimate, BedLikeConvergenceAndSteadyError) {
  const int seeds = 20;
  std::vector<double> times;
  double late = 0.0;
  for (int s = 1; s <= seeds; ++s) {
    const auto c = bed_at(-5.0, s);
    const auto r = eval::run_estimator(sim::synthesize(c).front(), eval::Method::kGp, {}, c.fs);
    times.push_back(eval::convergence_time(r.series, 0.2).value_or(1e9));
    late += *eval::convergence_split(r.series, 0.2).late / seeds;
  }
  std::nth_element(times.begin(), times.begin() + seeds / 2, times.end());
  EXPECT_LE(times[seeds / 2], 30.0);
  EXPECT_GE(late, 0.15 - 0.2);
  EXPECT_LE(late, 0.3 + 0.2);
}

TEST(GpEstimate, SecondHarmonicTermLowersModelingError) {
  const int seeds = 10;
  double ez1 = 0.0, ez2 = 0.0;
  for (int s = 1; s <= seeds; ++s) {
    const auto tr = sim::synthesize(bed_at(-5.0, s)).front();
    eval::EstimatorConfigs cfg;
    cfg.gp.harmonics = 1;
    const auto r1 = eval::run_estimator(tr, eval::Method::kGp, cfg, kFs);
    cfg.gp.harmonics = 2;
    const auto r2 = eval::run_estimator(tr, eval::Method::kGp, cfg, kFs);
    ez1 += eval::modeling_mae(r1.z_aligned, r1.series.reconstruction);
    ez2 += eval::modeling_mae(r2.z_aligned, r2.series.reconstruction);
  }
  EXPECT_LT(ez2, ez1);
}

TEST(GpEstimate, StateLayout) {
  const std::size_t n = 400;
  const auto t = testing::sample_times(n, kFs);
  const auto z = testing::tone(n, kFs, 0.2, 1.0);
  GpConfig cfg;
  cfg.harmonics = 3;
  const auto r = gp_estimate(t, z, cfg);
  ASSERT_EQ(r.states.size(), n);
  EXPECT_EQ(r.states.front().size(), cfg.state_dim());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& x = r.states[k];
    EXPECT_NEAR(r.f_hat[k], std::exp(x[0]), 1e-12);
    EXPECT_NEAR(r.reconstruction[k], x[1] + x[gp_harmonic_index(1)] + x[gp_harmonic_index(2)] + x[gp_harmonic_index(3)],
                1e-12);
  }
}

}  // namespace
}  // namespace rssb::est
