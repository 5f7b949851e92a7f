// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rssb/dsp.hpp"
#include "rssb/error.hpp"
#include "rssb/spectrum.hpp"

namespace rssb::dsp {
namespace {

using std::numbers::pi;
constexpr double kFs = 31.25;

RssTrace uniform_trace(const std::vector<double>& v, double fs = kFs) {
  RssTrace t;
  t.values = v;
  t.timestamps = testing::sample_times(v.size(), fs);
  return t;
}

double rms(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s / static_cast<double>(x.size()));
}

TEST(DesignElliptic, MeetsTemplateAtTheEdges) {
  const auto d = design_elliptic(FilterSpec{}, kFs);
  const auto& sos = d.filter.sections();
  EXPECT_EQ(sos.size(), 3u);  // order 5: two biquads and a first-order section
  EXPECT_GE(testing::sos_magnitude_db(sos, 2.0, kFs), -0.05 - 1e-9);
  EXPECT_LE(testing::sos_magnitude_db(sos, 2.0, kFs), 1e-9);
  EXPECT_LE(testing::sos_magnitude_db(sos, 3.0, kFs), -40.0);
  EXPECT_NEAR(std::abs(testing::sos_response(sos, 0.0, kFs)), 1.0, 1e-10);
  EXPECT_NEAR(d.filter.dc_gain(), 1.0, 1e-10);
  EXPECT_GE(d.achieved_atten_db, 40.0);
}

TEST(DesignElliptic, ResponseAgreesWithOracle) {
  const auto d = design_elliptic(FilterSpec{}, kFs);
  for (double f = 0.0; f < kFs / 2.0; f += 0.173) {
    EXPECT_NEAR(std::abs(d.filter.response(f, kFs) - testing::sos_response(d.filter.sections(), f, kFs)), 0.0, 1e-12);
  }
}

TEST(DesignElliptic, StableSections) {
  for (double fs : {10.0, 31.25, 100.0}) {
    for (const auto& s : design_elliptic(FilterSpec{}, fs).filter.sections()) {
      // both poles of 1 + a1 z^-1 + a2 z^-2 inside the unit circle
      EXPECT_LT(std::abs(s.a2), 1.0);
      EXPECT_LT(std::abs(s.a1), 1.0 + s.a2);
    }
  }
}

TEST(DesignElliptic, InfeasibleTemplate) {
  FilterSpec s;
  s.order = 2;
  try {
    design_elliptic(s, kFs);
    FAIL() << "expected InfeasibleFilterError";
  } catch (const InfeasibleFilterError& e) {
    EXPECT_LT(e.achieved_attenuation_db(), 40.0);
  }
}

TEST(DesignElliptic, RejectsBandEdgesAboveNyquist) {
  FilterSpec s;
  s.stopband_hz = 20.0;
  EXPECT_THROW(design_elliptic(s, kFs), ValidationError);
  s = FilterSpec{};
  s.stopband_hz = 1.5;
  EXPECT_THROW(design_elliptic(s, kFs), ValidationError);
}

TEST(Preprocess, ConstantTrace) {
  const auto p = preprocess(uniform_trace(std::vector<double>(500, -42.0)), FilterSpec{}, kFs);
  for (double v : p.y) EXPECT_NEAR(v, 0.0, 1e-12);
  for (double v : p.z) EXPECT_NEAR(v, -42.0, 1e-10);
  EXPECT_DOUBLE_EQ(p.mean, -42.0);
  EXPECT_EQ(p.transient_samples, 32u);
}

TEST(Preprocess, PassbandToneKeepsItsAmplitude) {
  const std::size_t n = 3750;  // 24 periods of 0.2 Hz
  const auto x = testing::tone(n, kFs, 0.2, 1.5);
  const auto p = preprocess(uniform_trace(x), FilterSpec{}, kFs);
  // Amplitude from a projection over the last 20 periods.
  const std::size_t skip = n - static_cast<std::size_t>(20 * 5 * kFs);
  const auto f = testing::fourier_samples(std::span<const double>(p.y).subspan(skip), 20, 1);
  const double gain_db = 20.0 * std::log10(std::hypot(f.a[0], f.b[0]) / 1.5);
  EXPECT_LE(std::abs(gain_db), 0.05);
}

TEST(Preprocess, FiveHertzIsAttenuated) {
  const auto x = testing::tone(3750, kFs, 5.0, 1.0);
  const auto p = preprocess(uniform_trace(x), FilterSpec{}, kFs);
  const std::span<const double> tail = std::span<const double>(p.y).subspan(500);
  const double ratio_db = 20.0 * std::log10(rms(tail) / rms(std::span<const double>(x).subspan(500)));
  EXPECT_LE(ratio_db, -40.0);
}

TEST(Preprocess, RejectsEmptyTrace) { EXPECT_THROW(preprocess(RssTrace{}, FilterSpec{}, kFs), InsufficientDataError); }

TEST(ResampleUniform, UniformInputUnchanged) {
  const auto t = uniform_trace(testing::tone(300, kFs, 0.3, 2.0));
  const auto r = resample_uniform(t, kFs);
  ASSERT_EQ(r.size(), t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    EXPECT_NEAR(r.values[k], t.values[k], 1e-12);
    EXPECT_NEAR(r.timestamps[k], t.timestamps[k], 1e-12);
  }
}

TEST(ResampleUniform, DroppedSampleIsTheMidpoint) {
  auto t = uniform_trace({1.0, 4.0, 9.0, 16.0, 25.0});
  t.values.erase(t.values.begin() + 2);
  t.timestamps.erase(t.timestamps.begin() + 2);
  const auto r = resample_uniform(t, kFs);
  ASSERT_EQ(r.size(), 5u);
  EXPECT_NEAR(r.values[2], 0.5 * (4.0 + 16.0), 1e-12);
  EXPECT_NEAR(r.values[3], 16.0, 1e-12);
}

TEST(ResampleUniform, DropsKeepTheTonePeak) {
  const std::size_t n = 3750;
  const auto full = uniform_trace(testing::tone(n, kFs, 0.2, 1.0));
  std::mt19937_64 rng(4);
  std::bernoulli_distribution drop(0.1);
  RssTrace t;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0 && k + 1 < n && drop(rng)) continue;
    t.timestamps.push_back(full.timestamps[k]);
    t.values.push_back(full.values[k]);
  }
  ASSERT_LT(t.size(), n - 300);
  const auto r = resample_uniform(t, kFs);
  const std::size_t nfft = 4096;
  const auto p = spectrum::periodogram(r.values, nfft);
  const auto peak = static_cast<std::size_t>(std::max_element(p.begin() + 1, p.end()) - p.begin());
  const auto expect = static_cast<std::size_t>(std::lround(0.2 * nfft / kFs));
  EXPECT_EQ(peak, expect);
}

TEST(Spectrum, PeriodogramMatchesDirectDft) {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  std::vector<double> x(300);
  for (double& v : x) v = g(rng);
  const auto p = spectrum::periodogram(x, 512);
  const auto ref = testing::direct_periodogram(x, 512);
  ASSERT_EQ(p.size(), ref.size());
  for (std::size_t l = 0; l < p.size(); ++l) EXPECT_NEAR(p[l], ref[l], 1e-9 * (1.0 + ref[l]));
}

TEST(Spectrum, Helpers) {
  EXPECT_EQ(spectrum::next_pow2(1), 1u);
  EXPECT_EQ(spectrum::next_pow2(938), 1024u);
  EXPECT_EQ(spectrum::next_pow2(1024), 1024u);
  EXPECT_DOUBLE_EQ(spectrum::bin_frequency(16, 31.25, 2048), 0.244140625);
}

}  // namespace
}  // namespace rssb::dsp
