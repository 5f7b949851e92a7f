// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rssb/error.hpp"
#include "rssb/rss_model.hpp"
#include "rssb/scenarios.hpp"

namespace rssb::model {
namespace {

using std::numbers::pi;
constexpr double kLambda = 0.125;

TEST(RatioExact, NoReflection) {
  for (double d : {0.0, 0.03, 0.41}) EXPECT_DOUBLE_EQ(ratio_exact(0.0, d, kLambda), 1.0);
}

TEST(RatioExact, HalfWavelengthAndWavelength) {
  EXPECT_NEAR(ratio_exact(0.5, kLambda / 2.0, kLambda), 2.25, 1e-15);
  EXPECT_NEAR(ratio_exact(0.5, kLambda, kLambda), 0.25, 1e-15);
}

TEST(RatioDbExact, Values) {
  EXPECT_DOUBLE_EQ(ratio_db_exact(0.0, 0.2, kLambda), 0.0);
  EXPECT_NEAR(ratio_db_exact(0.5, kLambda / 2.0, kLambda), 10.0 * std::log10(2.25), 1e-14);
  EXPECT_NEAR(ratio_db_exact(0.5, kLambda / 2.0, kLambda), 3.5218, 1e-4);
}

TEST(RatioDbExact, AgreesWithLongSeries) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const double d = u(rng);
    EXPECT_NEAR(ratio_db_series(0.6, d, kLambda, 200), ratio_db_exact(0.6, d, kLambda), 1e-9) << d;
  }
}

TEST(LogSeriesCoefficients, HalfReflection) {
  const auto b = log_series_coefficients(0.5, 3);
  ASSERT_EQ(b.size(), 4u);
  EXPECT_NEAR(b[0], -std::log(1.25), 1e-15);
  EXPECT_NEAR(b[0], -0.223144, 1e-6);
  EXPECT_NEAR(b[1], -1.0, 1e-15);
  EXPECT_NEAR(b[2], -0.25, 1e-15);
  EXPECT_NEAR(b[3], -1.0 / 12.0, 1e-15);
}

TEST(LogSeriesCoefficients, MatchQuadrature) {
  for (double G : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double kappa = 2.0 * G / (1.0 + G * G);
    const auto b = log_series_coefficients(G, 10);
    for (int i = 0; i <= 10; ++i) {
      const double w = i == 0 ? 1.0 : 2.0;
      const double q = w * testing::periodic_mean(
                               [&](double phi) { return std::log(1.0 - kappa * std::cos(phi)) * std::cos(i * phi); },
                               2.0 * pi);
      EXPECT_NEAR(b[i], q, 1e-8) << "G " << G << " i " << i;
    }
  }
}

TEST(LogSeriesCoefficients, RejectsNonContractive) {
  EXPECT_THROW(log_series_coefficients(1.0, 3), DomainError);
  EXPECT_THROW(log_series_coefficients(-0.1, 3), DomainError);
}

TEST(LinearHarmonics, StaticReflector) {
  const auto m = linear_harmonics(testing::make_state(0.4, 0.0, 1.1), 4);
  EXPECT_NEAR(m.dc, 1.0 + 0.16 - 0.8 * std::cos(1.1), 1e-15);
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(m.coefficient(k), 0.0);
}

TEST(LinearHarmonics, OddVanishAtMultiplesOfPi) {
  for (int n = 0; n <= 6; ++n) {
    const auto m = linear_harmonics(testing::make_state(0.7, 0.9, n * pi), 6);
    for (int k = 1; k <= 6; k += 2) EXPECT_LT(std::abs(m.coefficient(k)), 1e-12) << n << " " << k;
    EXPECT_GT(std::abs(m.coefficient(2)), 1e-3);
  }
}

TEST(LinearHarmonics, MatchFourierAnalysis) {
  const auto s = testing::make_state(0.3, 0.5, pi / 3.0);
  const auto m = linear_harmonics(s, 5);
  EXPECT_NEAR(m.coefficient(1), 4.0 * 0.3 * std::cyl_bessel_j(1.0, 0.5) * std::sin(pi / 3.0), 1e-14);
  const auto fs = testing::fourier_series([&](double t) { return testing::exact_linear_signal(s, t); },
                                          1.0 / s.breath_freq, 5);
  EXPECT_NEAR(m.dc, fs.a0, 1e-8);
  for (int k = 1; k <= 5; ++k) {
    // odd harmonics on sine, even on cosine
    EXPECT_NEAR(m.coefficient(k), k % 2 ? fs.b[k - 1] : fs.a[k - 1], 1e-8) << k;
    EXPECT_NEAR(k % 2 ? fs.a[k - 1] : fs.b[k - 1], 0.0, 1e-8) << k;
  }
}

TEST(LogHarmonics, SmallReflectionApproachesLinear) {
  // With G -> 0 both reduce to the i = 1 term: log-scale c_m ~ (10 / ln 10) * linear c_m.
  for (double G : {1e-3, 1e-4}) {
    const auto s = testing::make_state(G, 0.7, 0.9);
    const auto lg = log_harmonics(s, 3, 50);
    const auto ln = linear_harmonics(s, 3);
    for (int k = 1; k <= 3; ++k) {
      const double scaled = 10.0 / std::log(10.0) * ln.coefficient(k);
      EXPECT_NEAR(lg.coefficient(k) / scaled, 1.0, 5.0 * G) << G << " " << k;
    }
  }
}

TEST(LogHarmonics, OddVanishAtMultiplesOfPiForAnyOrder) {
  for (int I : {1, 2, 5, 50}) {
    for (int n = 0; n <= 6; ++n) {
      const auto m = log_harmonics(testing::make_state(0.7, 1.0, n * pi), 5, I);
      for (int k = 1; k <= 5; k += 2) EXPECT_LT(std::abs(m.coefficient(k)), 1e-12) << I << " " << n;
    }
  }
}

TEST(LogHarmonics, MatchFourierAnalysisOfExactLogSignal) {
  const auto s = testing::make_state(0.5, 0.8, 1.0);
  const auto m = log_harmonics(s, 4, 50);
  const auto fs = testing::fourier_series([&](double t) { return testing::exact_log_signal(s, t); },
                                          1.0 / s.breath_freq, 4);
  EXPECT_NEAR(m.dc, fs.a0, 1e-6);
  for (int k = 1; k <= 4; ++k) {
    EXPECT_NEAR(m.coefficient(k), k % 2 ? fs.b[k - 1] : fs.a[k - 1], 1e-6) << k;
  }
}

TEST(LogHarmonics, EvaluateIsTheSeries) {
  const auto s = testing::make_state(0.5, 0.8, 1.0);
  const auto m = log_harmonics(s, 12, 50);
  for (double t : {0.0, 0.37, 1.2, 3.9}) EXPECT_NEAR(m.evaluate(t), testing::exact_log_signal(s, t), 1e-5);
}

TEST(MovingHarmonics, ZeroVelocityIsStatic) {
  auto s = testing::make_state(0.5, 0.8, 1.0);
  s.velocity_proj = 0.0;
  const auto mv = moving_harmonics(s, 3, 20, Scale::kLog);
  const auto st = log_harmonics(s, 3, 20);
  EXPECT_EQ(mv.center_shift, 0.0);
  EXPECT_EQ(mv.model.dc, st.dc);
  EXPECT_EQ(mv.model.coeffs, st.coeffs);
  const auto lin = moving_harmonics(s, 3, 20, Scale::kLinear);
  EXPECT_EQ(lin.model.coeffs, linear_harmonics(s, 3).coeffs);
}

TEST(MovingHarmonics, LinearToneFrequencies) {
  auto s = testing::make_state(0.5, 0.8, 1.0);
  s.velocity_proj = 0.3 * s.wavelength;
  const auto mv = moving_harmonics(s, 2, 1, Scale::kLinear);
  EXPECT_NEAR(mv.center_shift, 0.3, 1e-15);
  std::vector<double> f;
  for (const auto& t : mv.tones) f.push_back(t.freq);
  std::sort(f.begin(), f.end());
  const std::vector<double> expect{-0.1, 0.1, 0.3, 0.5, 0.7};
  ASSERT_EQ(f.size(), expect.size());
  for (std::size_t k = 0; k < f.size(); ++k) EXPECT_NEAR(f[k], expect[k], 1e-15);
}

TEST(SignalEnergy, Totals) {
  EXPECT_EQ(signal_energy_total(0.0), 0.0);
  EXPECT_NEAR(signal_energy_total(0.7), testing::dilog_series(0.49), 1e-14);
  EXPECT_NEAR(signal_energy_total(0.7), 0.5684384, 1e-6);
  EXPECT_NEAR(signal_energy_total(1.0 - 1e-12), pi * pi / 6.0, 1e-9);
}

TEST(SignalEnergy, TwoTermShare) {
  const auto b = log_series_coefficients(0.7, 2);
  const double partial = 0.25 * (b[1] * b[1] + b[2] * b[2]);
  EXPECT_NEAR(partial, 0.49 + 0.49 * 0.49 / 4.0, 1e-15);
  EXPECT_NEAR(partial, 0.550025, 1e-6);
  EXPECT_NEAR(partial / signal_energy_total(0.7), 0.9676, 5e-5);
}

TEST(SignalEnergyApprox, StaticIsZero) {
  EXPECT_EQ(signal_energy_approx(log_harmonics(testing::make_state(0.6, 0.0, 0.4), 2, 50)), 0.0);
}

TEST(SignalEnergyApprox, MultipleOfPiKeepsSecondHarmonicOnly) {
  const auto m = log_harmonics(testing::make_state(0.6, 0.9, 3.0 * pi), 2, 50);
  EXPECT_NEAR(signal_energy_approx(m), m.coefficient(2) * m.coefficient(2), 1e-20);
  EXPECT_GT(m.coefficient(2) * m.coefficient(2), 1e-4);
}

TEST(SignalEnergyApprox, ReferenceLinkHasNullsNearHalfWavelengths) {
  auto c = scenarios::reference_link();
  std::vector<double> excess, e_model, e_oracle;
  for (double d = 0.1; d <= 0.6; d += 0.0025) {
    scenarios::place_at_excess(c, d);
    const auto st = reflection_state(c.link, c.motion, c.medium);
    const auto hm = log_harmonics(st, 2, 50);
    const auto fs = testing::fourier_series(
        [&](double t) {
          return ratio_db_exact(st.G, d + st.grad_proj * c.motion.amplitude * std::sin(2.0 * pi * st.breath_freq * t),
                                st.wavelength);
        },
        1.0 / st.breath_freq, 2);
    excess.push_back(d);
    e_model.push_back(signal_energy_approx(hm));
    e_oracle.push_back(fs.b[0] * fs.b[0] + fs.a[1] * fs.a[1]);
  }
  for (std::size_t k = 0; k < excess.size(); ++k) {
    EXPECT_NEAR(e_model[k], e_oracle[k], 1e-6 * std::max(1.0, e_oracle[k]));
  }
  // Each local minimum sits within lambda / 8 of a multiple of lambda / 2, and there
  // is one per half wavelength.
  int minima = 0;
  for (std::size_t k = 1; k + 1 < excess.size(); ++k) {
    if (e_model[k] < e_model[k - 1] && e_model[k] < e_model[k + 1]) {
      ++minima;
      const double r = std::remainder(excess[k], kLambda / 2.0);
      EXPECT_LT(std::abs(r), kLambda / 8.0) << excess[k];
      EXPECT_LT(e_model[k], 0.2 * *std::max_element(e_model.begin(), e_model.end()));
    }
  }
  EXPECT_GE(minima, 7);
}

TEST(CarsonTruncation, TwoHarmonicsForSmallModulation) {
  const double a = 2.0 * pi * 2.0 * 0.01 / kLambda;
  EXPECT_EQ(carson_truncation(a, 0.5), 2);
  EXPECT_EQ(carson_truncation(0.0, 0.2), 1);
}

TEST(CarsonTruncation, EnergyCriterionAtLargeModulation) {
  const double a = 5.0;
  const double j0 = testing::bessel_j_series(0, a);
  const double total = 0.5 * (1.0 - j0 * j0);
  int expect = 0;
  double partial = 0.0;
  while (partial < 0.98 * total) {
    ++expect;
    partial += std::pow(testing::bessel_j_series(expect, a), 2);
  }
  EXPECT_EQ(carson_truncation(a, 0.2), std::max(expect, 2));
  EXPECT_GE(expect, 5);
}

TEST(ReflectionState, ReferenceLinkValues) {
  auto c = scenarios::reference_link();
  c.motion.p0 = {0.0, 0.25};
  const auto st = reflection_state(c.link, c.motion, c.medium);
  EXPECT_NEAR(st.excess0, 2.0 * std::sqrt(1.0625) - 2.0, 1e-15);
  EXPECT_NEAR(st.grad_proj, -0.5 / std::sqrt(1.0625), 1e-15);
  EXPECT_NEAR(st.phase, 2.0 * pi * st.excess0 / kLambda, 1e-12);
  EXPECT_NEAR(st.amplitude_eff, 2.0 * pi * st.grad_proj * 0.01 / kLambda, 1e-15);
  EXPECT_NEAR(st.kappa, 2.0 * st.G / (1.0 + st.G * st.G), 1e-15);
  EXPECT_GT(st.G, 0.0);
  EXPECT_LT(st.G, st.gamma);
}

}  // namespace
}  // namespace rssb::model
