// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "rssb/geometry.hpp"

namespace rssb::model {

/// 20 log10(e): converts natural-log amplitude ratios to dB.
inline constexpr double kDbPerNeper = 8.685889638065036;

/// Per-position quantities feeding the closed-form models.
struct ReflectionState {
  double excess0{0.0};        // Delta_0 [m]
  double grad_proj{0.0};      // delta_Delta
  double velocity_proj{0.0};  // delta_v [m/s]
  double gamma{0.0};          // Fresnel magnitude at p0
  double G{0.0};              // effective reflection coefficient at p0
  double amplitude_eff{0.0};  // A-tilde [rad], signed with delta_Delta
  double phase{0.0};          // psi = 2 pi Delta_0 / lambda [rad]
  double kappa{0.0};          // 2G / (1 + G^2)
  double wavelength{0.125};   // [m]
  double breath_freq{0.2};    // [Hz]
};

/// Evaluates the geometry at motion.p0 and freezes G there.
ReflectionState reflection_state(const geometry::LinkGeometry& link,
                                 const geometry::ReflectorMotion& motion,
                                 const geometry::MediumParams& medium);

/// Linear power ratio R = 1 + G^2 - 2 G cos(2 pi Delta / lambda).
double ratio_exact(double G, double excess, double wavelength);

/// R in dB.
double ratio_db_exact(double G, double excess, double wavelength);

/// R in dB from the cosine series truncated at `order` terms.
double ratio_db_series(double G, double excess, double wavelength, int order);

/// Cosine-series coefficients b_0..b_max_order of ln(1 - kappa cos(phi)):
/// b_0 = -ln(1 + G^2), b_i = -2 G^i / i.
std::vector<double> log_series_coefficients(double G, int max_order);

enum class Scale { kLinear, kLog };

/// Truncated harmonic expansion
///   dc + sum_m c_m * (sin(2 pi m f t) for odd m, cos(2 pi m f t) for even m).
/// Linear-scale coefficients are in power-ratio units, log-scale ones in dB.
struct HarmonicModel {
  Scale scale{Scale::kLog};
  double fundamental{0.2};       // Hz
  double dc{0.0};
  std::vector<double> coeffs;    // coeffs[m-1] = c_m, m = 1..truncation
  int series_order{0};           // inner i-series length (log scale only)

  int truncation() const { return static_cast<int>(coeffs.size()); }
  double coefficient(int m) const;  // m = 0 returns dc
  double evaluate(double t) const;
};

HarmonicModel linear_harmonics(const ReflectionState& state, int harmonics);
HarmonicModel log_harmonics(const ReflectionState& state, int harmonics, int series_order);

/// A single spectral line of the moving-reflector expansion.
struct Tone {
  double freq;       // Hz, signed (negative lines fold onto |freq|)
  double amplitude;  // cosine amplitude
  int harmonic;      // m
  int series_index;  // i (1 for linear scale)
};

struct MovingHarmonicModel {
  HarmonicModel model;
  double center_shift{0.0};  // delta_v / lambda [Hz]
  std::vector<Tone> tones;
};

/// Same coefficients as the static case; tones shifted by i * delta_v / lambda.
MovingHarmonicModel moving_harmonics(const ReflectionState& state, int harmonics,
                                     int series_order, Scale scale);

/// Total energy of the log-scale series: sum G^(2i) / i^2 = Li2(G^2).
double signal_energy_total(double G);

/// c_1^2 + c_2^2 of a log-scale model.
double signal_energy_approx(const HarmonicModel& model);

/// Number of harmonics to retain for a modulation index A-tilde.
int carson_truncation(double amplitude_eff, double breath_freq);

/// Default inner series length for log-scale coefficients.
inline constexpr int kDefaultSeriesOrder = 50;

}  // namespace rssb::model
