// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "rssb/geometry.hpp"
#include "rssb/trace.hpp"

namespace rssb::sim {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

/// How the simulator maps the reflector trajectory to the excess path.
enum class GeometryModel {
  kExact,       // Delta, Gamma and G recomputed at p(t) every sample
  kLinearized,  // Delta = Delta_0 + delta_Delta g(t) + delta_v t, G frozen at p0
};

struct ScenarioConfig {
  geometry::LinkGeometry link{{-1.0, 0.0}, {1.0, 0.0}};
  geometry::ReflectorMotion motion;
  geometry::MediumParams medium;
  /// Channel centre frequencies. Empty means one channel at medium.wavelength.
  std::vector<double> channels_hz;
  double fs{31.25};              // per-channel sampling rate [Hz]
  double duration{120.0};        // s
  double baseline_dbm{0.0};      // offset added after quantization
  double noise_std{0.0};         // dB
  double quantization_step{1.0}; // dB, 0 disables
  double drop_prob{0.0};
  std::uint64_t seed{1};
  GeometryModel geometry_model{GeometryModel::kExact};

  void validate() const;
  std::size_t channel_count() const { return channels_hz.empty() ? 1 : channels_hz.size(); }
  double channel_wavelength(std::size_t index) const;
  /// Sampling instant of sample k on channel `index`. Channels are visited in turn,
  /// so channel i is offset by i / (fs * channel_count).
  double sample_time(std::size_t index, std::size_t k) const;
};

/// The 16 IEEE 802.15.4 channels, 2405..2480 MHz in 5 MHz steps.
std::vector<double> default_channels();

/// Noiseless model value R [dB] at time t for channel wavelength `wavelength`.
double model_value_db(const ScenarioConfig& config, double wavelength, double t);

/// One trace per channel; dropped samples are absent. Deterministic in config.seed.
std::vector<RssTrace> synthesize(const ScenarioConfig& config);

/// Baseline RSS 10 log10(2 sigma^2 + rho sigma^2) [dBm].
double baseline_model(double snr, double noise_var);

}  // namespace rssb::sim
