// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include "rssb/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "rssb/error.hpp"
#include "rssb/rss_model.hpp"

namespace rssb {

namespace sim {
namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

struct ChannelModel {
  double wavelength;
  model::ReflectionState frozen;  // used by the linearized geometry model
};

double max_modeled_tone(const ScenarioConfig& c) {
  double lambda_min = c.medium.wavelength;
  for (std::size_t i = 0; i < c.channel_count(); ++i) lambda_min = std::min(lambda_min, c.channel_wavelength(i));
  const double grad = std::abs(geometry::gradient_projection(c.link, c.motion.p0, c.motion.direction));
  const double vproj = std::abs(geometry::gradient_projection(c.link, c.motion.p0, c.motion.velocity));
  const double a_eff = kTwoPi * c.motion.amplitude * grad / lambda_min;
  const int m = model::carson_truncation(a_eff, c.motion.breath_freq);
  return vproj / lambda_min + m * c.motion.breath_freq;
}

double value_db(const ScenarioConfig& c, const ChannelModel& ch, double t) {
  if (c.geometry_model == GeometryModel::kLinearized) {
    const auto& s = ch.frozen;
    const double excess = s.excess0 + s.grad_proj * c.motion.displacement(t) + s.velocity_proj * t;
    return model::ratio_db_exact(s.G, excess, ch.wavelength);
  }
  const geometry::Point2 p = c.motion.position(t);
  const double excess = geometry::excess_path(c.link, p);
  const double gamma =
      geometry::fresnel_coefficient(geometry::incidence_cosine(c.link, p), c.medium.rel_permittivity);
  const double G = geometry::effective_reflection(gamma, excess, c.link.length(), c.medium.pathloss_exponent);
  return model::ratio_db_exact(std::min(G, 1.0 - 1e-15), excess, ch.wavelength);
}

ChannelModel channel_model(const ScenarioConfig& c, std::size_t index) {
  ChannelModel ch;
  ch.wavelength = c.channel_wavelength(index);
  geometry::MediumParams medium = c.medium;
  medium.wavelength = ch.wavelength;
  ch.frozen = model::reflection_state(c.link, c.motion, medium);
  return ch;
}

}  // namespace

void ScenarioConfig::validate() const {
  link.validate();
  motion.validate();
  medium.validate();
  for (double f : channels_hz) {
    if (!(f > 0.0)) throw ValidationError("scenario: channel frequencies must be > 0");
  }
  if (!(fs > 0.0)) throw ValidationError("scenario: fs must be > 0");
  if (!(duration > 0.0)) throw ValidationError("scenario: duration must be > 0");
  if (!(noise_std >= 0.0)) throw ValidationError("scenario: noise_std must be >= 0");
  if (!(quantization_step >= 0.0)) throw ValidationError("scenario: quantization_step must be >= 0");
  if (!(drop_prob >= 0.0 && drop_prob < 1.0)) throw ValidationError("scenario: drop_prob must be in [0, 1)");
  if (!std::isfinite(baseline_dbm)) throw ValidationError("scenario: baseline_dbm must be finite");
  const double tone = max_modeled_tone(*this);
  if (!(fs > 2.0 * tone)) {
    throw ValidationError("scenario: fs must exceed twice the highest modeled tone (" +
                          std::to_string(tone) + " Hz)");
  }
}

double ScenarioConfig::channel_wavelength(std::size_t index) const {
  if (channels_hz.empty()) return medium.wavelength;
  return kSpeedOfLight / channels_hz.at(index);
}

double ScenarioConfig::sample_time(std::size_t index, std::size_t k) const {
  return (static_cast<double>(k) + static_cast<double>(index) / static_cast<double>(channel_count())) / fs;
}

std::vector<double> default_channels() {
  std::vector<double> out;
  for (int k = 0; k < 16; ++k) out.push_back(2.405e9 + 5e6 * k);
  return out;
}

double model_value_db(const ScenarioConfig& config, double wavelength, double t) {
  geometry::MediumParams medium = config.medium;
  medium.wavelength = wavelength;
  ChannelModel ch{wavelength, model::reflection_state(config.link, config.motion, medium)};
  return value_db(config, ch, t);
}

std::vector<RssTrace> synthesize(const ScenarioConfig& config) {
  config.validate();
  const auto n = static_cast<std::size_t>(std::floor(config.duration * config.fs));
  std::vector<RssTrace> traces;
  traces.reserve(config.channel_count());

  for (std::size_t ci = 0; ci < config.channel_count(); ++ci) {
    const ChannelModel ch = channel_model(config, ci);
    // Independent stream per channel, derived from (seed, channel).
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed & 0xffffffffu),
                      static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(ci)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> noise(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    RssTrace trace;
    trace.channel_id = static_cast<int>(ci);
    trace.wavelength = ch.wavelength;
    trace.timestamps.reserve(n);
    trace.values.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double t = config.sample_time(ci, k);
      double r = value_db(config, ch, t);
      const double nu = noise(rng);
      const double u = uniform(rng);
      if (config.noise_std > 0.0) r += config.noise_std * nu;
      if (config.quantization_step > 0.0) r = std::round(r / config.quantization_step) * config.quantization_step;
      if (u < config.drop_prob) continue;
      trace.timestamps.push_back(t);
      trace.values.push_back(r + config.baseline_dbm);
    }
    traces.push_back(std::move(trace));
  }
  return traces;
}

double baseline_model(double snr, double noise_var) {
  if (!(snr >= 0.0)) throw ValidationError("baseline_model: snr must be >= 0");
  if (!(noise_var > 0.0)) throw ValidationError("baseline_model: noise variance must be > 0");
  return 10.0 * std::log10(2.0 * noise_var + snr * noise_var);
}

}  // namespace sim
}  // namespace rssb
