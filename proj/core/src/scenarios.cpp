// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include "rssb/scenarios.hpp"

#include <numbers>
#include <random>

namespace rssb::scenarios {

sim::ScenarioConfig reference_link() {
  sim::ScenarioConfig c;
  c.link = {{-1.0, 0.0}, {1.0, 0.0}};
  c.medium = {0.125, 2.0, 1.5};
  c.motion.direction = {0.0, -1.0};
  c.motion.amplitude = 0.01;
  c.motion.breath_freq = 0.2;
  c.motion.velocity = {0.0, 0.0};
  c.fs = 31.25;
  c.duration = 120.0;
  c.quantization_step = 0.0;
  c.noise_std = 0.0;
  return c;
}

void place_at_excess(sim::ScenarioConfig& config, double excess) {
  config.motion.p0 = geometry::midline_point_for_excess(config.link, excess);
}

sim::ScenarioConfig bed_like(std::uint64_t seed) {
  auto c = reference_link();
  place_at_excess(c, 0.75 * c.medium.wavelength);
  c.motion.amplitude = 0.0025;
  c.quantization_step = 1.0;
  c.seed = seed;
  return c;
}

sim::ScenarioConfig second_harmonic(std::uint64_t seed) {
  auto c = bed_like(seed);
  place_at_excess(c, c.medium.wavelength);
  c.motion.amplitude = 0.01;
  return c;
}

sim::ScenarioConfig harmonic_rich(std::uint64_t seed) {
  auto c = bed_like(seed);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> offset(0.02 * std::numbers::pi, 0.08 * std::numbers::pi);
  const double psi = 2.0 * std::numbers::pi + offset(rng);
  place_at_excess(c, c.medium.wavelength * psi / (2.0 * std::numbers::pi));
  c.motion.amplitude = 0.01;
  return c;
}

sim::ScenarioConfig double_frequency(bool all_channels) {
  auto c = reference_link();
  place_at_excess(c, 1.5 * c.medium.wavelength);
  if (all_channels) c.channels_hz = sim::default_channels();
  return c;
}

}  // namespace rssb::scenarios
